#include "quartica/finite_field.hpp"

#include <stdexcept>

#include "quartica/upoly.hpp"

namespace quartica {

std::uint64_t FieldDescriptor::q() const {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < m; ++i) r *= p;
    return r;
}

std::string FieldDescriptor::modulus_string() const {
    std::vector<ModP> c;
    for (auto v : modulus) c.emplace_back(v, p);
    return UPoly<PrimeField>(PrimeField(p), std::move(c)).to_string("t");
}

bool is_irreducible_mod_p(const std::vector<std::uint64_t>& monic, std::uint64_t p) {
    PrimeField F(p);
    std::vector<ModP> c;
    for (auto v : monic) c.push_back(F.from_integer(static_cast<long>(v)));
    UPoly<PrimeField> f(F, std::move(c));
    int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    // Ben-Or: no factor of degree i <= n/2, i.e. gcd(t^{p^i} - t, f) = 1.
    auto t = UPoly<PrimeField>::x(F);
    auto power = t;
    for (int i = 1; i <= n / 2; ++i) {
        // power <- power^p mod f
        UPoly<PrimeField> acc = UPoly<PrimeField>::constant(F, F.one()), base = power;
        for (std::uint64_t e = p; e; e >>= 1) {
            if (e & 1) acc = (acc * base) % f;
            base = (base * base) % f;
        }
        power = acc;
        if (gcd(power - t, f).degree() > 0) return false;
    }
    return true;
}

std::shared_ptr<const FieldDescriptor> make_field(std::uint64_t p, unsigned m) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (m < 1 || m > FieldDescriptor::kMaxDegree)
        throw std::invalid_argument("extension degree must be in 1.." + std::to_string(FieldDescriptor::kMaxDegree));
    if (p >= (1ULL << 31)) throw std::invalid_argument("characteristic too large for the element representation");
    auto d = std::make_shared<FieldDescriptor>();
    d->p = p;
    d->m = m;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < m; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<std::uint64_t> c(m + 1, 0);
        std::uint64_t v = code;
        for (unsigned i = 0; i < m; ++i, v /= p) c[i] = v % p;
        c[m] = 1;
        if (is_irreducible_mod_p(c, p)) {
            d->modulus = std::move(c);
            return d;
        }
    }
    throw std::logic_error("no irreducible polynomial found");
}

FqElement::FqElement(const FieldDescriptor* d, std::uint64_t prime_value) : d_(d) {
    c_[0] = static_cast<std::uint32_t>(prime_value % d->p);
}

bool FqElement::is_zero() const {
    for (auto v : c_)
        if (v) return false;
    return true;
}

std::uint64_t FqElement::index() const {
    std::uint64_t r = 0;
    for (unsigned i = d_->m; i-- > 0;) r = r * d_->p + c_[i];
    return r;
}

FqElement FqElement::from_index(const FieldDescriptor* d, std::uint64_t index) {
    FqElement e(d);
    for (unsigned i = 0; i < d->m; ++i, index /= d->p) e.c_[i] = static_cast<std::uint32_t>(index % d->p);
    return e;
}

FqElement operator+(const FqElement& a, const FqElement& b) {
    FqElement r(a.d_ ? a.d_ : b.d_);
    const std::uint64_t p = r.d_->p;
    for (unsigned i = 0; i < r.d_->m; ++i) {
        std::uint64_t s = std::uint64_t{a.c_[i]} + b.c_[i];
        r.c_[i] = static_cast<std::uint32_t>(s >= p ? s - p : s);
    }
    return r;
}

FqElement FqElement::operator-() const {
    FqElement r(d_);
    for (unsigned i = 0; i < d_->m; ++i) r.c_[i] = c_[i] ? static_cast<std::uint32_t>(d_->p - c_[i]) : 0;
    return r;
}

FqElement operator-(const FqElement& a, const FqElement& b) { return a + (-b); }

FqElement operator*(const FqElement& a, const FqElement& b) {
    const FieldDescriptor* d = a.d_ ? a.d_ : b.d_;
    const unsigned m = d->m;
    const std::uint64_t p = d->p;
    FqElement r(d);
    if (m == 1) {
        r.c_[0] = static_cast<std::uint32_t>(std::uint64_t{a.c_[0]} * b.c_[0] % p);
        return r;
    }
    std::array<std::uint64_t, 2 * FieldDescriptor::kMaxDegree> prod{};
    for (unsigned i = 0; i < m; ++i) {
        if (!a.c_[i]) continue;
        for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % p;
    }
    // reduce by the monic modulus from the top down
    for (unsigned k = 2 * m - 1; k-- > m;) {
        std::uint64_t top = prod[k];
        if (!top) continue;
        prod[k] = 0;
        for (unsigned i = 0; i < m; ++i)
            prod[k - m + i] = (prod[k - m + i] + (p - top) * d->modulus[i]) % p;
    }
    for (unsigned i = 0; i < m; ++i) r.c_[i] = static_cast<std::uint32_t>(prod[i]);
    return r;
}

FqElement FqElement::pow(std::uint64_t e) const {
    FqElement r(d_, 1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

FqElement FqElement::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in F_q");
    return pow(d_->q() - 2);
}

std::string FqElement::to_string() const {
    if (!d_) return "0";
    std::vector<ModP> c;
    for (unsigned i = 0; i < d_->m; ++i) c.emplace_back(c_[i], d_->p);
    return UPoly<PrimeField>(PrimeField(d_->p), std::move(c)).to_string("t");
}

FqElement FqField::from_integer(long n) const {
    long p = static_cast<long>(desc->p);
    long r = n % p;
    if (r < 0) r += p;
    return FqElement(desc.get(), static_cast<std::uint64_t>(r));
}

FqElement FqField::from_rational(const Rational& r) const {
    ModP v = PrimeField(desc->p).from_rational(r);
    return FqElement(desc.get(), v.value());
}

std::string FqField::name() const {
    if (desc->m == 1) return "GF(" + std::to_string(desc->p) + ")";
    return "GF(" + std::to_string(desc->p) + "^" + std::to_string(desc->m) + ")";
}

int quadratic_character(const FqElement& a) {
    const auto* d = a.descriptor();
    if (d->p == 2) throw std::domain_error("quadratic character undefined in characteristic 2");
    if (a.is_zero()) return 0;
    auto r = a.pow((d->q() - 1) / 2);
    return r == FqElement(d, 1) ? 1 : -1;
}

std::vector<FqElement> enumerate_field(const FieldDescriptor& d) {
    std::vector<FqElement> out;
    std::uint64_t q = d.q();
    out.reserve(q);
    for (std::uint64_t i = 0; i < q; ++i) out.push_back(FqElement::from_index(&d, i));
    return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> enumeration_chunks(std::uint64_t q, unsigned k) {
    if (k == 0) throw std::invalid_argument("chunk count must be positive");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    std::uint64_t base = q / k, extra = q % k, start = 0;
    for (unsigned i = 0; i < k; ++i) {
        std::uint64_t len = base + (i < extra ? 1 : 0);
        out.emplace_back(start, start + len);
        start += len;
    }
    return out;
}

}  // namespace quartica
