#include "quartica/zeta.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "quartica/finite_field.hpp"
#include "quartica/upoly.hpp"

namespace quartica {

namespace {

constexpr std::uint64_t kMaxFieldSize = 1ULL << 26;

std::shared_ptr<const FieldDescriptor> counting_field(std::uint64_t p, unsigned m) {
    if (p < 5) throw std::invalid_argument("point counting needs p >= 5 (got " + std::to_string(p) + ")");
    auto d = make_field(p, m);
    if (d->q() > kMaxFieldSize) throw std::invalid_argument("field of size " + std::to_string(d->q()) + " too large to enumerate");
    return d;
}

// Sums fn(lo, hi) over a partition of [0, q) into contiguous chunks.
std::uint64_t parallel_sum(std::uint64_t q, unsigned workers,
                           const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& fn) {
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(q, 256))));
    auto chunks = enumeration_chunks(q, workers);
    if (workers == 1) return fn(0, q);
    std::vector<std::uint64_t> partial(chunks.size(), 0);
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < chunks.size(); ++i)
        pool.emplace_back([&, i] { partial[i] = fn(chunks[i].first, chunks[i].second); });
    for (auto& t : pool) t.join();
    std::uint64_t total = 0;
    for (auto v : partial) total += v;
    return total;
}

// chi[index] for every element: 0, 1 or -1.
std::vector<std::int8_t> character_table(const std::vector<FqElement>& elems) {
    std::vector<std::int8_t> chi(elems.size(), -1);
    chi[0] = 0;
    for (const auto& e : elems)
        if (!e.is_zero()) chi[(e * e).index()] = 1;
    return chi;
}

// Number of z with z^2 = A and z^3 = B.
inline bool solvable(const FqElement& A, const FqElement& B) {
    if (A.is_zero()) return B.is_zero();
    return B * B == A * A * A;
}

UPoly<PrimeField> reduce(const QUPoly& f, std::uint64_t p) {
    PrimeField F(p);
    std::vector<ModP> c;
    for (const auto& v : f.coeffs()) c.push_back(F.from_rational(v));
    return UPoly<PrimeField>(F, std::move(c));
}

std::optional<std::string> sextic_bad_reduction(const QUPoly& D, std::uint64_t p) {
    auto d = reduce(D, p);
    if (d.degree() < 5) return "h^2+4f has degree " + std::to_string(d.degree()) + " mod " + std::to_string(p);
    auto g = gcd(d, d.derivative());
    if (g.degree() > 0) return "repeated factor " + g.monic().to_string("x") + " mod " + std::to_string(p);
    return std::nullopt;
}

std::optional<std::string> elliptic_bad_reduction(const EllipticLong& e, std::uint64_t p) {
    auto disc = e.discriminant();
    if (disc.den() % p == 0) return "coefficients not integral at " + std::to_string(p);
    for (const auto* a : {&e.a1, &e.a2, &e.a3, &e.a4, &e.a6})
        if (a->den() % p == 0) return "coefficients not integral at " + std::to_string(p);
    if (disc.num() % p == 0) return "discriminant " + disc.to_string() + " vanishes mod " + std::to_string(p);
    return std::nullopt;
}

PointCount count_sextic_form(const QUPoly& D, const std::string& label, std::uint64_t p, unsigned m,
                             unsigned workers) {
    if (auto why = sextic_bad_reduction(D, p)) throw std::domain_error("bad reduction: " + *why);
    auto desc = counting_field(p, m);
    FqField K(desc);
    auto elems = enumerate_field(*desc);
    auto chi = character_table(elems);
    std::vector<FqElement> coeffs;
    for (const auto& c : D.coeffs()) coeffs.push_back(K.from_rational(c));
    auto affine = parallel_sum(desc->q(), workers, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t n = 0;
        for (std::uint64_t i = lo; i < hi; ++i) {
            FqElement acc = K.zero();
            for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * elems[i] + coeffs[k];
            n += static_cast<std::uint64_t>(1 + chi[acc.index()]);
        }
        return n;
    });
    std::uint64_t infinity = 1;
    if (reduce(D, p).degree() == 6) infinity = static_cast<std::uint64_t>(1 + chi[coeffs.back().index()]);
    return {label, p, m, affine + infinity};
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

PointCount count_intersection(std::uint64_t p, unsigned m, unsigned workers) {
    auto desc = counting_field(p, m);
    FqField K(desc);
    auto elems = enumerate_field(*desc);
    const std::uint64_t q = desc->q();
    std::vector<FqElement> sq(q, K.zero()), cu(q, K.zero());
    for (std::uint64_t i = 0; i < q; ++i) {
        sq[i] = elems[i] * elems[i];
        cu[i] = sq[i] * elems[i];
    }
    const FqElement one = K.one();
    // chart w = 1
    auto n = parallel_sum(q, workers, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t c = 0;
        for (std::uint64_t i = lo; i < hi; ++i) {
            FqElement s2 = sq[i] + one, s3 = cu[i] + one;
            for (std::uint64_t j = 0; j < q; ++j)
                if (solvable(-(s2 + sq[j]), -(s3 + cu[j]))) ++c;
        }
        return c;
    });
    // w = 0, z = 1
    for (std::uint64_t i = 0; i < q; ++i)
        if (solvable(-(sq[i] + one), -(cu[i] + one))) ++n;
    // w = z = 0, y = 1 (and the point (1:0:0:0), which is not on C)
    for (std::uint64_t i = 0; i < q; ++i)
        if ((sq[i] + one).is_zero() && (cu[i] + one).is_zero()) ++n;
    return {"C", p, m, n};
}

PointCount count_elliptic(const EllipticLong& e, std::uint64_t p, unsigned m, unsigned workers) {
    if (auto why = elliptic_bad_reduction(e, p)) throw std::domain_error("singular reduction: " + *why);
    // (a1 x + a3)^2 + 4 (x^3 + a2 x^2 + a4 x + a6)
    Rational four(4);
    QUPoly D(RationalField{}, {e.a3 * e.a3 + four * e.a6, Rational(2) * e.a1 * e.a3 + four * e.a4,
                               e.a1 * e.a1 + four * e.a2, four});
    auto desc = counting_field(p, m);
    FqField K(desc);
    auto elems = enumerate_field(*desc);
    auto chi = character_table(elems);
    std::vector<FqElement> coeffs;
    for (const auto& c : D.coeffs()) coeffs.push_back(K.from_rational(c));
    auto affine = parallel_sum(desc->q(), workers, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t n = 0;
        for (std::uint64_t i = lo; i < hi; ++i) {
            FqElement acc = K.zero();
            for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * elems[i] + coeffs[k];
            n += static_cast<std::uint64_t>(1 + chi[acc.index()]);
        }
        return n;
    });
    return {"", p, m, affine + 1};
}

PointCount count_hyperelliptic(const HyperellipticHF& c, std::uint64_t p, unsigned m, unsigned workers) {
    return count_sextic_form(hyperelliptic_discriminant_form(c), "", p, m, workers);
}

PointCount count_hyperelliptic(const SexticModel& c, std::uint64_t p, unsigned m, unsigned workers) {
    return count_sextic_form(c.sextic, "", p, m, workers);
}

PointCount count_plane_affine(const PlaneAffine& c, std::uint64_t p, unsigned m, unsigned workers) {
    auto desc = counting_field(p, m);
    FqField K(desc);
    auto elems = enumerate_field(*desc);
    struct Term {
        std::uint32_t ex, ey;
        FqElement c;
    };
    std::vector<Term> terms;
    for (const auto& t : c.f.terms())
        terms.push_back({t.mono[0], t.mono[1], K.from_rational(t.coeff)});
    const std::uint64_t q = desc->q();
    auto n = parallel_sum(q, workers, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t cnt = 0;
        for (std::uint64_t i = lo; i < hi; ++i)
            for (std::uint64_t j = 0; j < q; ++j) {
                FqElement acc = K.zero();
                for (const auto& t : terms) acc += t.c * elems[i].pow(t.ex) * elems[j].pow(t.ey);
                if (acc.is_zero()) ++cnt;
            }
        return cnt;
    });
    return {"", p, m, n};
}

PointCount count_model(const std::string& label, std::uint64_t p, unsigned m, unsigned workers) {
    auto model = catalog(label);
    PointCount r = std::visit(
        [&](const auto& v) -> PointCount {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, IntersectionP3>) {
                return count_intersection(p, m, workers);
            } else if constexpr (std::is_same_v<T, PlaneAffine>) {
                return count_plane_affine(v, p, m, workers);
            } else if constexpr (std::is_same_v<T, EllipticLong>) {
                return count_elliptic(v, p, m, workers);
            } else if constexpr (std::is_same_v<T, HyperellipticHF> || std::is_same_v<T, SexticModel>) {
                return count_hyperelliptic(v, p, m, workers);
            } else {
                if (p < 5) throw std::invalid_argument("point counting needs p >= 5");
                return PointCount{"", p, m, ipow(p, m) + 1};
            }
        },
        model.model);
    r.curve = label;
    return r;
}

CountFn direct_counter(unsigned workers) {
    return [workers](const std::string& label, std::uint64_t p, unsigned m) {
        return count_model(label, p, m, workers).N;
    };
}

std::optional<std::string> bad_reduction(const std::string& label, std::uint64_t p) {
    if (p < 5) return "characteristic below 5";
    auto model = catalog(label);
    return std::visit(
        [p](const auto& v) -> std::optional<std::string> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, EllipticLong>) {
                return elliptic_bad_reduction(v, p);
            } else if constexpr (std::is_same_v<T, HyperellipticHF>) {
                return sextic_bad_reduction(hyperelliptic_discriminant_form(v), p);
            } else if constexpr (std::is_same_v<T, SexticModel>) {
                return sextic_bad_reduction(v.sextic, p);
            } else {
                return std::nullopt;
            }
        },
        model.model);
}

// ---- LPolynomial ------------------------------------------------------------

bool LPolynomial::functional_equation_holds() const {
    const std::size_t n = 2 * static_cast<std::size_t>(genus);
    if (c.size() != n + 1 || c[0] != 1) return false;
    for (int i = 0; i <= genus; ++i) {
        Integer qp = 1;
        for (int k = 0; k < genus - i; ++k) qp *= q;
        if (c[n - i] != qp * c[i]) return false;
    }
    return true;
}

std::vector<Integer> LPolynomial::power_sums(unsigned k) const {
    // k c_k = -sum_{i=1}^{k} s_i c_{k-i}
    std::vector<Integer> s(k + 1, 0);
    for (unsigned j = 1; j <= k; ++j) {
        Integer acc = Integer(j) * a(j);
        for (unsigned i = 1; i < j; ++i) acc += s[i] * a(j - i);
        s[j] = -acc;
    }
    return {s.begin() + 1, s.end()};
}

Integer LPolynomial::predicted_count(unsigned m) const {
    Integer qm = 1;
    for (unsigned i = 0; i < m; ++i) qm *= q;
    return qm + 1 - power_sums(m).back();
}

double LPolynomial::weil_deviation() const {
    if (c.size() <= 1) return 0.0;
    // Reciprocal roots are the roots of t^n L(1/t). Products of quotient
    // L-polynomials repeat factors, and eigenvalues of a k-fold root carry
    // error ~ eps^(1/k), so work with the exact squarefree part.
    std::vector<Rational> rev;
    for (std::size_t i = c.size(); i-- > 0;) rev.emplace_back(c[i]);
    auto f = squarefree_part(UPoly<RationalField>(RationalField{}, std::move(rev)));
    const int n = f.degree();
    if (n <= 0) return 0.0;
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -(f.coeffs()[static_cast<std::size_t>(i)].num().get_d() / f.coeffs()[static_cast<std::size_t>(i)].den().get_d());
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    const double target = std::sqrt(q.get_d());
    double worst = 0.0;
    for (const auto& z : es.eigenvalues()) worst = std::max(worst, std::abs(std::abs(z) - target) / target);
    return worst;
}

std::string LPolynomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        Integer mag = abs(c[i]);
        bool neg = c[i] < 0;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i >= 1) os << "t";
        if (i >= 2) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

LPolynomial operator*(const LPolynomial& a, const LPolynomial& b) {
    if (a.q != b.q) throw std::invalid_argument("L-polynomials over different fields");
    LPolynomial r;
    r.q = a.q;
    r.genus = a.genus + b.genus;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

LPolynomial lpoly_from_counts(const std::vector<std::uint64_t>& counts, const Integer& q, int genus) {
    if (genus < 0 || counts.size() != static_cast<std::size_t>(genus))
        throw std::invalid_argument("need exactly g point counts N_1..N_g");
    LPolynomial L;
    L.q = q;
    L.genus = genus;
    L.c.assign(2 * genus + 1, 0);
    L.c[0] = 1;
    std::vector<Integer> s(genus + 1, 0);
    Integer qm = 1;
    for (int m = 1; m <= genus; ++m) {
        qm *= q;
        s[m] = qm + 1 - Integer(std::to_string(counts[m - 1]));
    }
    for (int k = 1; k <= genus; ++k) {
        Integer acc = 0;
        for (int i = 1; i <= k; ++i) acc += s[i] * L.c[k - i];
        if (acc % k != 0) throw std::domain_error("counts inconsistent with a genus-" + std::to_string(genus) + " curve");
        L.c[k] = -acc / k;
    }
    for (int i = 0; i < genus; ++i) {
        Integer qp = 1;
        for (int k = 0; k < genus - i; ++k) qp *= q;
        L.c[2 * genus - i] = qp * L.c[i];
    }
    return L;
}

LPolynomial quadratic_twist(const LPolynomial& L, int chi) {
    if (chi != 1 && chi != -1) throw std::invalid_argument("twist character must be +1 or -1");
    LPolynomial r = L;
    for (std::size_t i = 1; i < r.c.size(); i += 2) r.c[i] = chi * r.c[i];
    return r;
}

int p_rank(const LPolynomial& L, std::uint64_t p) {
    for (std::size_t i = L.c.size(); i-- > 0;)
        if (L.c[i] % Integer(std::to_string(p)) != 0) return static_cast<int>(i);
    return 0;
}

HwsBounds hws_defect(const Integer& N1, const Integer& q, int genus) {
    Integer m = sqrt(Integer(4) * q);  // floor(2 sqrt q)
    HwsBounds b;
    b.lower = q + 1 - Integer(genus) * m;
    b.upper = q + 1 + Integer(genus) * m;
    b.defect = b.upper - N1;
    return b;
}

LPolynomial lpoly_of(const std::string& label, std::uint64_t p, const CountFn& count) {
    auto model = catalog(label);
    if (!model.genus) throw std::invalid_argument("genus of " + label + " unknown");
    if (std::holds_alternative<PlaneAffine>(model.model))
        throw std::invalid_argument(label + " is a singular affine model; its counts do not define an L-polynomial");
    std::vector<std::uint64_t> counts;
    for (int m = 1; m <= *model.genus; ++m) counts.push_back(count(label, p, static_cast<unsigned>(m)));
    return lpoly_from_counts(counts, Integer(std::to_string(p)), *model.genus);
}

std::optional<std::pair<LPolynomial, LPolynomial>> split_genus2(const LPolynomial& L) {
    if (L.genus != 2 || !L.functional_equation_holds()) return std::nullopt;
    Integer disc = L.a(1) * L.a(1) - 4 * L.a(2) + 8 * L.q;
    if (disc < 0) return std::nullopt;
    Integer r = sqrt(disc);
    if (r * r != disc) return std::nullopt;
    auto make = [&](const Integer& b) { return LPolynomial{{Integer(1), b, L.q}, L.q, 1}; };
    Integer b1 = (L.a(1) - r) / 2, b2 = (L.a(1) + r) / 2;
    return std::make_pair(make(b1), make(b2));
}

bool e1_e2_isogeny_criterion(const LPolynomial& L) {
    if (L.genus != 2 || !L.functional_equation_holds())
        throw std::invalid_argument("not a genus-2 L-polynomial: " + L.to_string());
    return L.a(1) * L.a(1) - 4 * L.a(2) + 8 * L.q == 0;
}

unsigned default_product_depth(std::uint64_t p) {
    if (p <= 7) return 4;
    if (p <= 13) return 3;
    if (p <= 31) return 2;
    return 1;
}

ProductVerdict verify_product_theorem(std::uint64_t p, unsigned depth, const CountFn& count) {
    if (depth < 1 || depth > 4) throw std::invalid_argument("depth must be in 1..4");
    ProductVerdict v;
    v.p = p;
    v.depth = depth;
    v.product = lpoly_of("C12", p, count) * lpoly_of("C123", p, count) * lpoly_of("C1234", p, count);
    v.holds = v.product.functional_equation_holds();
    std::vector<std::uint64_t> direct;
    for (unsigned m = 1; m <= depth; ++m) {
        auto n = count("C", p, m);
        direct.push_back(n);
        ProductCheck c{m, v.product.predicted_count(m), Integer(std::to_string(n))};
        v.holds = v.holds && c.predicted == c.counted;
        v.checks.push_back(c);
    }
    if (depth == 4) {
        v.direct = lpoly_from_counts(direct, v.product.q, 4);
        v.holds = v.holds && *v.direct == v.product;
    }
    return v;
}

SplitVerdict verify_split(std::uint64_t p, const CountFn& count) {
    SplitVerdict v;
    v.p = p;
    v.genus2 = lpoly_of("C123", p, count);
    v.first = lpoly_of("C12", p, count);
    v.second = lpoly_of("E2split", p, count);
    v.holds = v.genus2 == v.first * v.second;
    return v;
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = lo; n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

PointsRow points_row(std::uint64_t p, const CountFn& count) {
    Integer N(std::to_string(count("C", p, 1)));
    auto b = hws_defect(N, Integer(std::to_string(p)), 4);
    return {p, b.lower, N, b.upper};
}

LpolyRow lpoly_row(std::uint64_t p, const CountFn& count) {
    LpolyRow r{p, lpoly_of("C12", p, count), lpoly_of("C123", p, count), std::nullopt, lpoly_of("C1234", p, count), 0};
    r.quotient123_factors = split_genus2(r.quotient123);
    r.p_rank = p_rank(r.quotient12 * r.quotient123 * r.quotient1234, p);
    return r;
}

}  // namespace quartica
