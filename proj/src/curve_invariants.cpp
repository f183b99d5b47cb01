#include "quartica/curve_invariants.hpp"

#include <bitset>
#include <stdexcept>

#include "quartica/field.hpp"
#include "quartica/parse.hpp"
#include "quartica/quotient.hpp"

namespace quartica {

Rational j_invariant(const EllipticLong& e) {
    auto disc = e.discriminant();
    if (disc.is_zero()) throw std::domain_error("singular Weierstrass model (discriminant 0)");
    return e.c4().pow(3) / disc;
}

EllipticLong weierstrass_transform(const EllipticLong& e, const Rational& u, const Rational& r, const Rational& s,
                                   const Rational& t) {
    if (u.is_zero()) throw std::invalid_argument("Weierstrass change needs u != 0");
    const auto& [a1, a2, a3, a4, a6] = e;
    Rational two(2), three(3);
    EllipticLong out;
    out.a1 = (a1 + two * s) / u;
    out.a2 = (a2 - s * a1 + three * r - s * s) / u.pow(2);
    out.a3 = (a3 + r * a1 + two * t) / u.pow(3);
    out.a4 = (a4 - s * a3 + two * r * a2 - (t + r * s) * a1 + three * r * r - two * s * t) / u.pow(4);
    out.a6 = (a6 + r * a4 + r * r * a2 + r.pow(3) - t * a3 - t * t - r * t * a1) / u.pow(6);
    return out;
}

namespace {

bool rational_root(const Rational& v, unsigned k, Rational& root) {
    // k in {2, 4, 6}
    Rational r2;
    if (k == 2) return rational_sqrt(v, root);
    if (k == 4) return rational_sqrt(v, r2) && rational_sqrt(r2, root);
    // sixth root: cube root of a square root
    if (!rational_sqrt(v, r2)) return false;
    Integer n, d;
    mpz_root(n.get_mpz_t(), r2.num().get_mpz_t(), 3);
    mpz_root(d.get_mpz_t(), r2.den().get_mpz_t(), 3);
    root = Rational(n, d);
    return root.pow(3) == r2;
}

}  // namespace

std::optional<WeierstrassChange> fit_weierstrass_change(const EllipticLong& from, const EllipticLong& to) {
    if (from.discriminant().is_zero() || to.discriminant().is_zero()) return std::nullopt;
    if (j_invariant(from) != j_invariant(to)) return std::nullopt;
    // c4(to) = c4(from)/u^4, c6(to) = c6(from)/u^6
    Rational u;
    const auto c4f = from.c4(), c4t = to.c4(), c6f = from.c6(), c6t = to.c6();
    bool ok;
    if (!c4f.is_zero() && !c6f.is_zero()) {
        ok = rational_root((c6f * c4t) / (c6t * c4f), 2, u);
    } else if (!c4f.is_zero()) {
        ok = rational_root(c4f / c4t, 4, u);
    } else {
        ok = rational_root(c6f / c6t, 6, u);
    }
    if (!ok) return std::nullopt;
    Rational two(2), three(3);
    for (const Rational& cand : {u, -u}) {
        Rational s = (cand * to.a1 - from.a1) / two;
        Rational r = (cand.pow(2) * to.a2 - from.a2 + s * from.a1 + s * s) / three;
        Rational t = (cand.pow(3) * to.a3 - from.a3 - r * from.a1) / two;
        if (weierstrass_transform(from, cand, r, s, t) == to) return WeierstrassChange{cand, r, s, t};
    }
    return std::nullopt;
}

EllipticLong short_weierstrass(const EllipticLong& e) {
    Rational A = -Rational(27) * e.c4(), B = -Rational(54) * e.c6();
    if (!A.is_integer() || !B.is_integer()) throw std::invalid_argument("short model needs integral c4 and c6");
    Integer a = A.num(), b = B.num();
    for (Integer l = 2;; ++l) {
        Integer l4 = l * l * l * l, l6 = l4 * l * l;
        bool a_small = a == 0 || l4 > abs(a), b_small = b == 0 || l6 > abs(b);
        if (a_small && b_small) break;
        while ((a % l4) == 0 && (b % l6) == 0 && !(a == 0 && b == 0)) {
            a /= l4;
            b /= l6;
        }
    }
    return EllipticLong{Rational(0), Rational(0), Rational(0), Rational(a), Rational(b)};
}

// ---- Igusa ------------------------------------------------------------------

namespace {

QRingPtr binary_ring() {
    static const auto r = QRing::make({"x", "y"});
    return r;
}

Rational factorial(unsigned n) {
    Rational r(1);
    for (unsigned i = 2; i <= n; ++i) r = r * Rational(static_cast<long>(i));
    return r;
}

Rational binomial(unsigned n, unsigned k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

QPoly partial(QPoly f, unsigned dx, unsigned dy) {
    while (dx--) f = f.derivative(0);
    while (dy--) f = f.derivative(1);
    return f;
}

// k-th transvectant of binary forms, normalized by (n-k)!(m-k)!/(n!m!).
QPoly transvectant(const QPoly& f, const QPoly& g, unsigned k) {
    auto n = static_cast<unsigned>(f.total_degree()), m = static_cast<unsigned>(g.total_degree());
    QPoly acc(binary_ring());
    for (unsigned j = 0; j <= k; ++j) {
        auto term = partial(f, k - j, j) * partial(g, j, k - j);
        Rational c = binomial(k, j);
        acc += term.scaled(j % 2 ? -c : c);
    }
    return acc.scaled(factorial(n - k) * factorial(m - k) / (factorial(n) * factorial(m)));
}

Rational constant_value(const QPoly& p) {
    if (!p.is_constant()) throw std::logic_error("transvectant of degree 0 is not constant");
    return p.is_zero() ? Rational(0) : p.leading_coeff();
}

}  // namespace

IgusaClebsch igusa_clebsch(const QUPoly& sextic_form) {
    if (sextic_form.degree() > 6 || sextic_form.degree() < 5)
        throw std::invalid_argument("binary sextic expected (degree 5 or 6)");
    auto R = binary_ring();
    QPoly f(R);
    for (std::size_t i = 0; i <= 6; ++i) {
        Monomial m(std::vector<std::uint32_t>{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(6 - i)});
        f += QPoly::term(R, m, sextic_form.coeff(i));
    }
    auto i = transvectant(f, f, 4);
    auto delta = transvectant(i, i, 2);
    auto y1 = transvectant(f, i, 4);
    auto y2 = transvectant(i, y1, 2);
    auto y3 = transvectant(i, y2, 2);
    Rational A = constant_value(transvectant(f, f, 6));
    Rational B = constant_value(transvectant(i, i, 4));
    Rational C = constant_value(transvectant(i, delta, 4));
    Rational D = constant_value(transvectant(y3, y1, 2));
    auto r = [](long v) { return Rational(v); };
    IgusaClebsch out;
    out.I2 = r(-120) * A;
    out.I4 = r(-720) * A * A + r(6750) * B;
    out.I6 = r(8640) * A.pow(3) - r(108000) * A * B + r(202500) * C;
    out.I10 = r(-62208) * A.pow(5) + r(972000) * A.pow(3) * B + r(1620000) * A * A * C - r(3037500) * A * B * B -
              r(6075000) * B * C - r(4556250) * D;
    return out;
}

IgusaInvariants igusa(const SexticModel& c) {
    auto ic = igusa_clebsch(c.sextic.scaled(Rational(4)));
    if (ic.I10.is_zero()) throw std::domain_error("sextic has a repeated root; not a genus 2 curve");
    IgusaInvariants j;
    j.I2 = ic.I2 / Rational(8);
    j.I4 = (Rational(4) * j.I2 * j.I2 - ic.I4) / Rational(96);
    j.I6 = (Rational(8) * j.I2.pow(3) - Rational(160) * j.I2 * j.I4 - ic.I6) / Rational(576);
    j.I10 = ic.I10 / Rational(4096);
    return j;
}

IgusaInvariants igusa(const HyperellipticHF& c) { return igusa(SexticModel{hyperelliptic_discriminant_form(c)}); }

AbsoluteInvariants absolute(const IgusaInvariants& v) {
    if (v.I2.is_zero()) throw std::domain_error("absolute invariants need I2 != 0");
    return {Rational(144) * v.I4 / v.I2.pow(2), Rational(1728) * (v.I2 * v.I4 - Rational(3) * v.I6) / v.I2.pow(3),
            Rational(486) * v.I10 / v.I2.pow(5)};
}

// ---- irreducibility sieve -------------------------------------------------------

std::vector<int> factor_degrees_mod_p(const QUPoly& f, std::uint64_t p) {
    PrimeField Fp(p);
    std::vector<ModP> c;
    for (const auto& v : f.coeffs()) c.push_back(Fp.from_rational(v));
    UPoly<PrimeField> g(Fp, std::move(c));
    if (g.degree() != f.degree() || !is_squarefree(g))
        throw std::domain_error("polynomial is not squarefree of full degree mod " + std::to_string(p));
    g = g.monic();
    std::vector<int> degs;
    auto x = UPoly<PrimeField>::x(Fp);
    auto h = x;
    for (int i = 1; g.degree() >= 2 * i; ++i) {
        UPoly<PrimeField> acc = UPoly<PrimeField>::constant(Fp, Fp.one()), base = h % g;
        for (std::uint64_t e = p; e; e >>= 1) {
            if (e & 1) acc = (acc * base) % g;
            base = (base * base) % g;
        }
        h = acc;
        auto d = gcd(h - x, g);
        if (d.degree() > 0) {
            for (int k = 0; k < d.degree() / i; ++k) degs.push_back(i);
            g = g / d;
            h = h % g;
        }
    }
    if (g.degree() > 0) degs.push_back(g.degree());
    return degs;
}

std::optional<std::vector<std::uint64_t>> irreducible_by_degree_sieve(const QUPoly& f, std::uint64_t max_prime) {
    const int n = f.degree();
    if (n < 1 || n > 63) throw std::invalid_argument("degree out of range for the sieve");
    std::bitset<64> possible;
    for (int d = 1; d < n; ++d) possible.set(d);
    std::vector<std::uint64_t> used;
    for (std::uint64_t p = 2; p <= max_prime && possible.any(); ++p) {
        if (!is_prime(p)) continue;
        std::vector<int> degs;
        try {
            degs = factor_degrees_mod_p(f, p);
        } catch (const std::domain_error&) {
            continue;  // bad prime
        }
        std::bitset<64> sums;
        sums.set(0);
        for (int d : degs) sums |= sums << d;
        auto before = possible;
        possible &= sums;
        if (possible != before) used.push_back(p);
    }
    if (possible.any()) return std::nullopt;
    return used;
}

// ---- Richelot -----------------------------------------------------------------

namespace {

const QUPoly& richelot_modulus() {
    static const QUPoly m = QUPoly::from_ints(RationalField{}, {324, 0, 81, 0, -18, 0, 1});
    return m;
}

// Polynomial in x whose coefficients are polynomials in a, written over Q.
NFPoly nf_poly(const NumberField& K, const std::string& text) {
    auto R = QRing::make({"x", "a"});
    auto p = parse_poly(R, text);
    std::vector<NumberFieldElement> coeffs;
    for (const auto& t : p.terms()) {
        std::size_t i = t.mono[0];
        if (coeffs.size() <= i) coeffs.resize(i + 1, K.zero());
        coeffs[i] = coeffs[i] + K.make(QUPoly::monomial(RationalField{}, t.coeff, t.mono[1]));
    }
    return NFPoly(K, std::move(coeffs));
}

NFPoly lift(const NumberField& K, const QUPoly& f) {
    std::vector<NumberFieldElement> c;
    for (const auto& v : f.coeffs()) c.push_back(K.from_rational(v));
    return NFPoly(K, std::move(c));
}

IdentityCheck compare(std::string name, std::string claim, const NFPoly& lhs, const NFPoly& rhs) {
    IdentityCheck c{std::move(name), std::move(claim), lhs == rhs, ""};
    if (!c.holds) c.residual = (lhs - rhs).to_string("x");
    return c;
}

}  // namespace

bool RichelotData::all_hold() const {
    if (!modulus_irreducible) return false;
    for (const auto& c : checks)
        if (!c.holds) return false;
    return true;
}

RichelotData richelot_build() {
    NumberField K(richelot_modulus(), "a");
    RichelotData d{K, false, {}, NFPoly(K), NFPoly(K), NFPoly(K), K.zero(), NFPoly(K), NFPoly(K), NFPoly(K),
                   Rational(-324), {}};
    if (auto primes = irreducible_by_degree_sieve(richelot_modulus())) {
        d.modulus_irreducible = true;
        d.sieve_primes = *primes;
    }
    d.F1 = nf_poly(K, "x^2 + (a^4-3a^2)/18*x + (a^4-9a^2-18)/18");
    d.F2 = nf_poly(K, "x^2 + (-a^5-a^4+15a^3+3a^2-72a+108)/36*x + (-a^5-2a^4+15a^3+18a^2-108a-72)/72");
    d.F3 = nf_poly(K, "x^2 + (a^5-a^4-15a^3+3a^2+72a+108)/36*x + (a^5-2a^4-15a^3+18a^2+108a-72)/72");
    d.G1 = nf_poly(K, "(-a^4+27a^2-108)/648*x^2 + (-a^4+15a^2-36)/216*x + (-a^4+18a^2-108)/162");
    d.G2 = nf_poly(K,
                   "(-a^5+a^4+15a^3-27a^2+108)/1296*x^2 + (a^4-15a^2+36a+36)/432*x + "
                   "(-a^5+4a^4+15a^3-72a^2+108a-216)/1296");
    d.G3 = nf_poly(K,
                   "(a^5+a^4-15a^3-27a^2+108)/1296*x^2 + (a^4-15a^2-36a+36)/432*x + "
                   "(a^5+4a^4-15a^3-72a^2-108a-216)/1296");

    auto F = QUPoly::from_ints(RationalField{}, {8, 24, 48, 48, 33, 6, 1});
    d.checks.push_back(compare("(i) product", "F1 F2 F3 = x^6+6x^5+33x^4+48x^3+48x^2+24x+8", d.F1 * d.F2 * d.F3,
                               lift(K, F)));

    // rows (q0, q1, q2); the leading coefficient is shared, so subtracting
    // rows reduces the determinant to a 2x2 minor
    const NFPoly* Fs[3] = {&d.F1, &d.F2, &d.F3};
    NumberFieldElement q[3][3] = {{K.zero(), K.zero(), K.zero()}, {K.zero(), K.zero(), K.zero()},
                                  {K.zero(), K.zero(), K.zero()}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) q[r][c] = Fs[r]->coeff(c);
    d.delta = q[0][0] * (q[1][1] * q[2][2] - q[1][2] * q[2][1]) - q[0][1] * (q[1][0] * q[2][2] - q[1][2] * q[2][0]) +
              q[0][2] * (q[1][0] * q[2][1] - q[1][1] * q[2][0]);
    auto expected_delta = K.make(QUPoly::from_ints(RationalField{}, {0, -18, 0, 2}));
    IdentityCheck det{"(ii) determinant", "delta = det(q_{i,j}) = 2a^3 - 18a, nonzero", false, ""};
    det.holds = d.delta == expected_delta && !is_zero(d.delta);
    if (!det.holds) det.residual = (d.delta - expected_delta).to_string();
    d.checks.push_back(det);

    if (!is_zero(d.delta)) {
        auto inv = d.delta.inverse();
        auto wr = [&](const NFPoly& Fj, const NFPoly& Fk) {
            auto w = Fj.derivative() * Fk - Fj * Fk.derivative();
            return w.scaled(inv);
        };
        d.checks.push_back(compare("(iii) G1", "G1 = delta^-1 (F2' F3 - F2 F3')", wr(d.F2, d.F3), d.G1));
        d.checks.push_back(compare("(iii) G2", "G2 = delta^-1 (F3' F1 - F3 F1')", wr(d.F3, d.F1), d.G2));
        d.checks.push_back(compare("(iii) G3", "G3 = delta^-1 (F1' F2 - F1 F2')", wr(d.F1, d.F2), d.G3));
    }
    auto tilde = std::get<SexticModel>(catalog("Ctilde").model).sextic;
    d.checks.push_back(compare("(iv) dual sextic", "d G1 G2 G3 = 2x^6+6x^5+15x^4+18x^3+15x^2+6x+2 (d = -324)",
                               (d.G1 * d.G2 * d.G3).scaled(K.from_rational(d.multiplier)), lift(K, tilde)));
    return d;
}

std::vector<IdentityCheck> verify_covers() {
    std::vector<IdentityCheck> out;
    const QUPoly tilde = std::get<SexticModel>(catalog("Ctilde").model).sextic;
    const RationalField Q;
    auto target = QUPoly::from_ints(Q, {4, 0, 24, 0, 36, 0, 64});

    // (a) f((x+1)/(x-1)) (x-1)^6
    auto xp1 = QUPoly::from_ints(Q, {1, 1}), xm1 = QUPoly::from_ints(Q, {-1, 1});
    QUPoly cleared(Q);
    for (int i = 0; i <= 6; ++i) cleared = cleared + (xp1.pow(i) * xm1.pow(6 - i)).scaled(tilde.coeff(i));
    IdentityCheck a{"(a) Moebius change", "f((x+1)/(x-1)) (x-1)^6 = 64x^6+36x^4+24x^2+4", cleared == target, ""};
    if (!a.holds) a.residual = (cleared - target).to_string("x");
    out.push_back(a);

    auto src = QRing::make({"x", "y"});
    auto dst = QRing::make({"u", "y"});
    std::vector<QPoly> sextic_curve = {parse_poly(src, "y^2 - (64x^6+36x^4+24x^2+4)")};
    using RF = RationalFunction<RationalField>;
    auto poly = [&](const char* s) { return RF::polynomial(parse_poly(src, s)); };

    auto e1 = parse_poly(dst, "y^2 - (64u^3+36u^2+24u+4)");
    auto vb = verify_model_map(sextic_curve, {e1}, {{"u", poly("x^2")}, {"y", poly("y")}});
    out.push_back({"(b) first cover", "(x,y) -> (x^2, y) maps onto y^2 = 64u^3+36u^2+24u+4", vb.holds,
                   vb.holds ? "" : vb.to_string()});

    auto e2 = parse_poly(dst, "y^2 - (4u^3+24u^2+36u+64)");
    auto vc = verify_model_map(sextic_curve, {e2},
                               {{"u", RF{parse_poly(src, "1"), parse_poly(src, "x^2")}},
                                {"y", RF{parse_poly(src, "y"), parse_poly(src, "x^3")}}});
    out.push_back({"(c) second cover", "(x,y) -> (1/x^2, y/x^3) maps onto y^2 = 4u^3+24u^2+36u+64", vc.holds,
                   vc.holds ? "" : vc.to_string()});
    return out;
}

}  // namespace quartica
