#include <doctest.h>

#include <random>

#include "quartica/curve_invariants.hpp"
#include "quartica/zeta.hpp"

using namespace quartica;

namespace {

EllipticLong elliptic(const std::string& label) { return std::get<EllipticLong>(catalog(label).model); }
QUPoly sextic(const std::string& label) { return std::get<SexticModel>(catalog(label).model).sextic; }

Rational R(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

// independent oracle: I2 of a binary sextic f0 + f1 x + ... + f6 x^6
Rational clebsch_i2(const QUPoly& f) {
    auto c = [&](int i) { return f.coeff(i); };
    return R(6) * c(3) * c(3) - R(16) * c(2) * c(4) + R(40) * c(1) * c(5) - R(240) * c(0) * c(6);
}

// discriminant of a degree-6 polynomial via the resultant with its derivative
Rational discriminant6(const QUPoly& f) {
    // Sylvester determinant by fraction-free Gaussian elimination over Q
    auto g = f.derivative();
    const int n = 6, m = 5, N = n + m;
    std::vector<std::vector<Rational>> M(N, std::vector<Rational>(N, R(0)));
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) M[r][r + i] = f.coeff(n - i);
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) M[m + r][r + i] = g.coeff(m - i);
    Rational det(1);
    for (int c = 0; c < N; ++c) {
        int piv = c;
        while (piv < N && M[piv][c].is_zero()) ++piv;
        if (piv == N) return R(0);
        if (piv != c) {
            std::swap(M[piv], M[c]);
            det = -det;
        }
        det = det * M[c][c];
        for (int r = c + 1; r < N; ++r) {
            Rational k = M[r][c] / M[c][c];
            for (int j = c; j < N; ++j) M[r][j] = M[r][j] - k * M[c][j];
        }
    }
    // disc = (-1)^{n(n-1)/2} res(f, f') / lead
    return -det / f.coeff(6);
}

QUPoly shift(const QUPoly& f, long c) { return f.compose(QUPoly::from_ints(RationalField{}, {c, 1})); }

}  // namespace

TEST_CASE("j-invariants of the elliptic quotients") {
    CHECK(j_invariant(elliptic("C12")) == R(-36));
    CHECK(j_invariant(elliptic("C12.weier")) == R(-36));
    CHECK(j_invariant(elliptic("C1234")) == R(-36));
    CHECK(j_invariant(EllipticLong{R(0), R(0), R(0), R(-1), R(0)}) == R(1728));
    auto w = elliptic("C12.weier");
    CHECK(w.c4() == R(1296));
    CHECK(w.discriminant() == R(-60466176));
    CHECK_THROWS_AS(j_invariant(EllipticLong{R(0), R(0), R(0), R(0), R(0)}), std::domain_error);
}

TEST_CASE("Weierstrass changes preserve j") {
    auto e = elliptic("C12");
    CHECK(weierstrass_transform(e, R(1), R(0), R(0), R(0)) == e);
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int k = 0; k < 100; ++k) {
        long un = d(rng);
        if (un == 0) un = 5;
        Rational u = R(un, 1 + (k % 4)), r = R(d(rng), 2), s = R(d(rng), 3), t = R(d(rng));
        CHECK(j_invariant(weierstrass_transform(e, u, r, s, t)) == R(-36));
    }
    CHECK_THROWS_AS(weierstrass_transform(e, R(0), R(0), R(0), R(0)), std::invalid_argument);
}

TEST_CASE("fitted change between C1234 and C12") {
    auto fit = fit_weierstrass_change(elliptic("C1234"), elliptic("C12"));
    REQUIRE(fit);
    CHECK(abs(fit->u.num()) == 32);
    CHECK(fit->r == R(-1152));
    CHECK(fit->s == R(0));
    CHECK(fit->t == R(-258048));
    CHECK(weierstrass_transform(elliptic("C1234"), fit->u, fit->r, fit->s, fit->t) == elliptic("C12"));
    CHECK_FALSE(fit_weierstrass_change(elliptic("C12"), elliptic("E2split")));
}

TEST_CASE("short Weierstrass reduction") {
    CHECK(short_weierstrass(elliptic("C12")) == elliptic("C12.weier"));
    CHECK(short_weierstrass(elliptic("C1234")) == elliptic("C12.weier"));
}

TEST_CASE("Igusa invariants of the genus 2 quotient") {
    auto inv = igusa(SexticModel{sextic("C123.weier")});
    CHECK(inv.I2 == R(-138240));
    CHECK(inv.I4 == R(234150912));
    CHECK(inv.I6 == Rational(Integer("-448888946688")));
    CHECK(inv.I10 == Rational(Integer("-12999674453557248")));
    auto hf = std::get<HyperellipticHF>(catalog("C123").model);
    CHECK(igusa(hf) == inv);
    auto abs_inv = absolute(inv);
    CHECK(abs_inv.i1 == R(2823, 1600));
    CHECK(abs_inv.i2 == R(2597331, 128000));
    CHECK(abs_inv.i3 == Rational(Integer(6561), Integer("52428800000")));
}

TEST_CASE("Igusa-Clebsch oracles") {
    for (const std::string label : {"C123.weier", "Ctilde"}) {
        auto form = sextic(label).scaled(R(4));
        auto ic = igusa_clebsch(form);
        CHECK(ic.I2 == clebsch_i2(form));
        CHECK(ic.I10 == discriminant6(form));
    }
}

TEST_CASE("Igusa invariants are weighted homogeneous and translation invariant") {
    auto S = sextic("C123.weier");
    auto base = igusa(SexticModel{S});
    auto scaled = igusa(SexticModel{S.scaled(R(4))});
    CHECK(scaled.I2 == base.I2 * R(16));
    CHECK(scaled.I4 == base.I4 * R(256));
    CHECK(scaled.I6 == base.I6 * R(4096));
    CHECK(scaled.I10 == base.I10 * R(1048576));
    CHECK(igusa(SexticModel{shift(S, 1)}) == base);
    auto a = absolute(base);
    for (long c : {1L, -2L, 7L}) CHECK(absolute(igusa(SexticModel{shift(S, c)})) == a);
    for (long l : {2L, 3L}) CHECK(absolute(igusa(SexticModel{S.scaled(R(l * l))})) == a);
    // x -> 2x
    CHECK(absolute(igusa(SexticModel{S.compose(QUPoly::from_ints(RationalField{}, {0, 2}))})) == a);
    CHECK_THROWS_AS(igusa(SexticModel{QUPoly::from_ints(RationalField{}, {0, 0, 1, 0, 0, 0, 1})}), std::domain_error);
    IgusaInvariants zero4{R(5), R(0), R(1), R(1)};
    CHECK(absolute(zero4).i1 == R(0));
    CHECK_THROWS_AS(absolute(IgusaInvariants{R(0), R(1), R(1), R(1)}), std::domain_error);
}

TEST_CASE("Richelot construction identities") {
    auto d = richelot_build();
    CHECK(d.modulus_irreducible);
    CHECK_FALSE(d.sieve_primes.empty());
    REQUIRE(d.checks.size() == 6);
    for (const auto& c : d.checks) {
        CAPTURE(c.name);
        CAPTURE(c.residual);
        CHECK(c.holds);
    }
    CHECK(d.all_hold());
    CHECK(d.delta.to_string() == "2*a^3 - 18*a");
}

TEST_CASE("irreducibility sieve") {
    auto m = QUPoly::from_ints(RationalField{}, {324, 0, 81, 0, -18, 0, 1});
    CHECK(irreducible_by_degree_sieve(m));
    auto reducible = QUPoly::from_ints(RationalField{}, {-2, 0, 1}) * QUPoly::from_ints(RationalField{}, {3, 0, 0, 1});
    CHECK_FALSE(irreducible_by_degree_sieve(reducible));
    auto degs = factor_degrees_mod_p(QUPoly::from_ints(RationalField{}, {-1, 0, 0, 0, 1}), 5);
    CHECK(degs == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("cover identities") {
    auto checks = verify_covers();
    REQUIRE(checks.size() == 3);
    for (const auto& c : checks) {
        CAPTURE(c.name);
        CAPTURE(c.residual);
        CHECK(c.holds);
    }
}

TEST_CASE("cover curves versus the split factors") {
    // E2cover has the j-invariant of C12; E1cover and E2split differ in j
    CHECK(j_invariant(elliptic("E2cover")) == R(-36));
    CHECK(j_invariant(elliptic("E1cover")) == R(109503, 64));
    CHECK(j_invariant(elliptic("E2split")) == R(-35937, 4));
    // Over F_p the Richelot dual built from F (rather than -3F) is the
    // quadratic twist by -3: signs of odd coefficients flip for p = 2 mod 3.
    auto c = direct_counter();
    for (auto p : primes_between(5, 103)) {
        CAPTURE(p);
        int chi = p % 3 == 1 ? 1 : -1;
        auto tilde = lpoly_of("Ctilde", p, c);
        CHECK(tilde == lpoly_of("E1cover", p, c) * lpoly_of("E2cover", p, c));
        CHECK(quadratic_twist(tilde, chi) == lpoly_of("C123", p, c));
        CHECK(quadratic_twist(lpoly_of("E1cover", p, c), chi) == lpoly_of("E2split", p, c));
        CHECK(quadratic_twist(lpoly_of("E2cover", p, c), chi) == lpoly_of("C12", p, c));
        if (chi == 1) CHECK(tilde == lpoly_of("C123", p, c));
    }
}
