#include <doctest.h>

#include <numeric>
#include <random>

#include "quartica/multipoly.hpp"
#include "quartica/parse.hpp"
#include "quartica/quotient_ring.hpp"
#include "quartica/upoly.hpp"

using namespace quartica;

namespace {

QRingPtr ring(std::vector<std::string> vars) { return QRing::make(std::move(vars)); }

QPoly P(const QRingPtr& r, const std::string& s) { return parse_poly(r, s); }

QPoly random_poly(const QRingPtr& r, std::mt19937& rng, int max_terms = 6, int max_deg = 6) {
    std::uniform_int_distribution<int> nterms(0, max_terms), coeff(-9, 9), den(1, 4);
    std::vector<QPoly::Term> terms;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Monomial m(r->nvars());
        int budget = std::uniform_int_distribution<int>(0, max_deg)(rng);
        for (int k = 0; k < budget; ++k) m[std::uniform_int_distribution<std::size_t>(0, r->nvars() - 1)(rng)] += 1;
        terms.push_back({m, Rational(coeff(rng), den(rng))});
    }
    return QPoly(r, terms);
}

}  // namespace

TEST_CASE("rational arithmetic is exact and normalized") {
    Rational a(6, -4);
    CHECK(a.to_string() == "-3/2");
    CHECK(a.den() == 2);
    CHECK((Rational(1, 3) + Rational(1, 6)).to_string() == "1/2");
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS(Rational::parse("1/x"));
}

TEST_CASE("rational arithmetic agrees with a naive fraction oracle") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
    for (int i = 0; i < 10000; ++i) {
        long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        // oracle: unreduced fractions, compared by cross multiplication
        auto same = [](const Rational& r, long n, long m) { return r.num() * m == r.den() * n; };
        CHECK(same(Rational(a, b) + Rational(c, d), a * d + b * c, b * d));
        CHECK(same(Rational(a, b) * Rational(c, d), a * c, b * d));
        CHECK(same(Rational(a, b) - Rational(c, d), a * d - b * c, b * d));
        if (c != 0) CHECK(same(Rational(a, b) / Rational(c, d), (c < 0 ? -a : a) * d, b * (c < 0 ? -c : c)));
        CHECK(std::gcd(to_int64(Rational(a, b).num()), to_int64(Rational(a, b).den())) <= 1);
    }
}

TEST_CASE("prime field basics") {
    PrimeField f5(5);
    CHECK((f5.from_integer(3) * f5.from_integer(2)) == f5.one());
    CHECK(f5.from_integer(-1).value() == 4);
    CHECK(f5.from_rational(Rational(1, 2)).value() == 3);
    CHECK_THROWS_AS(f5.from_rational(Rational(1, 5)), std::domain_error);
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
}

TEST_CASE("difference of squares and absorbing zero") {
    auto r = ring({"x", "y"});
    CHECK((P(r, "x+y") * P(r, "x-y")) == P(r, "x^2-y^2"));
    CHECK((P(r, "x^2+y^2+1") * QPoly(r)).is_zero());
}

TEST_CASE("plane model expands to degree 6 in each variable") {
    auto r = ring({"x", "y"});
    auto f = P(r, "(x^3+y^3+1)^2 + (x^2+y^2+1)^3");
    CHECK(f.total_degree() == 6);
    CHECK(f.degree_in("x") == 6);
    CHECK(f.degree_in("y") == 6);
    CHECK(f.permute_vars({1, 0}) == f);
}

TEST_CASE("ring mismatch is reported") {
    auto r1 = ring({"x", "y"});
    auto r2 = ring({"x", "z"});
    CHECK_THROWS_WITH_AS(P(r1, "x") + P(r2, "x"), doctest::Contains("ring mismatch"), std::invalid_argument);
}

TEST_CASE("parser accepts TeX-style notation") {
    auto r = ring({"a", "b", "c", "d"});
    CHECK(P(r, "a^3-3ac + 2bc + 2b-2") == P(r, "a^3 - 3*a*c + 2*b*c + 2*b - 2"));
    CHECK(P(r, "a^2 = b") == P(r, "a^2 - b"));
    auto r2 = ring({"x", "y"});
    CHECK(P(r2, "\\frac{1}{2}x^{2} - \\frac{27}{2}y") == P(r2, "1/2*x^2 - 27/2*y"));
    CHECK(P(r2, "y^2 - 3xy = x^3") == P(r2, "y^2 - 3*x*y - x^3"));
    CHECK_THROWS_AS(P(r2, "x + q"), ParseError);
    CHECK_THROWS_AS(P(r2, "x / y"), ParseError);
    CHECK(P(r, "a^3 - 3*a*c + 2*b*c + 2*b - 2").to_string() == "a^3 - 3*a*c + 2*b*c + 2*b - 2");
}

TEST_CASE("primitive integer representative") {
    auto r = ring({"x", "y"});
    CHECK(primitive_part(P(r, "-1/2x^2 + 3/4y")) == P(r, "2x^2 - 3y"));
}

TEST_CASE("monomial orders") {
    auto lex = QRing::make({"x", "y", "z"}, {}, MonomialOrder::lex({"z", "y", "x"}));
    auto p = parse_poly(lex, "x^5 + y^2 + z");
    CHECK(p.leading_monomial() == Monomial({0, 0, 1}));
    auto grev = QRing::make({"x", "y", "z"}, {}, MonomialOrder::grevlex());
    auto q = parse_poly(grev, "x*z^2 + y^3 + x^2*y");
    CHECK(q.leading_monomial() == Monomial({2, 1, 0}));
    auto block = QRing::make({"x", "y", "a"}, {}, MonomialOrder::block_order({"x", "y", "a"}, 2));
    auto b = parse_poly(block, "a^9 + y");
    CHECK(b.leading_monomial() == Monomial({0, 1, 0}));
    CHECK_THROWS(QRing::make({"x", "y"}, {}, MonomialOrder::lex({"x"})));
}

TEST_CASE("ring axioms on random sparse polynomials") {
    std::mt19937 rng(11);
    std::vector<QRingPtr> rings = {ring({"x", "y", "z", "u", "v"}),
                                   QRing::make({"x", "y", "z"}, {}, MonomialOrder::grevlex({"z", "x", "y"})),
                                   QRing::make({"a", "b", "c", "d"}, {}, MonomialOrder::block_order({"a", "b", "c", "d"}, 2))};
    for (const auto& r : rings) {
        for (int it = 0; it < 60; ++it) {
            auto a = random_poly(r, rng), b = random_poly(r, rng), c = random_poly(r, rng);
            CHECK((a + b) == (b + a));
            CHECK((a * b) == (b * a));
            CHECK(((a * b) * c) == (a * (b * c)));
            CHECK((a * (b + c)) == (a * b + a * c));
            CHECK((a - a).is_zero());
            if (!a.is_zero() && !b.is_zero()) {
                auto ab = a * b;
                CHECK(ab.leading_monomial() == a.leading_monomial() * b.leading_monomial());
            }
            std::map<std::string, RationalFunction<RationalField>> identity;
            auto s = substitute(a, identity, r);
            CHECK(s.num == a);
            CHECK(s.den == QPoly::constant(r, Rational(1)));
        }
    }
}

TEST_CASE("substitution with rational functions") {
    auto r = ring({"x"});
    using RF = RationalFunction<RationalField>;
    auto shift = substitute(P(r, "x^2+1"), {{"x", RF::polynomial(P(r, "x+1"))}}, r);
    CHECK(shift.num == P(r, "x^2+2x+2"));
    CHECK(shift.den == P(r, "1"));

    auto f = P(r, "2x^6+6x^5+15x^4+18x^3+15x^2+6x+2");
    auto mob = substitute(f, {{"x", RF{P(r, "x+1"), P(r, "x-1")}}}, r);
    CHECK(mob.num == P(r, "64x^6+36x^4+24x^2+4"));
    CHECK(mob.den == P(r, "(x-1)^6"));

    auto r2 = ring({"x", "y"});
    auto hf = P(r2, "(x^3+x^2)^2 + 4*(-x^6+4x^5-25x^4+36x^3-36x^2+18x-6)");
    auto flipped = substitute(hf, {{"x", RF::polynomial(P(r2, "-x"))}}, r2);
    CHECK(flipped.num == P(r2, "-3x^6-18x^5-99x^4-144x^3-144x^2-72x-24"));

    CHECK_THROWS_AS(substitute(f, {{"q", RF::polynomial(P(r, "x"))}}, r), std::invalid_argument);
}

TEST_CASE("homogenize and dehomogenize") {
    auto r = ring({"a", "b", "w"});
    auto h = homogenize(P(r, "a^3+3ab^2+3a-2b^3-2"), "w");
    CHECK(h == P(r, "a^3+3ab^2+3aw^2-2b^3-2w^3"));
    CHECK(h.is_homogeneous());
    auto r4 = ring({"x", "y", "z", "w"});
    CHECK(dehomogenize(P(r4, "x^2+y^2+z^2+w^2"), "w") == P(r4, "x^2+y^2+z^2+1"));
    std::mt19937 rng(3);
    auto r3 = ring({"x", "y", "t"});
    for (int i = 0; i < 50; ++i) {
        auto base = random_poly(ring({"x", "y"}), rng).to_ring(r3) + P(r3, "5");
        CHECK(dehomogenize(homogenize(base, "t"), "t") == base);
    }
}

TEST_CASE("number field Q[a]/(a^6-18a^4+81a^2+324)") {
    RationalField Q;
    NumberField K(UPoly<RationalField>::from_ints(Q, {324, 0, 81, 0, -18, 0, 1}));
    auto a = K.generator();
    CHECK((a * a.inverse()) == K.one());
    CHECK(a.pow(6) == K.make(UPoly<RationalField>::from_ints(Q, {-324, 0, -81, 0, 18})));
    auto delta = a.pow(3) * K.from_integer(2) - a * K.from_integer(18);
    CHECK_FALSE(is_zero(delta));
    CHECK(a.pow(6).rep().degree() < 6);

    NumberField reducible(UPoly<RationalField>::from_ints(Q, {-1, 0, 1}));
    auto t = reducible.generator() - reducible.one();
    CHECK_THROWS_WITH_AS(t.inverse(), doctest::Contains("gcd with modulus is a - 1"), std::domain_error);
}

TEST_CASE("univariate helpers") {
    RationalField Q;
    auto f = UPoly<RationalField>::from_ints(Q, {1, 2, 1});
    CHECK(squarefree_part(f) == UPoly<RationalField>::from_ints(Q, {1, 1}));
    CHECK_FALSE(is_squarefree(f));
    auto [g, s, t] = xgcd(UPoly<RationalField>::from_ints(Q, {1, 0, 1}), UPoly<RationalField>::from_ints(Q, {0, 1}));
    CHECK(g.degree() == 0);
    CHECK((s * UPoly<RationalField>::from_ints(Q, {1, 0, 1}) + t * UPoly<RationalField>::from_ints(Q, {0, 1})) == g);
}
