#include <doctest.h>

#include <algorithm>
#include <random>

#include "quartica/finite_field.hpp"
#include "quartica/zeta.hpp"
#include "oracles.hpp"
#include "reference_tables.hpp"

using namespace quartica;
using oracle::naive_intersection;
using oracle::naive_ysq;

namespace {

Integer I(long v) { return Integer(v); }

LPolynomial quad(long q, long b) { return LPolynomial{{I(1), I(b), I(q)}, I(q), 1}; }

}  // namespace

TEST_CASE("calibration: p = 5 row fixes the sign convention") {
    auto c = direct_counter();
    CHECK(count_model("C12.weier", 5).N == 5);
    CHECK(lpoly_of("C12.weier", 5, c) == quad(5, -1));
    CHECK(lpoly_of("C12.weier", 5, c).to_string() == "5t^2 - t + 1");
    CHECK(count_model("E2split", 5).N == 9);
    CHECK(count_model("C123", 5).N == 8);
    CHECK(lpoly_of("C123", 5, c) == quad(5, -1) * quad(5, 3));
}

TEST_CASE("intersection counts") {
    CHECK(count_intersection(5).N == 6);
    CHECK(count_intersection(11).N == 0);
    CHECK(count_intersection(19).N == 0);
    CHECK(count_intersection(71).N == 132);
    CHECK_THROWS_AS(count_intersection(3), std::invalid_argument);
    CHECK(count_intersection(13, 2, 1).N == count_intersection(13, 2, 7).N);
}

TEST_CASE("counting kernels agree with exhaustive enumeration") {
    for (std::uint64_t p : {5, 7, 11, 13}) {
        for (unsigned m : {1U, 2U}) {
            CAPTURE(p);
            CAPTURE(m);
            CHECK(count_intersection(p, m, 3).N == naive_intersection(p, m));
            for (const auto& label : catalog_labels()) {
                auto model = catalog(label);
                bool ysq = std::holds_alternative<EllipticLong>(model.model) ||
                           std::holds_alternative<HyperellipticHF>(model.model) ||
                           std::holds_alternative<SexticModel>(model.model);
                if (!ysq) continue;
                CAPTURE(label);
                if (bad_reduction(label, p)) {
                    CHECK_THROWS_AS(count_model(label, p, m), std::domain_error);
                    continue;
                }
                CHECK(count_model(label, p, m, 2).N == naive_ysq(model, p, m));
            }
        }
    }
}

TEST_CASE("plane model counts are enumeration-order independent") {
    auto pm = std::get<PlaneAffine>(catalog("planeC").model);
    auto a = count_plane_affine(pm, 7, 1, 1).N;
    CHECK(a == count_plane_affine(pm, 7, 1, 4).N);
    // shuffled order oracle
    auto d = make_field(7, 1);
    auto el = enumerate_field(*d);
    std::mt19937 rng(7);
    std::shuffle(el.begin(), el.end(), rng);
    std::uint64_t n = 0;
    FqField K(d);
    for (const auto& x : el)
        for (const auto& y : el) {
            FqElement acc = K.zero();
            for (const auto& t : pm.f.terms()) acc += K.from_rational(t.coeff) * x.pow(t.mono[0]) * y.pow(t.mono[1]);
            n += acc.is_zero();
        }
    CHECK(a == n);
}

TEST_CASE("lpoly_from_counts") {
    CHECK(lpoly_from_counts({5}, I(5), 1) == quad(5, -1));
    CHECK(lpoly_from_counts({14}, I(13), 1) == quad(13, 0));
    auto sq31 = quad(31, 4) * quad(31, 4);
    auto c = direct_counter();
    CHECK(lpoly_of("C123", 31, c) == sq31);
    // s1 = 1, s2 = 0 gives 2 c2 = 1
    CHECK_THROWS_WITH_AS(lpoly_from_counts({5, 26}, I(5), 2), "counts inconsistent with a genus-2 curve",
                         std::domain_error);
    CHECK_THROWS_AS(lpoly_from_counts({5}, I(5), 2), std::invalid_argument);
}

TEST_CASE("p-rank and HWS bounds") {
    auto L7 = quad(7, 0) * quad(7, 0) * quad(7, 0) * quad(7, 4);
    CHECK(p_rank(L7, 7) == 1);
    CHECK(p_rank(quad(13, 0), 13) == 0);
    auto L11 = quad(11, -4) * quad(11, -4) * quad(11, 0) * quad(11, -4);
    CHECK(p_rank(L11, 11) == 3);
    auto a = quad(13, 5), b = quad(13, 1);
    CHECK(p_rank(a * b, 13) == p_rank(a, 13) + p_rank(b, 13));
    auto h = hws_defect(I(6), I(5), 4);
    CHECK(h.lower == -10);
    CHECK(h.upper == 22);
    CHECK(h.defect == 16);
    CHECK(hws_defect(I(132), I(71), 4).defect == 4);
    auto h103 = hws_defect(I(96), I(103), 4);
    CHECK(h103.lower == 24);
    CHECK(h103.upper == 184);
}

TEST_CASE("genus-1 counts over F_{p^2} follow from the m = 1 L-polynomial") {
    auto c = direct_counter();
    for (auto p : primes_between(5, 31)) {
        for (const std::string label : {"C12", "C1234", "E2split", "C12.weier"}) {
            if (bad_reduction(label, p)) continue;
            CAPTURE(p);
            CAPTURE(label);
            auto L = lpoly_of(label, p, c);
            CHECK(L.predicted_count(2) == Integer(static_cast<unsigned long>(count_model(label, p, 2).N)));
            CHECK(L.weil_deviation() < 1e-6);
            CHECK(L.functional_equation_holds());
        }
    }
}

TEST_CASE("split and criterion") {
    auto c = direct_counter();
    auto v5 = verify_split(5, c);
    CHECK(v5.holds);
    CHECK(v5.first == quad(5, -1));
    CHECK(v5.second == quad(5, 3));
    auto v103 = verify_split(103, c);
    CHECK(v103.holds);
    CHECK(v103.first == quad(103, -4));
    CHECK(v103.second == quad(103, 4));
    CHECK(e1_e2_isogeny_criterion(quad(31, 4) * quad(31, 4)));
    CHECK_FALSE(e1_e2_isogeny_criterion(quad(5, -1) * quad(5, 3)));
    CHECK(e1_e2_isogeny_criterion(lpoly_of("C123", 89, c)));
    LPolynomial broken{{I(1), I(2), I(3), I(4), I(5)}, I(5), 2};
    CHECK_THROWS_AS(e1_e2_isogeny_criterion(broken), std::invalid_argument);
    auto f = split_genus2(quad(5, -1) * quad(5, 3));
    REQUIRE(f);
    CHECK(f->first == quad(5, -1));
    CHECK(f->second == quad(5, 3));
}

TEST_CASE("product theorem at small primes") {
    auto c = direct_counter(4);
    auto v = verify_product_theorem(5, 4, c);
    CHECK(v.holds);
    REQUIRE(v.direct);
    CHECK(*v.direct == quad(5, -1) * quad(5, -1) * quad(5, -1) * quad(5, 3));
    CHECK(verify_product_theorem(7, 2, c).holds);
    CHECK(default_product_depth(7) == 4);
    CHECK(default_product_depth(13) == 3);
    CHECK(default_product_depth(31) == 2);
    CHECK(default_product_depth(37) == 1);
}

TEST_CASE("reference rows for small primes") {
    auto c = direct_counter();
    for (const auto& row : reference::kLpolyTable) {
        if (row.p > 23) break;
        CAPTURE(row.p);
        auto r = lpoly_row(row.p, c);
        long q = static_cast<long>(row.p);
        CHECK(r.quotient12 == quad(q, row.quotient12));
        CHECK(r.quotient1234 == quad(q, row.quotient1234));
        REQUIRE(r.quotient123_factors);
        auto lo = std::min(row.quotient123[0], row.quotient123[1]);
        auto hi = std::max(row.quotient123[0], row.quotient123[1]);
        CHECK(r.quotient123_factors->first == quad(q, lo));
        CHECK(r.quotient123_factors->second == quad(q, hi));
        CHECK(r.p_rank == row.p_rank);
    }
    for (const auto& row : reference::kPointsTable) {
        if (row.p > 23) break;
        auto r = points_row(row.p, c);
        CHECK(r.N == row.points);
        CHECK(r.lower == row.lower);
        CHECK(r.upper == row.upper);
    }
}

TEST_CASE("Weil check tolerates repeated factors and flags violations") {
    auto a = quad(5, -1), b = quad(5, 3);
    auto repeated = a * a * a * b;
    CHECK(repeated.weil_deviation() < 1e-12);
    LPolynomial bad{{I(1), I(5), I(5)}, I(5), 1};
    CHECK(bad.weil_deviation() > 0.3);
}
