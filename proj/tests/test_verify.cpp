#include <doctest.h>

#include "quartica/verify.hpp"

using namespace quartica;

namespace {

void require_all_pass(const std::vector<CheckResult>& results) {
    REQUIRE_FALSE(results.empty());
    for (const auto& r : results) {
        CAPTURE(r.suite);
        CAPTURE(r.name);
        CAPTURE(r.detail);
        CHECK(r.passed);
    }
}

const CheckResult* find_check(const std::vector<CheckResult>& results, const std::string& fragment) {
    for (const auto& r : results)
        if (r.name.find(fragment) != std::string::npos) return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("every suite passes on the catalog") {
    VerifyOptions o;
    o.pmax = 103;
    auto count = direct_counter(4);
    for (const auto& s : suite_names()) {
        if (s == "all") continue;
        CAPTURE(s);
        require_all_pass(run_suite(s, o, count));
    }
}

TEST_CASE("unknown suite is rejected") {
    CHECK_THROWS_AS(run_suite("bogus", {}, direct_counter()), std::invalid_argument);
}

TEST_CASE("a single prime restricts the prime-dependent suites") {
    VerifyOptions o;
    o.p = 11;
    auto r = run_suite("product", o, direct_counter());
    REQUIRE(r.size() == 1);
    CHECK(r[0].passed);
    CHECK(r[0].name == "p=11 depth 3");
}

TEST_CASE("a corrupted coefficient is caught and named") {
    perturb_catalog("E2split", "a6", Rational(5));
    VerifyOptions o;
    o.pmax = 13;
    auto r = run_suite("split", o, direct_counter());
    clear_catalog_overrides();
    bool any_failed = false;
    for (const auto& c : r) any_failed = any_failed || !c.passed;
    CHECK(any_failed);
    auto* c = find_check(r, "L(C123) = L(C12) L(E2split)");
    REQUIRE(c);
    CHECK_FALSE(c->passed);

    perturb_catalog("C123.weier", "s0", Rational(7));
    auto ig = run_suite("igusa", {}, direct_counter());
    clear_catalog_overrides();
    auto* i2 = find_check(ig, "I2");
    REQUIRE(i2);
    CHECK_FALSE(i2->passed);
    CHECK(i2->detail.find("expected -138240") != std::string::npos);
}
