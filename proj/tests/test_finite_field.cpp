#include <doctest.h>

#include <random>
#include <set>

#include "quartica/finite_field.hpp"

using namespace quartica;

TEST_CASE("field construction") {
    auto f5 = make_field(5, 1);
    CHECK(f5->modulus == std::vector<std::uint64_t>{0, 1});
    CHECK(f5->modulus_string() == "t");
    auto f25 = make_field(5, 2);
    CHECK(f25->modulus == std::vector<std::uint64_t>{2, 0, 1});
    CHECK(f25->modulus_string() == "t^2 + 2");
    CHECK_THROWS_AS(make_field(4, 1), std::invalid_argument);
    CHECK(make_field(7, 4)->q() == 2401);
    CHECK(is_irreducible_mod_p({1, 1, 1}, 5));
    CHECK_FALSE(is_irreducible_mod_p({1, 0, 1}, 5));
}

TEST_CASE("modulus choice is the first irreducible in scan order") {
    // exhaustive oracle: a monic quadratic is irreducible iff it has no root
    for (std::uint64_t p : {5, 7, 11, 13}) {
        auto d = make_field(p, 2);
        std::uint64_t first = 0;
        for (std::uint64_t code = 0; code < p * p; ++code) {
            std::uint64_t c0 = code % p, c1 = code / p;
            bool root = false;
            for (std::uint64_t x = 0; x < p; ++x) root |= (x * x + c1 * x + c0) % p == 0;
            if (!root) {
                first = code;
                break;
            }
        }
        CHECK(d->modulus[0] + p * d->modulus[1] == first);
    }
}

TEST_CASE("quadratic character") {
    auto f5 = make_field(5, 1);
    CHECK(quadratic_character(FqElement(f5.get(), 1)) == 1);
    CHECK(quadratic_character(FqElement(f5.get(), 2)) == -1);
    CHECK(quadratic_character(FqElement(f5.get(), 4)) == 1);
    CHECK(quadratic_character(FqElement(f5.get(), 0)) == 0);
    for (auto [p, m] : {std::pair{5u, 2u}, {7u, 3u}, {13u, 1u}}) {
        auto d = make_field(p, m);
        int sum = 0;
        for (const auto& a : enumerate_field(*d)) sum += quadratic_character(a);
        CHECK(sum == 0);
    }
    CHECK_THROWS(quadratic_character(FqElement(make_field(2, 1).get(), 1)));
}

TEST_CASE("enumeration and chunking") {
    auto f5 = make_field(5, 1);
    auto els = enumerate_field(*f5);
    REQUIRE(els.size() == 5);
    for (std::uint64_t i = 0; i < 5; ++i) CHECK(els[i].coeff(0) == i);
    CHECK(enumerate_field(*make_field(5, 2)).size() == 25);
    std::set<std::uint64_t> seen;
    std::uint64_t covered = 0;
    for (auto [lo, hi] : enumeration_chunks(25, 4)) {
        for (auto i = lo; i < hi; ++i) seen.insert(i);
        covered += hi - lo;
    }
    CHECK(covered == 25);
    CHECK(seen.size() == 25);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(99);
    for (auto [p, m] : {std::pair{5u, 2u}, {7u, 4u}, {11u, 3u}, {101u, 2u}}) {
        auto d = make_field(p, m);
        std::uint64_t q = d->q();
        std::uniform_int_distribution<std::uint64_t> pick(0, q - 1);
        for (int i = 0; i < 200; ++i) {
            auto a = FqElement::from_index(d.get(), pick(rng));
            auto b = FqElement::from_index(d.get(), pick(rng));
            auto c = FqElement::from_index(d.get(), pick(rng));
            CHECK((a + b).pow(p) == a.pow(p) + b.pow(p));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a.pow(q) == a);
            if (!a.is_zero()) {
                CHECK(a.pow(q - 1) == FqElement(d.get(), 1));
                CHECK(a * a.inverse() == FqElement(d.get(), 1));
            }
            CHECK(quadratic_character(a * b) == quadratic_character(a) * quadratic_character(b));
            CHECK(FqElement::from_index(d.get(), a.index()) == a);
        }
    }
}
