#pragma once

// Shared test oracles: exhaustive point counts and the subgroup list used
// by the invariant-theory property checks.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "quartica/curve_model.hpp"
#include "quartica/finite_field.hpp"

namespace oracle {

using namespace quartica;

// One representative per conjugacy type used in the property checks.
inline const std::vector<std::pair<std::string, std::string>> kS4Subgroups = {
    {"trivial", ""},
    {"order 2", "(1,2)"},
    {"order 3", "(1,2,3)"},
    {"order 4", "(1,2,3,4)"},
    {"S4", "(1,2);(1,2,3,4)"},
};

// Exhaustive oracles, deliberately naive.

inline std::uint64_t naive_intersection(std::uint64_t p, unsigned m) {
    auto d = make_field(p, m);
    auto el = enumerate_field(*d);
    FqElement one(d.get(), 1), zero(d.get());
    auto on = [](const FqElement& x, const FqElement& y, const FqElement& z, const FqElement& w) {
        return (x * x + y * y + z * z + w * w).is_zero() && (x * x * x + y * y * y + z * z * z + w * w * w).is_zero();
    };
    std::uint64_t n = 0;
    for (const auto& x : el)
        for (const auto& y : el) {
            for (const auto& z : el) n += on(x, y, z, one);
            n += on(x, y, one, zero);
        }
    for (const auto& x : el) n += on(x, one, zero, zero);
    n += on(one, zero, zero, zero);
    return n;
}

struct Ysq {
    std::vector<Rational> h, f;  // ascending
};

inline Ysq as_ysq(const CurveModel& m) {
    if (auto e = std::get_if<EllipticLong>(&m.model))
        return {{e->a3, e->a1}, {e->a6, e->a4, e->a2, Rational(1)}};
    if (auto c = std::get_if<HyperellipticHF>(&m.model)) return {c->h.coeffs(), c->f.coeffs()};
    if (auto s = std::get_if<SexticModel>(&m.model)) return {{}, s->sextic.coeffs()};
    throw std::logic_error("not a y^2 model");
}

inline std::uint64_t naive_ysq(const CurveModel& model, std::uint64_t p, unsigned m) {
    auto d = make_field(p, m);
    FqField K(d);
    auto el = enumerate_field(*d);
    auto Y = as_ysq(model);
    auto ev = [&](const std::vector<Rational>& c, const FqElement& x) {
        FqElement acc = K.zero();
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + K.from_rational(c[i]);
        return acc;
    };
    std::uint64_t n = 0;
    for (const auto& x : el) {
        auto hx = ev(Y.h, x), fx = ev(Y.f, x);
        for (const auto& y : el) n += (y * y + hx * y - fx).is_zero();
    }
    if (std::holds_alternative<EllipticLong>(model.model)) return n + 1;
    // genus 2: points at infinity of the smooth model are roots of Y^2 + h_3 Y - f_6
    auto coeff = [&](const std::vector<Rational>& c, std::size_t i) { return i < c.size() ? K.from_rational(c[i]) : K.zero(); };
    auto h3 = coeff(Y.h, 3), f6 = coeff(Y.f, 6);
    if ((h3 * h3 + f6 * K.from_integer(4)).is_zero()) return n + 1;
    for (const auto& y : el) n += (y * y + h3 * y - f6).is_zero();
    return n;
}

inline std::uint64_t naive_plane(const PlaneAffine& c, std::uint64_t p, unsigned m) {
    auto d = make_field(p, m);
    FqField K(d);
    auto el = enumerate_field(*d);
    std::uint64_t n = 0;
    for (const auto& x : el)
        for (const auto& y : el) {
            FqElement acc = K.zero();
            for (const auto& t : c.f.terms()) acc += K.from_rational(t.coeff) * x.pow(t.mono[0]) * y.pow(t.mono[1]);
            n += acc.is_zero();
        }
    return n;
}

}  // namespace oracle
