#include "quartica/curve_model.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>

#include "quartica/parse.hpp"

namespace quartica {

namespace {

QUPoly qpoly(std::initializer_list<long> ascending) { return QUPoly::from_ints(RationalField{}, ascending); }

QRingPtr xyzw() {
    static const auto r = QRing::make({"x", "y", "z", "w"});
    return r;
}

QRingPtr xy() {
    static const auto r = QRing::make({"x", "y"});
    return r;
}

QPoly y_squared_model(const QUPoly& h, const QUPoly& f) {
    auto r = xy();
    auto y = QPoly::variable(r, "y");
    auto lift = [&](const QUPoly& u) {
        QPoly acc(r);
        auto x = QPoly::variable(r, "x");
        for (std::size_t i = u.coeffs().size(); i-- > 0;) acc = acc * x + QPoly::constant(r, u.coeffs()[i]);
        return acc;
    };
    return y * y + lift(h) * y - lift(f);
}

std::mutex& override_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::string, CurveModel>& overrides() {
    static std::map<std::string, CurveModel> o;
    return o;
}

CurveModel builtin(const std::string& label);

}  // namespace

void override_catalog(const std::string& label, CurveModel model) {
    builtin(label);  // validates the label
    std::lock_guard lock(override_mutex());
    overrides().insert_or_assign(label, std::move(model));
}

void clear_catalog_overrides() {
    std::lock_guard lock(override_mutex());
    overrides().clear();
}

void perturb_catalog(const std::string& label, const std::string& coefficient, const Rational& value) {
    auto model = catalog(label);
    auto bad = [&] { return std::invalid_argument("model " + label + " has no coefficient '" + coefficient + "'"); };
    auto set_upoly = [&](QUPoly& u, std::size_t i) {
        if (i > 6) throw bad();
        std::vector<Rational> c = u.coeffs();
        if (c.size() <= i) c.resize(i + 1, Rational(0));
        c[i] = value;
        u = QUPoly(RationalField{}, std::move(c));
    };
    std::size_t idx = coefficient.size() == 2 && std::isdigit(static_cast<unsigned char>(coefficient[1]))
                          ? static_cast<std::size_t>(coefficient[1] - '0')
                          : 99;
    if (auto* e = std::get_if<EllipticLong>(&model.model)) {
        Rational* slot[7] = {nullptr, &e->a1, &e->a2, &e->a3, &e->a4, nullptr, &e->a6};
        if (coefficient[0] != 'a' || idx > 6 || !slot[idx]) throw bad();
        *slot[idx] = value;
    } else if (auto* h = std::get_if<HyperellipticHF>(&model.model)) {
        if (coefficient[0] == 'h' && idx <= 3) set_upoly(h->h, idx);
        else if (coefficient[0] == 'f') set_upoly(h->f, idx);
        else throw bad();
    } else if (auto* s = std::get_if<SexticModel>(&model.model)) {
        if (coefficient[0] != 's') throw bad();
        set_upoly(s->sextic, idx);
    } else {
        throw bad();
    }
    override_catalog(label, std::move(model));
}

const std::vector<std::string>& catalog_labels() {
    static const std::vector<std::string> labels = {"C",     "planeC",  "C12",     "C12.weier", "C1234",   "C123",
                                                    "C123.weier", "Ctilde", "E1cover", "E2cover", "E2split", "CmodS4"};
    return labels;
}

CurveModel catalog(const std::string& label) {
    {
        std::lock_guard lock(override_mutex());
        auto it = overrides().find(label);
        if (it != overrides().end()) return it->second;
    }
    return builtin(label);
}

namespace {

CurveModel builtin(const std::string& label) {
    if (label == "C")
        return {label, "x^2+y^2+z^2+w^2 = x^3+y^3+z^3+w^3 = 0 in P^3", 4,
                IntersectionP3{parse_poly(xyzw(), "x^2+y^2+z^2+w^2"), parse_poly(xyzw(), "x^3+y^3+z^3+w^3")}};
    if (label == "planeC")
        return {label, "singular plane model obtained by eliminating z from the w = 1 chart", 4,
                PlaneAffine{parse_poly(xy(), "(x^3+y^3+1)^2 + (x^2+y^2+1)^3")}};
    if (label == "C12")
        return {label, "quotient by (1,2), long Weierstrass model", 1,
                EllipticLong{Rational(-3), Rational(0), Rational(-9), Rational(-27, 2), Rational(-27)}};
    if (label == "C12.weier")
        return {label, "quotient by (1,2), short Weierstrass model", 1,
                EllipticLong{Rational(0), Rational(0), Rational(0), Rational(-27), Rational(-378)}};
    if (label == "C1234")
        return {label, "quotient by (1,2,3,4), long Weierstrass model", 1,
                EllipticLong{Rational(-96), Rational(3456), Rational(110592), Rational(14598144),
                             Rational(Integer("-5718933504"))}};
    if (label == "C123")
        return {label, "quotient by (1,2,3), genus 2 model y^2 + h y = f", 2,
                HyperellipticHF{qpoly({0, 0, 1, 1}), qpoly({-6, 18, -36, 36, -25, 4, -1})}};
    if (label == "C123.weier")
        return {label, "quotient by (1,2,3), y^2 = sextic after completing the square and x -> -x", 2,
                SexticModel{qpoly({-24, -72, -144, -144, -99, -18, -3})}};
    if (label == "Ctilde")
        return {label, "Richelot-isogenous genus 2 curve", 2, SexticModel{qpoly({2, 6, 15, 18, 15, 6, 2})}};
    if (label == "E1cover")
        return {label, "y^2 = 64u^3+36u^2+24u+4, scaled to Y^2 = X^3+36X^2+1536X+16384 by X = 64u, Y = 64y", 1,
                EllipticLong{Rational(0), Rational(36), Rational(0), Rational(1536), Rational(16384)}};
    if (label == "E2cover")
        return {label, "y^2 = 4u^3+24u^2+36u+64, scaled to Y^2 = X^3+24X^2+144X+1024 by X = 4u, Y = 4y", 1,
                EllipticLong{Rational(0), Rational(24), Rational(0), Rational(144), Rational(1024)}};
    if (label == "E2split")
        return {label, "second elliptic factor of the split Jacobian", 1,
                EllipticLong{Rational(1), Rational(-1), Rational(0), Rational(-6), Rational(8)}};
    if (label == "CmodS4") return {label, "quotient by S4: the projective line", 0, ProjectiveLine{}};
    std::string known;
    for (const auto& l : catalog_labels()) known += (known.empty() ? "" : ", ") + l;
    throw std::invalid_argument("unknown curve label '" + label + "'; known labels: " + known);
}

}  // namespace

QPoly elliptic_equation(const EllipticLong& e, const QRingPtr& ring, bool homogeneous) {
    auto x = QPoly::variable(ring, "x"), y = QPoly::variable(ring, "y");
    auto z = homogeneous ? QPoly::variable(ring, "z") : QPoly::constant(ring, Rational(1));
    auto c = [&](const Rational& v) { return QPoly::constant(ring, v); };
    return y * y * z + c(e.a1) * x * y * z + c(e.a3) * y * z * z -
           (x * x * x + c(e.a2) * x * x * z + c(e.a4) * x * z * z + c(e.a6) * z * z * z);
}

QUPoly hyperelliptic_discriminant_form(const HyperellipticHF& c) {
    return c.h * c.h + c.f.scaled(Rational(4));
}

std::vector<QPoly> defining_equations(const CurveModel& m) {
    return std::visit(
        [](const auto& v) -> std::vector<QPoly> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, IntersectionP3>) {
                return {v.quadric, v.cubic};
            } else if constexpr (std::is_same_v<T, PlaneAffine>) {
                return {v.f};
            } else if constexpr (std::is_same_v<T, EllipticLong>) {
                return {elliptic_equation(v, xy())};
            } else if constexpr (std::is_same_v<T, HyperellipticHF>) {
                return {y_squared_model(v.h, v.f)};
            } else if constexpr (std::is_same_v<T, SexticModel>) {
                return {y_squared_model(QUPoly(RationalField{}), v.sextic)};
            } else {
                return {};
            }
        },
        m.model);
}

std::string equation_string(const CurveModel& m) {
    return std::visit(
        [&m](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, IntersectionP3>) {
                return v.quadric.to_string() + " = 0, " + v.cubic.to_string() + " = 0";
            } else if constexpr (std::is_same_v<T, PlaneAffine>) {
                return v.f.to_string() + " = 0";
            } else if constexpr (std::is_same_v<T, EllipticLong>) {
                auto r = xy();
                auto c = [&](const Rational& a) { return QPoly::constant(r, a); };
                auto x = QPoly::variable(r, "x"), y = QPoly::variable(r, "y");
                auto lhs = y * y + c(v.a1) * x * y + c(v.a3) * y;
                auto rhs = x * x * x + c(v.a2) * x * x + c(v.a4) * x + c(v.a6);
                return lhs.to_string() + " = " + rhs.to_string();
            } else if constexpr (std::is_same_v<T, HyperellipticHF>) {
                return "y^2 + (" + v.h.to_string() + ")*y = " + v.f.to_string();
            } else if constexpr (std::is_same_v<T, SexticModel>) {
                return "y^2 = " + v.sextic.to_string();
            } else {
                (void)m;
                return "P^1";
            }
        },
        m.model);
}

}  // namespace quartica
