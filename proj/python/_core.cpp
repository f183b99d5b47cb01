#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quartica/curve_invariants.hpp"
#include "quartica/groebner.hpp"
#include "quartica/invariants.hpp"
#include "quartica/parse.hpp"
#include "quartica/quotient.hpp"
#include "quartica/verify.hpp"
#include "quartica/zeta.hpp"

namespace py = pybind11;
using namespace quartica;

namespace {

// Python ints are unbounded, so exact values cross via their decimal form.
py::int_ to_py(const Integer& v) { return py::int_(py::str(v.get_str())); }

py::object to_py(const Rational& r) {
    auto fractions = py::module_::import("fractions");
    return fractions.attr("Fraction")(to_py(r.num()), to_py(r.den()));
}

py::list to_py(const LPolynomial& L) {
    py::list out;
    for (const auto& c : L.c) out.append(to_py(c));
    return out;
}

py::dict lpoly_dict(const std::string& curve, std::uint64_t p, const LPolynomial& L) {
    py::dict d;
    d["curve"] = curve;
    d["p"] = p;
    d["genus"] = L.genus;
    d["L"] = to_py(L);
    return d;
}

std::vector<std::string> strings(const std::vector<QPoly>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact point counts, L-polynomials and symbolic checks for the curve C";

    m.def("catalog_labels", &catalog_labels);
    m.def("equation", [](const std::string& label) { return equation_string(catalog(label)); }, py::arg("curve"));

    m.def(
        "count",
        [](const std::string& curve, std::uint64_t p, unsigned ext, unsigned workers) {
            py::gil_scoped_release release;
            return count_model(curve, p, ext, workers).N;
        },
        py::arg("curve"), py::arg("p"), py::arg("m") = 1, py::arg("workers") = 1,
        "Number of points over F_{p^m}.");

    m.def(
        "lpoly",
        [](const std::string& curve, std::uint64_t p) {
            auto count = direct_counter();
            LPolynomial L = curve == "C" && p > 7
                                ? lpoly_of("C12", p, count) * lpoly_of("C123", p, count) * lpoly_of("C1234", p, count)
                                : lpoly_of(curve, p, count);
            return lpoly_dict(curve, p, L);
        },
        py::arg("curve"), py::arg("p"), "L-polynomial as {'curve', 'p', 'genus', 'L'} with L ascending.");

    m.def(
        "points_row",
        [](std::uint64_t p) {
            auto r = points_row(p, direct_counter());
            return py::make_tuple(p, to_py(r.lower), to_py(r.N), to_py(r.upper));
        },
        py::arg("p"), "(p, lower, points, upper) with the Hasse-Weil-Serre bounds for genus 4.");

    m.def(
        "lpoly_row",
        [](std::uint64_t p) {
            auto r = lpoly_row(p, direct_counter());
            py::dict d;
            d["p"] = p;
            d["C12"] = to_py(r.quotient12);
            d["C123"] = to_py(r.quotient123);
            if (r.quotient123_factors)
                d["C123_factors"] = py::make_tuple(to_py(r.quotient123_factors->first),
                                                   to_py(r.quotient123_factors->second));
            else
                d["C123_factors"] = py::none();
            d["C1234"] = to_py(r.quotient1234);
            d["p_rank"] = r.p_rank;
            return d;
        },
        py::arg("p"));

    m.def(
        "verify",
        [](const std::string& suite, std::optional<std::uint64_t> p, std::optional<unsigned> depth,
           std::uint64_t pmax) {
            VerifyOptions o;
            o.p = p;
            o.depth = depth;
            o.pmax = pmax;
            std::vector<CheckResult> results;
            {
                py::gil_scoped_release release;
                results = run_suite(suite, o, direct_counter());
            }
            py::list out;
            for (const auto& r : results) {
                py::dict d;
                d["suite"] = r.suite;
                d["name"] = r.name;
                d["passed"] = r.passed;
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("suite") = "all", py::arg("p") = py::none(), py::arg("depth") = py::none(),
        py::arg("pmax") = 103);

    m.def(
        "groebner",
        [](const std::vector<std::string>& polys, const std::vector<std::string>& vars, const std::string& order) {
            auto mo = order == "grevlex" ? MonomialOrder::grevlex(vars) : MonomialOrder::lex(vars);
            if (order != "lex" && order != "grevlex") throw std::invalid_argument("order must be lex or grevlex");
            auto ring = QRing::make(vars, RationalField{}, mo);
            std::vector<QPoly> gens;
            for (const auto& s : polys) gens.push_back(parse_poly(ring, s));
            return strings(buchberger(gens).elements);
        },
        py::arg("polys"), py::arg("vars"), py::arg("order") = "lex", "Reduced Groebner basis over Q.");

    m.def(
        "quotient_ideal",
        [](const std::string& group) {
            auto eqs = affine_curve_equations();
            auto q = quotient_ideal(eqs, PermGroup::parse(group, 3), catalog_invariants(group, eqs.front().ring()));
            return strings(q.ideal);
        },
        py::arg("group"), "Quotient ideal of the chart w = 1 by \"(1,2)\" or \"(1,2,3)\".");

    m.def(
        "molien",
        [](const std::string& group, std::size_t n, std::size_t degree) {
            py::list out;
            for (const auto& c : molien(PermGroup::parse(group, n), degree).coefficients) out.append(to_py(c));
            return out;
        },
        py::arg("group"), py::arg("n"), py::arg("degree"));

    m.def(
        "j_invariant",
        [](const std::string& curve) { return to_py(j_invariant(std::get<EllipticLong>(catalog(curve).model))); },
        py::arg("curve"));

    m.def("igusa", []() {
        auto inv = igusa(std::get<SexticModel>(catalog("C123.weier").model));
        auto a = absolute(inv);
        return py::make_tuple(py::make_tuple(to_py(inv.I2), to_py(inv.I4), to_py(inv.I6), to_py(inv.I10)),
                              py::make_tuple(to_py(a.i1), to_py(a.i2), to_py(a.i3)));
    }, "((I2, I4, I6, I10), (i1, i2, i3)) of the genus 2 quotient.");
}
