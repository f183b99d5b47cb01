#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quartica/multipoly.hpp"
#include "quartica/upoly.hpp"

namespace quartica {

using QUPoly = UPoly<RationalField>;

/// Complete intersection in P^3 of a quadric and a cubic (ring x,y,z,w).
struct IntersectionP3 {
    QPoly quadric;
    QPoly cubic;
};

/// Affine plane curve f(x,y) = 0.
struct PlaneAffine {
    QPoly f;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct EllipticLong {
    Rational a1, a2, a3, a4, a6;

    Rational b2() const { return a1 * a1 + a2 * 4; }
    Rational b4() const { return a1 * a3 + a4 * 2; }
    Rational b6() const { return a3 * a3 + a6 * 4; }
    Rational b8() const {
        return a1 * a1 * a6 + a2 * a6 * 4 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    }
    Rational c4() const { return b2() * b2() - b4() * 24; }
    Rational c6() const { return -b2().pow(3) + b2() * b4() * 36 - b6() * 216; }
    Rational discriminant() const {
        return -b2() * b2() * b8() - b4().pow(3) * 8 - b6() * b6() * 27 + b2() * b4() * b6() * 9;
    }
    friend bool operator==(const EllipticLong&, const EllipticLong&) = default;
};

/// y^2 + h(x) y = f(x), genus 2.
struct HyperellipticHF {
    QUPoly h;
    QUPoly f;
};

/// y^2 = sextic(x).
struct SexticModel {
    QUPoly sextic;
};

/// A genus-0 quotient given as the projective line.
struct ProjectiveLine {};

using CurveVariant = std::variant<IntersectionP3, PlaneAffine, EllipticLong, HyperellipticHF, SexticModel, ProjectiveLine>;

struct CurveModel {
    std::string label;
    std::string description;
    std::optional<int> genus;
    CurveVariant model;
};

/// Labels accepted by catalog(), in presentation order.
const std::vector<std::string>& catalog_labels();

/// The catalog model for a label; unknown labels raise an error listing
/// the valid ones.
CurveModel catalog(const std::string& label);

/// Replaces the model behind a label for the rest of the process (or until
/// cleared). Used to run the verification suites against a deliberately
/// altered coefficient. Not thread-safe with concurrent catalog() calls.
void override_catalog(const std::string& label, CurveModel model);
void clear_catalog_overrides();

/// Sets one named coefficient of a catalog model: a1..a6 for Weierstrass
/// models, h0..h3 / f0..f6 for y^2 + h y = f, s0..s6 for y^2 = sextic.
void perturb_catalog(const std::string& label, const std::string& coefficient, const Rational& value);

/// Printable equation(s) of a model.
std::string equation_string(const CurveModel& m);

/// Defining equations as polynomials: IntersectionP3 in (x,y,z,w), the plane
/// and y^2 models in (x,y); ProjectiveLine has none.
std::vector<QPoly> defining_equations(const CurveModel& m);

/// y^2 + a1 xy + a3 y - (x^3 + a2 x^2 + a4 x + a6) in the given ring, which
/// must contain x and y (and z when `homogeneous`).
QPoly elliptic_equation(const EllipticLong& e, const QRingPtr& ring, bool homogeneous = false);

/// h^2 + 4f: the sextic of the model y^2 = h^2 + 4f obtained by completing
/// the square. For a SexticModel this is 4 * sextic.
QUPoly hyperelliptic_discriminant_form(const HyperellipticHF& c);

}  // namespace quartica
