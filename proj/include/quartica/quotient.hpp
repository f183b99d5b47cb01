#pragma once

#include <map>
#include <string>
#include <vector>

#include "quartica/curve_model.hpp"
#include "quartica/groebner.hpp"
#include "quartica/invariants.hpp"

namespace quartica {

// ---- Quotient of a variety by a permutation group --------------------------

struct QuotientIdeal {
    std::vector<QPoly> invariants;  // in the original ring
    QRingPtr ring;                  // invariant variables, lex in listed order
    std::vector<QPoly> ideal;       // reduced Gröbner basis in `ring`
};

/// Generators of <F, I_j(x) - y_j> ∩ K[y]. When `invariants` is empty the
/// fundamental invariants are computed; `names` defaults to a, b, c, ...
/// Throws when a generator of F is not Γ-invariant, naming the generator
/// and the permutation that moves it.
QuotientIdeal quotient_ideal(const std::vector<QPoly>& F, const PermGroup& group, std::vector<QPoly> invariants = {},
                             std::vector<std::string> names = {});

/// The curve's equations in the affine chart w = 1, ring (x,y,z).
std::vector<QPoly> affine_curve_equations();

/// Fixed invariant choices used by the catalog models for each group.
/// Group keys: "(1,2)", "(1,2,3)" (affine, three variables) and "S4"
/// (projective, four variables).
std::vector<QPoly> catalog_invariants(const std::string& group_key, const QRingPtr& ring);

// ---- Model maps ------------------------------------------------------------

using VariableMap = std::map<std::string, RationalFunction<RationalField>>;

struct MapVerdict {
    bool holds = false;
    std::vector<QPoly> residuals;  // normal forms of the pulled-back equations
    std::string to_string() const;
};

/// Pulls each destination equation back along `map` (images live in the
/// source ring), clears denominators and tests membership in the ideal of
/// the source equations.
MapVerdict verify_model_map(const std::vector<QPoly>& src_equations, const std::vector<QPoly>& dst_equations,
                            const VariableMap& map);

/// A named map from the catalog with the equations it relates.
struct ModelMapRecord {
    std::string name;
    std::string claim;
    std::vector<QPoly> src;
    std::vector<QPoly> dst;
    VariableMap map;
    bool expected_to_hold;
};

/// Every change of variables used to pass between models, including the
/// commonly quoted forms that are known to be wrong (expected_to_hold = false).
std::vector<ModelMapRecord> catalog_model_maps();

// ---- Plane model and genus -------------------------------------------------

/// (x^3+y^3+1)^2 + (x^2+y^2+1)^3, obtained by eliminating z from the affine
/// equations and scaled to a primitive integer polynomial.
PlaneAffine plane_model();

struct GenusReport {
    int degree = 0;
    int arithmetic_genus = 0;
    std::size_t singular_points = 0;  // over the algebraic closure, affine part
    std::size_t tjurina_total = 0;
    std::size_t nodes = 0;
    std::size_t cusps = 0;
    bool smooth_at_infinity = true;
    QUPoly singular_x_polynomial;  // squarefree, vanishing at the x-coordinates
    int genus = 0;
    std::string to_string() const;
};

/// Geometric genus of an affine plane curve in variables (x, y) via the
/// degree-genus formula minus delta invariants. Singularities must be nodes
/// (A1) or ordinary cusps (A2), both with delta = 1; anything else, or a
/// singular point at infinity, raises an error.
GenusReport genus_plane(const QPoly& f);

struct SmoothnessReport {
    bool smooth = false;
    std::vector<std::pair<std::string, bool>> charts;  // chart variable, unit ideal reached
    std::string field;
};

/// Smoothness of the intersection over Q (p = 0) or F_p, p >= 5: in each of
/// the charts w, z, y, x = 1 the equations together with the 2x2 minors of
/// the Jacobian generate the unit ideal.
SmoothnessReport smoothness_check(std::uint64_t p);

}  // namespace quartica
