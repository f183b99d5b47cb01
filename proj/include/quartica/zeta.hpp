#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quartica/curve_model.hpp"
#include "quartica/rational.hpp"

namespace quartica {

// ---- point counting ---------------------------------------------------------

struct PointCount {
    std::string curve;
    std::uint64_t p = 0;
    unsigned m = 1;
    std::uint64_t N = 0;
    friend bool operator==(const PointCount&, const PointCount&) = default;
};

/// Projective points of x^2+y^2+z^2+w^2 = x^3+y^3+z^3+w^3 = 0 over F_{p^m}.
/// O(q^2): z is determined by (x, y) in the chart w = 1.
PointCount count_intersection(std::uint64_t p, unsigned m = 1, unsigned workers = 1);

/// Projective points of a long Weierstrass model; errors on singular reduction.
PointCount count_elliptic(const EllipticLong& e, std::uint64_t p, unsigned m = 1, unsigned workers = 1);

/// Points on the smooth model of y^2 + h y = f (genus 2); errors on bad
/// reduction, naming the repeated factor.
PointCount count_hyperelliptic(const HyperellipticHF& c, std::uint64_t p, unsigned m = 1, unsigned workers = 1);
PointCount count_hyperelliptic(const SexticModel& c, std::uint64_t p, unsigned m = 1, unsigned workers = 1);

/// Affine points of f(x, y) = 0 (no smoothing, no points at infinity).
PointCount count_plane_affine(const PlaneAffine& c, std::uint64_t p, unsigned m = 1, unsigned workers = 1);

/// Dispatch on a catalog label. The plane model counts affine points only.
PointCount count_model(const std::string& label, std::uint64_t p, unsigned m = 1, unsigned workers = 1);

/// Source of point counts; the CLI plugs its cache in here.
using CountFn = std::function<std::uint64_t(const std::string& label, std::uint64_t p, unsigned m)>;
CountFn direct_counter(unsigned workers = 1);

/// Reason a model has bad reduction at p, or nullopt when it is good.
std::optional<std::string> bad_reduction(const std::string& label, std::uint64_t p);

// ---- L-polynomials ----------------------------------------------------------

struct LPolynomial {
    std::vector<Integer> c;  // ascending, c[0] = 1
    Integer q;
    int genus = 0;

    Integer a(std::size_t i) const { return i < c.size() ? c[i] : Integer(0); }
    bool functional_equation_holds() const;
    /// Power sums of the reciprocal roots, s_1..s_k.
    std::vector<Integer> power_sums(unsigned k) const;
    /// N_m predicted by L: q^m + 1 - s_m.
    Integer predicted_count(unsigned m) const;
    /// Largest deviation of |reciprocal root| from sqrt(q), relative.
    double weil_deviation() const;
    /// Descending in t, e.g. "5t^2 - t + 1".
    std::string to_string() const;

    friend LPolynomial operator*(const LPolynomial& a, const LPolynomial& b);
    friend bool operator==(const LPolynomial& a, const LPolynomial& b) {
        return a.c == b.c && a.q == b.q && a.genus == b.genus;
    }
};

/// Newton's identities on s_m = q^m + 1 - N_m, then the functional equation.
/// Throws std::domain_error on non-integral coefficients.
LPolynomial lpoly_from_counts(const std::vector<std::uint64_t>& counts, const Integer& q, int genus);

/// L(chi t): the L-polynomial of the quadratic twist when chi = -1.
LPolynomial quadratic_twist(const LPolynomial& L, int chi);

/// Degree of L mod p.
int p_rank(const LPolynomial& L, std::uint64_t p);

struct HwsBounds {
    Integer lower;
    Integer upper;
    Integer defect;
};

/// q + 1 -/+ g floor(2 sqrt q) and the defect upper - N1.
HwsBounds hws_defect(const Integer& N1, const Integer& q, int genus);

/// L-polynomial of a catalog model over F_p from N_1..N_g. For the genus-4
/// curve "C" this counts up to F_{p^4}, so use the product for large p.
LPolynomial lpoly_of(const std::string& label, std::uint64_t p, const CountFn& count);

/// Factorization of a genus-2 L-polynomial into (1 + b1 t + q t^2)(1 + b2 t + q t^2)
/// with integer b1 <= b2, if one exists.
std::optional<std::pair<LPolynomial, LPolynomial>> split_genus2(const LPolynomial& L);

/// a1^2 - 4 a2 + 8q == 0 for L = 1 + a1 t + a2 t^2 + q a1 t^3 + q^2 t^4.
bool e1_e2_isogeny_criterion(const LPolynomial& L);

// ---- verifications ------------------------------------------------------------

struct ProductCheck {
    unsigned m;
    Integer predicted;
    Integer counted;
};

struct ProductVerdict {
    std::uint64_t p = 0;
    unsigned depth = 0;
    LPolynomial product;
    std::vector<ProductCheck> checks;
    std::optional<LPolynomial> direct;  // from N_1..N_4 of C when depth = 4
    bool holds = false;
};

/// Default depth: 4 for p <= 7, 3 for p <= 13, 2 for p <= 31, else 1.
unsigned default_product_depth(std::uint64_t p);

/// Multiplies the L-polynomials of C/(1,2), C/(1,2,3), C/(1,2,3,4) and
/// compares their prediction for N_m(C) with direct counts, m = 1..depth.
ProductVerdict verify_product_theorem(std::uint64_t p, unsigned depth, const CountFn& count);

struct SplitVerdict {
    std::uint64_t p = 0;
    LPolynomial genus2;
    LPolynomial first;   // C12
    LPolynomial second;  // E2split
    bool holds = false;
};

/// L(C123) == L(C12) * L(E2split).
SplitVerdict verify_split(std::uint64_t p, const CountFn& count);

// ---- tables ---------------------------------------------------------------------

struct PointsRow {
    std::uint64_t p;
    Integer lower;
    Integer N;
    Integer upper;
};

struct LpolyRow {
    std::uint64_t p;
    LPolynomial quotient12;
    LPolynomial quotient123;
    std::optional<std::pair<LPolynomial, LPolynomial>> quotient123_factors;
    LPolynomial quotient1234;
    int p_rank;  // of the product of the three
};

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi);
PointsRow points_row(std::uint64_t p, const CountFn& count);
LpolyRow lpoly_row(std::uint64_t p, const CountFn& count);

}  // namespace quartica
