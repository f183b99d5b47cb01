#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quartica/curve_model.hpp"
#include "quartica/quotient_ring.hpp"

namespace quartica {

// ---- elliptic curves --------------------------------------------------------

/// c4^3 / discriminant; throws on a singular model.
Rational j_invariant(const EllipticLong& e);

/// Model in the coordinates x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
EllipticLong weierstrass_transform(const EllipticLong& e, const Rational& u, const Rational& r, const Rational& s,
                                   const Rational& t);

struct WeierstrassChange {
    Rational u, r, s, t;
};

/// A rational change of coordinates with weierstrass_transform(from, ...) == to,
/// if one exists.
std::optional<WeierstrassChange> fit_weierstrass_change(const EllipticLong& from, const EllipticLong& to);

/// y^2 = x^3 - 27 c4 x - 54 c6 with the largest integer u removed such that
/// u^4 | A and u^6 | B. Requires integral c4, c6.
EllipticLong short_weierstrass(const EllipticLong& e);

// ---- genus 2 ----------------------------------------------------------------

/// Clebsch-transvectant invariants of a binary sextic form.
struct IgusaClebsch {
    Rational I2, I4, I6, I10;
};

IgusaClebsch igusa_clebsch(const QUPoly& sextic_form);

/// Igusa invariants J2, J4, J6, J10 of the form 4S for y^2 = S:
///   J2 = I2/8, J4 = (4 J2^2 - I4)/96, J6 = (8 J2^3 - 160 J2 J4 - I6)/576,
///   J10 = I10/4096,
/// with (I2, I4, I6, I10) the Igusa-Clebsch invariants of 4S.
struct IgusaInvariants {
    Rational I2, I4, I6, I10;
    friend bool operator==(const IgusaInvariants&, const IgusaInvariants&) = default;
};

IgusaInvariants igusa(const SexticModel& c);
/// Uses the sextic h^2 + 4f of the completed square.
IgusaInvariants igusa(const HyperellipticHF& c);

struct AbsoluteInvariants {
    Rational i1, i2, i3;
    friend bool operator==(const AbsoluteInvariants&, const AbsoluteInvariants&) = default;
};

/// i1 = 144 I4/I2^2, i2 = 1728 (I2 I4 - 3 I6)/I2^3, i3 = 486 I10/I2^5.
AbsoluteInvariants absolute(const IgusaInvariants& inv);

// ---- Richelot construction ----------------------------------------------------

using NFPoly = UPoly<NumberField>;

struct IdentityCheck {
    std::string name;
    std::string claim;
    bool holds = false;
    std::string residual;  // empty when the identity holds
};

struct RichelotData {
    NumberField field;  // Q[a]/(a^6 - 18a^4 + 81a^2 + 324)
    bool modulus_irreducible = false;
    std::vector<std::uint64_t> sieve_primes;  // primes whose factor degrees forced irreducibility
    NFPoly F1, F2, F3;
    NumberFieldElement delta;
    NFPoly G1, G2, G3;
    Rational multiplier;  // d = -324
    std::vector<IdentityCheck> checks;

    bool all_hold() const;
};

/// Builds the quadratic factors and the Richelot dual quadratics over
/// Q[a]/(m) and checks the four identities: the product of the F_i, the
/// determinant delta, each G_i as delta^{-1} (F_j' F_k - F_j F_k'), and
/// d G1 G2 G3 equal to the rational sextic of Ctilde.
RichelotData richelot_build();

/// The cover identities from Ctilde to the two elliptic curves.
std::vector<IdentityCheck> verify_covers();

/// Irreducibility over Q of a squarefree integer polynomial, proven when
/// the sets of possible factor degrees mod the given primes have no common
/// proper degree. Returns the primes used, or nullopt if inconclusive.
std::optional<std::vector<std::uint64_t>> irreducible_by_degree_sieve(const QUPoly& f, std::uint64_t max_prime = 200);

/// Factor degrees of a squarefree polynomial over F_p (distinct-degree factorization).
std::vector<int> factor_degrees_mod_p(const QUPoly& f, std::uint64_t p);

}  // namespace quartica
