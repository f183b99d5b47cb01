#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "quartica/rational.hpp"

namespace quartica {

/// A coefficient field: a small value object that knows how to build
/// constants for its element type. Elements themselves carry whatever
/// context they need (modulus, minimal polynomial) so the usual operators
/// work on them directly.
template <class F>
concept CoefficientField = requires(const F& f, const typename F::value_type& a, long n,
                                    const Rational& r) {
    typename F::value_type;
    { f.zero() } -> std::same_as<typename F::value_type>;
    { f.one() } -> std::same_as<typename F::value_type>;
    { f.from_integer(n) } -> std::same_as<typename F::value_type>;
    { f.from_rational(r) } -> std::same_as<typename F::value_type>;
    { f.characteristic() } -> std::convertible_to<std::uint64_t>;
    { f.name() } -> std::convertible_to<std::string>;
    { a + a } -> std::same_as<typename F::value_type>;
    { a - a } -> std::same_as<typename F::value_type>;
    { a * a } -> std::same_as<typename F::value_type>;
    { a / a } -> std::same_as<typename F::value_type>;
    { -a } -> std::same_as<typename F::value_type>;
    { a == a } -> std::convertible_to<bool>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { to_string(a) } -> std::convertible_to<std::string>;
};

struct RationalField {
    using value_type = Rational;
    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    Rational from_integer(long n) const { return Rational(n); }
    Rational from_rational(const Rational& r) const { return r; }
    std::uint64_t characteristic() const { return 0; }
    std::string name() const { return "QQ"; }
    friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// Deterministic primality test (trial division up to the square root).
bool is_prime(std::uint64_t n);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

/// Element of F_p. Carries its modulus; operands must share it.
class ModP {
public:
    ModP() = default;
    ModP(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    friend ModP operator+(ModP a, ModP b) {
        check(a, b);
        std::uint64_t s = a.v_ + b.v_;
        return raw(s >= a.p_ ? s - a.p_ : s, a.p_);
    }
    friend ModP operator-(ModP a, ModP b) {
        check(a, b);
        return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
    }
    friend ModP operator*(ModP a, ModP b) {
        check(a, b);
        return raw(static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.v_) * b.v_ % a.p_),
                   a.p_);
    }
    friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
    ModP operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
    ModP& operator+=(ModP o) { return *this = *this + o; }
    ModP& operator-=(ModP o) { return *this = *this - o; }
    ModP& operator*=(ModP o) { return *this = *this * o; }
    friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_ && a.p_ == b.p_; }

    ModP inverse() const {
        if (v_ == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
        return raw(mod_inverse(v_, p_), p_);
    }
    ModP pow(std::uint64_t e) const { return raw(mod_pow(v_, e, p_), p_); }

private:
    static ModP raw(std::uint64_t v, std::uint64_t p) {
        ModP r;
        r.v_ = v;
        r.p_ = p;
        return r;
    }
    static void check(ModP a, ModP b) {
        if (a.p_ != b.p_) throw std::invalid_argument("mixed prime-field moduli");
    }
    std::uint64_t v_ = 0;
    std::uint64_t p_ = 1;
};

inline bool is_zero(ModP a) { return a.value() == 0; }
inline std::string to_string(ModP a) { return std::to_string(a.value()); }

namespace detail {
// Unqualified calls so that ADL also finds hidden friends of element types.
template <class T>
bool element_is_zero(const T& a) {
    return is_zero(a);
}
template <class T>
std::string element_to_string(const T& a) {
    return to_string(a);
}
}  // namespace detail

struct PrimeField {
    using value_type = ModP;
    std::uint64_t p;

    explicit PrimeField(std::uint64_t prime);
    ModP zero() const { return ModP(0, p); }
    ModP one() const { return ModP(1, p); }
    ModP from_integer(long n) const;
    ModP from_integer(const Integer& n) const;
    /// Reduces num/den mod p; throws if p divides the denominator.
    ModP from_rational(const Rational& r) const;
    std::uint64_t characteristic() const { return p; }
    std::string name() const { return "GF(" + std::to_string(p) + ")"; }
    friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

}  // namespace quartica
