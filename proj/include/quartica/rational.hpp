#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace quartica {

using Integer = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}               // NOLINT(google-explicit-constructor)
    Rational(int v) : v_(v) {}                // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : v_(v) {}     // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);

    /// Parses "n" or "n/d" (optional sign, no spaces).
    static Rational parse(std::string_view text);

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return from_raw(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational pow(unsigned e) const;
    Rational inverse() const;

    std::string to_string() const;
    const mpq_class& raw() const { return v_; }

private:
    static Rational from_raw(mpq_class v) {
        Rational r;
        r.v_ = std::move(v);
        return r;
    }
    mpq_class v_;
};

inline bool is_zero(const Rational& a) { return a.is_zero(); }
inline std::string to_string(const Rational& a) { return a.to_string(); }
std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exact conversion of a GMP integer to int64; throws std::overflow_error.
std::int64_t to_int64(const Integer& v);

/// Exact square root of a non-negative rational, if it is a square.
bool rational_sqrt(const Rational& v, Rational& root);

}  // namespace quartica
