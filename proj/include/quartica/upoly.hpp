#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "quartica/field.hpp"

namespace quartica {

/// Dense univariate polynomial over a coefficient field, coefficients
/// stored ascending. The zero polynomial has no coefficients.
template <CoefficientField F>
class UPoly {
public:
    using K = typename F::value_type;

    explicit UPoly(F field = F{}) : field_(std::move(field)) {}
    UPoly(F field, std::vector<K> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
        trim();
    }
    /// Convenience for integer literal coefficients, ascending.
    static UPoly from_ints(F field, std::initializer_list<long> ascending) {
        std::vector<K> c;
        for (long v : ascending) c.push_back(field.from_integer(v));
        return UPoly(std::move(field), std::move(c));
    }
    static UPoly constant(F field, K value) {
        return UPoly(std::move(field), std::vector<K>{std::move(value)});
    }
    static UPoly monomial(F field, K coeff, std::size_t degree) {
        std::vector<K> c(degree + 1, field.zero());
        c[degree] = std::move(coeff);
        return UPoly(std::move(field), std::move(c));
    }
    static UPoly x(F field) { return monomial(field, field.one(), 1); }

    const F& field() const { return field_; }
    const std::vector<K>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    K leading() const { return c_.empty() ? field_.zero() : c_.back(); }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
        return UPoly(a.field_, std::move(c));
    }
    UPoly operator-() const {
        std::vector<K> c;
        c.reserve(c_.size());
        for (const K& v : c_) c.push_back(-v);
        return UPoly(field_, std::move(c));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, a.field_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::element_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
        return UPoly(a.field_, std::move(c));
    }
    UPoly scaled(const K& s) const {
        std::vector<K> c;
        c.reserve(c_.size());
        for (const K& v : c_) c.push_back(v * s);
        return UPoly(field_, std::move(c));
    }
    UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
    UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    UPoly pow(unsigned e) const {
        UPoly result = constant(field_, field_.one()), base = *this;
        while (e) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    /// Euclidean division: returns (quotient, remainder).
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        UPoly r = *this;
        if (r.degree() < d.degree()) return {UPoly(field_), r};
        std::vector<K> q(r.c_.size() - d.c_.size() + 1, field_.zero());
        K inv_lead = field_.one() / d.leading();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
            K factor = r.leading() * inv_lead;
            q[shift] = factor;
            for (std::size_t i = 0; i < d.c_.size(); ++i)
                r.c_[i + shift] = r.c_[i + shift] - factor * d.c_[i];
            r.trim();
        }
        return {UPoly(field_, std::move(q)), r};
    }
    UPoly operator%(const UPoly& d) const { return divmod(d).second; }
    UPoly operator/(const UPoly& d) const { return divmod(d).first; }

    UPoly monic() const {
        if (is_zero()) return *this;
        return scaled(field_.one() / leading());
    }

    UPoly derivative() const {
        std::vector<K> c;
        for (std::size_t i = 1; i < c_.size(); ++i)
            c.push_back(c_[i] * field_.from_integer(static_cast<long>(i)));
        return UPoly(field_, std::move(c));
    }

    K operator()(const K& x) const {
        K acc = field_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// p(q(x)).
    UPoly compose(const UPoly& q) const {
        UPoly acc(field_);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + constant(field_, c_[i]);
        return acc;
    }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && detail::element_is_zero(c_.back())) c_.pop_back();
    }

    F field_;
    std::vector<K> c_;
};

/// Monic gcd.
template <CoefficientField F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
template <CoefficientField F>
std::tuple<UPoly<F>, UPoly<F>, UPoly<F>> xgcd(const UPoly<F>& a, const UPoly<F>& b) {
    const F& k = a.field();
    UPoly<F> r0 = a, r1 = b;
    UPoly<F> s0 = UPoly<F>::constant(k, k.one()), s1(k);
    UPoly<F> t0(k), t1 = UPoly<F>::constant(k, k.one());
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        auto s = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s);
        auto t = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    auto inv = k.one() / r0.leading();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// Squarefree part (characteristic 0 or degree below the characteristic).
template <CoefficientField F>
UPoly<F> squarefree_part(const UPoly<F>& f) {
    if (f.degree() <= 0) return f.monic();
    return (f / gcd(f, f.derivative())).monic();
}

template <CoefficientField F>
bool is_squarefree(const UPoly<F>& f) {
    return f.degree() <= 0 || gcd(f, f.derivative()).degree() == 0;
}

template <CoefficientField F>
std::string UPoly<F>::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (detail::element_is_zero(c_[i])) continue;
        std::string coeff = detail::element_to_string(c_[i]);
        bool negative = !coeff.empty() && coeff[0] == '-' && coeff.find_first_of("+-", 1) == std::string::npos;
        if (negative) coeff = coeff.substr(1);
        bool compound = coeff.find_first_of("+- ", 0) != std::string::npos;
        if (compound) coeff = "(" + coeff + ")";
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << coeff;
            continue;
        }
        if (coeff != "1") os << coeff << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

}  // namespace quartica
