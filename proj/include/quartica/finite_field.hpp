#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "quartica/field.hpp"

namespace quartica {

/// F_{p^m} = F_p[t]/(modulus) with a monic irreducible modulus.
struct FieldDescriptor {
    static constexpr unsigned kMaxDegree = 12;

    std::uint64_t p = 0;
    unsigned m = 0;
    std::vector<std::uint64_t> modulus;  // ascending, monic, size m + 1

    std::uint64_t q() const;
    std::string modulus_string() const;
    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

/// Irreducibility over F_p of a monic polynomial given ascending.
bool is_irreducible_mod_p(const std::vector<std::uint64_t>& monic, std::uint64_t p);

/// The field with modulus the smallest monic irreducible of degree m, where
/// candidates are ranked by the base-p integer sum c_i p^i of their lower
/// coefficients (so t^2 + 2 precedes t^2 + t + 1 over F_5).
std::shared_ptr<const FieldDescriptor> make_field(std::uint64_t p, unsigned m);

/// Element of F_q as a coefficient array of length < m. Holds a raw
/// pointer to its descriptor, which must outlive it.
class FqElement {
public:
    FqElement() = default;
    explicit FqElement(const FieldDescriptor* d) : d_(d) {}
    FqElement(const FieldDescriptor* d, std::uint64_t prime_value);

    const FieldDescriptor* descriptor() const { return d_; }
    std::uint32_t coeff(unsigned i) const { return c_[i]; }
    std::uint32_t& coeff(unsigned i) { return c_[i]; }
    bool is_zero() const;
    /// Base-p code sum c_i p^i; the enumeration order.
    std::uint64_t index() const;
    static FqElement from_index(const FieldDescriptor* d, std::uint64_t index);

    friend FqElement operator+(const FqElement& a, const FqElement& b);
    friend FqElement operator-(const FqElement& a, const FqElement& b);
    friend FqElement operator*(const FqElement& a, const FqElement& b);
    friend FqElement operator/(const FqElement& a, const FqElement& b) { return a * b.inverse(); }
    FqElement operator-() const;
    FqElement& operator+=(const FqElement& o) { return *this = *this + o; }
    FqElement& operator*=(const FqElement& o) { return *this = *this * o; }
    friend bool operator==(const FqElement& a, const FqElement& b) { return a.c_ == b.c_; }

    FqElement pow(std::uint64_t e) const;
    FqElement inverse() const;
    std::string to_string() const;

private:
    const FieldDescriptor* d_ = nullptr;
    std::array<std::uint32_t, FieldDescriptor::kMaxDegree> c_{};
};

inline bool is_zero(const FqElement& a) { return a.is_zero(); }
inline std::string to_string(const FqElement& a) { return a.to_string(); }

/// F_q as a coefficient field for the generic polynomial code.
struct FqField {
    using value_type = FqElement;
    std::shared_ptr<const FieldDescriptor> desc;

    explicit FqField(std::shared_ptr<const FieldDescriptor> d) : desc(std::move(d)) {}
    FqElement zero() const { return FqElement(desc.get()); }
    FqElement one() const { return FqElement(desc.get(), 1); }
    FqElement from_integer(long n) const;
    FqElement from_rational(const Rational& r) const;
    std::uint64_t characteristic() const { return desc->p; }
    std::string name() const;
    friend bool operator==(const FqField& a, const FqField& b) { return *a.desc == *b.desc; }
};

/// -1, 0 or +1 via a^{(q-1)/2}; throws in characteristic 2.
int quadratic_character(const FqElement& a);

/// All q elements in index order.
std::vector<FqElement> enumerate_field(const FieldDescriptor& d);

/// Splits [0, q) into k contiguous, nearly equal index ranges.
std::vector<std::pair<std::uint64_t, std::uint64_t>> enumeration_chunks(std::uint64_t q, unsigned k);

}  // namespace quartica
