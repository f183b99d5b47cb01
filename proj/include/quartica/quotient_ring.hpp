#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "quartica/upoly.hpp"

namespace quartica {

/// K[a]/(m(a)) for a monic modulus m over a coefficient field K. When m is
/// irreducible the ring is itself a field and can serve as polynomial
/// coefficients (number fields over Q, extension fields over F_p).
template <CoefficientField Base>
class QuotientRing {
    struct Data {
        UPoly<Base> modulus;
        std::string var;
    };

public:
    class Element;
    using value_type = Element;

    QuotientRing(UPoly<Base> modulus, std::string var = "a") {
        if (modulus.degree() < 1) throw std::invalid_argument("quotient modulus must have degree >= 1");
        data_ = std::make_shared<const Data>(Data{modulus.monic(), std::move(var)});
    }

    const UPoly<Base>& modulus() const { return data_->modulus; }
    const Base& base() const { return data_->modulus.field(); }
    const std::string& var() const { return data_->var; }
    int degree() const { return data_->modulus.degree(); }

    Element make(UPoly<Base> rep) const { return Element(data_, std::move(rep)); }
    Element generator() const { return make(UPoly<Base>::x(base())); }
    Element zero() const { return make(UPoly<Base>(base())); }
    Element one() const { return from_base(base().one()); }
    Element from_base(typename Base::value_type v) const {
        return make(UPoly<Base>::constant(base(), std::move(v)));
    }
    Element from_integer(long n) const { return from_base(base().from_integer(n)); }
    Element from_rational(const Rational& r) const { return from_base(base().from_rational(r)); }
    std::uint64_t characteristic() const { return base().characteristic(); }
    std::string name() const {
        return base().name() + "[" + var() + "]/(" + modulus().to_string(var()) + ")";
    }
    friend bool operator==(const QuotientRing& a, const QuotientRing& b) {
        return a.data_ == b.data_ || (a.modulus() == b.modulus() && a.var() == b.var());
    }

    class Element {
    public:
        Element() = default;
        const UPoly<Base>& rep() const { return rep_; }

        friend Element operator+(const Element& a, const Element& b) {
            check(a, b);
            return Element(a.data_, a.rep_ + b.rep_, false);
        }
        friend Element operator-(const Element& a, const Element& b) {
            check(a, b);
            return Element(a.data_, a.rep_ - b.rep_, false);
        }
        friend Element operator*(const Element& a, const Element& b) {
            check(a, b);
            return Element(a.data_, a.rep_ * b.rep_);
        }
        friend Element operator/(const Element& a, const Element& b) { return a * b.inverse(); }
        Element operator-() const { return Element(data_, -rep_, false); }
        friend bool operator==(const Element& a, const Element& b) { return a.rep_ == b.rep_; }

        /// Inverse via extended gcd; throws when gcd(rep, m) is nontrivial,
        /// naming the gcd.
        Element inverse() const {
            auto [g, s, t] = xgcd(rep_, data_->modulus);
            if (g.degree() != 0)
                throw std::domain_error("element " + rep_.to_string(data_->var) +
                                        " is not invertible: gcd with modulus is " +
                                        (g.is_zero() ? data_->modulus : g).to_string(data_->var));
            return Element(data_, s);
        }
        Element pow(unsigned e) const {
            Element r(data_, UPoly<Base>::constant(rep_.field(), rep_.field().one()));
            Element b = *this;
            while (e) {
                if (e & 1) r = r * b;
                e >>= 1;
                if (e) b = b * b;
            }
            return r;
        }
        std::string to_string() const { return rep_.to_string(data_ ? data_->var : "a"); }
        friend bool is_zero(const Element& e) { return e.rep_.is_zero(); }
        friend std::string to_string(const Element& e) { return e.to_string(); }

    private:
        friend class QuotientRing;
        Element(std::shared_ptr<const Data> d, UPoly<Base> rep, bool reduce = true)
            : data_(std::move(d)), rep_(std::move(rep)) {
            if (reduce && rep_.degree() >= data_->modulus.degree()) rep_ = rep_ % data_->modulus;
        }
        static void check(const Element& a, const Element& b) {
            if (a.data_ != b.data_ && !(a.data_->modulus == b.data_->modulus))
                throw std::invalid_argument("quotient-ring elements with different moduli");
        }
        std::shared_ptr<const Data> data_;
        UPoly<Base> rep_;
    };

private:
    std::shared_ptr<const Data> data_;
};

using NumberField = QuotientRing<RationalField>;
using NumberFieldElement = NumberField::Element;


}  // namespace quartica
