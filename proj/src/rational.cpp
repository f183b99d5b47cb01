#include "quartica/rational.hpp"

#include <stdexcept>

namespace quartica {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s, 10));
        return Rational(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational '" + s + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), e);
    return Rational(n, d);
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational");
    return Rational(den(), num());
}

std::string Rational::to_string() const { return v_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::int64_t to_int64(const Integer& v) {
    if (!mpz_fits_slong_p(v.get_mpz_t())) throw std::overflow_error("integer exceeds 64 bits");
    return mpz_get_si(v.get_mpz_t());
}

bool rational_sqrt(const Rational& v, Rational& root) {
    if (v.sign() < 0) return false;
    Integer n = v.num(), d = v.den(), rn, rd;
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    root = Rational(rn, rd);
    return true;
}

}  // namespace quartica
