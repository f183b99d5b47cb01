#include "quartica/field.hpp"

namespace quartica {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    unsigned __int128 result = 1 % p, b = base % p;
    while (exp) {
        if (exp & 1) result = result * b % p;
        b = b * b % p;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("element not invertible modulo " + std::to_string(p));
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

PrimeField::PrimeField(std::uint64_t prime) : p(prime) {
    if (!is_prime(prime)) throw std::invalid_argument(std::to_string(prime) + " is not prime");
}

ModP PrimeField::from_integer(long n) const {
    long r = n % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    return ModP(static_cast<std::uint64_t>(r), p);
}

ModP PrimeField::from_integer(const Integer& n) const {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
    return ModP(r.get_ui(), p);
}

ModP PrimeField::from_rational(const Rational& r) const {
    ModP den = from_integer(r.den());
    if (is_zero(den))
        throw std::domain_error("denominator of " + r.to_string() + " vanishes mod " +
                                std::to_string(p));
    return from_integer(r.num()) / den;
}

}  // namespace quartica
