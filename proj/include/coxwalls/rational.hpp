#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace coxwalls {

// Exact arithmetic everywhere a formula is an identity; floating point is
// confined to Monte Carlo estimation and threshold prefilters.
using Rational = mpq_class;
using BigInt = mpz_class;

// mpq_class construction does not reduce fractions; comparisons assume
// canonical form, so every fraction built from possibly-sharing parts goes
// through here
inline Rational frac(const BigInt& num, const BigInt& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational frac(long num, long den) { return frac(BigInt(num), BigInt(den)); }

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt int_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational rational_pow(const Rational& base, unsigned long e) {
    Rational r(int_pow(base.get_num(), e), int_pow(base.get_den(), e));
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    if (q.get_den() <= 0)
        throw std::invalid_argument("bad rational literal: " + s);
    return q;
}

}  // namespace coxwalls
