#include "coxwalls/realbound.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace coxwalls {

namespace {

mpfr_rnd_t opposite(mpfr_rnd_t r) { return r == MPFR_RNDU ? MPFR_RNDD : MPFR_RNDU; }

// directed ln of a positive rational: every operation rounds toward `rnd`,
// the denominator log toward the opposite side before subtraction
void log_rational(mpfr_t out, mpfr_t scratch, const Rational& q, mpfr_rnd_t rnd) {
    mpfr_set_z(out, q.get_num().get_mpz_t(), rnd);
    mpfr_log(out, out, rnd);
    mpfr_set_z(scratch, q.get_den().get_mpz_t(), opposite(rnd));
    mpfr_log(scratch, scratch, opposite(rnd));
    mpfr_sub(out, out, scratch, rnd);
}

}  // namespace

int sound_sign_log_expr(const Rational& a, const Rational& b, const Rational& c_arg,
                        const Rational& d, long coeff) {
    if (a <= 0 || b < 1 || c_arg < 1 || d <= 1)
        throw std::invalid_argument("sound_sign_log_expr: arguments out of domain");

    for (mpfr_prec_t prec = 96; prec <= 6144; prec *= 2) {
        mpfr_t scratch, la, lb, lc, ld, m, term, total_up, total_down;
        mpfr_inits2(prec, scratch, la, lb, lc, ld, m, term, total_up, total_down,
                    static_cast<mpfr_ptr>(nullptr));

        bool decided = false;
        int sign = 0;
        for (mpfr_rnd_t rnd : {MPFR_RNDU, MPFR_RNDD}) {
            // bound of the nonnegative magnitude M = ln(b) ln(c) / ln(d)
            log_rational(lb, scratch, b, rnd);
            log_rational(lc, scratch, c_arg, rnd);
            log_rational(ld, scratch, d, opposite(rnd));
            mpfr_mul(m, lb, lc, rnd);
            mpfr_div(m, m, ld, rnd);
            // bound of coeff * M: a negative coeff needs the opposite bound of M
            if (coeff >= 0) {
                mpfr_mul_si(term, m, coeff, rnd);
            } else {
                log_rational(lb, scratch, b, opposite(rnd));
                log_rational(lc, scratch, c_arg, opposite(rnd));
                log_rational(ld, scratch, d, rnd);
                mpfr_mul(m, lb, lc, opposite(rnd));
                mpfr_div(m, m, ld, opposite(rnd));
                mpfr_mul_si(term, m, coeff, rnd);
            }
            log_rational(la, scratch, a, rnd);
            mpfr_add(rnd == MPFR_RNDU ? total_up : total_down, la, term, rnd);
        }
        if (mpfr_sgn(total_up) < 0) {
            decided = true;
            sign = -1;
        } else if (mpfr_sgn(total_down) > 0) {
            decided = true;
            sign = 1;
        }
        mpfr_clears(scratch, la, lb, lc, ld, m, term, total_up, total_down,
                    static_cast<mpfr_ptr>(nullptr));
        if (decided) return sign;
    }
    throw std::runtime_error("sound_sign_log_expr: sign undecided at precision cap");
}

}  // namespace coxwalls
