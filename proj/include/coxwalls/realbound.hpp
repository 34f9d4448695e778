#pragma once

#include "coxwalls/rational.hpp"

namespace coxwalls {

// Sign of ln(A) + c * ln(B) * ln(C) / ln(D) for exact rational inputs with
// A > 0, B >= 1, C >= 1, D > 1 and integer c. Evaluated with MPFR interval
// bounds (round-down/round-up pairs) at escalating precision until the sign
// is certain; throws if still ambiguous at the precision cap (which would
// require the expression to be extraordinarily close to zero).
int sound_sign_log_expr(const Rational& a, const Rational& b, const Rational& c_arg,
                        const Rational& d, long coeff);

}  // namespace coxwalls
