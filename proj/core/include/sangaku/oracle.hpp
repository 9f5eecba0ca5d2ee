#pragma once

#include "sangaku/extfloat.hpp"

// Direct numerical evaluation of the square-inscription profile
//   z_r(x) = sqrt(x^2 + (r - x - sqrt(r^2 - (2 sqrt r - x - sqrt(2x - x^2))^2))^2)
// on [1 - 1/sqrt2, 1] and of its minimum mu(r).
namespace sangaku {

struct ProfilePoint {
  ExtFloat r;
  ExtFloat k;  // sqrt r
  ExtFloat x;
  ExtFloat w;  // sqrt(2x - x^2)
  ExtFloat u;  // 2k - x - w
  ExtFloat v;  // sqrt(r^2 - u^2)
  ExtFloat z;
};

struct MinimizerResult {
  ExtFloat r;
  ExtFloat x_m;
  ExtFloat mu;
  ExtFloat lambda;  // mu * mu at the working precision
  ExtFloat derivative_residual;
  // Minimizer found independently by golden-section search on z^2.
  ExtFloat x_golden;
};

// Left end of the admissible interval, 1 - 1/sqrt2.
ExtFloat profile_left_end(mpfr_prec_t precision);

// Evaluated at min(r.precision(), x.precision()) bits. Radicands that are
// negative by less than 2^(8 - p) * max(1, r^2) are treated as zero; larger
// violations throw DomainError, as do r < 1 and x outside the interval.
ProfilePoint profile(const ExtFloat& r, const ExtFloat& x);

// d(z^2)/dx = 2x + 2(r - x - v)(-1 - v'). Requires w > 0 and v > 0.
ExtFloat profile_derivative(const ExtFloat& r, const ExtFloat& x);

// Minimizer by bisection on the sign of profile_derivative, cross-checked
// against golden-section search at doubled precision. Throws InternalError
// when the derivative does not change sign across the interval or the two
// methods disagree.
MinimizerResult minimize(const ExtFloat& r, int precision_bits);

// lambda(k) = mu(k^2)^2.
ExtFloat lambda_of_k(const ExtFloat& k, int precision_bits);

}  // namespace sangaku
