#include "sangaku/oracle.hpp"

#include <string>

#include "sangaku/errors.hpp"

namespace sangaku {

namespace {

ExtFloat clamped_sqrt(const ExtFloat& radicand, const ExtFloat& scale, const char* what) {
  if (radicand.sign() >= 0) return sqrt(radicand);
  const ExtFloat threshold = ldexp(scale, 8 - static_cast<long>(radicand.precision()));
  if (abs(radicand) <= threshold) return ExtFloat(radicand.precision());
  throw DomainError(std::string("negative radicand in ") + what + ": " + radicand.to_string(12));
}

struct Derivatives {
  ProfilePoint point;
  ExtFloat dz2;
};

Derivatives evaluate(const ExtFloat& r, const ExtFloat& x) {
  ProfilePoint pt = profile(r, x);
  if (pt.w.is_zero() || pt.v.is_zero()) {
    throw DomainError("profile derivative needs an interior point with w > 0 and v > 0");
  }
  const ExtFloat dw = (1L - pt.x) / pt.w;
  const ExtFloat du = -1L - dw;
  const ExtFloat dv = -(pt.u * du) / pt.v;
  const ExtFloat d = pt.r - pt.x - pt.v;
  ExtFloat dz2 = pt.x * 2L + d * (-1L - dv) * 2L;
  return {std::move(pt), std::move(dz2)};
}

ExtFloat z_squared(const ExtFloat& r, const ExtFloat& x) {
  const ProfilePoint pt = profile(r, x);
  return pt.z * pt.z;
}

}  // namespace

ExtFloat profile_left_end(mpfr_prec_t precision) {
  const ExtFloat half(0.5, precision);
  return 1L - sqrt(half);
}

ProfilePoint profile(const ExtFloat& r_in, const ExtFloat& x_in) {
  const mpfr_prec_t p = std::min(r_in.precision(), x_in.precision());
  const ExtFloat r = r_in.rounded(p);
  const ExtFloat x = x_in.rounded(p);
  if (r < ExtFloat(1L, p)) throw DomainError("profile requires r >= 1");
  const ExtFloat slack = exp2_int(8 - static_cast<long>(p), p);
  if (x < profile_left_end(p) - slack || x > ExtFloat(1L, p) + slack) {
    throw DomainError("profile requires x in [1 - 1/sqrt2, 1]");
  }
  const ExtFloat one(1L, p);
  const ExtFloat r2 = r * r;
  const ExtFloat scale = max(one, r2);
  ProfilePoint pt{r, sqrt(r), x, ExtFloat(p), ExtFloat(p), ExtFloat(p), ExtFloat(p)};
  pt.w = clamped_sqrt(x * 2L - x * x, one, "w");
  pt.u = pt.k * 2L - x - pt.w;
  pt.v = clamped_sqrt(r2 - pt.u * pt.u, scale, "v");
  const ExtFloat d = r - x - pt.v;
  pt.z = sqrt(x * x + d * d);
  return pt;
}

ExtFloat profile_derivative(const ExtFloat& r, const ExtFloat& x) { return evaluate(r, x).dz2; }

MinimizerResult minimize(const ExtFloat& r_in, int precision_bits) {
  if (precision_bits < 16) throw PreconditionError("precision must be at least 16 bits");
  const mpfr_prec_t p = precision_bits;
  const mpfr_prec_t q = p + 32;
  const ExtFloat r = r_in.rounded(q);
  if (r < ExtFloat(1L, q)) throw DomainError("minimize requires r >= 1");

  // Bisection on the derivative sign. The endpoints themselves may sit on
  // the boundary of the derivative's domain, so probe just inside.
  ExtFloat lo = profile_left_end(q) + exp2_int(-64, q);
  ExtFloat hi = ExtFloat(1L, q) - exp2_int(-64, q);
  if (profile_derivative(r, lo).sign() >= 0 || profile_derivative(r, hi).sign() <= 0) {
    throw InternalError("profile derivative does not change sign on the interval");
  }
  const ExtFloat width = exp2_int(-static_cast<long>(p) - 16, q);
  while (hi - lo > width) {
    const ExtFloat mid = ldexp(lo + hi, -1);
    const int s = profile_derivative(r, mid).sign();
    if (s == 0) {
      lo = mid;
      hi = mid;
      break;
    }
    (s < 0 ? lo : hi) = mid;
  }
  const ExtFloat x_m = ldexp(lo + hi, -1);
  const Derivatives at = evaluate(r, x_m);

  // Golden-section search on z^2 at doubled precision: a quadratic minimum
  // only resolves x to about half the working bits.
  const mpfr_prec_t g = 2 * p + 64;
  const ExtFloat rg = r_in.rounded(g);
  const ExtFloat inv_phi = (sqrt(ExtFloat(5L, g)) - 1L) / 2L;
  ExtFloat a = profile_left_end(g);
  ExtFloat b(1L, g);
  ExtFloat c = b - (b - a) * inv_phi;
  ExtFloat d = a + (b - a) * inv_phi;
  ExtFloat fc = z_squared(rg, c);
  ExtFloat fd = z_squared(rg, d);
  const ExtFloat golden_width = exp2_int(-static_cast<long>(p) - 24, g);
  while (b - a > golden_width) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * inv_phi;
      fc = z_squared(rg, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * inv_phi;
      fd = z_squared(rg, d);
    }
  }
  ExtFloat x_golden = ldexp(a + b, -1);
  if (abs(x_golden.rounded(q) - x_m) > exp2_int(32 - static_cast<long>(p), q)) {
    throw InternalError("bisection and golden-section minimizers disagree");
  }

  MinimizerResult out{r_in.rounded(p), x_m.rounded(p), at.point.z.rounded(p), ExtFloat(p),
                      abs(at.dz2).rounded(p), x_golden.rounded(p)};
  out.lambda = out.mu * out.mu;
  return out;
}

ExtFloat lambda_of_k(const ExtFloat& k, int precision_bits) {
  if (k < ExtFloat(1L, k.precision())) throw DomainError("lambda requires k >= 1");
  const ExtFloat kk = k.rounded(precision_bits + 64);
  return minimize(kk * kk, precision_bits).lambda;
}

}  // namespace sangaku
