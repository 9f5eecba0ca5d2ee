#pragma once

#include <optional>
#include <vector>

#include "sangaku/extfloat.hpp"
#include "sangaku/poly.hpp"

// Truncated power series with ExtFloat coefficients and Newton lifting of
// simple roots of F(t, y).
namespace sangaku {

class PowerSeries {
 public:
  // Zero series with coefficients 0..order.
  PowerSeries(int order, mpfr_prec_t precision);
  // Coefficients are rounded to `precision`.
  PowerSeries(std::vector<ExtFloat> coefficients, mpfr_prec_t precision);
  static PowerSeries constant(const ExtFloat& c, int order);
  // t at the given order (order >= 1), i.e. coefficients 0, 1, 0, ...
  static PowerSeries variable(int order, mpfr_prec_t precision);

  [[nodiscard]] int order() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] mpfr_prec_t precision() const { return precision_; }
  [[nodiscard]] const ExtFloat& operator[](std::size_t i) const { return c_[i]; }
  [[nodiscard]] const std::vector<ExtFloat>& coefficients() const { return c_; }
  void set(std::size_t i, const ExtFloat& value);

  // Drops terms above `order` (order must not exceed the current one).
  [[nodiscard]] PowerSeries truncated(int order) const;
  // Pads with zero coefficients; the caller asserts the padding is exact.
  [[nodiscard]] PowerSeries padded(int order) const;
  [[nodiscard]] PowerSeries rounded(mpfr_prec_t precision) const;
  // Sum of c_i t^i by Horner's rule at the series precision.
  [[nodiscard]] ExtFloat evaluate(const ExtFloat& t) const;

  PowerSeries operator-() const;
  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  // Cauchy product truncated at the common order.
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const ExtFloat& c);

 private:
  std::vector<ExtFloat> c_;
  mpfr_prec_t precision_;
};

// 1/A; the constant term must be nonzero (DomainError).
PowerSeries ps_inverse(const PowerSeries& a);
// S with S^2 = A and S(0) > 0; A(0) must be positive (DomainError).
PowerSeries ps_sqrt(const PowerSeries& a);
// A(B(t)); B(0) must be exactly zero (DomainError).
PowerSeries ps_compose(const PowerSeries& a, const PowerSeries& b);
// sqrt(1 + t) - 1 from the binomial series.
PowerSeries sqrt_one_plus_minus_one(int order, mpfr_prec_t precision);

// P(k, y) -> P(center + t, y), exact.
Poly taylor_shift(const Poly& p, const Integer& center);

struct LiftProblem {
  Poly F;         // polynomial in (t, y)
  ExtFloat seed;  // simple root of F(0, y)
  int order = 0;
  // Hensel threshold on |F_y(0, seed)| / magnitude; 0 selects 2^(-p/2)
  // with p the seed precision.
  double derivative_tolerance = 0;
};

struct LiftResult {
  PowerSeries series;
  // iterates[n] is the series after n Newton steps, padded to full order.
  std::vector<PowerSeries> iterates;
  // max_i |[F(t, y(t))]_i| relative to F's coefficient scale at y(t).
  ExtFloat residual;
};

// Newton iteration y <- y - F(t, y) / F_y(t, y) with the working order
// doubling each step and capped at prob.order, followed by one confirming
// step at full order. Works at the seed's precision. Throws
// PreconditionError when the Hensel condition fails.
LiftResult newton_lift(const LiftProblem& prob);

// F(t, Y(t)) truncated at Y's order, with every operation at Y's precision.
PowerSeries substitute_series(const Poly& F, const PowerSeries& y);

struct TaylorOptions {
  int order = 40;
  int precision_bits = 256;
  // Extra bits beyond the measured cancellation in F(0, y) near the seed.
  int guard_bits = 64;
};

struct TaylorResult {
  PowerSeries mu;      // coefficients of mu(1 + t), t the offset in r
  PowerSeries lambda;  // coefficients of lambda(1 + s), s the offset in k
  ExtFloat seed;       // lambda(1) after polishing
  int working_precision = 0;
  ExtFloat lift_residual;
};

// Seeds from the oracle at twice the precision, polishes the root of
// P*(1, y) by scalar Newton, lifts, composes with k = sqrt(1 + t) and takes
// the square root.
TaylorResult mu_taylor(const Poly& reduced, const TaylorOptions& opt);

}  // namespace sangaku
