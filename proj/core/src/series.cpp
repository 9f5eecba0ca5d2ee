#include "sangaku/series.hpp"

#include <algorithm>
#include <cmath>

#include "sangaku/errors.hpp"
#include "sangaku/oracle.hpp"
#include "sangaku/polyring.hpp"

namespace sangaku {

namespace {

void require_compatible(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order()) throw StructuralError("power series orders differ");
}

// Coefficient series c_j(t) of F = sum_j c_j(t) y^j, truncated at `order`.
std::vector<PowerSeries> y_coefficients(const Poly& F, int order, mpfr_prec_t p) {
  const int dy = std::max(F.degree(Var::y), 0);
  std::vector<PowerSeries> out(static_cast<std::size_t>(dy) + 1, PowerSeries(order, p));
  for (const auto& [m, c] : F.terms()) {
    const auto et = static_cast<int>(m.exponent(Var::t));
    if (et > order) continue;
    for (Var v : kAllVars) {
      if (v != Var::t && v != Var::y && m.exponent(v) != 0) {
        throw StructuralError("series substitution expects a polynomial in t and y");
      }
    }
    out[m.exponent(Var::y)].set(static_cast<std::size_t>(et), ExtFloat(c, p));
  }
  return out;
}

PowerSeries abs_series(const PowerSeries& a) {
  std::vector<ExtFloat> c;
  c.reserve(a.coefficients().size());
  for (const auto& x : a.coefficients()) c.push_back(abs(x));
  return PowerSeries(std::move(c), a.precision());
}

struct SeriesEvaluation {
  PowerSeries value;
  PowerSeries magnitude;
};

SeriesEvaluation substitute_with_scale(const Poly& F, const PowerSeries& y) {
  const auto cs = y_coefficients(F, y.order(), y.precision());
  const PowerSeries ay = abs_series(y);
  PowerSeries acc = cs.back();
  PowerSeries mag = abs_series(cs.back());
  for (std::size_t j = cs.size() - 1; j-- > 0;) {
    acc = acc * y + cs[j];
    mag = mag * ay + abs_series(cs[j]);
  }
  return {std::move(acc), std::move(mag)};
}

ExtFloat relative_residual(const SeriesEvaluation& e) {
  ExtFloat worst(e.value.precision());
  for (std::size_t i = 0; i < e.value.coefficients().size(); ++i) {
    const ExtFloat& s = e.magnitude[i];
    if (s.is_zero()) continue;
    worst = max(worst, abs(e.value[i]) / s);
  }
  return worst;
}

}  // namespace

PowerSeries::PowerSeries(int order, mpfr_prec_t precision) : precision_(precision) {
  if (order < 0) throw PreconditionError("power series order must be nonnegative");
  c_.assign(static_cast<std::size_t>(order) + 1, ExtFloat(precision));
}

PowerSeries::PowerSeries(std::vector<ExtFloat> coefficients, mpfr_prec_t precision)
    : c_(std::move(coefficients)), precision_(precision) {
  if (c_.empty()) throw PreconditionError("power series needs at least one coefficient");
  for (auto& x : c_) x = x.rounded(precision);
}

PowerSeries PowerSeries::constant(const ExtFloat& c, int order) {
  PowerSeries s(order, c.precision());
  s.set(0, c);
  return s;
}

PowerSeries PowerSeries::variable(int order, mpfr_prec_t precision) {
  PowerSeries s(order, precision);
  if (order >= 1) s.set(1, ExtFloat(1L, precision));
  return s;
}

void PowerSeries::set(std::size_t i, const ExtFloat& value) {
  if (i >= c_.size()) throw StructuralError("coefficient index beyond the series order");
  c_[i] = value.rounded(precision_);
}

PowerSeries PowerSeries::truncated(int order) const {
  if (order > this->order()) throw StructuralError("truncation cannot raise the order");
  return PowerSeries(std::vector<ExtFloat>(c_.begin(), c_.begin() + order + 1), precision_);
}

PowerSeries PowerSeries::padded(int order) const {
  if (order <= this->order()) return truncated(order);
  PowerSeries s(order, precision_);
  for (std::size_t i = 0; i < c_.size(); ++i) s.c_[i] = c_[i];
  return s;
}

PowerSeries PowerSeries::rounded(mpfr_prec_t precision) const { return PowerSeries(c_, precision); }

ExtFloat PowerSeries::evaluate(const ExtFloat& t) const {
  const ExtFloat x = t.rounded(precision_);
  ExtFloat acc = c_.back();
  for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries s = *this;
  for (auto& x : s.c_) x = -x;
  return s;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  require_compatible(a, b);
  PowerSeries s(a.order(), std::min(a.precision_, b.precision_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) s.c_[i] = a.c_[i] + b.c_[i];
  return s;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  require_compatible(a, b);
  const mpfr_prec_t p = std::min(a.precision_, b.precision_);
  PowerSeries s(a.order(), p);
  const std::size_t n = a.c_.size();
  ExtFloat term(p);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      mpfr_mul(term.get(), a.c_[i].get(), b.c_[j].get(), MPFR_RNDN);
      mpfr_add(s.c_[i + j].get(), s.c_[i + j].get(), term.get(), MPFR_RNDN);
    }
  }
  return s;
}

PowerSeries operator*(const PowerSeries& a, const ExtFloat& c) {
  PowerSeries s = a;
  for (auto& x : s.c_) x = x * c.rounded(a.precision_);
  return s;
}

PowerSeries ps_inverse(const PowerSeries& a) {
  if (a[0].is_zero()) throw DomainError("series inverse needs a nonzero constant term");
  const mpfr_prec_t p = a.precision();
  const int n = a.order();
  std::vector<ExtFloat> b(static_cast<std::size_t>(n) + 1, ExtFloat(p));
  const ExtFloat inv0 = ExtFloat(1L, p) / a[0];
  b[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    ExtFloat acc(p);
    for (int i = 1; i <= k; ++i) acc += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(k - i)];
    b[static_cast<std::size_t>(k)] = -acc * inv0;
  }
  return PowerSeries(std::move(b), p);
}

PowerSeries ps_sqrt(const PowerSeries& a) {
  if (a[0].sign() <= 0) throw DomainError("series square root needs a positive constant term");
  const mpfr_prec_t p = a.precision();
  const int n = a.order();
  std::vector<ExtFloat> s(static_cast<std::size_t>(n) + 1, ExtFloat(p));
  s[0] = sqrt(a[0]);
  const ExtFloat inv2s0 = ExtFloat(1L, p) / (s[0] * 2L);
  for (int k = 1; k <= n; ++k) {
    // a_k = sum_{i+j=k} s_i s_j
    ExtFloat acc = a[static_cast<std::size_t>(k)];
    for (int i = 1; i < k; ++i) acc -= s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(k - i)];
    s[static_cast<std::size_t>(k)] = acc * inv2s0;
  }
  return PowerSeries(std::move(s), p);
}

PowerSeries ps_compose(const PowerSeries& a, const PowerSeries& b) {
  if (!b[0].is_zero()) throw DomainError("composition needs an inner series without constant term");
  const int n = b.order();
  const PowerSeries outer = a.order() >= n ? a.truncated(n) : a.padded(n);
  PowerSeries acc = PowerSeries::constant(outer[static_cast<std::size_t>(n)], n).rounded(b.precision());
  for (int i = n - 1; i >= 0; --i) {
    acc = acc * b;
    acc.set(0, acc[0] + outer[static_cast<std::size_t>(i)]);
  }
  return acc;
}

PowerSeries sqrt_one_plus_minus_one(int order, mpfr_prec_t precision) {
  PowerSeries s(order, precision);
  // binom(1/2, n) = binom(1/2, n-1) * (1/2 - n + 1) / n, exact in Q.
  Rational c(1);
  for (int i = 1; i <= order; ++i) {
    c *= Rational(3 - 2 * i, 2 * i);
    s.set(static_cast<std::size_t>(i), ExtFloat(c, precision));
  }
  return s;
}

Poly taylor_shift(const Poly& p, const Integer& center) {
  return shift_variable(p, Var::k, center).renamed(Var::k, Var::t);
}

PowerSeries substitute_series(const Poly& F, const PowerSeries& y) { return substitute_with_scale(F, y).value; }

LiftResult newton_lift(const LiftProblem& prob) {
  const int N = prob.order;
  if (N < 0) throw PreconditionError("lift order must be nonnegative");
  const mpfr_prec_t p = prob.seed.precision();
  const Poly Fy = derivative(prob.F, Var::y);

  const PowerSeries seed = PowerSeries::constant(prob.seed, 0);
  const SeriesEvaluation f0 = substitute_with_scale(prob.F, seed);
  const SeriesEvaluation d0 = substitute_with_scale(Fy, seed);
  if (relative_residual(f0) > exp2_int(-static_cast<long>(p) / 2, p)) {
    throw PreconditionError("seed is not a root of F(0, y) at the working precision");
  }
  const ExtFloat tolerance = prob.derivative_tolerance > 0 ? ExtFloat(prob.derivative_tolerance, p)
                                                           : exp2_int(-static_cast<long>(p) / 2, p);
  if (d0.magnitude[0].is_zero() || abs(d0.value[0]) / d0.magnitude[0] <= tolerance) {
    throw PreconditionError("exceptional point; lifting not justified here");
  }

  LiftResult out{seed.padded(N), {}, ExtFloat(p)};
  out.iterates.push_back(seed.padded(N));
  PowerSeries y = seed;
  int known = 1;  // number of coefficients already correct
  auto step = [&](int terms) {
    y = y.padded(terms - 1);
    const PowerSeries r = substitute_series(prob.F, y);
    const PowerSeries d = substitute_series(Fy, y);
    y = y - r * ps_inverse(d);
    out.iterates.push_back(y.padded(N));
  };
  while (known < N + 1) {
    known = std::min(2 * known, N + 1);
    step(known);
  }
  step(N + 1);  // confirming pass at full order
  out.series = y;
  out.residual = relative_residual(substitute_with_scale(prob.F, y));
  return out;
}

TaylorResult mu_taylor(const Poly& reduced, const TaylorOptions& opt) {
  if (opt.order < 0) throw PreconditionError("series order must be nonnegative");
  if (opt.precision_bits < 64) throw PreconditionError("precision must be at least 64 bits");
  const int N = opt.order;
  const int p = opt.precision_bits;
  const Poly F = taylor_shift(reduced, Integer(1));
  const Poly f1 = substitute(F, Var::t, Integer(0));
  const Poly df1 = derivative(f1, Var::y);

  // Seed from the oracle at twice the target precision.
  ExtFloat y = lambda_of_k(ExtFloat(1L, 2 * p), 2 * p);
  // Bits lost to cancellation when evaluating F(0, y) near the root.
  const auto probe = evaluate(df1, {{Var::y, y}}, 2 * p + 64);
  const long lost = probe.value.is_zero() ? 2L * p : std::max(0L, probe.magnitude.exponent() - probe.value.exponent());
  const int polish_precision = static_cast<int>(2 * p + lost + opt.guard_bits);
  y = y.rounded(polish_precision);
  const ExtFloat oracle_seed = y;
  for (int it = 0; it < 16; ++it) {
    const auto fv = evaluate(f1, {{Var::y, y}}, polish_precision);
    const auto dv = evaluate(df1, {{Var::y, y}}, polish_precision);
    const ExtFloat delta = fv.value / dv.value;
    y -= delta;
    if (delta.is_zero() || delta.exponent() < y.exponent() - (2 * p + 8)) break;
  }

  // Polishing must stay on the oracle's branch, not slide to another root.
  if (abs(y - oracle_seed) > ldexp(abs(oracle_seed), -p)) {
    throw PreconditionError("eliminant does not vanish on the oracle branch at k = 1");
  }

  // Each lifted coefficient inherits roughly the same cancellation.
  const int W = static_cast<int>(p + lost + opt.guard_bits);
  LiftProblem prob{F, y.rounded(W), N, 0};
  LiftResult lift = newton_lift(prob);
  const PowerSeries k_of_r = sqrt_one_plus_minus_one(N, W);
  const PowerSeries lambda_r = ps_compose(lift.series, k_of_r);
  const PowerSeries mu = ps_sqrt(lambda_r);
  return TaylorResult{mu.rounded(p), lift.series.rounded(p), y.rounded(2 * p), W, lift.residual};
}

}  // namespace sangaku
