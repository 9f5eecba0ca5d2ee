#pragma once

#include <mpfr.h>

#include <ostream>
#include <string>
#include <string_view>

#include "sangaku/scalar.hpp"

namespace sangaku {

// Binary floating-point number with a per-value precision, backed by MPFR.
// Every operation rounds to nearest. The result of a binary operation takes
// the smaller precision of its operands.
class ExtFloat {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 256;

  explicit ExtFloat(mpfr_prec_t precision = kDefaultPrecision);
  ExtFloat(double value, mpfr_prec_t precision);
  ExtFloat(long value, mpfr_prec_t precision);
  ExtFloat(const Integer& value, mpfr_prec_t precision);
  ExtFloat(const Rational& value, mpfr_prec_t precision);
  // Decimal or scientific literal; throws std::invalid_argument.
  ExtFloat(std::string_view decimal, mpfr_prec_t precision);

  ExtFloat(const ExtFloat& other);
  ExtFloat(ExtFloat&& other) noexcept;
  ExtFloat& operator=(const ExtFloat& other);
  ExtFloat& operator=(ExtFloat&& other) noexcept;
  ~ExtFloat();

  [[nodiscard]] mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  // Copy rounded to a new precision.
  [[nodiscard]] ExtFloat rounded(mpfr_prec_t precision) const;

  [[nodiscard]] mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  [[nodiscard]] bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  [[nodiscard]] int sign() const { return mpfr_sgn(value_); }
  [[nodiscard]] double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Exact rational value of the binary float.
  [[nodiscard]] Rational to_rational() const;
  // Base-2 exponent e with 0.5 <= |x| / 2^e < 1; very negative for zero.
  [[nodiscard]] long exponent() const;

  // Scientific-free decimal with `digits` significant digits
  // (0 selects enough digits to round-trip the precision).
  [[nodiscard]] std::string to_string(int digits = 0) const;

  ExtFloat& operator+=(const ExtFloat& o);
  ExtFloat& operator-=(const ExtFloat& o);
  ExtFloat& operator*=(const ExtFloat& o);
  ExtFloat& operator/=(const ExtFloat& o);

  friend ExtFloat operator+(const ExtFloat& a, const ExtFloat& b);
  friend ExtFloat operator-(const ExtFloat& a, const ExtFloat& b);
  friend ExtFloat operator*(const ExtFloat& a, const ExtFloat& b);
  friend ExtFloat operator/(const ExtFloat& a, const ExtFloat& b);
  friend ExtFloat operator*(const ExtFloat& a, long b);
  friend ExtFloat operator*(long b, const ExtFloat& a) { return a * b; }
  friend ExtFloat operator+(const ExtFloat& a, long b);
  friend ExtFloat operator-(const ExtFloat& a, long b);
  friend ExtFloat operator-(long a, const ExtFloat& b);
  friend ExtFloat operator/(const ExtFloat& a, long b);
  ExtFloat operator-() const;

  friend bool operator<(const ExtFloat& a, const ExtFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const ExtFloat& a, const ExtFloat& b) { return b < a; }
  friend bool operator<=(const ExtFloat& a, const ExtFloat& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
  friend bool operator>=(const ExtFloat& a, const ExtFloat& b) { return b <= a; }
  friend bool operator==(const ExtFloat& a, const ExtFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

 private:
  mpfr_t value_;
};

ExtFloat sqrt(const ExtFloat& a);
ExtFloat abs(const ExtFloat& a);
// a * 2^e, exact.
ExtFloat ldexp(const ExtFloat& a, long e);
// 2^e at the given precision.
ExtFloat exp2_int(long e, mpfr_prec_t precision);
ExtFloat max(const ExtFloat& a, const ExtFloat& b);

// d.ddde-NN with `digits` digits after the point; for residuals and errors.
std::string to_scientific(const ExtFloat& a, int digits = 3);

// Decimal string with an explicit precision annotation, e.g. "0.385...@256".
std::string to_annotated_string(const ExtFloat& a);

inline std::ostream& operator<<(std::ostream& os, const ExtFloat& a) { return os << to_annotated_string(a); }

}  // namespace sangaku
