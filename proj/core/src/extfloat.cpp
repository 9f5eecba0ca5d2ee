#include "sangaku/extfloat.hpp"

#include <algorithm>
#include <cmath>
#include <new>
#include <stdexcept>
#include <vector>

namespace sangaku {

namespace {

mpfr_prec_t min_prec(const ExtFloat& a, const ExtFloat& b) {
  return std::min(a.precision(), b.precision());
}

}  // namespace

ExtFloat::ExtFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

ExtFloat::ExtFloat(double value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

ExtFloat::ExtFloat(long value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

ExtFloat::ExtFloat(const Integer& value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

ExtFloat::ExtFloat(const Rational& value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

ExtFloat::ExtFloat(std::string_view decimal, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  const std::string s(decimal);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == nullptr || end == s.c_str() || *end != '\0') {
    mpfr_clear(value_);
    throw std::invalid_argument("malformed decimal literal: " + s);
  }
}

ExtFloat::ExtFloat(const ExtFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

ExtFloat::ExtFloat(ExtFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

ExtFloat& ExtFloat::operator=(const ExtFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

ExtFloat& ExtFloat::operator=(ExtFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

ExtFloat::~ExtFloat() { mpfr_clear(value_); }

ExtFloat ExtFloat::rounded(mpfr_prec_t precision) const {
  ExtFloat r(precision);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

Rational ExtFloat::to_rational() const {
  if (!mpfr_number_p(value_)) throw std::domain_error("non-finite ExtFloat");
  if (is_zero()) return Rational(0);
  Integer m;
  const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), value_);
  Rational q(m);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return q;
}

long ExtFloat::exponent() const {
  if (is_zero()) return -(1L << 40);
  return mpfr_get_exp(value_);
}

std::string ExtFloat::to_string(int digits) const {
  if (!mpfr_number_p(value_)) return mpfr_nan_p(value_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
  if (digits <= 0) {
    digits = static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30102999566398120)) + 1;
  }
  if (is_zero()) return "0";
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits), value_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign_str;
  if (!mant.empty() && mant.front() == '-') {
    sign_str = "-";
    mant.erase(0, 1);
  }
  std::string out;
  if (exp10 <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-exp10), '0') + mant;
  } else if (static_cast<std::size_t>(exp10) >= mant.size()) {
    out = mant + std::string(static_cast<std::size_t>(exp10) - mant.size(), '0');
  } else {
    out = mant.substr(0, static_cast<std::size_t>(exp10)) + "." + mant.substr(static_cast<std::size_t>(exp10));
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return sign_str + out;
}

ExtFloat& ExtFloat::operator+=(const ExtFloat& o) { return *this = *this + o; }
ExtFloat& ExtFloat::operator-=(const ExtFloat& o) { return *this = *this - o; }
ExtFloat& ExtFloat::operator*=(const ExtFloat& o) { return *this = *this * o; }
ExtFloat& ExtFloat::operator/=(const ExtFloat& o) { return *this = *this / o; }

ExtFloat operator+(const ExtFloat& a, const ExtFloat& b) {
  ExtFloat r(min_prec(a, b));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

ExtFloat operator-(const ExtFloat& a, const ExtFloat& b) {
  ExtFloat r(min_prec(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

ExtFloat operator*(const ExtFloat& a, const ExtFloat& b) {
  ExtFloat r(min_prec(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

ExtFloat operator/(const ExtFloat& a, const ExtFloat& b) {
  ExtFloat r(min_prec(a, b));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

ExtFloat operator*(const ExtFloat& a, long b) {
  ExtFloat r(a.precision());
  mpfr_mul_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

ExtFloat operator+(const ExtFloat& a, long b) {
  ExtFloat r(a.precision());
  mpfr_add_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

ExtFloat operator-(const ExtFloat& a, long b) {
  ExtFloat r(a.precision());
  mpfr_sub_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

ExtFloat operator-(long a, const ExtFloat& b) {
  ExtFloat r(b.precision());
  mpfr_si_sub(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}

ExtFloat operator/(const ExtFloat& a, long b) {
  ExtFloat r(a.precision());
  mpfr_div_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

ExtFloat ExtFloat::operator-() const {
  ExtFloat r(precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

ExtFloat sqrt(const ExtFloat& a) {
  ExtFloat r(a.precision());
  mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
  return r;
}

ExtFloat abs(const ExtFloat& a) {
  ExtFloat r(a.precision());
  mpfr_abs(r.get(), a.get(), MPFR_RNDN);
  return r;
}

ExtFloat ldexp(const ExtFloat& a, long e) {
  ExtFloat r(a.precision());
  mpfr_mul_2si(r.get(), a.get(), e, MPFR_RNDN);
  return r;
}

ExtFloat exp2_int(long e, mpfr_prec_t precision) {
  ExtFloat r(1L, precision);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

ExtFloat max(const ExtFloat& a, const ExtFloat& b) { return a < b ? b : a; }

std::string to_scientific(const ExtFloat& a, int digits) {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, "%.*Re", digits, a.get()) < 0) throw std::bad_alloc();
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string to_annotated_string(const ExtFloat& a) {
  return a.to_string() + "@" + std::to_string(a.precision());
}

}  // namespace sangaku
