#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sangaku/monomial.hpp"
#include "sangaku/scalar.hpp"

namespace sangaku {

class Poly;

// Dense univariate polynomial over Z, lowest degree first. The coefficient
// vector never carries trailing zeros, so degree() == size() - 1 and the
// zero polynomial has degree -1.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Integer> coeffs);
  UPoly(std::initializer_list<long> coeffs);

  // prod (den_i * x - num_i) over the given rational roots.
  static UPoly from_roots(const std::vector<Rational>& roots);

  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] const std::vector<Integer>& coeffs() const { return c_; }
  [[nodiscard]] const Integer& operator[](std::size_t i) const { return c_[i]; }
  [[nodiscard]] const Integer& lc() const { return c_.back(); }

  [[nodiscard]] UPoly derivative() const;
  [[nodiscard]] Integer content() const;
  // Divides by the content and makes the leading coefficient positive.
  [[nodiscard]] UPoly primitive() const;

  [[nodiscard]] Integer eval(const Integer& x) const;
  [[nodiscard]] Rational eval(const Rational& x) const;
  // Sign of f(x), computed without forming the rational value.
  [[nodiscard]] int sign_at(const Rational& x) const;

  [[nodiscard]] UPoly taylor_shift(const Integer& c) const;  // f(x + c)

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const Integer& c);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  // Stable 64-bit FNV-1a fingerprint of the coefficients.
  [[nodiscard]] std::uint64_t fingerprint() const;

  [[nodiscard]] std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Integer> c_;
};

UPoly to_upoly(const Poly& p, Var v);
Poly to_poly(const UPoly& p, Var v);

// lc(g)^(max(deg f - deg g + 1, 1)) f = q g + r.
std::pair<UPoly, UPoly> pseudo_divide(const UPoly& f, const UPoly& g);

// The quotient when g divides f exactly over Z, otherwise nullopt.
std::optional<UPoly> exact_quotient(const UPoly& f, const UPoly& g);

// Primitive gcd with positive leading coefficient; multi-modular with trial
// division. gcd(0, 0) throws StructuralError.
UPoly gcd(const UPoly& f, const UPoly& g);

// Primitive squarefree part with positive leading coefficient.
UPoly squarefree_part(const UPoly& f);

bool is_squarefree(const UPoly& f);

}  // namespace sangaku
