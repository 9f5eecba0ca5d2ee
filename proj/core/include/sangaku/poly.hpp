#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sangaku/monomial.hpp"
#include "sangaku/scalar.hpp"

namespace sangaku {

// Exact multivariate polynomial with integer coefficients in at most four
// variables drawn from the global order k < x < w < v < y < t.
//
// Storage is a sparse term list sorted ascending in lex order (t dominant);
// algorithms that work "in a main variable" go through coefficients(), which
// yields the dense coefficient sequence in that variable with polynomial
// coefficients in the remaining ones. Values are immutable in practice: all
// operations return new polynomials.
class Poly {
 public:
  using Term = std::pair<Monomial, Integer>;

  Poly() = default;
  Poly(const Integer& c);  // NOLINT(google-explicit-constructor)
  Poly(long c);            // NOLINT(google-explicit-constructor)

  static Poly variable(Var v);
  static Poly monomial(const Integer& c, Monomial m, VarSet vars);

  // Normalizes: sorts, merges duplicates, drops zeros. Every variable used
  // by a term must be declared in `vars`.
  static Poly from_terms(VarSet vars, std::vector<Term> terms);

  [[nodiscard]] VarSet vars() const { return vars_; }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] Integer constant_value() const;  // requires is_constant()

  // -1 for the zero polynomial.
  [[nodiscard]] int degree(Var v) const;
  [[nodiscard]] int total_degree() const;

  // Variables that actually occur in some term.
  [[nodiscard]] VarSet support() const;

  // Lex-largest term; requires !is_zero().
  [[nodiscard]] const Term& leading_term() const { return terms_.back(); }

  // Dense coefficient sequence in v; entry i multiplies v^i. The result is
  // empty for the zero polynomial. Coefficients keep the declared variables
  // minus v.
  [[nodiscard]] std::vector<Poly> coefficients(Var v) const;
  [[nodiscard]] Poly leading_coefficient(Var v) const;

  static Poly from_coefficients(Var v, const std::vector<Poly>& coeffs, VarSet declared = {});

  // Extends the declared variable set.
  [[nodiscard]] Poly with_vars(VarSet extra) const;
  // Drops declared variables that do not occur.
  [[nodiscard]] Poly trimmed() const;
  // Replaces variable `from` by `to` (which must not occur).
  [[nodiscard]] Poly renamed(Var from, Var to) const;

  [[nodiscard]] Integer integer_content() const;
  [[nodiscard]] Integer max_abs_coefficient() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Integer& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Integer& c) { return a *= c; }
  friend Poly operator*(const Integer& c, Poly a) { return a *= c; }

  // Structural equality ignores the declared-variable set.
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  // Divides every coefficient by c; throws StructuralError when inexact.
  [[nodiscard]] Poly divided_exactly_by(const Integer& c) const;

  // Multiplies by the monomial m.
  [[nodiscard]] Poly shifted(Monomial m, VarSet extra = {}) const;

  [[nodiscard]] std::string to_string() const;

 private:
  static VarSet checked_union(VarSet a, VarSet b);
  void add_scaled(const Poly& o, int sign);

  VarSet vars_;
  std::vector<Term> terms_;
};

Poly pow(const Poly& base, unsigned exponent);

std::string to_string(const Poly& p);

// Reads the notation produced by to_string (integers, single-letter
// variables, + - * ^ and parentheses). Throws PreconditionError.
Poly parse_poly(std::string_view text);

}  // namespace sangaku
