#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sangaku/extfloat.hpp"
#include "sangaku/poly.hpp"
#include "sangaku/scalar.hpp"

// Structural operations on exact polynomials: pseudo-division, exact
// division, content and primitive part, gcd, squarefree part, evaluation.
namespace sangaku {

struct PseudoDivision {
  Poly quotient;
  Poly remainder;
};

// lc(g)^e * f = quotient * g + remainder with deg_v(remainder) < deg_v(g),
// where e = deg_v f - deg_v g + 1, or 1 when deg_v f < deg_v g.
PseudoDivision pseudo_divide(const Poly& f, const Poly& g, Var v);
Poly pseudo_remainder(const Poly& f, const Poly& g, Var v);

// a / b when b divides a in Z[vars], otherwise nullopt.
std::optional<Poly> try_exact_divide(const Poly& a, const Poly& b);
// As above but throws StructuralError when the division is not exact.
Poly exact_divide(const Poly& a, const Poly& b);

struct ContentPrimitive {
  Poly content;    // gcd of the coefficients in v (a polynomial in the rest)
  Poly primitive;  // f / content, lex-leading coefficient positive
};

ContentPrimitive content_primitive(const Poly& f, Var v);
Poly primitive_part(const Poly& f, Var v);

Poly derivative(const Poly& f, Var v);

// Scales by -1 if needed so the lex-leading coefficient is positive.
Poly normalize_sign(const Poly& f);

// Greatest common divisor in Z[vars], including content, lex-leading
// coefficient positive.
Poly gcd_full(const Poly& a, const Poly& b);

// gcd in v over the fraction field of the remaining variables, returned
// primitive in v with positive lex-leading coefficient. Both zero throws.
Poly gcd_poly(const Poly& f, const Poly& g, Var v);

// Cheap certificate: true when some specialization of the other variables
// modulo a word prime leaves f squarefree of full degree in v. A true answer
// proves gcd(f, df/dv) is free of v; false is inconclusive.
bool certify_squarefree(const Poly& f, Var v, int attempts = 4);

// primitive(f / gcd(f, df/dv)) in v; content free of v is discarded.
Poly squarefree_part(const Poly& f, Var v);

// f with v := value (integer), as a polynomial in the remaining variables.
Poly substitute(const Poly& f, Var v, const Integer& value);
// den^deg_v(f) * f(v := num/den): stays in Z[rest] and has the same zeros.
Poly substitute_scaled(const Poly& f, Var v, const Rational& value);
// f(v := v + shift) (Taylor shift by an integer).
Poly shift_variable(const Poly& f, Var v, const Integer& shift);

template <typename T>
using Assignment = std::vector<std::pair<Var, T>>;

// Exact evaluation; the assignment must cover every variable in f.support().
Rational evaluate(const Poly& f, const Assignment<Rational>& at);

struct FloatEvaluation {
  ExtFloat value;
  // sum |c| * prod |v|^e, the natural scale for relative residuals.
  ExtFloat magnitude;
};

// Term-wise evaluation with every operation rounded to `precision` bits.
FloatEvaluation evaluate(const Poly& f, const Assignment<ExtFloat>& at, mpfr_prec_t precision);

}  // namespace sangaku
