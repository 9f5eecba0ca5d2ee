#pragma once

#include <cstdint>
#include <vector>

#include "sangaku/scalar.hpp"
#include "sangaku/upoly.hpp"

// Certified real-root counting and isolation by Sturm sequences.
namespace sangaku {

// Exactly one real root of the polynomial identified by polynomial_id lies
// in (lo, hi].
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  std::uint64_t polynomial_id = 0;

  [[nodiscard]] Rational width() const { return hi - lo; }
  [[nodiscard]] Rational midpoint() const { return (lo + hi) / 2; }
};

// f, -rem(f, f'), ... with each remainder made primitive by a positive
// factor, which keeps all signs intact.
std::vector<UPoly> sturm_sequence(const UPoly& f);

// Number of distinct real roots in (lo, hi]. f must be squarefree
// (StructuralError otherwise) and lo < hi.
int sturm_count(const UPoly& f, const Rational& lo, const Rational& hi);
int sturm_count(const std::vector<UPoly>& sequence, const Rational& lo, const Rational& hi);

// Every real root in (lo, hi], in increasing order, by bisection at dyadic
// midpoints.
std::vector<IsolatingInterval> isolate_roots(const UPoly& f, const Rational& lo, const Rational& hi);

// Nested interval of width at most target_width isolating the same root.
IsolatingInterval refine_root(const IsolatingInterval& iv, const UPoly& f, const Rational& target_width);

// Cauchy bound: every real root lies in (-B, B).
Rational root_bound(const UPoly& f);

}  // namespace sangaku
