#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <vector>

#include "sangaku/poly.hpp"
#include "sangaku/realroots.hpp"
#include "sangaku/resultant.hpp"
#include "sangaku/upoly.hpp"

// Discriminant of P*(k, y) in y and the real roots it cuts out of [1, bound].
namespace sangaku {

// Res_y(P, dP/dy) as a polynomial in k. StructuralError when it vanishes
// identically (P not squarefree in y).
Poly discriminant(const Poly& p_star, const ModularOptions& opt = {},
                  ResultantBackend backend = ResultantBackend::automatic);

// The discriminant at k = k0, exactly, without forming it symbolically.
// When the y-degree drops at k0 both leading coefficients of the Sylvester
// matrix vanish and the value is 0.
Rational discriminant_at(const Poly& p_star, const Rational& k0, const ModularOptions& opt = {});

struct SignBracket {
  Rational lo;
  Rational hi;
};

struct GridScan {
  std::vector<Rational> points;  // lo + i (hi - lo) / steps, i = 0..steps
  std::vector<int> signs;
  // Consecutive points with strictly opposite signs. Each contains a root
  // of odd multiplicity, so the count is a lower bound on those roots.
  std::vector<SignBracket> brackets;
  std::vector<Rational> zeros;  // grid points where the value is exactly 0
};

GridScan grid_signs(const UPoly& delta, const Rational& lo, const Rational& hi, int steps);

struct GridOptions {
  unsigned threads = 1;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::function<void(std::size_t done, std::size_t total)> progress;
};

// grid_signs with each value computed by discriminant_at from P*. Points
// are processed in batches of `threads`; BudgetExceeded is thrown between
// batches once the deadline passes.
GridScan grid_signs_pointwise(const Poly& p_star, const Rational& lo, const Rational& hi, int steps,
                              const GridOptions& opt = {});

struct ExceptionalReport {
  Poly delta;
  UPoly delta0;  // primitive squarefree part, positive leading coefficient
  Rational bound;
  // Every root of delta0 in [1, bound] in increasing order. A root at k = 1
  // is found by an exact check and reported as the interval [1, 1]; the
  // others isolate one root each in (lo, hi], refined to width 1/1024.
  std::vector<IsolatingInterval> roots;
  std::optional<GridScan> grid;
};

// PreconditionError when delta is zero or involves a variable other than k.
ExceptionalReport exceptional_candidates(const Poly& delta, const Rational& bound = Rational(200));

}  // namespace sangaku
