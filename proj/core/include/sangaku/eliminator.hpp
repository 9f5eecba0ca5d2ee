#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "sangaku/extfloat.hpp"
#include "sangaku/poly.hpp"
#include "sangaku/resultant.hpp"

// Radical elimination on the critical-point equations of the profile z_r,
// with r = k^2, producing P*(k, y) that vanishes on y = lambda(k).
namespace sangaku {

struct CriticalSystem {
  Poly e1;  // x w v - (k^2 - x - v)(w v + u (w + 1 - x)),  u = 2k - x - w
  Poly e2;  // w^2 - 2x + x^2
  Poly e3;  // v^2 - k^4 + u^2
  Poly e4;  // y - x^2 - (k^2 - x - v)^2
};

CriticalSystem build_system();

struct EliminationOptions {
  ResultantBackend backend = ResultantBackend::automatic;
  // Split y-independent polynomial content in k off the final eliminant.
  bool remove_k_content = true;
  ModularOptions modular;
  std::function<void(std::string_view)> log;
};

struct Eliminant {
  Poly p_kx;
  Poly h_kxy;
  Poly raw;
  Poly reduced;
};

// A1 = Res_w(E1, E2), A2 = Res_w(E3, E2), p = prim Res_v(A1, A2),
// h = prim Res_v(E4, A2), raw = Res_x(p, h), reduced = P*.
// An identically vanishing resultant is retried once after dividing out the
// common factor; a second failure throws StructuralError.
Eliminant eliminate(const CriticalSystem& sys, const EliminationOptions& opt = {});

// Primitive squarefree-in-y part, optionally without y-free content.
Poly reduce_eliminant(const Poly& raw, bool remove_k_content);

// Toy system: minimize x^2 + (c - x)^2 with c renamed to k, giving
// E1' = x - (k - x), E4' = y - x^2 - (k - x)^2. Eliminating x yields 2y - k^2.
struct ToySystem {
  Poly e1;
  Poly e4;
};
ToySystem build_toy_system();
Poly eliminate_toy(const ToySystem& sys, ResultantBackend backend = ResultantBackend::automatic);

struct BranchSample {
  ExtFloat k;
  ExtFloat lambda;
  // |P*(k, lambda)| / sum |c| k^i lambda^j
  ExtFloat scaled_residual;
  ExtFloat derivative;  // dP*/dy at (k, lambda), scaled the same way
  bool derivative_small;
};

// Evaluates P* and dP*/dy along the oracle branch. A derivative whose
// scaled magnitude is below derivative_tolerance (0 selects 2^(-p/2), far
// above the evaluation's rounding level) is flagged.
std::vector<BranchSample> verify_branch(const Poly& reduced, const std::vector<ExtFloat>& samples,
                                        int precision_bits = 256, double derivative_tolerance = 0);

}  // namespace sangaku
