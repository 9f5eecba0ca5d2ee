#pragma once

#include <random>
#include <vector>

#include "sangaku/poly.hpp"

namespace sangaku::testing {

// Random dense-ish polynomial in the given variables with per-variable
// degree at most max_deg and coefficients in [-bound, bound].
inline Poly random_poly(std::mt19937_64& rng, const std::vector<Var>& vars, int max_deg, long bound,
                        double density = 0.6) {
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::uniform_real_distribution<double> keep(0.0, 1.0);
  VarSet set;
  for (Var v : vars) set.insert(v);
  std::vector<Poly::Term> terms;
  std::vector<int> e(vars.size(), 0);
  while (true) {
    if (keep(rng) < density) {
      Monomial m;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        m = m.with_exponent(vars[i], static_cast<std::uint32_t>(e[i]));
      }
      terms.emplace_back(m, Integer(coeff(rng)));
    }
    std::size_t i = 0;
    while (i < e.size() && ++e[i] > max_deg) e[i++] = 0;
    if (i == e.size()) break;
  }
  return Poly::from_terms(set, std::move(terms));
}

// As above but guaranteed to have degree >= 1 in vars.front().
inline Poly random_nonconstant(std::mt19937_64& rng, const std::vector<Var>& vars, int max_deg, long bound) {
  while (true) {
    Poly p = random_poly(rng, vars, max_deg, bound);
    if (p.degree(vars.front()) >= 1) return p;
  }
}

}  // namespace sangaku::testing
