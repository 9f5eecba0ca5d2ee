#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sangaku/poly.hpp"

namespace sangaku {

enum class ResultantBackend { sylvester, prs, modular, automatic };

std::string_view backend_name(ResultantBackend b);
// Accepts sylvester, prs, modular, auto.
std::optional<ResultantBackend> parse_backend(std::string_view name);

struct DegreeBound {
  Var var;
  int bound;
};

struct ModularOptions {
  // Number of word primes tried before giving up with ResourceError.
  std::size_t prime_budget = 20000;
  unsigned threads = 1;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  // When nonzero, the CRT loop also stops once the modulus exceeds
  // 2^(coefficient_bits + 1), which certifies every coefficient.
  std::size_t coefficient_bits = 0;
  // Called after each prime with (primes used, modulus bits).
  std::function<void(std::size_t, std::size_t)> progress;
};

struct ResultantRequest {
  Poly f;
  Poly g;
  Var var = Var::x;
  ResultantBackend backend = ResultantBackend::automatic;
  // Bounds on the result's degree in the surviving variables. Missing
  // entries use the Bezout-type bound. User bounds are checked with one
  // extra evaluation point per variable.
  std::vector<DegreeBound> degree_bounds;
  ModularOptions modular;
};

using PolyMatrix = std::vector<std::vector<Poly>>;

// Res_var(f, g) with the Sylvester determinant sign convention.
Poly resultant(const ResultantRequest& req);
Poly resultant(const Poly& f, const Poly& g, Var var,
               ResultantBackend backend = ResultantBackend::automatic);

// Rows: n shifted copies of f, then m shifted copies of g, highest power
// of var in column 0.
PolyMatrix sylvester_matrix(const Poly& f, const Poly& g, Var var);
int sylvester_dimension(const Poly& f, const Poly& g, Var var);
// Fraction-free (Bareiss) determinant.
Poly determinant(PolyMatrix m);

Poly prs_resultant(const Poly& f, const Poly& g, Var var);
Poly modular_resultant(const ResultantRequest& req);

// deg_u Res <= deg_u f * deg_var g + deg_u g * deg_var f for each variable
// u other than var that occurs in f or g.
std::vector<DegreeBound> bezout_bounds(const Poly& f, const Poly& g, Var var);

}  // namespace sangaku
