#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sangaku/monomial.hpp"
#include "sangaku/scalar.hpp"

namespace sangaku::modular {

// Arithmetic in Z/pZ for an odd prime p < 2^62, in Montgomery form with
// R = 2^64. All element arguments and results are Montgomery residues in
// [0, p) unless a function name says otherwise.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  [[nodiscard]] std::uint64_t modulus() const { return p_; }
  [[nodiscard]] std::uint64_t zero() const { return 0; }
  [[nodiscard]] std::uint64_t one() const { return one_; }

  [[nodiscard]] std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return redc(static_cast<unsigned __int128>(a) * b);
  }
  [[nodiscard]] std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  [[nodiscard]] std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  [[nodiscard]] std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }

  [[nodiscard]] std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  // a must be nonzero.
  [[nodiscard]] std::uint64_t inv(std::uint64_t a) const;

  [[nodiscard]] std::uint64_t from_plain(std::uint64_t a) const;  // a < p
  [[nodiscard]] std::uint64_t to_plain(std::uint64_t a) const;
  [[nodiscard]] std::uint64_t from_signed(std::int64_t a) const;
  [[nodiscard]] std::uint64_t from_integer(const Integer& z) const;

  // In-place inversion of every (nonzero) entry using one field inversion.
  void batch_inverse(std::span<std::uint64_t> values) const;

 private:
  [[nodiscard]] std::uint64_t redc(unsigned __int128 t) const {
    const std::uint64_t m = static_cast<std::uint64_t>(t) * neg_inv_;
    const unsigned __int128 u = (t + static_cast<unsigned __int128>(m) * p_) >> 64;
    const auto r = static_cast<std::uint64_t>(u);
    return r >= p_ ? r - p_ : r;
  }

  std::uint64_t p_;
  std::uint64_t neg_inv_;  // -p^{-1} mod 2^64
  std::uint64_t r2_;       // 2^128 mod p
  std::uint64_t one_;      // 2^64 mod p
};

bool is_prime(std::uint64_t n);

// The i-th prime below 2^62 in descending order; deterministic and cached.
std::uint64_t word_prime(std::size_t index);

// Dense univariate polynomial over Z/pZ, low degree first, Montgomery form.
using DenseMod = std::vector<std::uint64_t>;

void trim(DenseMod& f);
int degree(const DenseMod& f);
std::uint64_t eval(const PrimeField& F, const DenseMod& f, std::uint64_t x);
DenseMod rem(const PrimeField& F, DenseMod f, const DenseMod& g);
// Resultant with the Sylvester sign convention; f, g must be nonzero.
std::uint64_t resultant(const PrimeField& F, DenseMod f, DenseMod g);
// Monic gcd; gcd(0, 0) is the empty polynomial.
DenseMod gcd(const PrimeField& F, DenseMod f, DenseMod g);
DenseMod derivative(const PrimeField& F, const DenseMod& f);

// Newton interpolation through fixed, pairwise distinct nodes. The plan
// precomputes the inverted node differences so that many value vectors can
// be interpolated at O(n^2) multiplications each (plans longer than
// kTableLimit trade that table for recomputation to stay in linear memory).
class InterpolationPlan {
 public:
  InterpolationPlan(const PrimeField& F, std::vector<std::uint64_t> nodes);
  [[nodiscard]] std::size_t size() const { return nodes_.size(); }
  [[nodiscard]] const std::vector<std::uint64_t>& nodes() const { return nodes_; }
  // values[i] is the value at nodes[i]; returns monomial-basis coefficients.
  [[nodiscard]] DenseMod interpolate(std::span<const std::uint64_t> values) const;

 static constexpr std::size_t kTableLimit = 2048;

 private:
  [[nodiscard]] std::vector<std::uint64_t> difference_row(std::size_t j) const;

  const PrimeField* field_;
  std::vector<std::uint64_t> nodes_;
  // inv_diff_[j-1][i-j] = 1 / (nodes[i] - nodes[i-j]) for i >= j.
  std::vector<std::vector<std::uint64_t>> inv_diff_;
};

// Sparse multivariate polynomial over Z/pZ with coefficients in Montgomery
// form, sorted by monomial.
struct SparseMod {
  std::vector<std::pair<Monomial, std::uint64_t>> terms;
};

SparseMod reduce(const PrimeField& F, const std::vector<std::pair<Monomial, Integer>>& terms);
// Substitutes v = point (Montgomery form) and merges like terms.
SparseMod substitute(const PrimeField& F, const SparseMod& f, Var v, std::uint64_t point);
DenseMod to_dense(const SparseMod& f, Var v);
int degree(const SparseMod& f, Var v);

// One step of incremental Chinese remaindering on a symmetric representative.
// `value` is the current representative modulo `modulus`; `residue` is the
// plain (non-Montgomery) value modulo p; `modulus_inv` is modulus^{-1} mod p
// (plain). Returns true when the representative changed.
bool crt_step(Integer& value, std::uint64_t residue, const Integer& modulus, std::uint64_t p,
              std::uint64_t modulus_inv);

}  // namespace sangaku::modular
