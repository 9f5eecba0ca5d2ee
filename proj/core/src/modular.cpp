#include "sangaku/modular.hpp"

#include <algorithm>
#include <mutex>
#include <utility>

#include "sangaku/errors.hpp"

namespace sangaku::modular {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod_plain(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod_plain(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1u) r = mulmod_plain(r, a, m);
    a = mulmod_plain(a, a, m);
    e >>= 1u;
  }
  return r;
}

}  // namespace

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 3 || (p & 1u) == 0 || p >= (std::uint64_t{1} << 62)) {
    throw StructuralError("PrimeField requires an odd modulus below 2^62");
  }
  std::uint64_t inv = p;  // correct to 3 bits for odd p
  for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
  neg_inv_ = ~inv + 1;
  const std::uint64_t r = static_cast<std::uint64_t>((static_cast<u128>(1) << 64) % p);
  one_ = r;
  r2_ = static_cast<std::uint64_t>(static_cast<u128>(r) * r % p);
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = one_;
  while (e > 0) {
    if (e & 1u) r = mul(r, a);
    a = mul(a, a);
    e >>= 1u;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a == 0) throw StructuralError("inverse of zero modulo p");
  // Extended Euclid on the plain value; p < 2^62 keeps the cofactors in int64.
  std::int64_t r0 = static_cast<std::int64_t>(p_);
  std::int64_t r1 = static_cast<std::int64_t>(to_plain(a));
  std::int64_t s0 = 0;
  std::int64_t s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  return from_signed(s0);
}

std::uint64_t PrimeField::from_plain(std::uint64_t a) const { return mul(a % p_, r2_); }

std::uint64_t PrimeField::to_plain(std::uint64_t a) const { return redc(a); }

std::uint64_t PrimeField::from_signed(std::int64_t a) const {
  if (a >= 0) return from_plain(static_cast<std::uint64_t>(a));
  const std::uint64_t mag = static_cast<std::uint64_t>(-(a + 1)) + 1;
  return neg(from_plain(mag % p_));
}

std::uint64_t PrimeField::from_integer(const Integer& z) const {
  return from_plain(mpz_fdiv_ui(z.get_mpz_t(), p_));
}

void PrimeField::batch_inverse(std::span<std::uint64_t> values) const {
  if (values.empty()) return;
  std::vector<std::uint64_t> prefix(values.size());
  std::uint64_t acc = one_;
  for (std::size_t i = 0; i < values.size(); ++i) {
    prefix[i] = acc;
    acc = mul(acc, values[i]);
  }
  std::uint64_t inv_acc = inv(acc);
  for (std::size_t i = values.size(); i-- > 0;) {
    const std::uint64_t vi = values[i];
    values[i] = mul(inv_acc, prefix[i]);
    inv_acc = mul(inv_acc, vi);
  }
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1u;
    ++s;
  }
  // Deterministic witness set for all 64-bit n.
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    std::uint64_t x = powmod_plain(a, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_plain(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t word_prime(std::size_t index) {
  static std::mutex mutex;
  static std::vector<std::uint64_t> cache;
  std::lock_guard<std::mutex> lock(mutex);
  std::uint64_t candidate = cache.empty() ? (std::uint64_t{1} << 62) - 1 : cache.back() - 2;
  while (cache.size() <= index) {
    while (!is_prime(candidate)) candidate -= 2;
    cache.push_back(candidate);
    candidate -= 2;
  }
  return cache[index];
}

void trim(DenseMod& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const DenseMod& f) { return static_cast<int>(f.size()) - 1; }

std::uint64_t eval(const PrimeField& F, const DenseMod& f, std::uint64_t x) {
  std::uint64_t acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

DenseMod rem(const PrimeField& F, DenseMod f, const DenseMod& g) {
  const int n = degree(g);
  if (n < 0) throw StructuralError("polynomial remainder by zero modulo p");
  const std::uint64_t lc_inv = F.inv(g.back());
  for (int i = degree(f); i >= n; --i) {
    const std::uint64_t c = F.mul(f[static_cast<std::size_t>(i)], lc_inv);
    if (c != 0) {
      const std::size_t off = static_cast<std::size_t>(i - n);
      for (int j = 0; j <= n; ++j) {
        f[off + static_cast<std::size_t>(j)] =
            F.sub(f[off + static_cast<std::size_t>(j)], F.mul(c, g[static_cast<std::size_t>(j)]));
      }
    }
    f.pop_back();
  }
  trim(f);
  return f;
}

std::uint64_t resultant(const PrimeField& F, DenseMod f, DenseMod g) {
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) return 0;
  std::uint64_t result = F.one();
  int m = degree(f);
  int n = degree(g);
  if (m < n) {
    std::swap(f, g);
    std::swap(m, n);
    if ((m & n & 1) != 0) result = F.neg(result);
  }
  for (;;) {
    if (n == 0) return F.mul(result, F.pow(g[0], static_cast<std::uint64_t>(m)));
    DenseMod r = rem(F, std::move(f), g);
    if (r.empty()) return 0;
    const int k = degree(r);
    if ((m & n & 1) != 0) result = F.neg(result);
    result = F.mul(result, F.pow(g.back(), static_cast<std::uint64_t>(m - k)));
    f = std::move(g);
    g = std::move(r);
    m = n;
    n = k;
  }
}

DenseMod gcd(const PrimeField& F, DenseMod f, DenseMod g) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    DenseMod r = rem(F, std::move(f), g);
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.empty()) {
    const std::uint64_t inv = F.inv(f.back());
    for (auto& c : f) c = F.mul(c, inv);
  }
  return f;
}

DenseMod derivative(const PrimeField& F, const DenseMod& f) {
  DenseMod d;
  if (f.size() <= 1) return d;
  d.resize(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = F.mul(f[i], F.from_plain(i));
  trim(d);
  return d;
}

InterpolationPlan::InterpolationPlan(const PrimeField& F, std::vector<std::uint64_t> nodes)
    : field_(&F), nodes_(std::move(nodes)) {
  const std::size_t n = nodes_.size();
  // The table is quadratic in size; long plans recompute rows on demand.
  if (n > kTableLimit) return;
  inv_diff_.resize(n > 0 ? n - 1 : 0);
  for (std::size_t j = 1; j < n; ++j) inv_diff_[j - 1] = difference_row(j);
}

std::vector<std::uint64_t> InterpolationPlan::difference_row(std::size_t j) const {
  const PrimeField& F = *field_;
  const std::size_t n = nodes_.size();
  std::vector<std::uint64_t> row(n - j);
  for (std::size_t i = j; i < n; ++i) row[i - j] = F.sub(nodes_[i], nodes_[i - j]);
  F.batch_inverse(row);
  return row;
}

DenseMod InterpolationPlan::interpolate(std::span<const std::uint64_t> values) const {
  const PrimeField& F = *field_;
  const std::size_t n = nodes_.size();
  if (values.size() != n) throw StructuralError("interpolation value count mismatch");
  // Divided differences in place.
  DenseMod c(values.begin(), values.end());
  std::vector<std::uint64_t> scratch;
  for (std::size_t j = 1; j < n; ++j) {
    if (inv_diff_.empty()) scratch = difference_row(j);
    const auto& row = inv_diff_.empty() ? scratch : inv_diff_[j - 1];
    for (std::size_t i = n - 1; i >= j; --i) {
      c[i] = F.mul(F.sub(c[i], c[i - 1]), row[i - j]);
    }
  }
  // Newton form to monomial basis, Horner from the top.
  DenseMod out(n, 0);
  if (n == 0) return out;
  out[0] = c[n - 1];
  std::size_t len = 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    // out = out * (X - nodes[i]) + c[i]
    const std::uint64_t xi = nodes_[i];
    out[len] = out[len - 1];
    for (std::size_t j = len - 1; j > 0; --j) out[j] = F.sub(out[j - 1], F.mul(xi, out[j]));
    out[0] = F.sub(c[i], F.mul(xi, out[0]));
    ++len;
  }
  trim(out);
  return out;
}

SparseMod reduce(const PrimeField& F, const std::vector<std::pair<Monomial, Integer>>& terms) {
  SparseMod out;
  out.terms.reserve(terms.size());
  for (const auto& [m, c] : terms) {
    const std::uint64_t r = F.from_integer(c);
    if (r != 0) out.terms.emplace_back(m, r);
  }
  return out;
}

SparseMod substitute(const PrimeField& F, const SparseMod& f, Var v, std::uint64_t point) {
  int d = 0;
  for (const auto& t : f.terms) d = std::max<int>(d, static_cast<int>(t.first.exponent(v)));
  std::vector<std::uint64_t> powers(static_cast<std::size_t>(d) + 1);
  powers[0] = F.one();
  for (std::size_t i = 1; i < powers.size(); ++i) powers[i] = F.mul(powers[i - 1], point);
  std::vector<std::pair<Monomial, std::uint64_t>> terms;
  terms.reserve(f.terms.size());
  for (const auto& [m, c] : f.terms) {
    terms.emplace_back(m.without(v), F.mul(c, powers[m.exponent(v)]));
  }
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseMod out;
  out.terms.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::uint64_t acc = terms[i].second;
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].first == terms[i].first) acc = F.add(acc, terms[j++].second);
    if (acc != 0) out.terms.emplace_back(terms[i].first, acc);
    i = j;
  }
  return out;
}

DenseMod to_dense(const SparseMod& f, Var v) {
  DenseMod out;
  for (const auto& [m, c] : f.terms) {
    const std::size_t e = m.exponent(v);
    if (out.size() <= e) out.resize(e + 1, 0);
    out[e] = c;
  }
  trim(out);
  return out;
}

int degree(const SparseMod& f, Var v) {
  int d = -1;
  for (const auto& t : f.terms) d = std::max<int>(d, static_cast<int>(t.first.exponent(v)));
  return d;
}

bool crt_step(Integer& value, std::uint64_t residue, const Integer& modulus, std::uint64_t p,
              std::uint64_t modulus_inv) {
  const std::uint64_t current = mpz_fdiv_ui(value.get_mpz_t(), p);
  if (current == residue) return false;
  const std::uint64_t diff = residue >= current ? residue - current : residue + p - current;
  std::uint64_t t = mulmod_plain(diff, modulus_inv, p);
  if (t > p / 2) {
    const Integer neg_t(static_cast<unsigned long>(p - t));
    value -= modulus * neg_t;
  } else {
    value += modulus * static_cast<unsigned long>(t);
  }
  return true;
}

}  // namespace sangaku::modular
