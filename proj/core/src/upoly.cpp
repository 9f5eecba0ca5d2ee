#include "sangaku/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "sangaku/errors.hpp"
#include "sangaku/modular.hpp"
#include "sangaku/poly.hpp"

namespace sangaku {

UPoly::UPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

UPoly UPoly::from_roots(const std::vector<Rational>& roots) {
  UPoly p{1};
  for (const auto& r : roots) p = p * UPoly(std::vector<Integer>{-r.get_num(), r.get_den()});
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Integer> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return UPoly(std::move(d));
}

Integer UPoly::content() const {
  Integer g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly UPoly::primitive() const {
  if (c_.empty()) return {};
  Integer g = content();
  if (lc() < 0) g = -g;
  if (g == 1) return *this;
  std::vector<Integer> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  return UPoly(std::move(out));
}

Integer UPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc *= x;
    acc += c_[i];
  }
  return acc;
}

Rational UPoly::eval(const Rational& x) const {
  // Homogenized Horner: sum c_i num^i den^(n-i), then divide by den^n.
  if (c_.empty()) return Rational(0);
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = c_.back();
  Integer den_pow = 1;
  for (std::size_t i = c_.size() - 1; i-- > 0;) {
    den_pow *= den;
    acc *= num;
    acc += c_[i] * den_pow;
  }
  Rational r(acc, den_pow);
  r.canonicalize();
  return r;
}

int UPoly::sign_at(const Rational& x) const {
  if (c_.empty()) return 0;
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = c_.back();
  Integer den_pow = 1;
  for (std::size_t i = c_.size() - 1; i-- > 0;) {
    den_pow *= den;
    acc *= num;
    acc += c_[i] * den_pow;
  }
  return sgn(acc);
}

UPoly UPoly::taylor_shift(const Integer& c) const {
  std::vector<Integer> a = c_;
  const std::size_t n = a.size();
  if (n <= 1 || c == 0) return *this;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) a[j] += c * a[j + 1];
  }
  return UPoly(std::move(a));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Integer> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.c_.size()) out[i] += a.c_[i];
    if (i < b.c_.size()) out[i] += b.c_[i];
  }
  return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Integer> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.c_.size()) out[i] += a.c_[i];
    if (i < b.c_.size()) out[i] -= b.c_[i];
  }
  return UPoly(std::move(out));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Integer> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return UPoly(std::move(out));
}

UPoly operator*(const UPoly& a, const Integer& c) {
  std::vector<Integer> out = a.c_;
  for (auto& x : out) x *= c;
  return UPoly(std::move(out));
}

std::uint64_t UPoly::fingerprint() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  for (const auto& c : c_) mix(c.get_str(16));
  return h;
}

std::string UPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Integer mag = abs(c_[i]);
    os << (first ? (c_[i] < 0 ? "-" : "") : (c_[i] < 0 ? " - " : " + "));
    first = false;
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

UPoly to_upoly(const Poly& p, Var v) {
  if (!p.support().subset_of(VarSet{v})) {
    throw StructuralError("polynomial is not univariate in the requested variable");
  }
  std::vector<Integer> c(static_cast<std::size_t>(std::max(p.degree(v), -1) + 1));
  for (const auto& [m, coeff] : p.terms()) c[m.exponent(v)] = coeff;
  return UPoly(std::move(c));
}

Poly to_poly(const UPoly& p, Var v) {
  std::vector<Poly::Term> terms;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p[i] != 0) terms.emplace_back(Monomial::of(v, static_cast<std::uint32_t>(i)), p[i]);
  }
  return Poly::from_terms(VarSet{v}, std::move(terms));
}

std::pair<UPoly, UPoly> pseudo_divide(const UPoly& f, const UPoly& g) {
  if (g.is_zero()) throw StructuralError("pseudo-division by the zero polynomial");
  const int m = f.degree();
  const int n = g.degree();
  const Integer& lg = g.lc();
  if (m < n) return {UPoly{}, f * lg};
  std::vector<Integer> r = f.coeffs();
  std::vector<Integer> q(static_cast<std::size_t>(m - n + 1));
  for (int j = m; j >= n; --j) {
    const Integer c = r[static_cast<std::size_t>(j)];
    for (int i = m - n; i > j - n; --i) q[static_cast<std::size_t>(i)] *= lg;
    q[static_cast<std::size_t>(j - n)] = c;
    for (int i = 0; i <= j; ++i) r[static_cast<std::size_t>(i)] *= lg;
    for (int i = 0; i <= n; ++i) {
      mpz_submul(r[static_cast<std::size_t>(i + j - n)].get_mpz_t(), c.get_mpz_t(),
                 g[static_cast<std::size_t>(i)].get_mpz_t());
    }
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

std::optional<UPoly> exact_quotient(const UPoly& f, const UPoly& g) {
  if (g.is_zero()) throw StructuralError("division by the zero polynomial");
  if (f.is_zero()) return UPoly{};
  const int m = f.degree();
  const int n = g.degree();
  if (m < n) return std::nullopt;
  std::vector<Integer> r = f.coeffs();
  std::vector<Integer> q(static_cast<std::size_t>(m - n + 1));
  const Integer& lg = g.lc();
  for (int j = m; j >= n; --j) {
    Integer& top = r[static_cast<std::size_t>(j)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lg.get_mpz_t())) return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lg.get_mpz_t());
    for (int i = 0; i <= n; ++i) {
      mpz_submul(r[static_cast<std::size_t>(i + j - n)].get_mpz_t(), c.get_mpz_t(),
                 g[static_cast<std::size_t>(i)].get_mpz_t());
    }
    q[static_cast<std::size_t>(j - n)] = std::move(c);
  }
  for (int i = 0; i < n; ++i) {
    if (r[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  }
  return UPoly(std::move(q));
}

UPoly gcd(const UPoly& f, const UPoly& g) {
  if (f.is_zero() && g.is_zero()) throw StructuralError("gcd of two zero polynomials");
  if (f.is_zero()) return g.primitive();
  if (g.is_zero()) return f.primitive();
  const UPoly a = f.primitive();
  const UPoly b = g.primitive();
  if (a.degree() == 0 || b.degree() == 0) return UPoly{1};

  Integer lc_gcd;
  mpz_gcd(lc_gcd.get_mpz_t(), a.lc().get_mpz_t(), b.lc().get_mpz_t());

  int best_degree = std::min(a.degree(), b.degree()) + 1;
  std::vector<Integer> acc;
  Integer modulus = 1;
  constexpr std::size_t kPrimeBudget = 200000;
  for (std::size_t idx = 0; idx < kPrimeBudget; ++idx) {
    const std::uint64_t p = modular::word_prime(idx);
    if (mpz_fdiv_ui(a.lc().get_mpz_t(), p) == 0 || mpz_fdiv_ui(b.lc().get_mpz_t(), p) == 0) continue;
    const modular::PrimeField F(p);
    modular::DenseMod ap(a.coeffs().size());
    modular::DenseMod bp(b.coeffs().size());
    for (std::size_t i = 0; i < ap.size(); ++i) ap[i] = F.from_integer(a[i]);
    for (std::size_t i = 0; i < bp.size(); ++i) bp[i] = F.from_integer(b[i]);
    modular::DenseMod gp = modular::gcd(F, std::move(ap), std::move(bp));
    const int d = modular::degree(gp);
    if (d == 0) return UPoly{1};
    if (d > best_degree) continue;
    if (d < best_degree) {
      best_degree = d;
      acc.assign(static_cast<std::size_t>(d) + 1, Integer(0));
      modulus = 1;
    }
    const std::uint64_t scale = F.from_integer(lc_gcd);
    const std::uint64_t m_inv = F.to_plain(F.inv(F.from_integer(modulus)));
    bool changed = false;
    for (std::size_t i = 0; i < gp.size(); ++i) {
      const std::uint64_t residue = F.to_plain(F.mul(gp[i], scale));
      changed |= modular::crt_step(acc[i], residue, modulus, p, m_inv);
    }
    modulus *= static_cast<unsigned long>(p);
    if (!changed) {
      const UPoly candidate = UPoly(acc).primitive();
      if (exact_quotient(a, candidate) && exact_quotient(b, candidate)) return candidate;
    }
  }
  throw ResourceError("modular gcd did not stabilize within the prime budget");
}

UPoly squarefree_part(const UPoly& f) {
  if (f.is_zero()) throw StructuralError("squarefree part of the zero polynomial");
  const UPoly a = f.primitive();
  if (a.degree() <= 0) return UPoly{1};
  const UPoly g = gcd(a, a.derivative());
  if (g.degree() == 0) return a;
  auto q = exact_quotient(a, g);
  if (!q) throw InternalError("gcd does not divide its argument");
  return q->primitive();
}

bool is_squarefree(const UPoly& f) {
  if (f.degree() <= 0) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

}  // namespace sangaku
