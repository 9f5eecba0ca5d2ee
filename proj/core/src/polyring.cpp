#include "sangaku/polyring.hpp"

#include <algorithm>
#include <map>

#include "sangaku/errors.hpp"
#include "sangaku/modular.hpp"
#include "sangaku/upoly.hpp"

namespace sangaku {

namespace {

using Dense = std::vector<Poly>;

void trim(Dense& d) {
  while (!d.empty() && d.back().is_zero()) d.pop_back();
}

Poly rebuild(Var v, Dense coeffs, VarSet declared) {
  trim(coeffs);
  return Poly::from_coefficients(v, coeffs, declared);
}

// Power table base^0 .. base^n.
template <typename T>
std::vector<T> powers(const T& base, int n, const T& one) {
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)) + 1);
  out.push_back(one);
  for (int i = 1; i <= n; ++i) out.push_back(out.back() * base);
  return out;
}

}  // namespace

PseudoDivision pseudo_divide(const Poly& f, const Poly& g, Var v) {
  if (g.is_zero()) throw StructuralError("pseudo-division by the zero polynomial");
  const VarSet declared = f.vars().united(g.vars());
  const int m = f.degree(v);
  const int n = g.degree(v);
  const Poly lg = g.leading_coefficient(v);
  if (f.is_zero()) return {Poly{}.with_vars(declared), Poly{}.with_vars(declared)};
  if (m < n) return {Poly{}.with_vars(declared), (f * lg).with_vars(declared)};

  Dense r = f.coefficients(v);
  const Dense gc = g.coefficients(v);
  Dense q(static_cast<std::size_t>(m - n + 1));
  for (int j = m; j >= n; --j) {
    const Poly c = r[static_cast<std::size_t>(j)];
    for (int i = m - n; i > j - n; --i) q[static_cast<std::size_t>(i)] *= lg;
    q[static_cast<std::size_t>(j - n)] = c;
    for (int i = 0; i <= j; ++i) r[static_cast<std::size_t>(i)] *= lg;
    if (!c.is_zero()) {
      for (int i = 0; i <= n; ++i) {
        r[static_cast<std::size_t>(i + j - n)] -= c * gc[static_cast<std::size_t>(i)];
      }
    }
  }
  r.resize(static_cast<std::size_t>(n));
  return {rebuild(v, std::move(q), declared), rebuild(v, std::move(r), declared)};
}

Poly pseudo_remainder(const Poly& f, const Poly& g, Var v) { return pseudo_divide(f, g, v).remainder; }

std::optional<Poly> try_exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw StructuralError("division by the zero polynomial");
  const VarSet declared = a.vars().united(b.vars());
  if (a.is_zero()) return Poly{}.with_vars(declared);
  if (b.is_constant()) {
    const Integer c = b.constant_value();
    for (const auto& t : a.terms()) {
      if (!mpz_divisible_p(t.second.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
    }
    return a.divided_exactly_by(c).with_vars(declared);
  }
  const VarSet sup = a.support().united(b.support());
  const Var v = sup.highest();
  if (sup.size() == 1) {
    auto q = exact_quotient(to_upoly(a, v), to_upoly(b, v));
    if (!q) return std::nullopt;
    return to_poly(*q, v).with_vars(declared);
  }
  const int m = a.degree(v);
  const int n = b.degree(v);
  if (n > m) return std::nullopt;
  Dense r = a.coefficients(v);
  if (n == 0) {
    for (auto& c : r) {
      if (c.is_zero()) continue;
      auto q = try_exact_divide(c, b);
      if (!q) return std::nullopt;
      c = std::move(*q);
    }
    return rebuild(v, std::move(r), declared);
  }
  const Dense bc = b.coefficients(v);
  Dense q(static_cast<std::size_t>(m - n + 1));
  for (int j = m; j >= n; --j) {
    const Poly& top = r[static_cast<std::size_t>(j)];
    if (top.is_zero()) continue;
    auto c = try_exact_divide(top, bc[static_cast<std::size_t>(n)]);
    if (!c) return std::nullopt;
    for (int i = 0; i <= n; ++i) {
      if (bc[static_cast<std::size_t>(i)].is_zero()) continue;
      r[static_cast<std::size_t>(i + j - n)] -= *c * bc[static_cast<std::size_t>(i)];
    }
    q[static_cast<std::size_t>(j - n)] = std::move(*c);
  }
  for (int i = 0; i < n; ++i) {
    if (!r[static_cast<std::size_t>(i)].is_zero()) return std::nullopt;
  }
  return rebuild(v, std::move(q), declared);
}

Poly exact_divide(const Poly& a, const Poly& b) {
  auto q = try_exact_divide(a, b);
  if (!q) throw StructuralError("polynomial division is not exact");
  return std::move(*q);
}

Poly normalize_sign(const Poly& f) {
  if (!f.is_zero() && f.leading_term().second < 0) return -f;
  return f;
}

ContentPrimitive content_primitive(const Poly& f, Var v) {
  if (f.is_zero()) throw StructuralError("content of the zero polynomial is undefined");
  Poly content;
  for (const auto& c : f.coefficients(v)) {
    if (c.is_zero()) continue;
    content = gcd_full(content, c);
    if (content.is_constant() && content.constant_value() == 1) break;
  }
  Poly primitive = exact_divide(f, content);
  if (primitive.leading_term().second < 0) {
    primitive = -primitive;
    content = -content;
  }
  return {content.with_vars(f.vars().without(v)), primitive.with_vars(f.vars())};
}

Poly primitive_part(const Poly& f, Var v) { return content_primitive(f, v).primitive; }

Poly derivative(const Poly& f, Var v) {
  std::vector<Poly::Term> terms;
  terms.reserve(f.term_count());
  for (const auto& [m, c] : f.terms()) {
    const auto e = m.exponent(v);
    if (e == 0) continue;
    terms.emplace_back(m.with_exponent(v, e - 1), c * static_cast<unsigned long>(e));
  }
  return Poly::from_terms(f.vars(), std::move(terms));
}

Poly gcd_full(const Poly& a, const Poly& b) {
  const VarSet declared = a.vars().united(b.vars());
  if (a.is_zero()) return normalize_sign(b).with_vars(declared);
  if (b.is_zero()) return normalize_sign(a).with_vars(declared);
  if (a.is_constant() || b.is_constant()) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.integer_content().get_mpz_t(), b.integer_content().get_mpz_t());
    return Poly(g).with_vars(declared);
  }
  const VarSet sup = a.support().united(b.support());
  const Var v = sup.highest();
  if (sup.size() == 1) {
    const UPoly ua = to_upoly(a, v);
    const UPoly ub = to_upoly(b, v);
    Integer c;
    mpz_gcd(c.get_mpz_t(), ua.content().get_mpz_t(), ub.content().get_mpz_t());
    return (to_poly(gcd(ua, ub), v) * c).with_vars(declared);
  }
  const auto [ca, pa] = content_primitive(a, v);
  const auto [cb, pb] = content_primitive(b, v);
  const Poly c = gcd_full(ca, cb);
  Poly g(1L);
  if (pa.degree(v) > 0 && pb.degree(v) > 0) {
    // Primitive PRS.
    Poly f0 = pa;
    Poly f1 = pb;
    if (f0.degree(v) < f1.degree(v)) std::swap(f0, f1);
    for (;;) {
      const Poly r = pseudo_remainder(f0, f1, v);
      if (r.is_zero()) {
        g = primitive_part(f1, v);
        break;
      }
      if (r.degree(v) == 0) break;
      f0 = std::move(f1);
      f1 = primitive_part(r, v);
    }
  }
  return normalize_sign(c * g).with_vars(declared);
}

Poly gcd_poly(const Poly& f, const Poly& g, Var v) {
  if (f.is_zero() && g.is_zero()) throw StructuralError("gcd of two zero polynomials");
  const VarSet declared = f.vars().united(g.vars());
  const Poly full = gcd_full(f, g);
  if (full.degree(v) <= 0) return Poly(1L).with_vars(declared);
  return primitive_part(full, v).with_vars(declared);
}

bool certify_squarefree(const Poly& f, Var v, int attempts) {
  const int d = f.degree(v);
  if (d <= 1) return true;
  const auto others = f.support().without(v).list();
  for (int attempt = 0; attempt < attempts; ++attempt) {
    const modular::PrimeField F(modular::word_prime(static_cast<std::size_t>(attempt)));
    modular::SparseMod fm = modular::reduce(F, f.terms());
    std::uint64_t point = 1000003ULL * static_cast<std::uint64_t>(attempt + 1) + 17;
    for (Var o : others) {
      fm = modular::substitute(F, fm, o, F.from_plain(point));
      point = point * 6364136223846793005ULL + 1442695040888963407ULL;
      point >>= 3;
    }
    modular::DenseMod dense = modular::to_dense(fm, v);
    if (modular::degree(dense) != d) continue;
    const auto g = modular::gcd(F, dense, modular::derivative(F, dense));
    if (modular::degree(g) == 0) return true;
  }
  return false;
}

Poly squarefree_part(const Poly& f, Var v) {
  if (f.is_zero()) throw StructuralError("squarefree part of the zero polynomial");
  const Poly pf = primitive_part(f, v);
  if (pf.degree(v) <= 0) return Poly(1L).with_vars(f.vars());
  if (certify_squarefree(pf, v)) return pf;
  const Poly g = gcd_poly(pf, derivative(pf, v), v);
  if (g.degree(v) <= 0) return pf;
  return primitive_part(exact_divide(pf, g), v);
}

Poly substitute(const Poly& f, Var v, const Integer& value) {
  const auto pw = powers<Integer>(value, std::max(f.degree(v), 0), Integer(1));
  std::vector<Poly::Term> terms;
  terms.reserve(f.term_count());
  for (const auto& [m, c] : f.terms()) terms.emplace_back(m.without(v), c * pw[m.exponent(v)]);
  return Poly::from_terms(f.vars().without(v), std::move(terms));
}

Poly substitute_scaled(const Poly& f, Var v, const Rational& value) {
  const int d = std::max(f.degree(v), 0);
  const auto num_pw = powers<Integer>(value.get_num(), d, Integer(1));
  const auto den_pw = powers<Integer>(value.get_den(), d, Integer(1));
  std::vector<Poly::Term> terms;
  terms.reserve(f.term_count());
  for (const auto& [m, c] : f.terms()) {
    const auto e = m.exponent(v);
    terms.emplace_back(m.without(v), c * num_pw[e] * den_pw[static_cast<std::size_t>(d) - e]);
  }
  return Poly::from_terms(f.vars().without(v), std::move(terms));
}

Poly shift_variable(const Poly& f, Var v, const Integer& shift) {
  if (f.degree(v) <= 0 || shift == 0) return f;
  Dense a = f.coefficients(v);
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) {
      if (!a[j + 1].is_zero()) a[j] += a[j + 1] * shift;
    }
  }
  return rebuild(v, std::move(a), f.vars());
}

Rational evaluate(const Poly& f, const Assignment<Rational>& at) {
  std::map<int, std::vector<Rational>> tables;
  for (Var v : f.support().list()) {
    auto it = std::find_if(at.begin(), at.end(), [v](const auto& p) { return p.first == v; });
    if (it == at.end()) throw StructuralError(std::string("no value assigned to variable ") + var_name(v));
    tables[index_of(v)] = powers<Rational>(it->second, f.degree(v), Rational(1));
  }
  Rational sum = 0;
  for (const auto& [m, c] : f.terms()) {
    Rational term(c);
    for (const auto& [idx, table] : tables) term *= table[m.exponent(static_cast<Var>(idx))];
    sum += term;
  }
  return sum;
}

FloatEvaluation evaluate(const Poly& f, const Assignment<ExtFloat>& at, mpfr_prec_t precision) {
  std::map<int, std::pair<std::vector<ExtFloat>, std::vector<ExtFloat>>> tables;
  const ExtFloat one(1L, precision);
  for (Var v : f.support().list()) {
    auto it = std::find_if(at.begin(), at.end(), [v](const auto& p) { return p.first == v; });
    if (it == at.end()) throw StructuralError(std::string("no value assigned to variable ") + var_name(v));
    const ExtFloat x = it->second.rounded(precision);
    tables.emplace(index_of(v), std::make_pair(powers<ExtFloat>(x, f.degree(v), one),
                                               powers<ExtFloat>(abs(x), f.degree(v), one)));
  }
  ExtFloat value(precision);
  ExtFloat magnitude(precision);
  for (const auto& [m, c] : f.terms()) {
    ExtFloat term(c, precision);
    ExtFloat mag = abs(term);
    for (const auto& [idx, table] : tables) {
      const auto e = m.exponent(static_cast<Var>(idx));
      if (e == 0) continue;
      term *= table.first[e];
      mag *= table.second[e];
    }
    value += term;
    magnitude += mag;
  }
  return {value, magnitude};
}

}  // namespace sangaku
