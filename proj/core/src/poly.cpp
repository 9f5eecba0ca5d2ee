#include "sangaku/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sangaku/errors.hpp"
#include "sangaku/upoly.hpp"

namespace sangaku {

namespace {

void normalize(std::vector<Poly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Poly::Term& a, const Poly::Term& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Integer acc = std::move(terms[i].second);
    while (j < terms.size() && terms[j].first == terms[i].first) {
      acc += terms[j].second;
      ++j;
    }
    if (acc != 0) {
      terms[out].first = terms[i].first;
      terms[out].second = std::move(acc);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Poly::Poly(const Integer& c) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

Poly::Poly(long c) : Poly(Integer(c)) {}

Poly Poly::variable(Var v) {
  Poly p;
  p.vars_ = VarSet{v};
  p.terms_.emplace_back(Monomial::of(v, 1), Integer(1));
  return p;
}

Poly Poly::monomial(const Integer& c, Monomial m, VarSet vars) {
  Poly p;
  p.vars_ = vars;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

Poly Poly::from_terms(VarSet vars, std::vector<Term> terms) {
  if (vars.size() > kMaxPolyVars) {
    throw StructuralError("polynomials are limited to four variables");
  }
  for (const auto& [m, c] : terms) {
    for (Var v : kAllVars) {
      if (m.exponent(v) != 0 && !vars.contains(v)) {
        throw StructuralError(std::string("term uses undeclared variable ") + var_name(v));
      }
    }
  }
  normalize(terms);
  Poly p;
  p.vars_ = vars;
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

Integer Poly::constant_value() const {
  if (!is_constant()) throw StructuralError("polynomial is not constant");
  return terms_.empty() ? Integer(0) : terms_.front().second;
}

int Poly::degree(Var v) const {
  if (terms_.empty()) return -1;
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.exponent(v));
  return static_cast<int>(d);
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
  return static_cast<int>(d);
}

VarSet Poly::support() const {
  VarSet s;
  for (Var v : vars_.list()) {
    for (const auto& t : terms_) {
      if (t.first.exponent(v) != 0) {
        s.insert(v);
        break;
      }
    }
  }
  return s;
}

std::vector<Poly> Poly::coefficients(Var v) const {
  std::vector<Poly> out;
  if (terms_.empty()) return out;
  const int d = degree(v);
  out.resize(static_cast<std::size_t>(d) + 1);
  const VarSet rest = vars_.without(v);
  for (auto& c : out) c.vars_ = rest;
  // Removing one exponent field preserves the relative order of terms that
  // share that exponent, so each bucket stays sorted.
  for (const auto& [m, c] : terms_) {
    out[m.exponent(v)].terms_.emplace_back(m.without(v), c);
  }
  return out;
}

Poly Poly::leading_coefficient(Var v) const {
  if (terms_.empty()) return Poly{};
  auto cs = coefficients(v);
  return std::move(cs.back());
}

Poly Poly::from_coefficients(Var v, const std::vector<Poly>& coeffs, VarSet declared) {
  VarSet vars = declared;
  vars.insert(v);
  std::size_t n = 0;
  for (const auto& c : coeffs) {
    vars = checked_union(vars, c.vars_);
    n += c.terms_.size();
  }
  if (vars.size() > kMaxPolyVars) throw StructuralError("polynomials are limited to four variables");
  std::vector<Term> terms;
  terms.reserve(n);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Monomial vi = Monomial::of(v, static_cast<std::uint32_t>(i));
    for (const auto& [m, c] : coeffs[i].terms_) {
      if (m.exponent(v) != 0) throw StructuralError("coefficient depends on the main variable");
      terms.emplace_back(m * vi, c);
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  Poly p;
  p.vars_ = vars;
  p.terms_ = std::move(terms);
  return p;
}

Poly Poly::with_vars(VarSet extra) const {
  Poly p = *this;
  p.vars_ = checked_union(vars_, extra);
  return p;
}

Poly Poly::trimmed() const {
  Poly p = *this;
  p.vars_ = support();
  return p;
}

Poly Poly::renamed(Var from, Var to) const {
  if (from == to) return *this;
  if (degree(to) > 0) throw StructuralError("rename target already occurs");
  VarSet vars = vars_.without(from);
  if (vars_.contains(from)) vars.insert(to);
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    terms.emplace_back(m.without(from).with_exponent(to, m.exponent(from)), c);
  }
  return from_terms(vars, std::move(terms));
}

Integer Poly::integer_content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Integer Poly::max_abs_coefficient() const {
  Integer best = 0;
  for (const auto& t : terms_) {
    if (mpz_cmpabs(t.second.get_mpz_t(), best.get_mpz_t()) > 0) best = abs(t.second);
  }
  return best;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

VarSet Poly::checked_union(VarSet a, VarSet b) {
  const VarSet u = a.united(b);
  if (u.size() > kMaxPolyVars) {
    throw StructuralError("incompatible variable sets: more than four variables");
  }
  return u;
}

void Poly::add_scaled(const Poly& o, int sign) {
  vars_ = checked_union(vars_, o.vars_);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      merged.emplace_back(o.terms_[j].first, sign > 0 ? o.terms_[j].second : Integer(-o.terms_[j].second));
      ++j;
    } else {
      Integer c = std::move(terms_[i].second);
      if (sign > 0) {
        c += o.terms_[j].second;
      } else {
        c -= o.terms_[j].second;
      }
      if (c != 0) merged.emplace_back(terms_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
}

Poly& Poly::operator+=(const Poly& o) {
  add_scaled(o, +1);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  add_scaled(o, -1);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly p;
  p.vars_ = Poly::checked_union(a.vars_, b.vars_);
  if (a.terms_.empty() || b.terms_.empty()) return p;
  const Poly& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const Poly& large = a.terms_.size() <= b.terms_.size() ? b : a;
  if (const VarSet sup = a.support().united(b.support()); sup.size() == 1 && small.terms_.size() > 8) {
    // Dense convolution is much cheaper than sort-and-merge here.
    const Var v = sup.highest();
    Poly d = to_poly(to_upoly(a, v) * to_upoly(b, v), v);
    d.vars_ = p.vars_;
    return d;
  }
  if (small.terms_.size() == 1) {
    const auto& [m, c] = small.terms_.front();
    p.terms_.reserve(large.terms_.size());
    for (const auto& [lm, lc] : large.terms_) p.terms_.emplace_back(lm * m, lc * c);
    return p;
  }
  std::vector<Poly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [am, ac] : a.terms_) {
    for (const auto& [bm, bc] : b.terms_) prod.emplace_back(am * bm, ac * bc);
  }
  normalize(prod);
  p.terms_ = std::move(prod);
  return p;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Poly Poly::divided_exactly_by(const Integer& c) const {
  if (c == 0) throw StructuralError("division by zero");
  Poly p = *this;
  for (auto& t : p.terms_) {
    if (!mpz_divisible_p(t.second.get_mpz_t(), c.get_mpz_t())) {
      throw StructuralError("inexact integer division of polynomial");
    }
    mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), c.get_mpz_t());
  }
  return p;
}

Poly Poly::shifted(Monomial m, VarSet extra) const {
  Poly p = *this;
  p.vars_ = checked_union(vars_, extra);
  for (auto& t : p.terms_) t.first = t.first * m;
  return p;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || m.is_one()) {
      os << mag.get_str();
      wrote = true;
    }
    for (int i = kVarCount - 1; i >= 0; --i) {
      const Var v = static_cast<Var>(i);
      const auto e = m.exponent(v);
      if (e == 0) continue;
      if (wrote) os << '*';
      os << var_name(v);
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result(1L);
  result = result.with_vars(base.vars());
  Poly b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::string to_string(const Poly& p) { return p.to_string(); }

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Poly run() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const char* what) const {
    throw PreconditionError(std::string("polynomial syntax: ") + what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }
  // Summands are merged once at the end; adding them one by one is
  // quadratic for long expansions.
  Poly expr() {
    VarSet vars;
    std::vector<Poly::Term> terms;
    bool negate = eat('-');
    while (true) {
      const Poly t = term();
      vars = vars.united(t.vars());
      for (const auto& [m, c] : t.terms()) terms.emplace_back(m, negate ? Integer(-c) : c);
      if (eat('+')) {
        negate = false;
      } else if (eat('-')) {
        negate = true;
      } else {
        return Poly::from_terms(vars, std::move(terms));
      }
    }
  }
  Poly term() {
    Poly acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }
  Poly factor() {
    Poly base = atom();
    if (eat('^')) base = pow(base, static_cast<unsigned>(std::stoul(digits())));
    return base;
  }
  Poly atom() {
    skip();
    if (eat('(')) {
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return Poly(Integer(digits()));
    if (pos_ < s_.size()) {
      if (auto v = parse_var(s_.substr(pos_, 1))) {
        ++pos_;
        return Poly::variable(*v);
      }
    }
    fail("expected a term");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).run(); }

std::optional<Var> parse_var(std::string_view name) {
  if (name.size() != 1) return std::nullopt;
  for (Var v : kAllVars) {
    if (var_name(v) == name[0]) return v;
  }
  return std::nullopt;
}

}  // namespace sangaku
