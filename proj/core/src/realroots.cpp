#include "sangaku/realroots.hpp"

#include "sangaku/errors.hpp"

namespace sangaku {

namespace {

void require_squarefree(const UPoly& f) {
  if (f.is_zero()) throw StructuralError("real roots of the zero polynomial");
  if (!is_squarefree(f)) {
    throw StructuralError("Sturm counting needs a squarefree polynomial; apply squarefree_part first");
  }
}

int variations(const std::vector<UPoly>& seq, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const UPoly& s : seq) {
    const int sg = s.sign_at(x);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++count;
    last = sg;
  }
  return count;
}

void bisect(const UPoly& f, const std::vector<UPoly>& seq, const Rational& a, const Rational& b, int count,
            std::vector<IsolatingInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({a, b, f.fingerprint()});
    return;
  }
  const Rational m = (a + b) / 2;
  const int left = variations(seq, a) - variations(seq, m);
  bisect(f, seq, a, m, left, out);
  bisect(f, seq, m, b, count - left, out);
}

}  // namespace

std::vector<UPoly> sturm_sequence(const UPoly& f) {
  std::vector<UPoly> seq{f, f.derivative()};
  while (seq.back().degree() > 0) {
    const UPoly& a = seq[seq.size() - 2];
    const UPoly& b = seq.back();
    auto [q, r] = pseudo_divide(a, b);
    if (r.is_zero()) break;
    // lc(b)^e a = q b + r with e = deg a - deg b + 1; the next element is
    // -rem(a, b) up to a positive factor.
    const int e = a.degree() - b.degree() + 1;
    const bool flip = b.lc() > 0 || e % 2 == 0;
    const Integer c = r.content();
    UPoly next = r * Integer(flip ? -1 : 1);
    std::vector<Integer> coeffs = next.coeffs();
    for (auto& x : coeffs) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    seq.emplace_back(std::move(coeffs));
  }
  return seq;
}

int sturm_count(const std::vector<UPoly>& seq, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw PreconditionError("sturm_count needs lo < hi");
  return variations(seq, lo) - variations(seq, hi);
}

int sturm_count(const UPoly& f, const Rational& lo, const Rational& hi) {
  require_squarefree(f);
  if (f.degree() == 0) return 0;
  return sturm_count(sturm_sequence(f), lo, hi);
}

std::vector<IsolatingInterval> isolate_roots(const UPoly& f, const Rational& lo, const Rational& hi) {
  require_squarefree(f);
  std::vector<IsolatingInterval> out;
  if (f.degree() == 0) return out;
  if (!(lo < hi)) throw PreconditionError("isolate_roots needs lo < hi");
  const auto seq = sturm_sequence(f);
  bisect(f, seq, lo, hi, sturm_count(seq, lo, hi), out);
  return out;
}

IsolatingInterval refine_root(const IsolatingInterval& iv, const UPoly& f, const Rational& target_width) {
  if (target_width <= 0) throw PreconditionError("target width must be positive");
  IsolatingInterval cur = iv;
  const auto pin = [&](const Rational& root) {
    Rational lo = root - target_width;
    if (lo < cur.lo) lo = cur.lo;
    return IsolatingInterval{lo, root, cur.polynomial_id};
  };
  int sign_hi = f.sign_at(cur.hi);
  if (sign_hi == 0) return pin(cur.hi);
  while (cur.width() > target_width) {
    const Rational m = cur.midpoint();
    const int sm = f.sign_at(m);
    if (sm == 0) return pin(m);
    if (sm != sign_hi) {
      cur.lo = m;
    } else {
      cur.hi = m;
      sign_hi = sm;
    }
  }
  return cur;
}

Rational root_bound(const UPoly& f) {
  if (f.degree() < 1) return Rational(1);
  Integer best = 0;
  for (int i = 0; i < f.degree(); ++i) {
    const Integer a = abs(f[static_cast<std::size_t>(i)]);
    if (a > best) best = a;
  }
  Rational b(best, abs(f.lc()));
  b.canonicalize();
  return b + 1;
}

}  // namespace sangaku
