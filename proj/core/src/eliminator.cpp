#include "sangaku/eliminator.hpp"

#include <chrono>
#include <sstream>

#include "sangaku/errors.hpp"
#include "sangaku/oracle.hpp"
#include "sangaku/polyring.hpp"

namespace sangaku {

namespace {

void say(const EliminationOptions& opt, const std::string& msg) {
  if (opt.log) opt.log(msg);
}

std::string shape(const Poly& p) {
  std::ostringstream os;
  os << p.term_count() << " terms, degrees";
  for (Var v : p.support().list()) os << ' ' << var_name(v) << '=' << p.degree(v);
  os << ", total " << p.total_degree();
  return os.str();
}

Poly checked_resultant(const Poly& f, const Poly& g, Var var, const EliminationOptions& opt, const char* name) {
  const auto start = std::chrono::steady_clock::now();
  ResultantRequest req{f, g, var, opt.backend, {}, opt.modular};
  Poly r = resultant(req);
  if (r.is_zero()) {
    say(opt, std::string(name) + " vanished identically; dividing out the common factor");
    const Poly c = gcd_poly(f, g, var);
    req.f = exact_divide(f, c);
    req.g = exact_divide(g, c);
    if (req.f.degree(var) < 1 && req.g.degree(var) < 1) {
      throw StructuralError(std::string(name) + ": inputs coincide after removing their common factor");
    }
    r = resultant(req);
    if (r.is_zero()) throw StructuralError(std::string(name) + " vanishes identically");
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream os;
  os << name << ": " << shape(r) << " (" << secs << " s)";
  say(opt, os.str());
  return r;
}

}  // namespace

CriticalSystem build_system() {
  const Poly k = Poly::variable(Var::k);
  const Poly x = Poly::variable(Var::x);
  const Poly w = Poly::variable(Var::w);
  const Poly v = Poly::variable(Var::v);
  const Poly y = Poly::variable(Var::y);
  const Poly one(1L);
  const Poly u = k * Poly(2L) - x - w;
  const Poly d = k * k - x - v;
  CriticalSystem sys;
  sys.e1 = x * w * v - d * (w * v + u * (w + one - x));
  sys.e2 = w * w - x * Poly(2L) + x * x;
  sys.e3 = v * v - pow(k, 4) + u * u;
  sys.e4 = y - x * x - d * d;
  return sys;
}

Poly reduce_eliminant(const Poly& raw, bool remove_k_content) {
  if (raw.degree(Var::y) < 1) throw StructuralError("eliminant does not involve y");
  if (remove_k_content) return squarefree_part(raw, Var::y);
  // Keep polynomial content in k; drop only repeated y-factors and the
  // integer content.
  Poly sf = raw;
  if (!certify_squarefree(raw, Var::y)) {
    sf = exact_divide(raw, gcd_full(raw, derivative(raw, Var::y)));
  }
  return normalize_sign(sf.divided_exactly_by(sf.integer_content()));
}

Eliminant eliminate(const CriticalSystem& sys, const EliminationOptions& opt) {
  Eliminant el;
  const Poly a1 = checked_resultant(sys.e1, sys.e2, Var::w, opt, "A1 = Res_w(E1, E2)");
  const Poly a2 = checked_resultant(sys.e3, sys.e2, Var::w, opt, "A2 = Res_w(E3, E2)");
  el.p_kx = primitive_part(checked_resultant(a1, a2, Var::v, opt, "Res_v(A1, A2)"), Var::x).trimmed();
  say(opt, "p(k, x): " + shape(el.p_kx));
  el.h_kxy = primitive_part(checked_resultant(sys.e4, a2, Var::v, opt, "Res_v(E4, A2)"), Var::x).trimmed();
  say(opt, "h(k, x, y): " + shape(el.h_kxy));
  el.raw = checked_resultant(el.p_kx, el.h_kxy, Var::x, opt, "raw = Res_x(p, h)").trimmed();
  el.reduced = reduce_eliminant(el.raw, opt.remove_k_content).trimmed();
  say(opt, "P*(k, y): " + shape(el.reduced));
  return el;
}

ToySystem build_toy_system() {
  const Poly k = Poly::variable(Var::k);
  const Poly x = Poly::variable(Var::x);
  const Poly y = Poly::variable(Var::y);
  return {x - (k - x), y - x * x - (k - x) * (k - x)};
}

Poly eliminate_toy(const ToySystem& sys, ResultantBackend backend) {
  const Poly raw = resultant(sys.e1, sys.e4, Var::x, backend);
  return reduce_eliminant(raw, true).trimmed();
}

std::vector<BranchSample> verify_branch(const Poly& reduced, const std::vector<ExtFloat>& samples,
                                        int precision_bits, double derivative_tolerance) {
  std::vector<BranchSample> out;
  out.reserve(samples.size());
  const Poly dy = derivative(reduced, Var::y);
  const mpfr_prec_t p = precision_bits;
  const ExtFloat tolerance =
      derivative_tolerance > 0 ? ExtFloat(derivative_tolerance, p) : exp2_int(-precision_bits / 2, p);
  for (const ExtFloat& k_in : samples) {
    const ExtFloat k = k_in.rounded(p);
    const ExtFloat lambda = lambda_of_k(k, precision_bits);
    const Assignment<ExtFloat> at{{Var::k, k}, {Var::y, lambda}};
    const FloatEvaluation f = evaluate(reduced, at, p);
    const FloatEvaluation d = evaluate(dy, at, p);
    BranchSample s{k, lambda, abs(f.value) / f.magnitude, abs(d.value) / d.magnitude, false};
    s.derivative_small = s.derivative < tolerance;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace sangaku
