#include "sangaku/exceptional.hpp"

#include "sangaku/errors.hpp"
#include "sangaku/parallel.hpp"
#include "sangaku/polyring.hpp"

namespace sangaku {

namespace {

void require_ky(const Poly& p) {
  if (!p.support().subset_of(VarSet{Var::k, Var::y})) {
    throw PreconditionError("expected a polynomial in k and y");
  }
  if (p.degree(Var::y) < 1) throw PreconditionError("expected positive degree in y");
}

std::vector<Rational> grid_points(const Rational& lo, const Rational& hi, int steps) {
  if (steps < 2) throw PreconditionError("grid needs at least 2 steps");
  if (!(lo < hi)) throw PreconditionError("grid needs lo < hi");
  std::vector<Rational> pts;
  pts.reserve(static_cast<std::size_t>(steps) + 1);
  const Rational h = (hi - lo) / steps;
  for (int i = 0; i <= steps; ++i) pts.emplace_back(lo + h * i);
  return pts;
}

GridScan brackets_from(std::vector<Rational> points, std::vector<int> signs) {
  GridScan scan{std::move(points), std::move(signs), {}, {}};
  for (std::size_t i = 0; i < scan.points.size(); ++i) {
    if (scan.signs[i] == 0) scan.zeros.push_back(scan.points[i]);
    if (i > 0 && scan.signs[i - 1] * scan.signs[i] < 0) {
      scan.brackets.push_back({scan.points[i - 1], scan.points[i]});
    }
  }
  return scan;
}

}  // namespace

Poly discriminant(const Poly& p_star, const ModularOptions& opt, ResultantBackend backend) {
  require_ky(p_star);
  ResultantRequest req{p_star, derivative(p_star, Var::y), Var::y, backend, {}, opt};
  Poly d = resultant(req);
  if (d.is_zero()) throw StructuralError("discriminant vanishes identically; P is not squarefree in y");
  return d.trimmed();
}

Rational discriminant_at(const Poly& p_star, const Rational& k0, const ModularOptions& opt) {
  require_ky(p_star);
  const int n = p_star.degree(Var::y);
  // f = c P(k0, y) with c = den^deg_k, so Res(f, f') = c^(2n-1) Delta(k0).
  const Poly f = substitute_scaled(p_star, Var::k, k0);
  if (f.degree(Var::y) < n) return Rational(0);
  ResultantRequest req{f, derivative(f, Var::y), Var::y, ResultantBackend::automatic, {}, opt};
  const Poly r = resultant(req);
  if (r.is_zero()) return Rational(0);
  const Integer c = pow(Integer(k0.get_den()), static_cast<unsigned long>(std::max(0, p_star.degree(Var::k))));
  Rational value(r.constant_value(), pow(c, static_cast<unsigned long>(2 * n - 1)));
  value.canonicalize();
  return value;
}

GridScan grid_signs(const UPoly& delta, const Rational& lo, const Rational& hi, int steps) {
  std::vector<Rational> pts = grid_points(lo, hi, steps);
  std::vector<int> signs;
  signs.reserve(pts.size());
  for (const Rational& q : pts) signs.push_back(delta.sign_at(q));
  return brackets_from(std::move(pts), std::move(signs));
}

GridScan grid_signs_pointwise(const Poly& p_star, const Rational& lo, const Rational& hi, int steps,
                              const GridOptions& opt) {
  require_ky(p_star);
  std::vector<Rational> pts = grid_points(lo, hi, steps);
  std::vector<int> signs(pts.size(), 0);
  const unsigned threads = std::max(1u, opt.threads);
  for (std::size_t start = 0; start < pts.size(); start += threads) {
    if (opt.deadline && std::chrono::steady_clock::now() > *opt.deadline) {
      throw BudgetExceeded("discriminant grid exceeded its time budget");
    }
    const std::size_t batch = std::min<std::size_t>(threads, pts.size() - start);
    const auto values = parallel_map(batch, threads, [&](std::size_t i) {
      return sign(discriminant_at(p_star, pts[start + i]));
    });
    for (std::size_t i = 0; i < batch; ++i) signs[start + i] = values[i];
    if (opt.progress) opt.progress(start + batch, pts.size());
  }
  return brackets_from(std::move(pts), std::move(signs));
}

ExceptionalReport exceptional_candidates(const Poly& delta, const Rational& bound) {
  if (delta.is_zero()) throw PreconditionError("discriminant is zero");
  if (!delta.support().subset_of(VarSet{Var::k})) throw PreconditionError("expected a polynomial in k");
  if (bound < 1) throw PreconditionError("search bound must be at least 1");
  ExceptionalReport rep{delta, UPoly{1}, bound, {}, std::nullopt};
  const UPoly d = to_upoly(delta, Var::k);
  if (d.degree() < 1) return rep;
  rep.delta0 = squarefree_part(d);
  const Rational one(1);
  if (rep.delta0.sign_at(one) == 0) rep.roots.push_back({one, one, rep.delta0.fingerprint()});
  if (bound > one) {
    for (const IsolatingInterval& iv : isolate_roots(rep.delta0, one, bound)) {
      rep.roots.push_back(refine_root(iv, rep.delta0, Rational(1, 1024)));
    }
  }
  return rep;
}

}  // namespace sangaku
