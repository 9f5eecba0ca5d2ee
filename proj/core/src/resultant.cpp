#include "sangaku/resultant.hpp"

#include <algorithm>
#include <map>

#include "sangaku/errors.hpp"
#include "sangaku/modular.hpp"
#include "sangaku/parallel.hpp"
#include "sangaku/polyring.hpp"

namespace sangaku {

namespace {

void check_inputs(const Poly& f, const Poly& g, Var var) {
  if (f.is_zero() || g.is_zero()) throw StructuralError("resultant of a zero polynomial");
  if (f.degree(var) < 1 && g.degree(var) < 1) {
    throw StructuralError(std::string("resultant needs a positive degree in ") + var_name(var));
  }
}

VarSet result_vars(const Poly& f, const Poly& g, Var var) { return f.vars().united(g.vars()).without(var); }

Poly with_result_vars(Poly r, VarSet vars) { return r.with_vars(vars); }

}  // namespace

std::string_view backend_name(ResultantBackend b) {
  switch (b) {
    case ResultantBackend::sylvester: return "sylvester";
    case ResultantBackend::prs: return "prs";
    case ResultantBackend::modular: return "modular";
    case ResultantBackend::automatic: return "auto";
  }
  return "auto";
}

std::optional<ResultantBackend> parse_backend(std::string_view name) {
  if (name == "sylvester") return ResultantBackend::sylvester;
  if (name == "prs") return ResultantBackend::prs;
  if (name == "modular") return ResultantBackend::modular;
  if (name == "auto") return ResultantBackend::automatic;
  return std::nullopt;
}

int sylvester_dimension(const Poly& f, const Poly& g, Var var) {
  return std::max(f.degree(var), 0) + std::max(g.degree(var), 0);
}

PolyMatrix sylvester_matrix(const Poly& f, const Poly& g, Var var) {
  check_inputs(f, g, var);
  const int m = f.degree(var);
  const int n = g.degree(var);
  const auto size = static_cast<std::size_t>(m + n);
  const VarSet rest = result_vars(f, g, var);
  const auto fc = f.coefficients(var);
  const auto gc = g.coefficients(var);
  PolyMatrix M(size, std::vector<Poly>(size, Poly{}.with_vars(rest)));
  auto fill = [&](std::size_t row, std::size_t shift, const std::vector<Poly>& c) {
    const std::size_t d = c.size() - 1;
    for (std::size_t i = 0; i <= d; ++i) M[row][shift + i] = c[d - i].with_vars(rest);
  };
  for (int i = 0; i < n; ++i) fill(static_cast<std::size_t>(i), static_cast<std::size_t>(i), fc);
  for (int i = 0; i < m; ++i) fill(static_cast<std::size_t>(n + i), static_cast<std::size_t>(i), gc);
  return M;
}

Poly determinant(PolyMatrix M) {
  const std::size_t n = M.size();
  if (n == 0) return Poly(1L);
  bool negate = false;
  Poly prev(1L);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && M[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return Poly{}.with_vars(M[0][0].vars());
      std::swap(M[k], M[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = M[k][k] * M[i][j] - M[i][k] * M[k][j];
        M[i][j] = exact_divide(num, prev);
      }
      M[i][k] = Poly{};
    }
    prev = M[k][k];
  }
  Poly d = std::move(M[n - 1][n - 1]);
  return negate ? -d : d;
}

Poly prs_resultant(const Poly& f, const Poly& g, Var var) {
  check_inputs(f, g, var);
  const VarSet rest = result_vars(f, g, var);
  Poly A = f;
  Poly B = g;
  int da = A.degree(var);
  int db = B.degree(var);
  if (da == 0) return with_result_vars(pow(A, static_cast<unsigned>(db)), rest);
  if (db == 0) return with_result_vars(pow(B, static_cast<unsigned>(da)), rest);
  bool negate = false;
  if (da < db) {
    std::swap(A, B);
    std::swap(da, db);
    if ((da & db & 1) != 0) negate = !negate;
  }
  Poly gg(1L);
  Poly h(1L);
  for (;;) {
    const int delta = da - db;
    if ((da & db & 1) != 0) negate = !negate;
    Poly R = pseudo_remainder(A, B, var);
    A = std::move(B);
    if (R.is_zero()) return Poly{}.with_vars(rest);
    B = exact_divide(R, gg * pow(h, static_cast<unsigned>(delta)));
    gg = A.leading_coefficient(var);
    // h <- h^(1 - delta) * g^delta
    if (delta == 0) {
      // unchanged
    } else if (delta == 1) {
      h = gg;
    } else {
      h = exact_divide(pow(gg, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
    }
    da = A.degree(var);
    db = B.degree(var);
    if (db == 0) break;
  }
  // h^(1 - da) * lc(B)^da, with B a constant in var
  Poly lcb = B.leading_coefficient(var);
  Poly res = da == 1 ? lcb : exact_divide(pow(lcb, static_cast<unsigned>(da)), pow(h, static_cast<unsigned>(da - 1)));
  if (negate) res = -res;
  return with_result_vars(std::move(res), rest);
}

std::vector<DegreeBound> bezout_bounds(const Poly& f, const Poly& g, Var var) {
  const int m = std::max(f.degree(var), 0);
  const int n = std::max(g.degree(var), 0);
  std::vector<DegreeBound> out;
  for (Var u : f.support().united(g.support()).without(var).list()) {
    out.push_back({u, std::max(f.degree(u), 0) * n + std::max(g.degree(u), 0) * m});
  }
  return out;
}

namespace {

using modular::DenseMod;
using modular::PrimeField;
using modular::SparseMod;

struct LevelPlan {
  Var var;
  int bound;
  bool verify;
};

class ModularRun {
 public:
  ModularRun(const PrimeField& F, Var var, int m, int n, const std::vector<LevelPlan>& levels,
             const std::optional<std::chrono::steady_clock::time_point>& deadline)
      : F_(F), var_(var), m_(m), n_(n), levels_(levels), deadline_(deadline) {}

  SparseMod solve(const SparseMod& f, const SparseMod& g, std::size_t level) const {
    if (level == levels_.size()) {
      SparseMod out;
      const std::uint64_t r = modular::resultant(F_, modular::to_dense(f, var_), modular::to_dense(g, var_));
      if (r != 0) out.terms.emplace_back(Monomial{}, r);
      return out;
    }
    const LevelPlan& plan = levels_[level];
    const std::size_t wanted = static_cast<std::size_t>(plan.bound) + (plan.verify ? 2 : 1);
    std::vector<std::uint64_t> nodes;
    std::vector<SparseMod> values;
    nodes.reserve(wanted);
    values.reserve(wanted);
    const std::uint64_t limit = 4 * static_cast<std::uint64_t>(wanted) + 1024;
    for (std::uint64_t point = 0; nodes.size() < wanted; ++point) {
      if (point >= limit || point >= F_.modulus()) {
        throw ResourceError("modular resultant: too many degenerate evaluation points");
      }
      // Large outer levels take long enough per prime to warrant polling.
      if (level == 0 && deadline_ && point % 256 == 255 && std::chrono::steady_clock::now() > *deadline_) {
        throw BudgetExceeded("modular resultant exceeded its time budget");
      }
      const std::uint64_t x = F_.from_plain(point);
      SparseMod fe = modular::substitute(F_, f, plan.var, x);
      if (modular::degree(fe, var_) != m_) continue;
      SparseMod ge = modular::substitute(F_, g, plan.var, x);
      if (modular::degree(ge, var_) != n_) continue;
      nodes.push_back(x);
      values.push_back(solve(fe, ge, level + 1));
    }
    std::optional<std::uint64_t> check_node;
    std::optional<SparseMod> check_value;
    if (plan.verify) {
      check_node = nodes.back();
      check_value = std::move(values.back());
      nodes.pop_back();
      values.pop_back();
    }
    std::vector<Monomial> support;
    for (const auto& v : values) {
      for (const auto& t : v.terms) support.push_back(t.first);
    }
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());

    const modular::InterpolationPlan interp(F_, nodes);
    std::vector<std::pair<Monomial, std::uint64_t>> out;
    std::vector<std::uint64_t> column(nodes.size());
    std::vector<std::size_t> cursor(values.size(), 0);
    for (const Monomial& mono : support) {
      for (std::size_t i = 0; i < values.size(); ++i) {
        const auto& terms = values[i].terms;
        std::size_t& c = cursor[i];
        column[i] = (c < terms.size() && terms[c].first == mono) ? terms[c++].second : 0;
      }
      const DenseMod coeffs = interp.interpolate(column);
      if (check_node) {
        const std::uint64_t predicted = modular::eval(F_, coeffs, *check_node);
        std::uint64_t actual = 0;
        for (const auto& t : check_value->terms) {
          if (t.first == mono) actual = t.second;
        }
        if (predicted != actual) throw StructuralError("resultant degree bound is too small");
      }
      for (std::size_t e = 0; e < coeffs.size(); ++e) {
        if (coeffs[e] != 0) out.emplace_back(mono.with_exponent(plan.var, static_cast<std::uint32_t>(e)), coeffs[e]);
      }
    }
    if (check_node) {
      // Monomials seen only at the check point also betray a low bound.
      for (const auto& t : check_value->terms) {
        if (!std::binary_search(support.begin(), support.end(), t.first)) {
          throw StructuralError("resultant degree bound is too small");
        }
      }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseMod result;
    result.terms = std::move(out);
    return result;
  }

 private:
  const PrimeField& F_;
  Var var_;
  int m_;
  int n_;
  const std::vector<LevelPlan>& levels_;
  const std::optional<std::chrono::steady_clock::time_point>& deadline_;
};

// nullopt when the prime divides a leading coefficient.
std::optional<SparseMod> resultant_mod_prime(std::uint64_t p, const Poly& f, const Poly& g, Var var,
                                             const std::vector<LevelPlan>& levels,
                                             const std::optional<std::chrono::steady_clock::time_point>& deadline) {
  const PrimeField F(p);
  const SparseMod fm = modular::reduce(F, f.terms());
  const SparseMod gm = modular::reduce(F, g.terms());
  const int m = f.degree(var);
  const int n = g.degree(var);
  if (modular::degree(fm, var) != m || modular::degree(gm, var) != n) return std::nullopt;
  ModularRun run(F, var, m, n, levels, deadline);
  return run.solve(fm, gm, 0);
}

}  // namespace

Poly modular_resultant(const ResultantRequest& req) {
  const Poly& f = req.f;
  const Poly& g = req.g;
  const Var var = req.var;
  check_inputs(f, g, var);
  const VarSet rest = result_vars(f, g, var);

  std::vector<LevelPlan> levels;
  for (const DegreeBound& b : bezout_bounds(f, g, var)) {
    LevelPlan plan{b.var, b.bound, false};
    for (const DegreeBound& user : req.degree_bounds) {
      if (user.var == b.var) {
        plan.bound = user.bound;
        plan.verify = true;
      }
    }
    if (plan.bound < 0) throw PreconditionError("negative degree bound");
    levels.push_back(plan);
  }

  const ModularOptions& opt = req.modular;
  const unsigned threads = std::max(1u, opt.threads);
  std::map<Monomial, Integer> acc;
  Integer modulus(1);
  std::size_t stable = 0;
  std::size_t used = 0;
  std::size_t next = 0;
  bool done = false;
  while (!done) {
    if (next >= opt.prime_budget) {
      throw ResourceError("modular resultant did not stabilize within the prime budget");
    }
    if (opt.deadline && std::chrono::steady_clock::now() > *opt.deadline) {
      throw BudgetExceeded("modular resultant exceeded its time budget");
    }
    const std::size_t batch = std::min<std::size_t>(threads, opt.prime_budget - next);
    std::vector<std::uint64_t> primes(batch);
    for (std::size_t i = 0; i < batch; ++i) primes[i] = modular::word_prime(next + i);
    next += batch;
    auto images = parallel_map(batch, threads, [&](std::size_t i) {
      return resultant_mod_prime(primes[i], f, g, var, levels, opt.deadline);
    });
    for (std::size_t i = 0; i < batch && !done; ++i) {
      if (!images[i]) continue;
      const std::uint64_t p = primes[i];
      const PrimeField F(p);
      const std::uint64_t inv = F.to_plain(F.inv(F.from_plain(mpz_fdiv_ui(modulus.get_mpz_t(), p))));
      bool changed = false;
      const auto& terms = images[i]->terms;
      // Coefficients absent from this image have residue zero.
      std::size_t c = 0;
      for (auto it = acc.begin(); it != acc.end(); ++it) {
        while (c < terms.size() && terms[c].first < it->first) {
          Integer fresh(0);
          if (modular::crt_step(fresh, F.to_plain(terms[c].second), modulus, p, inv)) changed = true;
          acc.emplace_hint(it, terms[c].first, std::move(fresh));
          ++c;
        }
        std::uint64_t residue = 0;
        if (c < terms.size() && terms[c].first == it->first) residue = F.to_plain(terms[c++].second);
        if (modular::crt_step(it->second, residue, modulus, p, inv)) changed = true;
      }
      for (; c < terms.size(); ++c) {
        Integer fresh(0);
        if (modular::crt_step(fresh, F.to_plain(terms[c].second), modulus, p, inv)) changed = true;
        acc.emplace(terms[c].first, std::move(fresh));
      }
      modulus *= static_cast<unsigned long>(p);
      ++used;
      stable = changed ? 0 : stable + 1;
      if (opt.progress) opt.progress(used, mpz_sizeinbase(modulus.get_mpz_t(), 2));
      if (stable >= 2) done = true;
      if (opt.coefficient_bits > 0 && mpz_sizeinbase(modulus.get_mpz_t(), 2) > opt.coefficient_bits + 1) {
        done = true;
      }
    }
  }
  std::vector<Poly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [mono, value] : acc) {
    if (value != 0) terms.emplace_back(mono, std::move(value));
  }
  return Poly::from_terms(rest, std::move(terms));
}

Poly resultant(const ResultantRequest& req) {
  check_inputs(req.f, req.g, req.var);
  ResultantBackend backend = req.backend;
  if (backend == ResultantBackend::automatic) {
    backend = sylvester_dimension(req.f, req.g, req.var) <= 24 ? ResultantBackend::prs : ResultantBackend::modular;
  }
  switch (backend) {
    case ResultantBackend::sylvester:
      return with_result_vars(determinant(sylvester_matrix(req.f, req.g, req.var)), result_vars(req.f, req.g, req.var));
    case ResultantBackend::prs:
      return prs_resultant(req.f, req.g, req.var);
    case ResultantBackend::modular:
    case ResultantBackend::automatic:
      break;
  }
  return modular_resultant(req);
}

Poly resultant(const Poly& f, const Poly& g, Var var, ResultantBackend backend) {
  ResultantRequest req;
  req.f = f;
  req.g = g;
  req.var = var;
  req.backend = backend;
  return resultant(req);
}

}  // namespace sangaku
