// sangaku: command-line driver for the mu(r) pipeline.
//
//   sangaku mu --r 2
//   sangaku eliminate [--toy]
//   sangaku taylor --order 5
//   sangaku table1
//   sangaku exceptional --mode grid --steps 400
//
// Exit codes: 0 success, 2 usage, 3 degenerate elimination or eliminant,
// 4 missing artifact, 5 budget exceeded, 1 anything else.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "sangaku/eliminator.hpp"
#include "sangaku/errors.hpp"
#include "sangaku/exceptional.hpp"
#include "sangaku/oracle.hpp"
#include "sangaku/serialize.hpp"
#include "sangaku/series.hpp"

namespace {

using namespace sangaku;
using Json = nlohmann::ordered_json;

constexpr const char* kDefaultEliminant = "eliminant.json";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingArtifact : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int precision_bits = 256;
  int order = 40;
  std::string eliminant;
  std::string backend = "auto";
  unsigned threads = 1;
  std::string format = "text";
};

void check(const RunConfig& cfg) {
  if (cfg.precision_bits < 64) throw UsageError("--precision-bits must be at least 64");
  if (cfg.order < 0) throw UsageError("--order must be nonnegative");
  if (cfg.threads < 1) throw UsageError("--threads must be at least 1");
}

std::string eliminant_path(const RunConfig& cfg) {
  if (!cfg.eliminant.empty()) return cfg.eliminant;
  if (const char* env = std::getenv("SANGAKU_ELIMINANT"); env != nullptr && *env != '\0') return env;
  return kDefaultEliminant;
}

ResultantBackend backend_of(const RunConfig& cfg) {
  const auto b = parse_backend(cfg.backend);
  if (!b) throw UsageError("unknown backend: " + cfg.backend);
  return *b;
}

Rational rational_arg(const std::string& s, const char* flag) {
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(flag) + " expects a decimal or p/q number, got '" + s + "'");
  }
}

EliminantFile load_eliminant(const RunConfig& cfg) {
  const std::string path = eliminant_path(cfg);
  std::ifstream in(path);
  if (!in) throw MissingArtifact("eliminant not found at " + path + "; run `sangaku eliminate` first");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return eliminant_from_json(ss.str());
  } catch (const PreconditionError& e) {
    throw MissingArtifact("unreadable eliminant at " + path + ": " + e.what());
  }
}

void log_line(std::string_view msg) { std::cerr << "[sangaku] " << msg << '\n'; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Key/value records printed in the selected format.
void emit_record(const RunConfig& cfg, const Json& rec) {
  if (cfg.format == "json") {
    std::cout << rec.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    std::string head, row;
    for (auto it = rec.begin(); it != rec.end(); ++it) {
      if (it != rec.begin()) {
        head += ',';
        row += ',';
      }
      head += it.key();
      row += it->is_string() ? it->get<std::string>() : it->dump();
    }
    std::cout << head << '\n' << row << '\n';
  } else {
    for (auto it = rec.begin(); it != rec.end(); ++it) {
      std::cout << it.key() << " = " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
    }
  }
}

// Rows of equal keys; text and csv print a table.
void emit_table(const RunConfig& cfg, const Json& meta, const Json& rows) {
  if (cfg.format == "json") {
    Json out = meta;
    out["rows"] = rows;
    std::cout << out.dump(2) << '\n';
    return;
  }
  const char sep = cfg.format == "csv" ? ',' : ' ';
  if (cfg.format == "text") {
    for (auto it = meta.begin(); it != meta.end(); ++it) {
      std::cout << "# " << it.key() << " = " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
    }
  }
  if (rows.empty()) return;
  bool first = true;
  for (auto it = rows[0].begin(); it != rows[0].end(); ++it, first = false) std::cout << (first ? "" : std::string(1, sep)) << it.key();
  std::cout << '\n';
  for (const Json& r : rows) {
    first = true;
    for (auto it = r.begin(); it != r.end(); ++it, first = false) {
      std::cout << (first ? "" : std::string(1, sep)) << (it->is_string() ? it->get<std::string>() : it->dump());
    }
    std::cout << '\n';
  }
}

// mu --------------------------------------------------------------------

int cmd_mu(const RunConfig& cfg, const std::string& r_text) {
  check(cfg);
  const Rational r = rational_arg(r_text, "--r");
  if (r < 1) throw UsageError("mu requires r >= 1");
  const auto t0 = std::chrono::steady_clock::now();
  const MinimizerResult m = minimize(ExtFloat(r, cfg.precision_bits + 64), cfg.precision_bits);
  Json rec{{"r", r_text},
           {"precision_bits", cfg.precision_bits},
           {"mu", m.mu.to_string()},
           {"x_m", m.x_m.to_string()},
           {"lambda", m.lambda.to_string()},
           {"derivative_residual", to_scientific(m.derivative_residual)}};
  emit_record(cfg, rec);
  log_line("mu: " + std::to_string(seconds_since(t0)) + " s");
  return 0;
}

// eliminate ---------------------------------------------------------------

int cmd_eliminate(const RunConfig& cfg, bool toy) {
  check(cfg);
  const ResultantBackend backend = backend_of(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  EliminantFile file;
  file.backend = backend_name(backend);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch != '\0') file.timestamp = epoch;
  if (toy) {
    file.pipeline = "x";
    file.polynomial = eliminate_toy(build_toy_system(), backend);
  } else {
    EliminationOptions opt;
    opt.backend = backend;
    opt.modular.threads = cfg.threads;
    opt.log = log_line;
    file.polynomial = eliminate(build_system(), opt).reduced;
  }
  const std::string path = eliminant_path(cfg);
  const std::string text = eliminant_to_json(file);
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
  }
  const Poly& p = file.polynomial;
  Json rec{{"path", path},
           {"backend", file.backend},
           {"terms", p.term_count()},
           {"degree_k", p.degree(Var::k)},
           {"degree_y", p.degree(Var::y)},
           {"total_degree", p.total_degree()},
           {"max_coefficient_bits", bit_length(p.max_abs_coefficient())},
           {"seconds", seconds_since(t0)}};
  if (toy) rec["polynomial"] = to_string(p);
  emit_record(cfg, rec);
  return 0;
}

// taylor / table1 ---------------------------------------------------------

// Low-denominator fractions close to |a_0|, ..., |a_5|.
const std::pair<long, long> kDisplayFractions[] = {{227, 589}, {157, 883}, {55, 783},
                                                   {33, 898},  {10, 449},  {7, 473}};

TaylorResult run_taylor(const RunConfig& cfg, int order) {
  const EliminantFile file = load_eliminant(cfg);
  TaylorOptions opt;
  opt.order = order;
  opt.precision_bits = cfg.precision_bits;
  return mu_taylor(file.polynomial, opt);
}

int cmd_taylor(const RunConfig& cfg) {
  check(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  const TaylorResult res = run_taylor(cfg, cfg.order);
  Json rows = Json::array();
  for (int i = 0; i <= res.mu.order(); ++i) {
    const ExtFloat& a = res.mu[static_cast<std::size_t>(i)];
    Json row{{"i", i}, {"coefficient", a.to_string()}};
    if (i < 6) {
      const auto [num, den] = kDisplayFractions[i];
      const ExtFloat frac(Rational(num, den), 64);
      row["fraction"] = std::to_string(num) + "/" + std::to_string(den);
      row["fraction_diff"] = to_scientific(abs(abs(a).rounded(64) - frac));
    } else {
      row["fraction"] = "";
      row["fraction_diff"] = "";
    }
    rows.push_back(row);
  }
  Json meta{{"order", cfg.order},
            {"precision_bits", cfg.precision_bits},
            {"working_precision", res.working_precision},
            {"lambda_1", res.seed.rounded(cfg.precision_bits).to_string()},
            {"lift_residual", to_scientific(res.lift_residual)},
            {"seconds", seconds_since(t0)}};
  emit_table(cfg, meta, rows);
  return 0;
}

int cmd_table1(const RunConfig& cfg, int terms) {
  check(cfg);
  if (terms < 1) throw UsageError("--terms must be at least 1");
  const auto t0 = std::chrono::steady_clock::now();
  const TaylorResult res = run_taylor(cfg, std::max(cfg.order, terms - 1));
  const PowerSeries partial = res.mu.truncated(terms - 1);
  Json rows = Json::array();
  for (const char* t_text : {"0.1", "0.2", "0.5", "1.0", "1.2"}) {
    const Rational t = parse_rational(t_text);
    const ExtFloat oracle = minimize(ExtFloat(Rational(1) + t, cfg.precision_bits + 64), cfg.precision_bits).mu;
    const ExtFloat series = partial.evaluate(ExtFloat(t, cfg.precision_bits));
    const ExtFloat diff = abs(series - oracle);
    const char* status = diff < ExtFloat(1e-12, 64) ? "agree" : diff < ExtFloat(0.1, 64) ? "degraded" : "divergent";
    rows.push_back(Json{{"t", t_text},
                        {"numerical", oracle.to_string(20)},
                        {"series", series.to_string(20)},
                        {"abs_diff", to_scientific(diff)},
                        {"status", status}});
  }
  Json meta{{"terms", terms}, {"precision_bits", cfg.precision_bits}, {"seconds", seconds_since(t0)}};
  emit_table(cfg, meta, rows);
  return 0;
}

// exceptional -------------------------------------------------------------

struct ExceptionalArgs {
  std::string mode = "grid";
  std::string bound = "200";
  std::string lo = "1";
  std::string hi = "5";
  int steps = 400;
  double budget_seconds = 3600;
};

void emit_report(const RunConfig& cfg, Json out) {
  if (cfg.format == "json") {
    std::cout << out.dump(2) << '\n';
    return;
  }
  if (cfg.format == "csv") {
    std::cout << "kind,lo,hi\n";
    for (const char* kind : {"roots", "grid_brackets"}) {
      if (!out.contains(kind)) continue;
      for (const Json& iv : out[kind]) std::cout << kind << ',' << iv["lo"].get<std::string>() << ',' << iv["hi"].get<std::string>() << '\n';
    }
    return;
  }
  for (auto it = out.begin(); it != out.end(); ++it) std::cout << it.key() << " = " << it->dump() << '\n';
}

int cmd_exceptional(const RunConfig& cfg, const ExceptionalArgs& args) {
  check(cfg);
  if (args.mode != "grid" && args.mode != "full") throw UsageError("--mode must be grid or full");
  const Rational bound = rational_arg(args.bound, "--bound");
  const Rational lo = rational_arg(args.lo, "--lo");
  const Rational hi = rational_arg(args.hi, "--hi");
  if (bound < 1) throw UsageError("--bound must be at least 1");
  if (args.budget_seconds <= 0) throw UsageError("--budget must be positive");
  const EliminantFile file = load_eliminant(cfg);
  const Poly& p = file.polynomial;
  const auto t0 = std::chrono::steady_clock::now();
  const auto deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                 std::chrono::duration<double>(args.budget_seconds));

  ModularOptions mod;
  mod.threads = cfg.threads;
  const bool k1_root = discriminant_at(p, Rational(1), mod) == 0;
  Json out{{"mode", args.mode}, {"bound", to_string(bound)}, {"k1_exact_root", k1_root}};

  if (args.mode == "grid") {
    if (args.steps < 2) throw UsageError("--steps must be at least 2");
    if (!(lo < hi) || lo < 1 || hi > bound) throw UsageError("grid needs 1 <= lo < hi <= bound");
    GridOptions g;
    g.threads = cfg.threads;
    g.deadline = deadline;
    std::size_t done = 0;
    g.progress = [&](std::size_t n, std::size_t total) {
      done = n;
      if (n % 50 == 0 || n == total) log_line("grid " + std::to_string(n) + "/" + std::to_string(total));
    };
    try {
      const GridScan scan = grid_signs_pointwise(p, lo, hi, args.steps, g);
      ReportSummary s{bound, {}, scan.brackets, scan.zeros};
      if (k1_root) s.roots.push_back({Rational(1), Rational(1), 0});
      Json rep = Json::parse(report_to_json(s));
      for (auto it = rep.begin(); it != rep.end(); ++it) out[it.key()] = *it;
      out["grid"] = Json{{"lo", to_string(lo)}, {"hi", to_string(hi)}, {"steps", args.steps}};
      out["seconds"] = seconds_since(t0);
      emit_report(cfg, out);
      return 0;
    } catch (const BudgetExceeded&) {
      out["status"] = "budget_exceeded";
      out["points_done"] = done;
      emit_report(cfg, out);
      return 5;
    }
  }

  mod.deadline = deadline;
  std::size_t primes = 0;
  std::size_t bits = 0;
  mod.progress = [&](std::size_t n, std::size_t b) {
    primes = n;
    bits = b;
    if (n % 10 == 0) log_line("discriminant: " + std::to_string(n) + " primes, " + std::to_string(b) + " bits");
  };
  Poly delta;
  try {
    delta = discriminant(p, mod);
  } catch (const BudgetExceeded&) {
    out["status"] = "budget_exceeded";
    out["primes_done"] = primes;
    out["modulus_bits"] = bits;
    emit_report(cfg, out);
    return 5;
  }
  const ExceptionalReport rep = exceptional_candidates(delta, bound);
  Json j = Json::parse(report_to_json(summarize(rep)));
  for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = *it;
  out["delta_degree"] = delta.degree(Var::k);
  out["delta0_degree"] = rep.delta0.degree();
  out["seconds"] = seconds_since(t0);
  emit_report(cfg, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Morikawa square function: oracle, elimination, Taylor series, exceptional set"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--precision-bits", cfg.precision_bits, "working precision in bits (>= 64)");
    sub->add_option("--order", cfg.order, "series order N (coefficients a_0..a_N)");
    sub->add_option("--eliminant", cfg.eliminant, "eliminant file (default $SANGAKU_ELIMINANT or eliminant.json)");
    sub->add_option("--backend", cfg.backend, "resultant backend: sylvester, prs, modular or auto");
    sub->add_option("--threads", cfg.threads, "worker threads");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  };

  std::string r_text;
  auto* mu = app.add_subcommand("mu", "minimize the profile for one r");
  mu->add_option("--r", r_text, "r >= 1 as a decimal or p/q")->required();
  add_common(mu);

  bool toy = false;
  auto* elim = app.add_subcommand("eliminate", "compute and persist the eliminant P*(k, y)");
  elim->add_flag("--toy", toy, "eliminate the toy system instead (gives 2y - k^2)");
  add_common(elim);

  auto* taylor = app.add_subcommand("taylor", "Taylor coefficients of mu(1 + t)");
  add_common(taylor);

  int terms = 40;
  auto* table = app.add_subcommand("table1", "series against the oracle at t = 0.1 .. 1.2");
  table->add_option("--terms", terms, "number of series terms summed (a_0..a_{terms-1})");
  add_common(table);

  ExceptionalArgs ex;
  auto* exc = app.add_subcommand("exceptional", "discriminant sign changes and exceptional candidates");
  exc->add_option("--mode", ex.mode, "grid (pointwise discriminant signs) or full (symbolic)");
  exc->add_option("--bound", ex.bound, "search bound for roots in [1, bound]");
  exc->add_option("--lo", ex.lo, "grid start");
  exc->add_option("--hi", ex.hi, "grid end");
  exc->add_option("--steps", ex.steps, "grid subintervals");
  exc->add_option("--budget", ex.budget_seconds, "time budget in seconds");
  add_common(exc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*mu) return cmd_mu(cfg, r_text);
    if (*elim) return cmd_eliminate(cfg, toy);
    if (*taylor) return cmd_taylor(cfg);
    if (*table) return cmd_table1(cfg, terms);
    if (*exc) return cmd_exceptional(cfg, ex);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const MissingArtifact& e) {
    std::cerr << "missing artifact: " << e.what() << '\n';
    return 4;
  } catch (const StructuralError& e) {
    std::cerr << "degenerate: " << e.what() << '\n';
    return 3;
  } catch (const PreconditionError& e) {
    std::cerr << "degenerate: " << e.what() << '\n';
    return 3;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
