#include "sangaku/serialize.hpp"

#include <json.hpp>

#include "sangaku/errors.hpp"

namespace sangaku {

namespace {

using Json = nlohmann::ordered_json;

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw PreconditionError(std::string("malformed JSON: ") + e.what());
  }
}

// Field access with the library's type errors turned into ours.
template <typename T>
T field(const Json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw PreconditionError(std::string("JSON field '") + key + "': " + e.what());
  }
}

Rational rational_of(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument& e) {
    throw PreconditionError(e.what());
  }
}

const Json& node(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw PreconditionError(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

Json poly_json(const Poly& p) {
  const std::vector<Var> vars = p.vars().list();
  Json names = Json::array();
  for (Var v : vars) names.push_back(std::string(1, var_name(v)));
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json exps = Json::array();
    for (Var v : vars) exps.push_back(m.exponent(v));
    terms.push_back(Json::array({exps, to_string(c)}));
  }
  return Json{{"vars", names}, {"terms", terms}};
}

Poly poly_of(const Json& j) {
  VarSet declared;
  std::vector<Var> vars;
  for (const std::string& name : field<std::vector<std::string>>(j, "vars")) {
    const std::optional<Var> v = parse_var(name);
    if (!v || declared.contains(*v)) throw PreconditionError("bad variable list in polynomial JSON");
    declared.insert(*v);
    vars.push_back(*v);
  }
  std::vector<Poly::Term> terms;
  for (const Json& t : node(j, "terms")) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_array() || t[0].size() != vars.size() || !t[1].is_string()) {
      throw PreconditionError("polynomial term must be [[exponents...], \"coefficient\"]");
    }
    Monomial m;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (!t[0][i].is_number_unsigned()) throw PreconditionError("exponents must be non-negative integers");
      m = m.with_exponent(vars[i], t[0][i].get<std::uint32_t>());
    }
    const Rational c = rational_of(t[1].get<std::string>());
    if (c.get_den() != 1) throw PreconditionError("polynomial coefficients must be integers");
    terms.emplace_back(m, c.get_num());
  }
  return Poly::from_terms(declared, std::move(terms));
}

Json interval_json(const Rational& lo, const Rational& hi) {
  return Json{{"lo", to_string(lo)}, {"hi", to_string(hi)}};
}

std::pair<Rational, Rational> interval_of(const Json& j) {
  return {rational_of(field<std::string>(j, "lo")), rational_of(field<std::string>(j, "hi"))};
}

}  // namespace

std::string poly_to_json(const Poly& p) { return poly_json(p).dump(); }

Poly poly_from_json(std::string_view text) { return poly_of(parse(text)); }

std::string eliminant_to_json(const EliminantFile& file) {
  Json degrees = Json::object();
  for (Var v : file.polynomial.support().list()) degrees[std::string(1, var_name(v))] = file.polynomial.degree(v);
  degrees["total"] = file.polynomial.total_degree();
  Json meta{{"pipeline", file.pipeline},
            {"backend", file.backend},
            {"timestamp", file.timestamp ? Json(*file.timestamp) : Json(nullptr)},
            {"degrees", degrees}};
  return Json{{"metadata", meta}, {"polynomial", poly_json(file.polynomial)}}.dump() + "\n";
}

EliminantFile eliminant_from_json(std::string_view text) {
  const Json j = parse(text);
  const Json& meta = node(j, "metadata");
  EliminantFile file;
  file.polynomial = poly_of(node(j, "polynomial"));
  file.pipeline = field<std::string>(meta, "pipeline");
  file.backend = field<std::string>(meta, "backend");
  if (meta.contains("timestamp") && !meta.at("timestamp").is_null()) {
    file.timestamp = field<std::string>(meta, "timestamp");
  }
  return file;
}

std::string series_to_json(const PowerSeries& s) {
  Json coeffs = Json::array();
  for (const ExtFloat& c : s.coefficients()) coeffs.push_back(c.to_string());
  return Json{{"order", s.order()}, {"precision_bits", s.precision()}, {"coefficients", coeffs}}.dump();
}

PowerSeries series_from_json(std::string_view text) {
  const Json j = parse(text);
  const int order = field<int>(j, "order");
  const long bits = field<long>(j, "precision_bits");
  if (bits < MPFR_PREC_MIN || bits > 1L << 20) throw PreconditionError("precision_bits out of range");
  const auto strings = field<std::vector<std::string>>(j, "coefficients");
  if (order < 0 || strings.size() != static_cast<std::size_t>(order) + 1) {
    throw PreconditionError("series needs order + 1 coefficients");
  }
  std::vector<ExtFloat> c;
  c.reserve(strings.size());
  for (const std::string& s : strings) {
    try {
      c.emplace_back(s, bits);
    } catch (const std::invalid_argument& e) {
      throw PreconditionError(e.what());
    }
  }
  return PowerSeries(std::move(c), bits);
}

std::string interval_to_json(const IsolatingInterval& iv) { return interval_json(iv.lo, iv.hi).dump(); }

IsolatingInterval interval_from_json(std::string_view text) {
  auto [lo, hi] = interval_of(parse(text));
  if (hi < lo) throw PreconditionError("interval with hi < lo");
  return {lo, hi, 0};
}

std::string report_to_json(const ReportSummary& report) {
  Json roots = Json::array();
  for (const IsolatingInterval& iv : report.roots) roots.push_back(interval_json(iv.lo, iv.hi));
  Json brackets = Json::array();
  for (const SignBracket& b : report.grid_brackets) brackets.push_back(interval_json(b.lo, b.hi));
  Json zeros = Json::array();
  for (const Rational& z : report.grid_zeros) zeros.push_back(to_string(z));
  return Json{{"bound", to_string(report.bound)},
              {"root_count", report.roots.size()},
              {"roots", roots},
              {"grid_brackets", brackets},
              {"grid_zeros", zeros}}
      .dump();
}

ReportSummary report_from_json(std::string_view text) {
  const Json j = parse(text);
  ReportSummary r;
  r.bound = rational_of(field<std::string>(j, "bound"));
  for (const Json& iv : node(j, "roots")) {
    auto [lo, hi] = interval_of(iv);
    r.roots.push_back({lo, hi, 0});
  }
  for (const Json& b : node(j, "grid_brackets")) {
    auto [lo, hi] = interval_of(b);
    r.grid_brackets.push_back({lo, hi});
  }
  for (const std::string& z : field<std::vector<std::string>>(j, "grid_zeros")) r.grid_zeros.push_back(rational_of(z));
  if (field<std::size_t>(j, "root_count") != r.roots.size()) throw PreconditionError("root_count disagrees with roots");
  return r;
}

ReportSummary summarize(const ExceptionalReport& report) {
  ReportSummary r{report.bound, report.roots, {}, {}};
  if (report.grid) {
    r.grid_brackets = report.grid->brackets;
    r.grid_zeros = report.grid->zeros;
  }
  return r;
}

}  // namespace sangaku
