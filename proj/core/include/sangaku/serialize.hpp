#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sangaku/exceptional.hpp"
#include "sangaku/poly.hpp"
#include "sangaku/realroots.hpp"
#include "sangaku/series.hpp"

// JSON documents exchanged by the command-line tool. Every reader throws
// PreconditionError on malformed input. Output is deterministic: keys in a
// fixed order, terms in monomial order, numbers as decimal strings.
namespace sangaku {

// {"vars": ["k", "y"], "terms": [[[e_k, e_y], "coefficient"], ...]}
std::string poly_to_json(const Poly& p);
Poly poly_from_json(std::string_view text);

struct EliminantFile {
  Poly polynomial;
  std::string pipeline = "w,v,x";  // elimination order
  std::string backend;
  std::optional<std::string> timestamp;
};

// {"metadata": {pipeline, backend, timestamp, degrees: {var: d, ..., total}},
//  "polynomial": {...}}
std::string eliminant_to_json(const EliminantFile& file);
EliminantFile eliminant_from_json(std::string_view text);

// {"order": N, "precision_bits": p, "coefficients": ["...", ...]}, with
// enough digits to read back the same binary values.
std::string series_to_json(const PowerSeries& s);
PowerSeries series_from_json(std::string_view text);

// {"lo": "p/q", "hi": "p/q"}
std::string interval_to_json(const IsolatingInterval& iv);
IsolatingInterval interval_from_json(std::string_view text);

struct ReportSummary {
  Rational bound;
  std::vector<IsolatingInterval> roots;
  std::vector<SignBracket> grid_brackets;
  std::vector<Rational> grid_zeros;
};

// {"bound", "root_count", "roots": [{lo, hi}], "grid_brackets": [{lo, hi}],
//  "grid_zeros": [...]}
std::string report_to_json(const ReportSummary& report);
ReportSummary report_from_json(std::string_view text);
ReportSummary summarize(const ExceptionalReport& report);

}  // namespace sangaku
