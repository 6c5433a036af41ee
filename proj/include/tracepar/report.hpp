#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "tracepar/algebraic.hpp"
#include "tracepar/core.hpp"
#include "tracepar/series.hpp"

namespace tracepar {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

/// {"letters": [...], "dependence" | "independence": [[x, y], ...]}.
/// Throws ParseError with a line:column or JSON-pointer location.
DependenceGraph parse_graph(const std::string& document);
DependenceGraph load_graph(const std::string& path);

/// free:k, freecomm:k, cp:n, t4, star:k, prod:k:c.
DependenceGraph preset(const std::string& name);

struct AnalysisOptions {
  int truncate = 24;
  unsigned precision = 128;
  int digits = 12;
  int mc_samples = 64;
  long mc_length = 10000;
  std::uint64_t seed = 0;
  /// Terms of the star series before the tail bound.
  int star_terms = 150;
  /// Word-enumeration budget for the exact finite-n ladder.
  double ladder_cap = 2e6;
  /// Empty means every analysis.
  std::set<std::string> analyses;

  bool wants(const std::string& name) const { return analyses.empty() || analyses.count(name) > 0; }
};

/// Names accepted by --analyses.
const std::vector<std::string>& analysis_names();

Json graph_json(const DependenceGraph& g);
Json value_json(const AlgebraicValue& v, int digits);
Json rational_json(const Rational& q, int digits);

Json analyze_report(const DependenceGraph& g, const AnalysisOptions& opt);
Json series_report(const DependenceGraph& g, const AnalysisOptions& opt);
Json coefficients_report(const DependenceGraph& g, int max_height, int max_length);
std::string coefficients_csv(const CoefficientTable& t);
Json census_report(const DependenceGraph& g, int max_length);

struct TableRow {
  int index = 0;
  DependenceGraph graph;
  AlgebraicValue lambda_M;
  AlgebraicValue gamma_M_inv;
  Rational lambda_cf;
};

/// Every dependence relation on `letters` letters up to isomorphism except
/// the free monoid.
std::vector<TableRow> table_rows(int letters, unsigned bits);

struct ReferenceRow {
  std::string name;
  double lambda_star = 0;
  double lambda_M = 0;
  double gamma_M_inv = 0;
  double lambda_cf = 0;
};

std::vector<ReferenceRow> parse_reference(const std::string& document);

struct Matching {
  /// assignment[i] is the reference row of computed row i.
  std::vector<int> assignment;
  /// Number of perfect assignments within tolerance.
  long count = 0;
};

/// Perfect assignment of computed rows to reference rows with every value
/// within `tol`; none when no such assignment exists.
std::optional<Matching> match_rows(const std::vector<TableRow>& rows, const std::vector<ReferenceRow>& refs,
                                   double tol);

Json match_table_report(int letters, const AnalysisOptions& opt, const std::vector<ReferenceRow>* refs, double tol);

Json error_json(const std::string& kind, const std::string& message);

/// Aligned "key  value" lines with nested keys joined by dots.
std::string text_report(const Json& j);

}  // namespace tracepar
