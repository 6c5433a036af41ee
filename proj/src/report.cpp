#include "tracepar/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "tracepar/asymptotics.hpp"
#include "tracepar/errors.hpp"
#include "tracepar/lambdastar.hpp"
#include "tracepar/markov.hpp"
#include "tracepar/oracle.hpp"

namespace tracepar {

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw ParseError("at " + where + ": " + what);
}

std::string location(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

int parse_int(const std::string& s, const std::string& preset_name) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw GraphError("bad parameter '" + s + "' in preset '" + preset_name + "'");
  }
  if (used != s.size()) throw GraphError("bad parameter '" + s + "' in preset '" + preset_name + "'");
  return v;
}

Rational pow10(int d) { return Rational(ipow(Integer(10), static_cast<unsigned>(d))); }

std::string decimal_down(const Rational& q, int d) { return to_decimal(floor_rational(q * pow10(d)) / pow10(d), d); }

std::string decimal_up(const Rational& q, int d) { return to_decimal(-floor_rational(-q * pow10(d)) / pow10(d), d); }

Json interval_json(const Interval& iv, int d) { return Json::array({decimal_down(iv.lo, d), decimal_up(iv.hi, d)}); }

Json clique_list(const DependenceGraph& g, const CliqueGraph& cg, const std::vector<int>& nodes) {
  Json a = Json::array();
  for (int v : nodes) a.push_back(clique_name(g, cg.nodes[static_cast<std::size_t>(v)]));
  return a;
}

Json singularity_json(const SingularityReport& s, int digits) {
  Json j;
  j["rho"] = value_json(s.rho, digits);
  j["order"] = s.order;
  j["alpha"] = value_json(s.alpha, digits);
  j["dominance_certified"] = s.dominance_certified;
  return j;
}

Json estimate_json(const LambdaStarEstimate& e, int digits) {
  Json j;
  j["method"] = to_string(e.method);
  j["interval_kind"] = to_string(e.kind);
  j["point"] = to_decimal(e.point, digits);
  j["interval"] = Json::array({decimal_down(e.lo, digits), decimal_up(e.hi, digits)});
  if (e.method == StarMethod::mc) {
    j["n"] = e.n;
    j["replicas"] = e.replicas;
    j["seed"] = e.seed;
    j["confidence"] = 0.99;
    j["note"] = "finite-n estimate of a limit";
  }
  if (e.method == StarMethod::star_series) j["truncation"] = e.truncation;
  if (e.value) j["value"] = value_json(*e.value, digits);
  return j;
}

LambdaStarEstimate from_value(const AlgebraicValue& v, int digits) {
  LambdaStarEstimate e;
  e.method = StarMethod::closed_form;
  e.kind = IntervalKind::exact;
  Interval iv = v.interval_for_digits(digits);
  e.lo = iv.lo;
  e.hi = iv.hi;
  e.point = v.exact() ? *v.rational_value() : iv.mid();
  e.value = v;
  return e;
}

Json coefficient_rows(const CoefficientTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.f) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(to_string(c));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json integer_list(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(to_string(c));
  return a;
}

Json lambda_star_records(const DependenceGraph& g, const AnalysisOptions& opt) {
  Json out = Json::array();
  if (auto cf = closed_form_lambda_star(g)) out.push_back(estimate_json(from_value(*cf, opt.digits), opt.digits));
  if (star_center(g) && g.size() >= 2)
    out.push_back(estimate_json(star_series_bounds(g, opt.star_terms), opt.digits));

  Json ladder = Json::array();
  for (int n = 1;; n *= 2) {
    double steps = 0;
    double level = 1;
    for (int j = 1; j <= n; ++j) steps += (level *= g.size());
    if (steps > opt.ladder_cap) break;
    Rational v = exact_expectation(g, n, opt.ladder_cap);
    ladder.push_back({{"n", n}, {"value", to_string(v)}, {"approx", to_decimal(v, opt.digits)}});
  }
  if (!ladder.empty()) {
    Json j;
    j["method"] = to_string(StarMethod::exact_n);
    j["interval_kind"] = to_string(IntervalKind::exact);
    j["note"] = "exact finite-n values, not a limit";
    j["ladder"] = std::move(ladder);
    out.push_back(std::move(j));
  }

  out.push_back(estimate_json(mc_lambda_star(g, opt.mc_length, opt.mc_samples, opt.seed), opt.digits));

  std::vector<Mask> comps = connected_components(g);
  if (comps.size() > 1) {
    std::vector<LambdaStarEstimate> parts;
    for (std::size_t s = 0; s < comps.size(); ++s) {
      DependenceGraph h = induced(g, comps[s]);
      if (auto cf = closed_form_lambda_star(h))
        parts.push_back(from_value(*cf, opt.digits));
      else if (star_center(h) && h.size() >= 2)
        parts.push_back(star_series_bounds(h, opt.star_terms));
      else
        parts.push_back(mc_lambda_star(h, opt.mc_length, opt.mc_samples, derive_seed(opt.seed, 1000 + s)));
    }
    LambdaStarEstimate d = decompose_lambda_star(g, parts);
    d.seed = opt.seed;
    Json j = estimate_json(d, opt.digits);
    j["components"] = comps.size();
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace

DependenceGraph parse_graph(const std::string& document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    std::string w = e.what();
    auto p = w.rfind(": ");
    std::string reason = p == std::string::npos ? w : w.substr(p + 2);
    throw ParseError(location(document, e.byte) + ": " + reason);
  }
  if (!doc.is_object()) schema_error("/", "expected an object");
  for (const auto& [key, value] : doc.items())
    if (key != "letters" && key != "dependence" && key != "independence") schema_error("/" + key, "unknown key");
  if (!doc.contains("letters")) schema_error("/", "missing \"letters\"");
  const bool has_dep = doc.contains("dependence");
  const bool has_ind = doc.contains("independence");
  if (has_dep == has_ind) schema_error("/", "exactly one of \"dependence\" and \"independence\" is required");

  const Json& letters = doc["letters"];
  if (!letters.is_array()) schema_error("/letters", "expected an array of strings");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!letters[i].is_string()) schema_error("/letters/" + std::to_string(i), "expected a string");
    names.push_back(letters[i].get<std::string>());
  }
  const std::string key = has_dep ? "dependence" : "independence";
  const Json& rel = doc[key];
  if (!rel.is_array()) schema_error("/" + key, "expected an array of pairs");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < rel.size(); ++i) {
    const std::string where = "/" + key + "/" + std::to_string(i);
    const Json& p = rel[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      schema_error(where, "expected a pair of letters");
    pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return DependenceGraph::build(std::move(names), pairs,
                                has_dep ? RelationKind::dependence : RelationKind::independence);
}

DependenceGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

DependenceGraph preset(const std::string& name) {
  std::vector<std::string> parts;
  std::stringstream ss(name);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.empty()) throw GraphError("empty preset name");
  const std::string& head = parts[0];
  auto arity = [&](std::size_t n) {
    if (parts.size() != n + 1) throw GraphError("preset '" + head + "' takes " + std::to_string(n) + " parameter(s)");
  };
  if (head == "t4") {
    arity(0);
    return t4();
  }
  if (head == "free") {
    arity(1);
    return free_monoid(parse_int(parts[1], name));
  }
  if (head == "freecomm") {
    arity(1);
    return free_commutative(parse_int(parts[1], name));
  }
  if (head == "cp") {
    arity(1);
    int n = parse_int(parts[1], name);
    if (n < 1) throw GraphError("cp:n needs n >= 1");
    return cocktail_party(n);
  }
  if (head == "star") {
    arity(1);
    return star_graph(parse_int(parts[1], name));
  }
  if (head == "prod") {
    arity(2);
    return direct_product(parse_int(parts[1], name), parse_int(parts[2], name));
  }
  throw GraphError("unknown preset '" + name + "'");
}

const std::vector<std::string>& analysis_names() {
  static const std::vector<std::string> names = {"series",   "coefficients", "singularities", "lambda_M",
                                                 "gamma_M",  "lambda_cf",    "lambda_star"};
  return names;
}

Json graph_json(const DependenceGraph& g) {
  Json j;
  j["letters"] = g.letters();
  Json dep = Json::array();
  for (auto [a, b] : g.dependence_pairs()) dep.push_back({g.name(a), g.name(b)});
  Json ind = Json::array();
  for (auto [a, b] : g.independence_pairs()) ind.push_back({g.name(a), g.name(b)});
  j["dependence"] = std::move(dep);
  j["independence"] = std::move(ind);
  Json comps = Json::array();
  for (Mask c : connected_components(g)) {
    Json names = Json::array();
    for (int a : members(c)) names.push_back(g.name(a));
    comps.push_back(std::move(names));
  }
  j["components"] = std::move(comps);
  return j;
}

Json value_json(const AlgebraicValue& v, int digits) {
  Json j;
  j["approx"] = v.approx(digits);
  j["exact"] = v.exact();
  if (v.exact()) {
    j["value"] = to_string(*v.rational_value());
    j["error_bound"] = v.error_bound(digits);
    return j;
  }
  j["error_bound"] = v.error_bound(digits);
  j["certified"] = v.certified();
  if (auto p = v.defining_polynomial()) j["polynomial"] = p->to_string("z");
  j["interval"] = interval_json(v.interval_for_digits(digits), digits + 2);
  return j;
}

Json rational_json(const Rational& q, int digits) {
  return {{"approx", to_decimal(q, digits)}, {"exact", true}, {"value", to_string(q)}};
}

Json series_report(const DependenceGraph& g, const AnalysisOptions& /*opt*/) {
  Json j;
  j["tool"] = "tracepar";
  j["version"] = kToolVersion;
  j["graph"] = graph_json(g);
  CliqueGraph cg = build_clique_graph(g);
  j["cliques"] = cg.size();
  j["mobius"] = mobius_polynomial(g).to_string("y");
  EquitablePartition p = coarsest_equitable_partition(cg);
  Json part;
  Json cells = Json::array();
  for (const auto& cell : p.cells) cells.push_back(clique_list(g, cg, cell));
  part["cells"] = std::move(cells);
  part["lengths"] = p.cell_length;
  part["coloration"] = p.coloration;
  j["partition"] = std::move(part);
  LinearRepresentation rep = linear_representation(cg, &p);
  BivariateRational f = solve_F(rep);
  j["representation"] = rep.reduced ? "reduced" : "full";
  j["F_num"] = f.num.to_string();
  j["F_den"] = f.den.to_string();
  j["F_cancelled"] = f.cancelled;
  for (auto [name, which] : {std::pair{"L", Specialization::L}, std::pair{"H", Specialization::H},
                             std::pair{"G", Specialization::G}, std::pair{"Gtilde", Specialization::Gtilde}}) {
    URational u = specialize(f, which);
    const char* var = (which == Specialization::L || which == Specialization::G) ? "y" : "x";
    j[name] = {{"num", u.num.to_string(var)}, {"den", u.den.to_string(var)}};
  }
  return j;
}

Json analyze_report(const DependenceGraph& g, const AnalysisOptions& opt) {
  Json j = series_report(g, opt);
  const int d = opt.digits;
  const unsigned bits = opt.precision;
  if (opt.wants("coefficients")) {
    const int n = std::min(opt.truncate, 10);
    CoefficientTable t = coefficients(reduced_representation(g), n, n);
    j["coefficients"] = {{"max_height", n}, {"max_length", n}, {"f", coefficient_rows(t)}};
  }
  if (opt.wants("singularities")) {
    GraphSeries s = graph_series(g);
    SingularityReport l = dominant_singularity(s.L, 'L', bits);
    SingularityReport h = dominant_singularity(s.H, 'H', bits);
    j["rho_L"] = value_json(l.rho, d);
    j["k_L"] = l.order;
    j["alpha_L"] = value_json(l.alpha, d);
    j["dominance_certified_L"] = l.dominance_certified;
    j["rho_H"] = value_json(h.rho, d);
    j["k_H"] = h.order;
    j["alpha_H"] = value_json(h.alpha, d);
    j["dominance_certified_H"] = h.dominance_certified;
    if (!is_connected(g)) {
      ComponentAsymptotics c = component_asymptotics(g, bits);
      Json comp = Json::array();
      for (std::size_t i = 0; i < c.components.size(); ++i)
        comp.push_back({{"letters", popcount(c.components[i])},
                        {"L", singularity_json(c.L[i], d)},
                        {"H", singularity_json(c.H[i], d)}});
      j["component_singularities"] = std::move(comp);
    }
  }
  if (opt.wants("lambda_M")) j["lambda_M"] = value_json(lambda_M(g, bits), d);
  if (opt.wants("gamma_M")) {
    AlgebraicValue gm = gamma_M(g, bits);
    j["gamma_M"] = value_json(gm, d);
    j["gamma_M_inv"] = value_json(reciprocal(gm), d);
  }
  if (opt.wants("lambda_cf")) {
    StationaryResult r = lambda_cf(g);
    j["lambda_cf"] = rational_json(r.lambda_cf, d);
    if (r.q.size() > 1) {
      Json q = Json::array();
      for (const auto& v : r.q) q.push_back(to_string(v));
      j["lambda_cf_absorption"] = std::move(q);
    }
  }
  if (opt.wants("lambda_star")) j["lambda_star"] = lambda_star_records(g, opt);
  j["seeds"] = {{"root", opt.seed}, {"mc_lambda_star", opt.seed}};
  j["precision_bits"] = opt.precision;
  j["digits"] = opt.digits;
  j["truncate"] = opt.truncate;
  return j;
}

Json coefficients_report(const DependenceGraph& g, int max_height, int max_length) {
  LinearRepresentation rep = reduced_representation(g);
  CoefficientTable t = coefficients(rep, max_height, max_length);
  Json j;
  j["graph"] = graph_json(g);
  j["representation"] = rep.reduced ? "reduced" : "full";
  j["max_height"] = max_height;
  j["max_length"] = max_length;
  j["f"] = coefficient_rows(t);
  j["length_totals"] = integer_list(t.length_totals());
  j["height_totals"] = integer_list(t.height_totals());
  return j;
}

std::string coefficients_csv(const CoefficientTable& t) {
  std::ostringstream out;
  out << "height,length,count\n";
  for (int k = 0; k <= t.max_height; ++k)
    for (int l = 0; l <= t.max_length; ++l) out << k << ',' << l << ',' << t.at(k, l) << '\n';
  return out.str();
}

Json census_report(const DependenceGraph& g, int max_length) {
  TraceCensus bfs = enumerate_traces(g, max_length);
  Json j;
  j["graph"] = graph_json(g);
  j["max_length"] = max_length;
  Json rows = Json::array();
  for (const auto& row : bfs.counts) rows.push_back(integer_list(row));
  j["counts"] = std::move(rows);
  j["per_length"] = integer_list(bfs.per_length());
  try {
    j["words_agree"] = census_by_words(g, max_length) == bfs;
  } catch (const ResourceError&) {
    j["words_agree"] = nullptr;
  }
  CoefficientTable t = coefficients(reduced_representation(g), max_length, max_length);
  bool same = true;
  for (int k = 0; k <= max_length; ++k)
    for (int l = 0; l <= max_length; ++l) same = same && t.at(k, l) == bfs.at(k, l);
  j["series_agree"] = same;
  return j;
}

std::vector<TableRow> table_rows(int letters, unsigned bits) {
  std::vector<TableRow> rows;
  std::vector<DependenceGraph> gs = all_graphs(letters);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (is_free(gs[i])) continue;
    TableRow r{static_cast<int>(i), gs[i], lambda_M(gs[i], bits), reciprocal(gamma_M(gs[i], bits)),
               lambda_cf(gs[i]).lambda_cf};
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ReferenceRow> parse_reference(const std::string& document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(location(document, e.byte) + ": malformed reference table");
  }
  if (!doc.contains("rows") || !doc["rows"].is_array()) schema_error("/rows", "expected an array");
  std::vector<ReferenceRow> out;
  for (std::size_t i = 0; i < doc["rows"].size(); ++i) {
    const Json& r = doc["rows"][i];
    const std::string where = "/rows/" + std::to_string(i);
    for (const char* key : {"lambda_star", "lambda_M", "gamma_M_inv", "lambda_cf"})
      if (!r.contains(key) || !r[key].is_number()) schema_error(where + "/" + key, "expected a number");
    ReferenceRow row;
    row.name = r.value("name", std::to_string(i + 1));
    row.lambda_star = r["lambda_star"].get<double>();
    row.lambda_M = r["lambda_M"].get<double>();
    row.gamma_M_inv = r["gamma_M_inv"].get<double>();
    row.lambda_cf = r["lambda_cf"].get<double>();
    out.push_back(std::move(row));
  }
  return out;
}

std::optional<Matching> match_rows(const std::vector<TableRow>& rows, const std::vector<ReferenceRow>& refs,
                                   double tol) {
  const std::size_t n = rows.size();
  if (refs.size() != n) return std::nullopt;
  std::vector<std::vector<bool>> ok(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      ok[i][j] = std::abs(rows[i].lambda_M.to_double() - refs[j].lambda_M) <= tol &&
                 std::abs(rows[i].gamma_M_inv.to_double() - refs[j].gamma_M_inv) <= tol &&
                 std::abs(to_double(rows[i].lambda_cf) - refs[j].lambda_cf) <= tol;
  Matching m;
  std::vector<int> current(n, -1);
  std::vector<bool> used(n, false);
  constexpr long kCountCap = 1000;
  auto search = [&](auto&& self, std::size_t i) -> void {
    if (m.count >= kCountCap) return;
    if (i == n) {
      if (m.count++ == 0) m.assignment = current;
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || !ok[i][j]) continue;
      used[j] = true;
      current[i] = static_cast<int>(j);
      self(self, i + 1);
      used[j] = false;
    }
  };
  search(search, 0);
  if (m.count == 0) return std::nullopt;
  return m;
}

Json match_table_report(int letters, const AnalysisOptions& opt, const std::vector<ReferenceRow>* refs, double tol) {
  std::vector<TableRow> rows = table_rows(letters, opt.precision);
  std::optional<Matching> m;
  if (refs) m = match_rows(rows, *refs, tol);
  Json j;
  j["letters"] = letters;
  Json out = Json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const TableRow& r = rows[i];
    Json row;
    row["index"] = r.index;
    Json ind = Json::array();
    for (auto [a, b] : r.graph.independence_pairs()) ind.push_back({r.graph.name(a), r.graph.name(b)});
    row["independence"] = std::move(ind);
    row["lambda_M"] = value_json(r.lambda_M, opt.digits);
    row["gamma_M_inv"] = value_json(r.gamma_M_inv, opt.digits);
    row["lambda_cf"] = rational_json(r.lambda_cf, opt.digits);
    if (m) row["reference"] = (*refs)[static_cast<std::size_t>(m->assignment[i])].name;
    out.push_back(std::move(row));
  }
  j["rows"] = std::move(out);
  if (refs) {
    j["tolerance"] = tol;
    j["perfect_assignment"] = m.has_value();
    j["assignments"] = m ? m->count : 0;
  }
  return j;
}

Json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

std::string text_report(const Json& j) {
  std::vector<std::pair<std::string, std::string>> lines;
  auto walk = [&](auto&& self, const Json& v, const std::string& prefix) -> void {
    if (v.is_object()) {
      for (const auto& [k, x] : v.items()) self(self, x, prefix.empty() ? k : prefix + "." + k);
      return;
    }
    if (v.is_array()) {
      bool flat = std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
      if (flat) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ", ") + (x.is_string() ? x.get<std::string>() : x.dump());
        lines.emplace_back(prefix, "[" + s + "]");
        return;
      }
      for (std::size_t i = 0; i < v.size(); ++i) self(self, v[i], prefix + "[" + std::to_string(i) + "]");
      return;
    }
    lines.emplace_back(prefix, v.is_string() ? v.get<std::string>() : v.dump());
  };
  walk(walk, j, "");
  std::size_t width = 0;
  for (const auto& [k, v] : lines) width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : lines) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  return out.str();
}

}  // namespace tracepar
