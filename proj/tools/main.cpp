#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tracepar/errors.hpp"
#include "tracepar/report.hpp"

using namespace tracepar;

namespace {

struct Common {
  std::string input;
  std::string preset_name;
  std::string output;
  std::string format = "json";
  std::string emit_csv;
  std::string analyses;
  AnalysisOptions opt;
};

void add_graph_flags(CLI::App* cmd, Common& c) {
  auto* in = cmd->add_option("--input", c.input, "Graph document (JSON)");
  auto* pre = cmd->add_option("--preset", c.preset_name, "free:k, freecomm:k, cp:n, t4, star:k, prod:k:c");
  in->excludes(pre);
  pre->excludes(in);
}

void add_output_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--output", c.output, "Write the report here instead of stdout");
  cmd->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
}

DependenceGraph graph_of(const Common& c) {
  if (!c.input.empty()) return load_graph(c.input);
  if (!c.preset_name.empty()) return preset(c.preset_name);
  throw GraphError("one of --input and --preset is required");
}

void emit(const Common& c, const Json& j) {
  std::string text = c.format == "text" ? text_report(j) : j.dump(2) + "\n";
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw ParseError("cannot write '" + c.output + "'");
  out << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

std::set<std::string> parse_analyses(const std::string& csv) {
  std::set<std::string> out;
  std::stringstream ss(csv);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    if (item == "all") return {};
    const auto& names = analysis_names();
    if (std::find(names.begin(), names.end(), item) == names.end())
      throw ShapeError("unknown analysis '" + item + "'");
    out.insert(item);
  }
  return out;
}

int exit_code(const std::string& kind) {
  if (kind == "parse") return 2;
  if (kind == "graph") return 3;
  if (kind == "shape") return 4;
  if (kind == "resource") return 5;
  if (kind == "numeric") return 6;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trace monoid analyzer: generating series, asymptotics and average heights"};
  app.require_subcommand(1);
  Common c;

  auto* analyze = app.add_subcommand("analyze", "Full report");
  auto* coeffs = app.add_subcommand("coefficients", "Table of f(k,l)");
  auto* series = app.add_subcommand("series", "Polynomials and the rational series only");
  auto* census = app.add_subcommand("census", "Brute-force trace counts");
  auto* match = app.add_subcommand("match-table", "Averages for every relation on k letters");

  for (auto* cmd : {analyze, coeffs, series, census}) add_graph_flags(cmd, c);
  for (auto* cmd : {analyze, coeffs, series, census, match}) add_output_flags(cmd, c);
  for (auto* cmd : {analyze, match}) {
    cmd->add_option("--truncate", c.opt.truncate, "Truncation degree")->check(CLI::Range(1, 400));
    cmd->add_option("--precision", c.opt.precision, "Working precision in bits")->check(CLI::Range(32, 8192));
    cmd->add_option("--digits", c.opt.digits, "Decimal digits in the report")->check(CLI::Range(1, 200));
  }
  analyze->add_option("--mc-samples", c.opt.mc_samples, "Monte Carlo replicas")->check(CLI::PositiveNumber);
  analyze->add_option("--mc-length", c.opt.mc_length, "Monte Carlo word length")->check(CLI::PositiveNumber);
  analyze->add_option("--seed", c.opt.seed, "Root seed");
  analyze->add_option("--star-terms", c.opt.star_terms, "Terms of the star series")->check(CLI::Range(1, 2000));
  analyze->add_option("--analyses", c.analyses, "Comma-separated subset of analyses (default all)");
  analyze->add_option("--emit-csv", c.emit_csv, "Write the coefficient table as CSV here");
  coeffs->add_option("--emit-csv", c.emit_csv, "Write the coefficient table as CSV here");

  int max_length = -1;
  int max_height = -1;
  coeffs->add_option("--max-length", max_length, "Largest length (default --truncate)")->check(CLI::NonNegativeNumber);
  coeffs->add_option("--max-height", max_height, "Largest height (default --max-length)")->check(CLI::NonNegativeNumber);
  coeffs->add_option("--truncate", c.opt.truncate, "Truncation degree")->check(CLI::Range(1, 400));
  int census_length = 7;
  census->add_option("--max-length", census_length, "Largest length")->check(CLI::Range(0, 30));

  int letters = 4;
  std::string reference;
  double tolerance = 2e-3;
  match->add_option("--letters", letters, "Alphabet size")->check(CLI::Range(1, 5));
  match->add_option("--reference", reference, "Reference table to match against (JSON)");
  match->add_option("--tolerance", tolerance, "Largest accepted deviation per value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << error_json("usage", e.what()).dump(2) << "\n";
    return 64;
  }

  try {
    c.opt.analyses = parse_analyses(c.analyses);
    if (analyze->parsed()) {
      DependenceGraph g = graph_of(c);
      emit(c, analyze_report(g, c.opt));
      if (!c.emit_csv.empty()) {
        const int n = c.opt.truncate;
        write_file(c.emit_csv, coefficients_csv(coefficients(reduced_representation(g), n, n)));
      }
    } else if (coeffs->parsed()) {
      DependenceGraph g = graph_of(c);
      if (max_length < 0) max_length = c.opt.truncate;
      if (max_height < 0) max_height = max_length;
      emit(c, coefficients_report(g, max_height, max_length));
      if (!c.emit_csv.empty())
        write_file(c.emit_csv, coefficients_csv(coefficients(reduced_representation(g), max_height, max_length)));
    } else if (series->parsed()) {
      emit(c, series_report(graph_of(c), c.opt));
    } else if (census->parsed()) {
      emit(c, census_report(graph_of(c), census_length));
    } else if (match->parsed()) {
      std::vector<ReferenceRow> refs;
      if (!reference.empty()) {
        std::ifstream in(reference);
        if (!in) throw ParseError("cannot read '" + reference + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        refs = parse_reference(ss.str());
      }
      emit(c, match_table_report(letters, c.opt, reference.empty() ? nullptr : &refs, tolerance));
    }
  } catch (const Error& e) {
    std::cout << error_json(e.kind(), e.what()).dump(2) << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cout << error_json("internal", e.what()).dump(2) << "\n";
    return 1;
  }
  return 0;
}
