#include <doctest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"
#include "tracepar/errors.hpp"
#include "tracepar/lambdastar.hpp"
#include "tracepar/report.hpp"

using namespace tracepar;

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(TRACEPAR_DATA_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string parse_message(const std::string& doc) {
  try {
    parse_graph(doc);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

AnalysisOptions quick() {
  AnalysisOptions o;
  o.mc_samples = 8;
  o.mc_length = 500;
  o.ladder_cap = 1e4;
  o.star_terms = 40;
  return o;
}

}  // namespace

TEST_CASE("graph documents") {
  DependenceGraph g = parse_graph(R"({"letters": ["a", "b", "c"], "independence": [["a", "b"]]})");
  CHECK(g.size() == 3);
  CHECK_FALSE(g.depends(0, 1));
  CHECK(g.depends(1, 2));
  DependenceGraph d = parse_graph(R"({"letters": ["x", "y"], "dependence": []})");
  CHECK(is_free_commutative(d));

  CHECK(parse_message("{\"letters\": [\"a\",\n  ]}").find("line 2") != std::string::npos);
  CHECK(parse_message(R"({"letters": ["a"], "dependence": [], "colour": 1})").find("/colour") != std::string::npos);
  CHECK(parse_message(R"({"letters": ["a"], "dependence": [], "independence": []})") != "");
  CHECK(parse_message(R"({"letters": ["a"]})") != "");
  CHECK(parse_message(R"({"letters": [1], "dependence": []})").find("/letters/0") != std::string::npos);
  CHECK(parse_message(R"({"letters": ["a"], "dependence": [["a"]]})").find("/dependence/0") != std::string::npos);
  CHECK(parse_message("[]") != "");
  CHECK_THROWS_AS(parse_graph(R"({"letters": ["a"], "dependence": [["a", "q"]]})"), GraphError);
  CHECK_THROWS_AS(load_graph("/nonexistent/graph.json"), ParseError);
}

TEST_CASE("presets") {
  CHECK(isomorphic(preset("t4"), t4()));
  CHECK(isomorphic(preset("cp:3"), t4()));
  CHECK(is_free(preset("free:3")));
  CHECK(is_free_commutative(preset("freecomm:4")));
  CHECK(star_center(preset("star:5")));
  CHECK(preset("prod:2:3").size() == 6);
  for (const char* bad : {"", "t5", "cp", "cp:0", "cp:x", "free:2:2", "prod:2", "cp:2x"})
    CHECK_THROWS_AS(preset(bad), GraphError);
}

TEST_CASE("reports") {
  AnalysisOptions o = quick();
  Json a = analyze_report(t4(), o);
  CHECK(a["lambda_cf"]["value"] == "10/13");
  CHECK(a["mobius"] == mobius_polynomial(t4()).to_string("y"));
  CHECK(a["k_L"] == 1);
  CHECK(a["lambda_M"]["exact"] == false);
  CHECK(a["lambda_M"]["certified"] == true);
  CHECK(a["partition"]["coloration"] == Json::parse("[[5, 2], [6, 3]]"));
  CHECK(a["coefficients"]["f"][3][5] == "126");
  CHECK(a.dump() == analyze_report(t4(), o).dump());

  AnalysisOptions only = o;
  only.analyses = {"lambda_cf"};
  Json b = analyze_report(free_commutative(2), only);
  CHECK(b.contains("lambda_cf"));
  CHECK_FALSE(b.contains("lambda_M"));
  CHECK(b["lambda_cf_absorption"] == Json::parse(R"(["1/2", "1/2"])"));

  Json c = coefficients_report(t4(), 8, 8);
  CHECK(c["f"][6][8] == "71910");
  CHECK(coefficients_csv(coefficients(reduced_representation(free_monoid(1)), 1, 1)) ==
        "height,length,count\n0,0,1\n0,1,0\n1,0,0\n1,1,1\n");
  Json census = census_report(t4(), 5);
  CHECK(census["words_agree"] == true);
  CHECK(census["series_agree"] == true);

  std::string text = text_report(Json::parse(R"({"a": {"bb": 1}, "c": "x"})"));
  CHECK(text.find("a.bb") != std::string::npos);
  CHECK(text.find("c") != std::string::npos);
  CHECK(error_json("graph", "no")["error"]["kind"] == "graph");
}

TEST_CASE("reference table matching") {
  std::vector<ReferenceRow> refs = parse_reference(read_data("table_iiib.json"));
  REQUIRE(refs.size() == 10);
  std::vector<TableRow> rows = table_rows(4, 128);
  REQUIRE(rows.size() == 10);
  auto m = match_rows(rows, refs, 2e-3);
  REQUIRE(m);
  CHECK(m->count == 1);
  CHECK_FALSE(match_rows(rows, refs, 1e-6));
  std::vector<ReferenceRow> short_refs(refs.begin(), refs.begin() + 9);
  CHECK_FALSE(match_rows(rows, short_refs, 2e-3));
  CHECK_THROWS_AS(parse_reference(R"({"rows": [{"lambda_M": 1}]})"), ParseError);
}
