#include <algorithm>
#include <fstream>
#include <numeric>

#include "doctest.h"
#include "sccg/catalog.hpp"
#include "sccg/class_graph.hpp"
#include "sccg/conjugacy.hpp"
#include "sccg/errors.hpp"
#include "sccg/export.hpp"
#include "sccg/field.hpp"
#include "sccg/subgroup.hpp"

using namespace sccg;

namespace {

std::vector<std::size_t> sorted_class_sizes(const FiniteGroup& g) {
  std::vector<std::size_t> out;
  const ClassPartition cp = conjugacy_classes(g);
  for (const auto& c : cp.classes()) out.push_back(c.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::string error_of(const std::string& spec) {
  try {
    make_group(spec);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

std::string source_path(const std::string& rel) { return std::string(SCCG_SOURCE_DIR) + "/" + rel; }

}  // namespace

TEST_CASE("spec grammar round-trips") {
  for (const char* s : {"cyclic:12", "dihedral:5", "quaternion:16", "symmetric:4", "alternating:5", "psl2:8",
                        "sl2:5", "named:M10", "product:(cyclic:2)x(alternating:5)",
                        "product:(product:(cyclic:2)x(cyclic:2))x(symmetric:3)"}) {
    CHECK(canonical_spec(s) == s);
    CHECK(GroupSpec::parse(GroupSpec::parse(s).str()).str() == s);
  }
  CHECK(make_group("product:(cyclic:2)x(alternating:5)")->label() == "product:(cyclic:2)x(alternating:5)");
}

TEST_CASE("spec errors carry a column") {
  CHECK(error_of("psl2:6").find("column 6") != std::string::npos);
  CHECK(error_of("psl2:64").find("prime power") != std::string::npos);
  CHECK_FALSE(error_of("dihedral:2").empty());
  CHECK_FALSE(error_of("quaternion:12").empty());
  CHECK_FALSE(error_of("cyclic:0").empty());
  CHECK_FALSE(error_of("bogus:3").empty());
  CHECK_FALSE(error_of("cyclic").empty());
  CHECK_FALSE(error_of("cyclic:1x").empty());
  CHECK_FALSE(error_of("product:(cyclic:2)x").empty());
  CHECK_FALSE(error_of("product:(cyclic:2)x(cyclic:3").empty());
  CHECK_FALSE(error_of("named:M11").empty());
}

TEST_CASE("catalog groups") {
  auto psl24 = make_group("psl2:4");
  CHECK(psl24->order() == 60);
  CHECK(sorted_class_sizes(*psl24) == sorted_class_sizes(*make_group("alternating:5")));

  auto psl27 = make_group("psl2:7");
  CHECK(psl27->order() == 168);
  CHECK(conjugacy_classes(*psl27).count() == 6);

  auto s3 = make_group("symmetric:3");
  CHECK(s3->order() == 6);
  CHECK(conjugacy_classes(*s3).count() == 3);

  auto q8 = make_group("quaternion:8");
  auto orders = q8->element_orders();
  CHECK(std::count(orders.begin(), orders.end(), 2U) == 1);
  CHECK(std::count(orders.begin(), orders.end(), 4U) == 6);

  auto sl25 = make_group("sl2:5");
  CHECK(sl25->order() == 120);
  orders = sl25->element_orders();
  CHECK(std::count(orders.begin(), orders.end(), 2U) == 1);
}

TEST_CASE("psl2 orders") {
  for (unsigned q : {4U, 5U, 7U, 8U, 9U, 11U, 13U, 17U}) {
    const std::size_t expect = static_cast<std::size_t>(q) * (q * q - 1) / std::gcd(2U, q - 1);
    CHECK_MESSAGE(make_group("psl2:" + std::to_string(q))->order() == expect, q);
  }
}

TEST_CASE("class counts") {
  for (unsigned n = 3; n <= 12; ++n) {
    const std::size_t expect = (n - 1 + 1) / 2 + (n % 2 ? 1 : 2) + 1;
    CHECK_MESSAGE(conjugacy_classes(*make_group("dihedral:" + std::to_string(n))).count() == expect, n);
  }
  const std::vector<std::pair<const char*, std::size_t>> known = {
      {"quaternion:16", 7}, {"quaternion:32", 11}, {"symmetric:5", 7}, {"symmetric:6", 11},
      {"alternating:4", 4}, {"alternating:6", 7}, {"psl2:8", 9}, {"psl2:9", 7},
      {"psl2:11", 8}, {"psl2:13", 9}, {"psl2:17", 11}, {"sl2:5", 9},
      {"named:M10", 8}, {"product:(cyclic:2)x(alternating:5)", 10}, {"product:(cyclic:3)x(symmetric:4)", 15}};
  for (const auto& [spec, k] : known) CHECK_MESSAGE(conjugacy_classes(*make_group(spec)).count() == k, spec);
}

TEST_CASE("M10") {
  auto m10 = make_group("named:M10");
  CHECK(m10->order() == 720);
  std::map<unsigned, std::size_t> hist;
  for (unsigned o : m10->element_orders()) hist[o]++;
  CHECK(hist == std::map<unsigned, std::size_t>{{1, 1}, {2, 45}, {3, 80}, {4, 270}, {5, 144}, {8, 180}});
  CHECK_FALSE(is_solvable(whole_group(*m10)));

  FiniteGroup from_file = parse_perm_file(source_path("data/m10.perm"));
  CHECK(from_file.order() == 720);
  std::ifstream in(source_path("data/m10.perm"));
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == bundled_generators("M10"));
}

TEST_CASE("permutation files") {
  const GroupLimits limits = default_limits();
  CHECK(parse_perm_text("perm 3\n(1 2 3)\n", limits).order() == 3);
  CHECK(parse_perm_text("# comment\nperm 5\n(1 2 3 4 5)\n(1 2)(3 4)  # trailing\n", limits).order() == 60);
  CHECK_THROWS_AS(parse_perm_text("perm 3\n(1 2 1)\n", limits), InputError);
  CHECK_THROWS_AS(parse_perm_text("perm 3\n(1 4)\n", limits), InputError);
  CHECK_THROWS_AS(parse_perm_text("perm 3\n", limits), InputError);
  CHECK_THROWS_AS(parse_perm_text("(1 2)\n", limits), InputError);
  CHECK_THROWS_AS(parse_perm_file("/nonexistent/x.perm"), InputError);
  GroupLimits tiny;
  tiny.max_table_order = 10;
  tiny.max_perm_order = 50;
  CHECK_THROWS_AS(parse_perm_text("perm 5\n(1 2 3 4 5)\n(1 2)(3 4)\n", tiny), BudgetError);
}

TEST_CASE("table files") {
  CHECK(parse_table_text("1\n0\n").order() == 1);
  CHECK(parse_table_text("2\n0 1\n1 0\n").order() == 2);
  FiniteGroup v4 = parse_table_text("4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n");
  CHECK(v4.order() == 4);
  for (Element x = 1; x < 4; ++x) CHECK(v4.element_order(x) == 2);

  CHECK_THROWS_AS(parse_table_text("2\n0 1\n1 1\n"), InputError);
  CHECK_THROWS_AS(parse_table_text("2\n1 0\n0 1\n"), InputError);
  CHECK_THROWS_AS(parse_table_text("2\n0 1\n1 0\n5\n"), InputError);
  CHECK_THROWS_AS(parse_table_text("2\n0 1\n1 2\n"), InputError);
  // Latin square with identity that is not associative (a loop of order 5).
  std::string err;
  try {
    parse_table_text("5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n");
  } catch (const InputError& e) {
    err = e.what();
  }
  CHECK(err.find("associativity") != std::string::npos);
}

TEST_CASE("table export round-trips") {
  for (const char* spec : {"psl2:7", "dihedral:6", "product:(cyclic:3)x(symmetric:4)"}) {
    auto g = make_group(spec);
    FiniteGroup back = parse_table_text(table_text(*g));
    REQUIRE(back.order() == g->order());
    for (Element a = 0; a < g->order(); ++a) {
      for (Element b = 0; b < g->order(); ++b) {
        if (back.mul(a, b) != g->mul(a, b)) FAIL(spec);
      }
    }
  }
}

TEST_CASE("finite fields") {
  for (unsigned q : {2U, 3U, 4U, 5U, 8U, 9U, 16U, 25U, 27U, 32U, 49U, 64U, 81U, 128U}) {
    FieldTable f = FieldTable::make(q);
    CHECK(f.size() == q);
    CHECK(f.satisfies_axioms());
    for (unsigned a = 1; a < q; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  }
  FieldTable f4 = FieldTable::make(4);
  CHECK(f4.characteristic() == 2);
  CHECK(f4.degree() == 2);
  CHECK(f4.add(1, 1) == 0);
  CHECK_THROWS_AS(FieldTable::make(6), InputError);
  CHECK_THROWS_AS(f4.inv(0), InputError);
  CHECK(prime_power_decomposition(27) == std::pair<unsigned, unsigned>{3, 3});
  CHECK(prime_power_decomposition(12) == std::pair<unsigned, unsigned>{0, 0});
}

TEST_CASE("DOT export") {
  GroupAnalysis s3(make_group("symmetric:3"));
  CHECK(export_dot(build_class_graph(s3, Relation::kSolvable)) ==
        "graph \"SCC symmetric:3\" {\n"
        "  v0 [label=\"o2_s3_c1\"];\n"
        "  v1 [label=\"o3_s2_c2\"];\n"
        "  v0 -- v1;\n"
        "}\n");
  GroupAnalysis c1(make_group("cyclic:1"));
  CHECK(export_dot(build_class_graph(c1, Relation::kSolvable)) == "graph \"SCC cyclic:1\" {\n}\n");

  GroupAnalysis a5(make_group("alternating:5"));
  const ClassGraph g = build_class_graph(a5, Relation::kSolvable);
  CHECK(export_dot(g) == read_text(source_path("tests/golden/scc_alternating5.dot")));
  const std::string graphml = export_graphml(g);
  CHECK(std::count(graphml.begin(), graphml.end(), '\n') == 2 + 6 + 1 + 4 + 4 + 2);
  CHECK(graphml.find("<edge source=\"v0\" target=\"v1\"/>") != std::string::npos);
}

TEST_CASE("JSON export") {
  GroupAnalysis a5(make_group("alternating:5"));
  const ClassGraph g = build_class_graph(a5, Relation::kSolvable);
  const Json m = metrics_json(g, compute_metrics(g.adjacency));
  CHECK(m["girth"] == 3);
  CHECK(m["clique_number"] == 3);
  CHECK(m["domination_number"] == 1);
  CHECK(m["diameter"] == 2);
  CHECK(m["dominant_classes"] == Json::array({"2a"}));
  CHECK(dump(m) == read_text(source_path("tests/golden/metrics_alternating5.json")));

  GroupAnalysis c1(make_group("cyclic:1"));
  const ClassGraph empty = build_class_graph(c1, Relation::kSolvable);
  const Json e = metrics_json(empty, compute_metrics(empty.adjacency));
  CHECK(e["diameter"].is_null());
  CHECK(e["girth"] == "inf");
  CHECK(e["component_count"] == 0);

  const Json gj = graph_json(g);
  CHECK(gj["vertices"].size() == 4);
  CHECK(gj["edges"].size() == 4);
  CHECK_THROWS_AS(write_text("/nonexistent-dir/x.dot", "x"), IoError);
}
