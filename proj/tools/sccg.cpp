// sccg: build, measure, compare and verify class graphs of finite groups.
//
// Exit codes: 0 success, 1 a verification check failed, 2 bad input,
// 3 a size or search budget was exceeded.

#include <iostream>
#include <cstdio>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sccg/catalog.hpp"
#include "sccg/class_graph.hpp"
#include "sccg/errors.hpp"
#include "sccg/export.hpp"
#include "sccg/metrics.hpp"
#include "sccg/parallel.hpp"
#include "sccg/verify.hpp"

using namespace sccg;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct GraphArgs {
  std::string group;
  std::string relation = "solvable";
  std::string mode = "class";
  bool no_identity = false;
  bool exclude_radical = false;
};

void add_graph_options(CLI::App* cmd, GraphArgs& a) {
  cmd->add_option("--group,-g", a.group, "group spec, e.g. alternating:5 or product:(cyclic:2)x(symmetric:3)")
      ->required();
  cmd->add_option("--relation,-r", a.relation, "abelian, nilpotent or solvable")->capture_default_str();
  cmd->add_option("--mode,-m", a.mode, "class, expanded or element")->capture_default_str();
  cmd->add_flag("--no-identity", a.no_identity, "expanded mode: leave out the identity vertex");
  cmd->add_flag("--exclude-radical", a.exclude_radical, "element mode: leave out the solvable radical");
}

std::unique_ptr<GroupAnalysis> analyse(const std::string& spec, unsigned threads) {
  AnalysisOptions opts;
  opts.threads = threads;
  return std::make_unique<GroupAnalysis>(make_group(spec), opts);
}

ClassGraph build(const GroupAnalysis& a, const std::string& relation, const std::string& mode, const GraphArgs& args) {
  BuildOptions opts;
  opts.include_identity = !args.no_identity;
  opts.exclude_radical = args.exclude_radical;
  return build_graph(a, parse_relation(relation), parse_mode(mode), opts);
}

// "solvable/expanded" -> relation and mode.
std::pair<std::string, std::string> split_side(const std::string& side) {
  const auto slash = side.find('/');
  if (slash == std::string::npos) throw InputError("expected RELATION/MODE, got '" + side + "'");
  return {side.substr(0, slash), side.substr(slash + 1)};
}

std::string class_text(const GroupAnalysis& a) {
  std::ostringstream out;
  out << a.group().label() << ": order " << a.group().order() << ", " << a.classes().count() << " classes, "
      << (a.group_is_solvable() ? "solvable" : "not solvable") << ", |Sol(G)| = " << a.solvable_radical().order()
      << "\n";
  out << "id  name   order  size  representative\n";
  for (const auto& c : a.classes().classes()) {
    char line[96];
    std::snprintf(line, sizeof line, "%-3u %-6s %5u %5zu  %u\n", c.id, c.name.c_str(), c.element_order, c.size(),
                  static_cast<unsigned>(c.representative));
    out << line;
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solvable, nilpotent and commuting conjugacy class graphs of finite groups"};
  app.require_subcommand(1);
  unsigned threads = 0;
  std::uint64_t budget = kDefaultNodeBudget;
  app.add_option("--threads,-j", threads, "worker threads (default: all cores)");
  app.add_option("--budget", budget, "node budget for clique and domination search")->capture_default_str();

  GraphArgs build_args;
  std::string out_path = "-", format = "dot";
  auto* build_cmd = app.add_subcommand("build", "write a graph as DOT, GraphML or JSON");
  add_graph_options(build_cmd, build_args);
  build_cmd->add_option("--out,-o", out_path, "output file, - for stdout")->capture_default_str();
  build_cmd->add_option("--format,-f", format, "dot, graphml or json")
      ->check(CLI::IsMember({"dot", "graphml", "json"}))
      ->capture_default_str();

  GraphArgs metrics_args;
  bool metrics_json_flag = false;
  auto* metrics_cmd = app.add_subcommand("metrics", "print graph invariants");
  add_graph_options(metrics_cmd, metrics_args);
  metrics_cmd->add_flag("--json", metrics_json_flag, "JSON instead of a table");

  std::string suite = "default", corpus_file;
  bool verify_json = false, timings = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the theorem checks over a corpus of groups");
  verify_cmd->add_option("--suite,-s", suite, "default, stretch, or a comma list of check ids or names")
      ->capture_default_str();
  verify_cmd->add_option("--corpus", corpus_file, "file with one group spec per line");
  verify_cmd->add_flag("--json", verify_json, "JSON report");
  verify_cmd->add_flag("--timings", timings, "include per-check seconds in the JSON report");

  GraphArgs compare_args;
  std::string left = "nilpotent/expanded", right = "solvable/expanded", right_group;
  auto* compare_cmd = app.add_subcommand("compare", "compare the edge sets of two graphs of a group");
  add_graph_options(compare_cmd, compare_args);
  compare_cmd->add_option("--left", left, "RELATION/MODE")->capture_default_str();
  compare_cmd->add_option("--right", right, "RELATION/MODE")->capture_default_str();
  compare_cmd->add_option("--right-group", right_group, "group spec for the right graph (default: --group)");

  std::string catalog_group;
  auto* catalog_cmd = app.add_subcommand("catalog", "list corpus groups and checks, or describe one group");
  catalog_cmd->add_option("--group,-g", catalog_group, "print the conjugacy classes of this group");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (threads) set_default_threads(threads);

    if (*build_cmd) {
      auto a = analyse(build_args.group, threads);
      const ClassGraph g = build(*a, build_args.relation, build_args.mode, build_args);
      std::string text;
      if (format == "dot") text = export_dot(g);
      if (format == "graphml") text = export_graphml(g);
      if (format == "json") text = dump(graph_json(g));
      write_text(out_path, text);
      return 0;
    }

    if (*metrics_cmd) {
      auto a = analyse(metrics_args.group, threads);
      const ClassGraph g = build(*a, metrics_args.relation, metrics_args.mode, metrics_args);
      const MetricsReport r = compute_metrics(g.adjacency, budget);
      std::cout << (metrics_json_flag ? dump(metrics_json(g, r)) : metrics_text(g, r));
      return 0;
    }

    if (*verify_cmd) {
      std::vector<std::string> corpus = suite == "stretch" ? stretch_corpus() : default_corpus();
      if (!corpus_file.empty()) corpus = parse_corpus_text(read_text(corpus_file));
      std::vector<std::string> ids;
      if (suite == "default" || suite == "stretch") {
        for (const auto& c : registered_checks()) ids.push_back(c.id);
      } else {
        ids = resolve_check_ids(suite);
      }
      SuiteOptions opts;
      opts.node_budget = budget;
      opts.threads = threads;
      const SuiteReport report = run_suite(corpus, ids, opts, suite);
      std::cout << (verify_json ? dump(report_json(report, timings)) : report_text(report));
      return report.passed() ? 0 : kExitFail;
    }

    if (*compare_cmd) {
      const auto [lrel, lmode] = split_side(left);
      const auto [rrel, rmode] = split_side(right);
      auto a = analyse(compare_args.group, threads);
      const ClassGraph lg = build(*a, lrel, lmode, compare_args);
      std::unique_ptr<GroupAnalysis> other;
      if (!right_group.empty() && canonical_spec(right_group) != canonical_spec(compare_args.group)) {
        other = analyse(right_group, threads);
      }
      const ClassGraph rg = build(other ? *other : *a, rrel, rmode, compare_args);
      const GraphComparison c = compare_graphs(lg, rg);
      std::string verdict = "incomparable";
      if (c.equal()) {
        verdict = "equal";
      } else if (c.left_in_right()) {
        verdict = "left is a proper spanning subgraph of right";
      } else if (c.right_in_left()) {
        verdict = "right is a proper spanning subgraph of left";
      }
      std::cout << lg.title() << " vs " << rg.title() << " of " << lg.group << ": " << verdict << "\n";
      std::cout << "edges " << lg.adjacency.edge_count() << " vs " << rg.adjacency.edge_count() << ", only left "
                << c.only_left << ", only right " << c.only_right << "\n";
      if (c.witness) {
        const auto [u, v] = *c.witness;
        std::cout << "witness: " << lg.vertices[u].label() << " (" << lg.vertices[u].element << ") -- "
                  << lg.vertices[v].label() << " (" << lg.vertices[v].element << "), only in "
                  << (c.witness_in_left ? "left" : "right") << "\n";
      }
      return 0;
    }

    if (*catalog_cmd) {
      if (!catalog_group.empty()) {
        std::cout << class_text(*analyse(catalog_group, threads));
        return 0;
      }
      std::cout << "default corpus:\n";
      for (const auto& s : default_corpus()) std::cout << "  " << s << "\n";
      std::cout << "bundled groups:\n";
      for (const auto& n : bundled_names()) std::cout << "  named:" << n << "\n";
      std::cout << "checks:\n";
      for (const auto& c : registered_checks()) std::cout << "  " << c.id << " " << c.name << "\n";
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "sccg: " << e.what() << "\n";
    return kExitInput;
  } catch (const IoError& e) {
    std::cerr << "sccg: " << e.what() << "\n";
    return kExitInput;
  } catch (const BudgetError& e) {
    std::cerr << "sccg: budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  }
  return 0;
}
