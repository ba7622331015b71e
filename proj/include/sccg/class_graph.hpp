#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sccg/analysis.hpp"
#include "sccg/graph.hpp"
#include "sccg/relation.hpp"

namespace sccg {

// class: one vertex per nontrivial conjugacy class.
// expanded: one vertex per element; distinct elements are adjacent when their
//   classes are equal or adjacent in the class graph.
// element: one vertex per element; x ~ y when <x, y> itself has the property.
enum class GraphMode { kClass, kExpanded, kElement };

GraphMode parse_mode(std::string_view name);
std::string_view mode_name(GraphMode mode);

struct Vertex {
  Element element = kIdentity;  // class representative in class mode
  unsigned class_id = 0;
  unsigned element_order = 1;
  std::size_t class_size = 1;
  std::string class_name;

  // "o<order>_s<class size>_c<class id>"
  std::string label() const;
};

struct ClassGraph {
  GraphMode mode = GraphMode::kClass;
  Relation relation = Relation::kSolvable;
  std::string group;  // canonical spec of the group
  std::vector<Vertex> vertices;
  SimpleGraph adjacency;

  std::size_t size() const { return vertices.size(); }
  // "SCC", "expanded NCC", "element solvable" and so on.
  std::string title() const;
};

struct BuildOptions {
  // Expanded mode only. The identity is a vertex by default.
  bool include_identity = true;
  // Element mode only. Drops the solvable radical from the vertex set.
  bool exclude_radical = false;
};

// Whether some x in class c and y in class d satisfy rel. Fixes x at the
// representative of c and tries y over one element per orbit of its
// centralizer on d, in increasing order, stopping at the first success.
bool classes_adjacent(const GroupAnalysis& a, unsigned c, unsigned d, Relation rel);

ClassGraph build_class_graph(const GroupAnalysis& a, Relation rel);
ClassGraph build_expanded_graph(const GroupAnalysis& a, Relation rel, const BuildOptions& opts = {});
ClassGraph build_element_graph(const GroupAnalysis& a, Relation rel, const BuildOptions& opts = {});
ClassGraph build_graph(const GroupAnalysis& a, Relation rel, GraphMode mode, const BuildOptions& opts = {});

// Class graph from every pair x in C, y in D, uncached. Reference for the
// optimized builder.
ClassGraph build_class_graph_naive(const GroupAnalysis& a, Relation rel);

struct GraphComparison {
  std::size_t only_left = 0;   // edges of the left graph missing on the right
  std::size_t only_right = 0;
  // First differing edge in vertex order, as vertex ids.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  bool witness_in_left = false;

  bool equal() const { return only_left == 0 && only_right == 0; }
  bool left_in_right() const { return only_left == 0; }
  bool right_in_left() const { return only_right == 0; }
};

// Both graphs must come from the same group and have the same vertices. Class
// graphs compare only with class graphs; expanded and element graphs compare
// with each other. Anything else is an InputError.
GraphComparison compare_graphs(const ClassGraph& left, const ClassGraph& right);
bool graphs_equal(const ClassGraph& a, const ClassGraph& b);
// Edges of a are a subset of edges of b.
bool is_spanning_subgraph(const ClassGraph& a, const ClassGraph& b);

}  // namespace sccg
