#include "sccg/class_graph.hpp"

#include "sccg/errors.hpp"
#include "sccg/parallel.hpp"

namespace sccg {

namespace {

Vertex make_vertex(const ClassPartition& cp, Element x) {
  const ConjugacyClass& c = cp.at(cp.class_of(x));
  Vertex v;
  v.element = x;
  v.class_id = c.id;
  v.element_order = c.element_order;
  v.class_size = c.size();
  v.class_name = c.name;
  return v;
}

ClassGraph skeleton(const GroupAnalysis& a, Relation rel, GraphMode mode) {
  ClassGraph g;
  g.mode = mode;
  g.relation = rel;
  g.group = a.group().label();
  return g;
}

// Lists class pairs (c, d) with 1 <= c < d, tests them in parallel and
// returns the class graph adjacency.
template <typename Test>
SimpleGraph class_adjacency(const GroupAnalysis& a, Test&& test) {
  const std::size_t k = a.classes().count();
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned c = 1; c < k; ++c) {
    for (unsigned d = c + 1; d < k; ++d) pairs.emplace_back(c, d);
  }
  std::vector<char> hit(pairs.size(), 0);
  parallel_for(pairs.size(), a.threads(), [&](std::size_t i) { hit[i] = test(pairs[i].first, pairs[i].second); });
  SimpleGraph adj(k > 0 ? k - 1 : 0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (hit[i]) adj.add_edge(pairs[i].first - 1, pairs[i].second - 1);
  }
  return adj;
}

}  // namespace

GraphMode parse_mode(std::string_view name) {
  if (name == "class") return GraphMode::kClass;
  if (name == "expanded") return GraphMode::kExpanded;
  if (name == "element") return GraphMode::kElement;
  throw InputError("unknown graph mode '" + std::string(name) + "' (expected class, expanded or element)");
}

std::string_view mode_name(GraphMode mode) {
  switch (mode) {
    case GraphMode::kClass:
      return "class";
    case GraphMode::kExpanded:
      return "expanded";
    case GraphMode::kElement:
      return "element";
  }
  return "class";
}

std::string Vertex::label() const {
  return "o" + std::to_string(element_order) + "_s" + std::to_string(class_size) + "_c" + std::to_string(class_id);
}

std::string ClassGraph::title() const {
  switch (mode) {
    case GraphMode::kClass:
      return std::string(relation_graph_name(relation));
    case GraphMode::kExpanded:
      return "expanded " + std::string(relation_graph_name(relation));
    case GraphMode::kElement:
      return "element " + std::string(relation_name(relation));
  }
  return {};
}

bool classes_adjacent(const GroupAnalysis& a, unsigned c, unsigned d, Relation rel) {
  const ClassPartition& cp = a.classes();
  if (c >= cp.count() || d >= cp.count()) throw InputError("class id out of range");
  if (c == 0 || d == 0) throw InputError("the identity class is not a vertex");
  if (c == d) throw InputError("classes_adjacent needs two distinct classes");
  const Element x = cp.at(c).representative;
  auto orbit_min = a.centralizer_orbits(c);
  for (Element y : cp.at(d).members) {
    if (orbit_min[y] != y) continue;
    if (a.related(x, y, rel)) return true;
  }
  return false;
}

ClassGraph build_class_graph(const GroupAnalysis& a, Relation rel) {
  ClassGraph g = skeleton(a, rel, GraphMode::kClass);
  const ClassPartition& cp = a.classes();
  for (unsigned c = 1; c < cp.count(); ++c) g.vertices.push_back(make_vertex(cp, cp.at(c).representative));
  g.adjacency = class_adjacency(a, [&](unsigned c, unsigned d) { return classes_adjacent(a, c, d, rel); });
  return g;
}

ClassGraph build_class_graph_naive(const GroupAnalysis& a, Relation rel) {
  ClassGraph g = skeleton(a, rel, GraphMode::kClass);
  const ClassPartition& cp = a.classes();
  const SolvabilityOptions opts = a.options().solvability;
  for (unsigned c = 1; c < cp.count(); ++c) g.vertices.push_back(make_vertex(cp, cp.at(c).representative));
  g.adjacency = class_adjacency(a, [&](unsigned c, unsigned d) {
    for (Element x : cp.at(c).members) {
      for (Element y : cp.at(d).members) {
        if (pair_satisfies(a.group(), x, y, rel, opts)) return true;
      }
    }
    return false;
  });
  return g;
}

ClassGraph build_expanded_graph(const GroupAnalysis& a, Relation rel, const BuildOptions& opts) {
  ClassGraph g = skeleton(a, rel, GraphMode::kExpanded);
  const ClassPartition& cp = a.classes();
  const ClassGraph cg = build_class_graph(a, rel);
  const std::size_t n = a.group().order();
  for (Element x = opts.include_identity ? 0 : 1; x < n; ++x) g.vertices.push_back(make_vertex(cp, x));
  g.adjacency = SimpleGraph(g.vertices.size());
  auto joined = [&](unsigned c, unsigned d) { return c == 0 || d == 0 || c == d || cg.adjacency.adjacent(c - 1, d - 1); };
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      if (joined(g.vertices[i].class_id, g.vertices[j].class_id)) g.adjacency.add_edge(i, j);
    }
  }
  return g;
}

ClassGraph build_element_graph(const GroupAnalysis& a, Relation rel, const BuildOptions& opts) {
  ClassGraph g = skeleton(a, rel, GraphMode::kElement);
  const ClassPartition& cp = a.classes();
  const FiniteGroup& grp = a.group();
  const std::size_t n = grp.order();
  std::vector<Element> keep;
  for (Element x = 0; x < n; ++x) {
    if (opts.exclude_radical && a.solvable_radical().contains(x)) continue;
    keep.push_back(x);
    g.vertices.push_back(make_vertex(cp, x));
  }

  // table[c][y] for y the least element of its orbit under the centralizer
  // of class c's representative: whether <rep, y> has the property. Any pair
  // (x, y) conjugates to one of these.
  std::vector<std::vector<char>> table(cp.count());
  parallel_for(cp.count(), a.threads(), [&](std::size_t c) {
    const unsigned id = static_cast<unsigned>(c);
    const Element rep = cp.at(id).representative;
    auto orbit_min = a.centralizer_orbits(id);
    std::vector<char>& t = table[c];
    t.assign(n, 0);
    for (Element y = 0; y < n; ++y) {
      if (orbit_min[y] == y) t[y] = a.related(rep, y, rel) ? 1 : 0;
    }
  });

  g.adjacency = SimpleGraph(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const Element x = keep[i];
    const unsigned cx = cp.class_of(x);
    const Element t = cp.to_representative(x);
    auto orbit_min = a.centralizer_orbits(cx);
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      const Element y = grp.conjugate(keep[j], t);
      if (table[cx][orbit_min[y]]) g.adjacency.add_edge(i, j);
    }
  }
  return g;
}

ClassGraph build_graph(const GroupAnalysis& a, Relation rel, GraphMode mode, const BuildOptions& opts) {
  switch (mode) {
    case GraphMode::kClass:
      return build_class_graph(a, rel);
    case GraphMode::kExpanded:
      return build_expanded_graph(a, rel, opts);
    case GraphMode::kElement:
      return build_element_graph(a, rel, opts);
  }
  return build_class_graph(a, rel);
}

GraphComparison compare_graphs(const ClassGraph& left, const ClassGraph& right) {
  if (left.group != right.group) {
    throw InputError("graphs come from different groups: " + left.group + " and " + right.group);
  }
  const bool left_class = left.mode == GraphMode::kClass;
  const bool right_class = right.mode == GraphMode::kClass;
  if (left_class != right_class) throw InputError("cannot compare a class graph with an element-level graph");
  bool same_vertices = left.size() == right.size();
  for (std::size_t i = 0; same_vertices && i < left.size(); ++i) {
    same_vertices = left.vertices[i].element == right.vertices[i].element;
  }
  if (!same_vertices) throw InputError("graphs have different vertex sets");

  GraphComparison out;
  const std::size_t n = left.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const bool l = left.adjacency.adjacent(u, v);
      const bool r = right.adjacency.adjacent(u, v);
      if (l == r) continue;
      (l ? out.only_left : out.only_right)++;
      if (!out.witness) {
        out.witness = {u, v};
        out.witness_in_left = l;
      }
    }
  }
  return out;
}

bool graphs_equal(const ClassGraph& a, const ClassGraph& b) { return compare_graphs(a, b).equal(); }

bool is_spanning_subgraph(const ClassGraph& a, const ClassGraph& b) { return compare_graphs(a, b).left_in_right(); }

}  // namespace sccg
