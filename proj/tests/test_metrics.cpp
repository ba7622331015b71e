#include <algorithm>
#include <random>

#include "doctest.h"
#include "sccg/catalog.hpp"
#include "sccg/class_graph.hpp"
#include "sccg/errors.hpp"
#include "sccg/metrics.hpp"

using namespace sccg;

namespace {

SimpleGraph complete(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

SimpleGraph path(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

SimpleGraph cycle(std::size_t n) {
  SimpleGraph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

SimpleGraph random_graph(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  SimpleGraph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

// Replaces vertex i by a clique of size sizes[i]; blocks of adjacent vertices
// are joined completely. Produces many closed twins.
SimpleGraph blow_up(const SimpleGraph& g, const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> owner;
  for (std::size_t v = 0; v < g.size(); ++v) owner.insert(owner.end(), sizes[v], v);
  SimpleGraph out(owner.size());
  for (std::size_t a = 0; a < owner.size(); ++a) {
    for (std::size_t b = a + 1; b < owner.size(); ++b) {
      if (owner[a] == owner[b] || g.adjacent(owner[a], owner[b])) out.add_edge(a, b);
    }
  }
  return out;
}

// Brute-force references over all vertex subsets.
std::size_t brute_clique(const SimpleGraph& g) {
  const std::size_t n = g.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u) {
      for (std::size_t v = u + 1; v < n && ok; ++v) {
        if ((mask >> u & 1U) && (mask >> v & 1U) && !g.adjacent(u, v)) ok = false;
      }
    }
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
  }
  return best;
}

std::size_t brute_domination(const SimpleGraph& g) {
  const std::size_t n = g.size();
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      bool hit = mask >> v & 1U;
      for (std::size_t u = 0; u < n && !hit; ++u) hit = (mask >> u & 1U) && g.adjacent(u, v);
      ok = hit;
    }
    if (ok) best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
  }
  return best;
}

std::vector<std::vector<unsigned>> floyd(const SimpleGraph& g) {
  const std::size_t n = g.size();
  const unsigned inf = 1000;
  std::vector<std::vector<unsigned>> d(n, std::vector<unsigned>(n, inf));
  for (std::size_t u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (g.adjacent(u, v)) d[u][v] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

Length brute_diameter(const SimpleGraph& g) {
  unsigned best = 0;
  for (const auto& row : floyd(g)) {
    for (unsigned x : row) {
      if (x >= 1000) return Length::infinite();
      best = std::max(best, x);
    }
  }
  return best;
}

// Shortest cycle through an edge (u, v) is 1 + d(u, v) with that edge removed.
Length brute_girth(const SimpleGraph& g) {
  unsigned best = 1000;
  for (auto [u, v] : g.edges()) {
    SimpleGraph h = g;
    h.remove_edge(u, v);
    best = std::min(best, floyd(h)[u][v] + 1);
  }
  return best >= 1000 ? Length::infinite() : Length(best);
}

}  // namespace

TEST_CASE("Length ordering and text") {
  CHECK(Length(3) < Length::infinite());
  CHECK(Length(2) < Length(3));
  CHECK(Length::infinite() == Length::infinite());
  CHECK(Length::infinite().str() == "inf");
  CHECK(Length(7).str() == "7");
}

TEST_CASE("named small graphs") {
  CHECK(diameter(complete(4)) == Length(1));
  CHECK(girth(complete(2)) == Length::infinite());
  CHECK(girth(complete(3)) == Length(3));
  CHECK(girth(cycle(7)) == Length(7));
  CHECK(diameter(cycle(7)) == Length(3));
  CHECK(diameter(path(5)) == Length(4));
  CHECK(clique_number(SimpleGraph(0)) == 0);
  CHECK(domination_number(complete(5)) == 1);
  CHECK(dominant_vertices(complete(3)) == std::vector<std::size_t>{0, 1, 2});
  CHECK(domination_number(path(7)) == 3);
  CHECK_THROWS_AS(diameter(SimpleGraph(0)), InputError);
  CHECK(distance(path(4), 2, 2) == Length(0));
  CHECK(distance(SimpleGraph(3), 0, 2) == Length::infinite());
  CHECK_THROWS_AS(distance(path(3), 0, 5), InputError);

  SimpleGraph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  CHECK_FALSE(is_connected(two));
  CHECK(components(two).size() == 2);
  CHECK(diameter(two) == Length::infinite());
  CHECK(isolated_vertices(SimpleGraph(2)) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("metrics of the A5 class graph") {
  auto a5 = make_group("alternating:5");
  GroupAnalysis an(a5);
  ClassGraph g = build_class_graph(an, Relation::kSolvable);
  MetricsReport r = compute_metrics(g.adjacency);
  CHECK(r.connected);
  REQUIRE(r.diameter);
  CHECK(*r.diameter == Length(2));
  CHECK(r.girth == Length(3));
  CHECK(r.clique_number == 3);
  CHECK(r.domination_number == 1);
  REQUIRE(r.dominant_vertices.size() == 1);
  CHECK(g.vertices[r.dominant_vertices[0]].class_name == "2a");
  std::size_t v3 = 0, v5 = 0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.vertices[v].class_name == "3a") v3 = v;
    if (g.vertices[v].class_name == "5a") v5 = v;
  }
  CHECK(distance(g.adjacency, v3, v5) == Length(2));
}

TEST_CASE("clique and domination of group graphs") {
  GroupAnalysis s4(make_group("symmetric:4"));
  CHECK(clique_number(build_class_graph(s4, Relation::kSolvable).adjacency) == 4);
  GroupAnalysis sl(make_group("sl2:5"));
  CHECK(domination_number(build_class_graph(sl, Relation::kSolvable).adjacency) == 1);
  CHECK(clique_lower_bound_orders(*make_group("cyclic:12")) == 5);
  CHECK(clique_lower_bound_orders(*make_group("cyclic:7")) == 1);
  CHECK(clique_lower_bound_orders(*make_group("symmetric:3")) == 1);
  CHECK(clique_lower_bound_orders(*make_group("cyclic:6")) == 3);
}

TEST_CASE("property: metrics agree with brute force on random graphs") {
  std::mt19937 rng(99);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 12;
    const double p = 0.1 + 0.8 * (rng() % 100) / 100.0;
    SimpleGraph g = random_graph(rng, n, p);
    CHECK(clique_number(g) == brute_clique(g));
    CHECK(domination_number(g) == brute_domination(g));
    CHECK(girth(g) == brute_girth(g));
    CHECK(diameter(g) == brute_diameter(g));
    const auto clique = maximum_clique(g);
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) CHECK(g.adjacent(clique[i], clique[j]));
    }
  }
}

TEST_CASE("property: closed-twin reduction preserves invariants") {
  std::mt19937 rng(5);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 1 + rng() % 6;
    SimpleGraph base = random_graph(rng, n, 0.5);
    std::vector<std::size_t> sizes(n);
    std::size_t total = 0;
    for (auto& s : sizes) total += (s = 1 + rng() % 3);
    if (total > 14) continue;
    SimpleGraph g = blow_up(base, sizes);
    CHECK(clique_number(g) == brute_clique(g));
    CHECK(domination_number(g) == brute_domination(g));
    CHECK(diameter(g) == brute_diameter(g));
    CHECK(girth(g) == brute_girth(g));
  }
}

TEST_CASE("node budget") {
  std::mt19937 rng(1);
  SimpleGraph g = random_graph(rng, 60, 0.5);
  CHECK_THROWS_AS(clique_number(g, 3), BudgetError);
  CHECK_THROWS_AS(domination_number(g, 2), BudgetError);
}

TEST_CASE("report invariants") {
  std::mt19937 rng(17);
  for (int t = 0; t < 50; ++t) {
    SimpleGraph g = random_graph(rng, 1 + rng() % 20, 0.6);
    MetricsReport r = compute_metrics(g);
    if (r.is_complete) {
      CHECK(*r.diameter <= Length(1));
      CHECK(r.clique_number == r.vertex_count);
    }
    if (!r.dominant_vertices.empty()) CHECK(r.domination_number == 1);
    CHECK((r.girth == Length(3)) == find_triangle(g).has_value());
  }
}
