#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sccg/graph.hpp"
#include "sccg/group.hpp"

namespace sccg {

// Non-negative length or infinity. Infinity compares above every finite value.
class Length {
 public:
  constexpr Length() = default;
  constexpr Length(unsigned value) : value_(value), finite_(true) {}  // NOLINT(google-explicit-constructor)
  static constexpr Length infinite() { return Length(0, false); }

  constexpr bool is_finite() const { return finite_; }
  constexpr unsigned value() const { return value_; }
  // Decimal value or "inf".
  std::string str() const;

  constexpr auto operator<=>(const Length& o) const {
    if (finite_ != o.finite_) return finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return finite_ ? value_ <=> o.value_ : std::strong_ordering::equal;
  }
  constexpr bool operator==(const Length& o) const = default;

 private:
  constexpr Length(unsigned v, bool f) : value_(v), finite_(f) {}
  unsigned value_ = 0;
  bool finite_ = true;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

// BFS distances from `source`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const SimpleGraph& g, std::size_t source);
Length distance(const SimpleGraph& g, std::size_t u, std::size_t v);

// Connected components, each sorted, ordered by least vertex.
std::vector<std::vector<std::size_t>> components(const SimpleGraph& g);
// The empty graph counts as connected.
bool is_connected(const SimpleGraph& g);
// Throws InputError on the empty graph.
Length diameter(const SimpleGraph& g);
Length girth(const SimpleGraph& g);
// Some triangle (u < v < w), if any.
std::optional<std::array<std::size_t, 3>> find_triangle(const SimpleGraph& g);

// Exact maximum clique. BudgetError (with the bounds reached) when the search
// exceeds `node_budget` branch nodes.
std::vector<std::size_t> maximum_clique(const SimpleGraph& g, std::uint64_t node_budget = kDefaultNodeBudget);
std::size_t clique_number(const SimpleGraph& g, std::uint64_t node_budget = kDefaultNodeBudget);

// Exact minimum dominating set; empty for the empty graph.
std::vector<std::size_t> minimum_dominating_set(const SimpleGraph& g, std::uint64_t node_budget = kDefaultNodeBudget);
std::size_t domination_number(const SimpleGraph& g, std::uint64_t node_budget = kDefaultNodeBudget);

std::vector<std::size_t> dominant_vertices(const SimpleGraph& g);
std::vector<std::size_t> isolated_vertices(const SimpleGraph& g);

// Closed twins: u, v adjacent with equal neighbourhoods otherwise. Returns the
// class of each vertex; classes are numbered by least member.
std::vector<std::size_t> closed_twin_classes(const SimpleGraph& g, std::size_t* count = nullptr);

// max over element orders n of d(n) - 1, where d counts divisors.
unsigned clique_lower_bound_orders(const FiniteGroup& g);

struct MetricsReport {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  bool connected = true;
  std::size_t component_count = 0;
  std::optional<Length> diameter;  // absent for the empty graph
  Length girth = Length::infinite();
  std::size_t clique_number = 0;
  std::size_t domination_number = 0;
  std::vector<std::size_t> dominant_vertices;
  std::vector<std::size_t> isolated_vertices;
  bool is_complete = true;
};

MetricsReport compute_metrics(const SimpleGraph& g, std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace sccg
