#include "sccg/metrics.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "sccg/errors.hpp"

namespace sccg {

namespace {

using Word = SimpleGraph::Word;
using Bits = std::vector<Word>;

bool test(const Bits& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1U; }
void set(Bits& b, std::size_t i) { b[i >> 6] |= Word{1} << (i & 63); }
void clear(Bits& b, std::size_t i) { b[i >> 6] &= ~(Word{1} << (i & 63)); }
bool none(const Bits& b) {
  return std::all_of(b.begin(), b.end(), [](Word w) { return w == 0; });
}
std::size_t count(const Bits& b) {
  std::size_t c = 0;
  for (Word w : b) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}
std::size_t first(const Bits& b) {
  for (std::size_t w = 0; w < b.size(); ++w) {
    if (b[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(b[w]));
  }
  return SIZE_MAX;
}

// Graph on closed-twin classes with class sizes as weights.
struct Quotient {
  SimpleGraph graph;
  std::vector<std::size_t> weight;
  std::vector<std::vector<std::size_t>> members;
};

Quotient quotient(const SimpleGraph& g) {
  std::size_t k = 0;
  auto cls = closed_twin_classes(g, &k);
  Quotient q;
  q.graph = SimpleGraph(k);
  q.weight.assign(k, 0);
  q.members.resize(k);
  for (std::size_t v = 0; v < g.size(); ++v) {
    q.weight[cls[v]]++;
    q.members[cls[v]].push_back(v);
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      if (g.adjacent(q.members[a][0], q.members[b][0])) q.graph.add_edge(a, b);
    }
  }
  return q;
}

// Eccentricity of `source` with bit-parallel BFS; -1 if some vertex is unreachable.
long eccentricity(const SimpleGraph& g, std::size_t source) {
  const std::size_t words = g.words();
  Bits visited(words, 0), frontier(words, 0), next(words, 0);
  set(visited, source);
  set(frontier, source);
  std::size_t seen = 1;
  long depth = 0;
  while (true) {
    std::fill(next.begin(), next.end(), 0);
    for_each_bit(frontier, [&](std::size_t u) {
      auto row = g.row(u);
      for (std::size_t w = 0; w < words; ++w) next[w] |= row[w];
    });
    for (std::size_t w = 0; w < words; ++w) next[w] &= ~visited[w];
    const std::size_t added = count(next);
    if (added == 0) break;
    seen += added;
    ++depth;
    for (std::size_t w = 0; w < words; ++w) visited[w] |= next[w];
    std::swap(frontier, next);
  }
  return seen == g.size() ? depth : -1;
}

class CliqueSearch {
 public:
  CliqueSearch(const Quotient& q, std::uint64_t budget) : q_(q), budget_(budget) {}

  std::vector<std::size_t> run() {
    const std::size_t n = q_.graph.size();
    Bits all((n + 63) / 64, 0);
    for (std::size_t v = 0; v < n; ++v) set(all, v);
    expand(all, 0);
    return best_;
  }

 private:
  void expand(Bits p, std::size_t weight) {
    if (++nodes_ > budget_) {
      throw BudgetError("clique search exceeded " + std::to_string(budget_) + " nodes (lower bound " +
                        std::to_string(best_weight_) + ", upper bound " + std::to_string(root_bound_) + ")");
    }
    // Greedy colouring; bound[i] sums the heaviest vertex of every colour
    // class up to the colour of order[i].
    std::vector<std::size_t> order, bound;
    Bits uncolored = p;
    std::size_t total = 0;
    while (!none(uncolored)) {
      Bits avail = uncolored;
      std::size_t heaviest = 0;
      while (!none(avail)) {
        const std::size_t v = first(avail);
        order.push_back(v);
        heaviest = std::max(heaviest, q_.weight[v]);
        clear(avail, v);
        clear(uncolored, v);
        auto row = q_.graph.row(v);
        for (std::size_t w = 0; w < avail.size(); ++w) avail[w] &= ~row[w];
      }
      total += heaviest;
      bound.resize(order.size(), total);
    }
    if (nodes_ == 1) root_bound_ = total;

    for (std::size_t i = order.size(); i-- > 0;) {
      if (weight + bound[i] <= best_weight_) return;
      const std::size_t v = order[i];
      current_.push_back(v);
      Bits next = p;
      auto row = q_.graph.row(v);
      for (std::size_t w = 0; w < next.size(); ++w) next[w] &= row[w];
      const std::size_t grown = weight + q_.weight[v];
      if (none(next)) {
        if (grown > best_weight_) {
          best_weight_ = grown;
          best_ = current_;
        }
      } else {
        expand(std::move(next), grown);
      }
      current_.pop_back();
      clear(p, v);
    }
  }

  const Quotient& q_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::size_t best_weight_ = 0;
  std::size_t root_bound_ = 0;
  std::vector<std::size_t> best_;
  std::vector<std::size_t> current_;
};

class DominationSearch {
 public:
  DominationSearch(const SimpleGraph& g, std::uint64_t budget) : g_(g), budget_(budget) {
    const std::size_t n = g.size();
    closed_.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      closed_[v].assign(g.row(v).begin(), g.row(v).end());
      set(closed_[v], v);
      max_cover_ = std::max(max_cover_, g.degree(v) + 1);
    }
  }

  std::vector<std::size_t> run() {
    std::vector<std::size_t> best = greedy();
    for (std::size_t k = 1; k < best.size(); ++k) {
      chosen_.clear();
      Bits dominated((g_.size() + 63) / 64, 0);
      if (search(dominated, k)) {
        best = chosen_;
        break;
      }
    }
    std::sort(best.begin(), best.end());
    return best;
  }

 private:
  std::vector<std::size_t> greedy() const {
    const std::size_t n = g_.size();
    Bits dominated((n + 63) / 64, 0);
    std::vector<std::size_t> out;
    while (count(dominated) < n) {
      std::size_t pick = 0, gain = 0;
      for (std::size_t v = 0; v < n; ++v) {
        std::size_t c = 0;
        for (std::size_t w = 0; w < dominated.size(); ++w) {
          c += static_cast<std::size_t>(std::popcount(closed_[v][w] & ~dominated[w]));
        }
        if (c > gain) {
          gain = c;
          pick = v;
        }
      }
      out.push_back(pick);
      for (std::size_t w = 0; w < dominated.size(); ++w) dominated[w] |= closed_[pick][w];
    }
    return out;
  }

  bool search(const Bits& dominated, std::size_t k) {
    if (++nodes_ > budget_) {
      throw BudgetError("domination search exceeded " + std::to_string(budget_) + " nodes (lower bound " +
                        std::to_string(k) + ")");
    }
    const std::size_t n = g_.size();
    const std::size_t open = n - count(dominated);
    if (open == 0) return true;
    if (k == 0 || open > k * max_cover_) return false;
    // Branch on the undominated vertex with the fewest ways to be dominated.
    std::size_t u = SIZE_MAX, choices = SIZE_MAX;
    for (std::size_t v = 0; v < n; ++v) {
      if (test(dominated, v)) continue;
      const std::size_t c = count(closed_[v]);
      if (c < choices) {
        choices = c;
        u = v;
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> options;  // (-gain, vertex)
    for_each_bit(closed_[u], [&](std::size_t w) {
      std::size_t gain = 0;
      for (std::size_t i = 0; i < dominated.size(); ++i) {
        gain += static_cast<std::size_t>(std::popcount(closed_[w][i] & ~dominated[i]));
      }
      options.emplace_back(SIZE_MAX - gain, w);
    });
    std::sort(options.begin(), options.end());
    for (const auto& [neg, w] : options) {
      Bits next = dominated;
      for (std::size_t i = 0; i < next.size(); ++i) next[i] |= closed_[w][i];
      chosen_.push_back(w);
      if (search(next, k - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const SimpleGraph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Bits> closed_;
  std::size_t max_cover_ = 1;
  std::vector<std::size_t> chosen_;
};

}  // namespace

std::string Length::str() const { return finite_ ? std::to_string(value_) : "inf"; }

std::vector<int> bfs_distances(const SimpleGraph& g, std::size_t source) {
  if (source >= g.size()) throw InputError("vertex out of range");
  std::vector<int> dist(g.size(), -1);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for_each_bit(g.row(u), [&](std::size_t v) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    });
  }
  return dist;
}

Length distance(const SimpleGraph& g, std::size_t u, std::size_t v) {
  if (v >= g.size()) throw InputError("vertex out of range");
  const int d = bfs_distances(g, u)[v];
  return d < 0 ? Length::infinite() : Length(static_cast<unsigned>(d));
}

std::vector<std::vector<std::size_t>> components(const SimpleGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<char> seen(g.size(), 0);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for_each_bit(g.row(comp[i]), [&](std::size_t v) {
        if (!seen[v]) {
          seen[v] = 1;
          comp.push_back(v);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const SimpleGraph& g) { return g.size() == 0 || components(g).size() == 1; }

Length diameter(const SimpleGraph& g) {
  if (g.size() == 0) throw InputError("diameter of the empty graph");
  if (!is_connected(g)) return Length::infinite();
  const Quotient q = quotient(g);
  unsigned best = q.graph.size() < g.size() ? 1 : 0;
  for (std::size_t v = 0; v < q.graph.size(); ++v) {
    best = std::max(best, static_cast<unsigned>(eccentricity(q.graph, v)));
  }
  return best;
}

std::optional<std::array<std::size_t, 3>> find_triangle(const SimpleGraph& g) {
  for (std::size_t u = 0; u < g.size(); ++u) {
    auto ru = g.row(u);
    for (std::size_t v : g.neighbors(u)) {
      if (v <= u) continue;
      auto rv = g.row(v);
      // Least common neighbour above v.
      for (std::size_t w = v >> 6; w < ru.size(); ++w) {
        Word common = ru[w] & rv[w];
        if (w == (v >> 6)) common &= ((v & 63) == 63) ? 0 : ~Word{0} << ((v & 63) + 1);
        if (common) return std::array<std::size_t, 3>{u, v, w * 64 + static_cast<std::size_t>(std::countr_zero(common))};
      }
    }
  }
  return std::nullopt;
}

Length girth(const SimpleGraph& g) {
  if (find_triangle(g)) return 3U;
  // Triangle-free: shortest cycle through BFS trees.
  unsigned best = UINT32_MAX;
  std::vector<int> dist(g.size());
  std::vector<std::size_t> parent(g.size());
  for (std::size_t s = 0; s < g.size(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    parent[s] = SIZE_MAX;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      if (2U * static_cast<unsigned>(dist[u]) + 1 >= best) break;
      for_each_bit(g.row(u), [&](std::size_t v) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (parent[u] != v) {
          best = std::min(best, static_cast<unsigned>(dist[u] + dist[v] + 1));
        }
      });
    }
  }
  return best == UINT32_MAX ? Length::infinite() : Length(best);
}

std::vector<std::size_t> closed_twin_classes(const SimpleGraph& g, std::size_t* count_out) {
  std::map<Bits, std::size_t> ids;
  std::vector<std::size_t> cls(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    Bits key(g.row(v).begin(), g.row(v).end());
    set(key, v);
    auto [it, inserted] = ids.emplace(std::move(key), ids.size());
    cls[v] = it->second;
  }
  if (count_out) *count_out = ids.size();
  return cls;
}

std::vector<std::size_t> maximum_clique(const SimpleGraph& g, std::uint64_t node_budget) {
  if (g.size() == 0) return {};
  const Quotient q = quotient(g);
  std::vector<std::size_t> out;
  for (std::size_t c : CliqueSearch(q, node_budget).run()) {
    out.insert(out.end(), q.members[c].begin(), q.members[c].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t clique_number(const SimpleGraph& g, std::uint64_t node_budget) {
  return maximum_clique(g, node_budget).size();
}

std::vector<std::size_t> minimum_dominating_set(const SimpleGraph& g, std::uint64_t node_budget) {
  if (g.size() == 0) return {};
  const Quotient q = quotient(g);
  std::vector<std::size_t> out;
  for (std::size_t c : DominationSearch(q.graph, node_budget).run()) out.push_back(q.members[c].front());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t domination_number(const SimpleGraph& g, std::uint64_t node_budget) {
  return minimum_dominating_set(g, node_budget).size();
}

std::vector<std::size_t> dominant_vertices(const SimpleGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.degree(v) + 1 == g.size()) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> isolated_vertices(const SimpleGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.degree(v) == 0) out.push_back(v);
  }
  return out;
}

unsigned clique_lower_bound_orders(const FiniteGroup& g) {
  std::set<unsigned> orders(g.element_orders().begin(), g.element_orders().end());
  unsigned best = 0;
  for (unsigned n : orders) {
    unsigned divisors = 0;
    for (unsigned d = 1; d <= n; ++d) divisors += (n % d == 0) ? 1 : 0;
    best = std::max(best, divisors - 1);
  }
  return best;
}

MetricsReport compute_metrics(const SimpleGraph& g, std::uint64_t node_budget) {
  MetricsReport r;
  r.vertex_count = g.size();
  r.edge_count = g.edge_count();
  r.component_count = components(g).size();
  r.connected = r.component_count <= 1;
  if (g.size() > 0) r.diameter = diameter(g);
  r.girth = girth(g);
  r.clique_number = clique_number(g, node_budget);
  r.domination_number = domination_number(g, node_budget);
  r.dominant_vertices = dominant_vertices(g);
  r.isolated_vertices = isolated_vertices(g);
  r.is_complete = g.is_complete();
  return r;
}

}  // namespace sccg
