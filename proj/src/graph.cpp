#include "sccg/graph.hpp"

#include "sccg/errors.hpp"

namespace sccg {

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw InputError("vertex out of range");
  if (u == v) return;
  bits_[u * words_ + (v >> 6)] |= Word{1} << (v & 63);
  bits_[v * words_ + (u >> 6)] |= Word{1} << (u & 63);
}

void SimpleGraph::remove_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw InputError("vertex out of range");
  bits_[u * words_ + (v >> 6)] &= ~(Word{1} << (v & 63));
  bits_[v * words_ + (u >> 6)] &= ~(Word{1} << (u & 63));
}

std::size_t SimpleGraph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (Word w : row(u)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t total = 0;
  for (Word w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total / 2;
}

std::vector<std::size_t> SimpleGraph::neighbors(std::size_t u) const {
  std::vector<std::size_t> out;
  for_each_bit(row(u), [&](std::size_t v) { out.push_back(v); });
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n_; ++u) {
    for_each_bit(row(u), [&](std::size_t v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

SimpleGraph SimpleGraph::induced(std::span<const std::size_t> keep) const {
  SimpleGraph out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (adjacent(keep[i], keep[j])) out.add_edge(i, j);
    }
  }
  return out;
}

}  // namespace sccg
