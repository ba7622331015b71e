#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace sccg {

// Undirected simple graph on vertices 0..n-1 stored as bit rows.
class SimpleGraph {
 public:
  using Word = std::uint64_t;

  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words() const { return words_; }

  // Self-loops are ignored.
  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const {
    return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  std::span<const Word> row(std::size_t u) const { return {bits_.data() + u * words_, words_}; }

  std::size_t degree(std::size_t u) const;
  std::size_t edge_count() const;
  std::vector<std::size_t> neighbors(std::size_t u) const;
  // Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  bool is_complete() const { return edge_count() == n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2; }

  // Graph on `keep` (in the given order) with the induced edges.
  SimpleGraph induced(std::span<const std::size_t> keep) const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

// Calls f(i) for every set bit i of a row.
template <typename F>
void for_each_bit(std::span<const SimpleGraph::Word> row, F&& f) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    SimpleGraph::Word bits = row[w];
    while (bits) {
      f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
}

}  // namespace sccg
