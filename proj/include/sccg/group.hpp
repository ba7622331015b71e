#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sccg {

// Elements of a finite group are indices 0..n-1; index 0 is always the identity.
using Element = std::uint32_t;
inline constexpr Element kIdentity = 0;

// Permutation of points 0..d-1 stored as its image array.
using Permutation = std::vector<std::uint16_t>;

// Composition with the right factor applied first: (p * q)(i) = p(q(i)).
Permutation compose(std::span<const std::uint16_t> p, std::span<const std::uint16_t> q);
Permutation identity_permutation(std::size_t degree);
Permutation invert(std::span<const std::uint16_t> p);

// Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)". Identity prints as "()".
Permutation parse_cycles(std::string_view text, std::size_t degree);
std::string format_cycles(std::span<const std::uint16_t> p);

struct GroupLimits {
  std::size_t max_table_order = 5000;
  std::size_t max_perm_order = 100000;
};

// Process-wide defaults; SCCG_MAX_ORDER in the environment overrides max_perm_order.
GroupLimits default_limits();

// Immutable multiplication structure on elements 0..n-1.
//
// Table backend: an n x n Cayley table. Permutation backend: one image array
// per element plus a hash index, products are composed and looked up. Groups
// with a permutation representation keep it even when table backed so that
// elements can be printed and searched.
class FiniteGroup {
 public:
  enum class Backend { kTable, kPermutation };

  // `table` is row-major, table[g * n + h] = g h. Not validated here; see
  // catalog::parse_table_file for the checked entry point.
  static FiniteGroup from_table(std::size_t n, std::span<const Element> table,
                                std::string label = {});

  // `elements` must be a set of distinct permutations closed under
  // composition. They are sorted lexicographically, which puts the identity
  // at index 0 and makes numbering independent of how the set was produced.
  static FiniteGroup from_permutations(std::vector<Permutation> elements, std::size_t degree,
                                       const GroupLimits& limits, std::string label = {});

  // Breadth-first closure of the generators under composition.
  static FiniteGroup generate(std::span<const Permutation> generators, std::size_t degree,
                              const GroupLimits& limits, std::string label = {});

  std::size_t order() const { return n_; }
  Backend backend() const { return backend_; }
  bool is_table_backed() const { return backend_ == Backend::kTable; }

  Element mul(Element g, Element h) const {
    check(g);
    check(h);
    return mul_unchecked(g, h);
  }
  Element mul_unchecked(Element g, Element h) const {
    if (backend_ == Backend::kTable) return table_[static_cast<std::size_t>(g) * n_ + h];
    return mul_perm(g, h);
  }
  Element inverse(Element g) const {
    check(g);
    return inverses_[g];
  }
  unsigned element_order(Element g) const {
    check(g);
    return orders_[g];
  }
  std::span<const unsigned> element_orders() const { return orders_; }

  // x g x^-1, conjugator on the left.
  Element conjugate(Element g, Element x) const {
    check(g);
    return mul_unchecked(mul_unchecked(x, g), inverses_[check(x)]);
  }
  // g^-1 h^-1 g h
  Element commutator(Element g, Element h) const {
    return mul_unchecked(mul_unchecked(inverses_[check(g)], inverses_[check(h)]), mul_unchecked(g, h));
  }
  Element power(Element g, long long k) const;

  bool has_permutations() const { return degree_ > 0; }
  std::size_t degree() const { return degree_; }
  std::span<const std::uint16_t> permutation(Element g) const;
  std::optional<Element> find(std::span<const std::uint16_t> perm) const;

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  bool contains(Element g) const { return g < n_; }
  Element check(Element g) const;

  FiniteGroup(const FiniteGroup& other);
  FiniteGroup& operator=(const FiniteGroup& other);
  FiniteGroup(FiniteGroup&&) noexcept = default;
  FiniteGroup& operator=(FiniteGroup&&) noexcept = default;

 private:
  FiniteGroup() = default;
  Element mul_perm(Element g, Element h) const;
  void build_index();
  void compute_orders_and_inverses();

  std::size_t n_ = 0;
  Backend backend_ = Backend::kTable;
  std::vector<std::uint16_t> table_;
  std::size_t degree_ = 0;
  std::vector<std::uint16_t> perms_;
  std::unordered_map<std::string_view, Element> index_;
  std::vector<Element> inverses_;
  std::vector<unsigned> orders_;
  std::string label_;
};

// Componentwise product; (g, h) is encoded as g * |H| + h.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const GroupLimits& limits,
                           std::string label = {});

}  // namespace sccg
