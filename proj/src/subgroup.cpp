#include "sccg/subgroup.hpp"

#include <algorithm>

#include "sccg/errors.hpp"

namespace sccg {

namespace {

// Growable element set with bitmap membership, used while closing.
struct Builder {
  const FiniteGroup* g;
  std::vector<Element> elems;
  std::vector<std::uint64_t> bits;
  std::vector<Element> gens;

  explicit Builder(const FiniteGroup& group) : g(&group), bits((group.order() + 63) / 64, 0) {
    add(kIdentity);
  }
  bool has(Element x) const { return (bits[x >> 6] >> (x & 63)) & 1U; }
  void add(Element x) {
    bits[x >> 6] |= std::uint64_t{1} << (x & 63);
    elems.push_back(x);
  }

  // Adds `gen` and closes. Old members only need the new generator; new
  // members need every generator.
  void adjoin(Element gen) {
    g->check(gen);
    if (has(gen)) return;
    gens.push_back(gen);
    const std::size_t old = elems.size();
    for (std::size_t i = 0; i < old; ++i) {
      Element y = g->mul_unchecked(elems[i], gen);
      if (!has(y)) add(y);
    }
    for (std::size_t i = old; i < elems.size(); ++i) {
      for (Element s : gens) {
        Element y = g->mul_unchecked(elems[i], s);
        if (!has(y)) add(y);
      }
    }
  }

  Subgroup finish() {
    std::sort(elems.begin(), elems.end());
    return Subgroup(*g, std::move(elems), std::move(gens));
  }
};

Builder builder_from(const Subgroup& h) {
  Builder b(h.parent());
  b.elems.clear();
  std::fill(b.bits.begin(), b.bits.end(), 0);
  for (Element x : h.members()) b.add(x);
  b.gens.assign(h.generators().begin(), h.generators().end());
  return b;
}

bool small_solvable(std::size_t order) { return order < 60 || is_prime_power(order); }

}  // namespace

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<Element> members, std::vector<Element> generators)
    : parent_(&parent), members_(std::move(members)), generators_(std::move(generators)) {
  bound_ = parent.order();
  bits_.assign((bound_ + 63) / 64, 0);
  for (Element x : members_) {
    parent.check(x);
    bits_[x >> 6] |= std::uint64_t{1} << (x & 63);
  }
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup(g, {kIdentity}, {}); }

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Element> all(g.order());
  for (Element x = 0; x < g.order(); ++x) all[x] = x;
  return Subgroup(g, std::move(all), generating_set(g));
}

Subgroup closure(const FiniteGroup& g, std::span<const Element> generators) {
  Builder b(g);
  for (Element s : generators) b.adjoin(s);
  return b.finish();
}

Subgroup subgroup_from_members(const FiniteGroup& g, std::span<const Element> members) {
  Builder b(g);
  for (Element x : members) {
    if (b.elems.size() >= members.size()) break;
    b.adjoin(x);
  }
  if (b.elems.size() != members.size() && !(members.empty() && b.elems.size() == 1)) {
    throw InputError("element set is not a subgroup");
  }
  Subgroup result = b.finish();
  for (Element x : members) {
    if (!result.contains(x)) throw InputError("element set is not a subgroup");
  }
  return result;
}

Subgroup extend(const Subgroup& h, std::span<const Element> extra) {
  Builder b = builder_from(h);
  for (Element s : extra) b.adjoin(s);
  return b.finish();
}

Subgroup normal_closure(const Subgroup& ambient, std::span<const Element> generators) {
  const FiniteGroup& g = ambient.parent();
  Builder b(g);
  for (Element s : generators) b.adjoin(s);
  bool changed = true;
  while (changed) {
    changed = false;
    // b.gens may grow while iterating; index loop keeps that valid.
    for (std::size_t i = 0; i < b.gens.size(); ++i) {
      for (Element h : ambient.generators()) {
        Element c = g.conjugate(b.gens[i], h);
        if (!b.has(c)) {
          b.adjoin(c);
          changed = true;
        }
      }
    }
  }
  return b.finish();
}

std::vector<Element> generating_set(const FiniteGroup& g) {
  Builder b(g);
  // Elements of large order first tend to give short generating sets.
  std::vector<Element> order(g.order());
  for (Element x = 0; x < g.order(); ++x) order[x] = x;
  auto orders = g.element_orders();
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element c) { return orders[a] > orders[c]; });
  for (Element x : order) {
    if (b.elems.size() == g.order()) break;
    b.adjoin(x);
  }
  return b.gens;
}

Subgroup derived_subgroup(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  auto gens = h.generators();
  std::vector<Element> comms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Element c = g.commutator(gens[i], gens[j]);
      if (c != kIdentity) comms.push_back(c);
    }
  }
  return normal_closure(h, comms);
}

Subgroup derived_subgroup_exhaustive(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  Builder b(g);
  for (Element x : h.members()) {
    for (Element y : h.members()) b.adjoin(g.commutator(x, y));
  }
  return b.finish();
}

std::vector<Subgroup> derived_series(const Subgroup& h) {
  std::vector<Subgroup> series{h};
  while (true) {
    if (series.back().is_trivial()) break;
    Subgroup next = derived_subgroup(series.back());
    const bool stable = next.order() == series.back().order();
    series.push_back(std::move(next));
    if (stable) break;
  }
  return series;
}

std::vector<Subgroup> lower_central_series(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  std::vector<Subgroup> series{h};
  while (!series.back().is_trivial()) {
    std::vector<Element> comms;
    for (Element a : series.back().generators()) {
      for (Element b : h.generators()) {
        Element c = g.commutator(a, b);
        if (c != kIdentity) comms.push_back(c);
      }
    }
    Subgroup next = normal_closure(h, comms);
    const bool stable = next.order() == series.back().order();
    series.push_back(std::move(next));
    if (stable) break;
  }
  return series;
}

bool is_abelian(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  auto gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (g.mul_unchecked(gens[i], gens[j]) != g.mul_unchecked(gens[j], gens[i])) return false;
    }
  }
  return true;
}

bool is_solvable(const Subgroup& h, const SolvabilityOptions& opts) {
  if (opts.shortcuts && small_solvable(h.order())) return true;
  Subgroup current = h;
  while (!current.is_trivial()) {
    Subgroup next = derived_subgroup(current);
    if (next.order() == current.order()) return false;
    if (opts.shortcuts && small_solvable(next.order())) return true;
    current = std::move(next);
  }
  return true;
}

bool is_nilpotent(const Subgroup& h, const SolvabilityOptions& opts) {
  if (opts.shortcuts && (is_prime_power(h.order()) || h.order() == 1)) return true;
  auto series = lower_central_series(h);
  return series.back().is_trivial();
}

bool is_normal(const Subgroup& n, const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  for (Element x : n.generators()) {
    for (Element s : h.generators()) {
      if (!n.contains(g.conjugate(x, s))) return false;
    }
  }
  return true;
}

FiniteGroup as_group(const Subgroup& h, const GroupLimits& limits) {
  const FiniteGroup& g = h.parent();
  auto members = h.members();
  if (g.has_permutations()) {
    std::vector<Permutation> perms;
    perms.reserve(members.size());
    for (Element x : members) {
      auto p = g.permutation(x);
      perms.emplace_back(p.begin(), p.end());
    }
    return FiniteGroup::from_permutations(std::move(perms), g.degree(), limits);
  }
  const std::size_t n = members.size();
  if (n > limits.max_table_order) throw BudgetError("subgroup too large for a table backend");
  std::vector<Element> position(g.order(), 0);
  for (std::size_t i = 0; i < n; ++i) position[members[i]] = static_cast<Element>(i);
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = position[g.mul_unchecked(members[i], members[j])];
  }
  return FiniteGroup::from_table(n, table);
}

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  return prime_factors(n).size() == 1;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace sccg
