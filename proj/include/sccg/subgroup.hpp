#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sccg/group.hpp"

namespace sccg {

// Explicit subgroup: sorted members, a membership bitmap and the generators
// it was built from. Holds a non-owning pointer to its parent group.
class Subgroup {
 public:
  Subgroup(const FiniteGroup& parent, std::vector<Element> members, std::vector<Element> generators);

  const FiniteGroup& parent() const { return *parent_; }
  std::span<const Element> members() const { return members_; }
  std::span<const Element> generators() const { return generators_; }
  std::size_t order() const { return members_.size(); }
  bool contains(Element g) const { return g < bound_ && ((bits_[g >> 6] >> (g & 63)) & 1U); }
  bool is_trivial() const { return members_.size() == 1; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  const FiniteGroup* parent_;
  std::vector<Element> members_;
  std::vector<Element> generators_;
  std::vector<std::uint64_t> bits_;
  std::size_t bound_ = 0;
};

struct SolvabilityOptions {
  // Declare subgroups of order < 60 or of prime-power order solvable (and
  // prime-power order nilpotent) without computing a series; also use
  // element-level tests (commuting pairs, coprime non-commuting pairs) before
  // building <x, y>. Disable for oracle cross-checks.
  bool shortcuts = true;
};

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);

// Smallest subgroup containing `generators`. Redundant generators are dropped
// from the stored generator list.
Subgroup closure(const FiniteGroup& g, std::span<const Element> generators);

// Subgroup given by its full member set; generators are chosen greedily.
// Throws InputError when the set is not closed.
Subgroup subgroup_from_members(const FiniteGroup& g, std::span<const Element> members);

// <H, extra>, reusing H's members as the starting set.
Subgroup extend(const Subgroup& h, std::span<const Element> extra);

// Smallest normal subgroup of `ambient` containing `generators`.
Subgroup normal_closure(const Subgroup& ambient, std::span<const Element> generators);

// Small generating set of the whole group, chosen greedily in index order.
std::vector<Element> generating_set(const FiniteGroup& g);

// [H, H] as the normal closure in H of the commutators of H's generators.
Subgroup derived_subgroup(const Subgroup& h);
// [H, H] generated by the commutators of all pairs of members.
Subgroup derived_subgroup_exhaustive(const Subgroup& h);

// H = D0 >= D1 >= ... ending with the first repeated term.
std::vector<Subgroup> derived_series(const Subgroup& h);
// H = L1 >= L2 >= ..., L(i+1) = [L(i), H], ending with the first repeated term.
std::vector<Subgroup> lower_central_series(const Subgroup& h);

bool is_abelian(const Subgroup& h);
bool is_solvable(const Subgroup& h, const SolvabilityOptions& opts = {});
bool is_nilpotent(const Subgroup& h, const SolvabilityOptions& opts = {});
bool is_normal(const Subgroup& n, const Subgroup& h);

// The subgroup as a group in its own right; member i becomes element i.
FiniteGroup as_group(const Subgroup& h, const GroupLimits& limits);

bool is_prime_power(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace sccg
