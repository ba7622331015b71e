#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "sccg/conjugacy.hpp"
#include "sccg/group.hpp"
#include "sccg/relation.hpp"
#include "sccg/subgroup.hpp"

namespace sccg {

struct AnalysisOptions {
  SolvabilityOptions solvability;
  bool memoize = true;
  unsigned threads = 0;  // 0: default_threads()
};

// Per-group state shared by every graph built on one group: the class
// partition, centralizers of class representatives with their conjugation
// orbits, and the memo of pair tests.
//
// Everything is computed lazily and is safe to query from several threads.
// The memo is an insert-or-get map; two threads may compute the same entry,
// which is harmless because pair tests are deterministic.
class GroupAnalysis {
 public:
  explicit GroupAnalysis(std::shared_ptr<const FiniteGroup> group, AnalysisOptions opts = {});
  GroupAnalysis(const GroupAnalysis&) = delete;
  GroupAnalysis& operator=(const GroupAnalysis&) = delete;

  const FiniteGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
  const AnalysisOptions& options() const { return opts_; }
  unsigned threads() const;

  const ClassPartition& classes() const { return *classes_; }
  std::span<const Element> generators() const { return generators_; }
  const Subgroup& whole() const { return *whole_; }
  bool group_is_solvable() const;
  bool group_is_nilpotent() const;

  const Subgroup& representative_centralizer(unsigned class_id) const;
  // orbit_min[y]: least element of the orbit of y under conjugation by the
  // centralizer of class `class_id`'s representative.
  std::span<const Element> centralizer_orbits(unsigned class_id) const;

  // Memoized pair test keyed by the unordered pair {x, y}.
  bool related(Element x, Element y, Relation rel) const;
  // Same answer as related(x, y, rel), but first conjugates the pair so that
  // x becomes its class representative and y the least element of its
  // centralizer orbit, which collapses many pairs onto one memo entry.
  bool related_up_to_conjugacy(Element x, Element y, Relation rel) const;

  // {y : <x, y> solvable}, sorted.
  std::vector<Element> solvabilizer(Element x) const;
  // {x : <x, y> solvable for every y}, tested once per conjugacy class.
  const Subgroup& solvable_radical() const;

  std::size_t memo_size() const;

 private:
  struct ClassData {
    std::once_flag once;
    std::optional<Subgroup> centralizer;
    std::vector<Element> orbit_min;
  };
  struct Shard {
    std::mutex mutex;
    std::unordered_map<std::uint64_t, bool> map;
  };
  static constexpr std::size_t kShards = 64;

  ClassData& class_data(unsigned class_id) const;

  std::shared_ptr<const FiniteGroup> group_;
  AnalysisOptions opts_;
  std::vector<Element> generators_;
  std::optional<Subgroup> whole_;
  std::optional<ClassPartition> classes_;
  std::unique_ptr<ClassData[]> class_data_;
  mutable std::array<Shard, kShards> shards_;
  mutable std::once_flag solvable_once_, nilpotent_once_, radical_once_;
  mutable bool solvable_ = false, nilpotent_ = false;
  mutable std::optional<Subgroup> radical_;
};

}  // namespace sccg
