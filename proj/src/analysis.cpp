#include "sccg/analysis.hpp"

#include <algorithm>
#include <numeric>

#include "sccg/errors.hpp"
#include "sccg/parallel.hpp"

namespace sccg {

GroupAnalysis::GroupAnalysis(std::shared_ptr<const FiniteGroup> group, AnalysisOptions opts)
    : group_(std::move(group)), opts_(opts) {
  if (!group_) throw InputError("null group");
  generators_ = generating_set(*group_);
  whole_.emplace(whole_group(*group_));
  classes_.emplace(*group_, generators_);
  class_data_ = std::make_unique<ClassData[]>(classes_->count());
}

unsigned GroupAnalysis::threads() const { return opts_.threads == 0 ? default_threads() : opts_.threads; }

bool GroupAnalysis::group_is_solvable() const {
  std::call_once(solvable_once_, [&] { solvable_ = is_solvable(*whole_, opts_.solvability); });
  return solvable_;
}

bool GroupAnalysis::group_is_nilpotent() const {
  std::call_once(nilpotent_once_, [&] { nilpotent_ = is_nilpotent(*whole_, opts_.solvability); });
  return nilpotent_;
}

GroupAnalysis::ClassData& GroupAnalysis::class_data(unsigned class_id) const {
  const ConjugacyClass& cls = classes_->at(class_id);
  ClassData& data = class_data_[class_id];
  std::call_once(data.once, [&] {
    const FiniteGroup& g = *group_;
    data.centralizer.emplace(centralizer(g, cls.representative));
    // Union-find whose root is always the least element of its set.
    std::vector<Element> parent(g.order());
    std::iota(parent.begin(), parent.end(), Element{0});
    auto find = [&](Element v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
      }
      return v;
    };
    for (Element y = 0; y < g.order(); ++y) {
      for (Element c : data.centralizer->generators()) {
        Element a = find(y), b = find(g.conjugate(y, c));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    data.orbit_min.resize(g.order());
    for (Element y = 0; y < g.order(); ++y) data.orbit_min[y] = find(y);
  });
  return data;
}

const Subgroup& GroupAnalysis::representative_centralizer(unsigned class_id) const {
  return *class_data(class_id).centralizer;
}

std::span<const Element> GroupAnalysis::centralizer_orbits(unsigned class_id) const {
  return class_data(class_id).orbit_min;
}

bool GroupAnalysis::related(Element x, Element y, Relation rel) const {
  group_->check(x);
  group_->check(y);
  if (!opts_.memoize) return pair_satisfies(*group_, x, y, rel, opts_.solvability);
  const Element lo = std::min(x, y), hi = std::max(x, y);
  const std::uint64_t key = (static_cast<std::uint64_t>(rel) << 60) | (static_cast<std::uint64_t>(lo) << 30) | hi;
  Shard& shard = shards_[(key * 0x9E3779B97F4A7C15ULL) >> 58];
  {
    std::lock_guard lock(shard.mutex);
    auto it = shard.map.find(key);
    if (it != shard.map.end()) return it->second;
  }
  const bool value = pair_satisfies(*group_, lo, hi, rel, opts_.solvability);
  std::lock_guard lock(shard.mutex);
  shard.map.emplace(key, value);
  return value;
}

bool GroupAnalysis::related_up_to_conjugacy(Element x, Element y, Relation rel) const {
  const ClassPartition& cp = *classes_;
  if (cp.class_of(y) < cp.class_of(x)) std::swap(x, y);
  const unsigned cx = cp.class_of(x);
  const Element t = cp.to_representative(x);
  const Element y1 = group_->conjugate(y, t);
  const Element y2 = class_data(cx).orbit_min[y1];
  return related(cp.at(cx).representative, y2, rel);
}

std::vector<Element> GroupAnalysis::solvabilizer(Element x) const {
  group_->check(x);
  std::vector<Element> out;
  for (Element y = 0; y < group_->order(); ++y) {
    if (related_up_to_conjugacy(x, y, Relation::kSolvable)) out.push_back(y);
  }
  return out;
}

const Subgroup& GroupAnalysis::solvable_radical() const {
  std::call_once(radical_once_, [&] {
    const ClassPartition& cp = *classes_;
    std::vector<char> inside(cp.count(), 0);
    inside[0] = 1;
    parallel_for(cp.count() - 1, threads(), [&](std::size_t i) {
      const unsigned id = static_cast<unsigned>(i + 1);
      const Element a = cp.at(id).representative;
      auto orbits = centralizer_orbits(id);
      for (Element y = 0; y < group_->order(); ++y) {
        if (orbits[y] != y) continue;
        if (!related(a, y, Relation::kSolvable)) return;
      }
      inside[id] = 1;
    });
    std::vector<Element> members;
    for (const auto& cls : cp.classes()) {
      if (inside[cls.id]) members.insert(members.end(), cls.members.begin(), cls.members.end());
    }
    std::sort(members.begin(), members.end());
    radical_.emplace(subgroup_from_members(*group_, members));
  });
  return *radical_;
}

std::size_t GroupAnalysis::memo_size() const {
  std::size_t total = 0;
  for (auto& shard : shards_) {
    std::lock_guard lock(shard.mutex);
    total += shard.map.size();
  }
  return total;
}

}  // namespace sccg
