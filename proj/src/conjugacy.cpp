#include "sccg/conjugacy.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "sccg/errors.hpp"

namespace sccg {

namespace {

std::string letter_suffix(unsigned index) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('a' + index % 26));
    index /= 26;
  } while (index-- > 0);
  return s;
}

}  // namespace

ClassPartition::ClassPartition(const FiniteGroup& g, std::span<const Element> generators) {
  constexpr unsigned kUnset = std::numeric_limits<unsigned>::max();
  const std::size_t n = g.order();
  class_of_.assign(n, kUnset);
  to_rep_.assign(n, kIdentity);
  // from_rep[y] = u with u r u^-1 = y for the orbit's starting point r.
  std::vector<Element> from_rep(n, kIdentity);
  std::map<unsigned, unsigned> per_order;
  for (Element start = 0; start < n; ++start) {
    if (class_of_[start] != kUnset) continue;
    ConjugacyClass cls;
    cls.id = static_cast<unsigned>(classes_.size());
    cls.representative = start;
    cls.element_order = g.element_order(start);
    cls.members.push_back(start);
    class_of_[start] = cls.id;
    from_rep[start] = kIdentity;
    for (std::size_t i = 0; i < cls.members.size(); ++i) {
      const Element z = cls.members[i];
      for (Element h : generators) {
        const Element y = g.conjugate(z, h);
        if (class_of_[y] == kUnset) {
          class_of_[y] = cls.id;
          from_rep[y] = g.mul_unchecked(h, from_rep[z]);
          cls.members.push_back(y);
        }
      }
    }
    for (Element y : cls.members) to_rep_[y] = g.inverse(from_rep[y]);
    std::sort(cls.members.begin(), cls.members.end());
    cls.name = std::to_string(cls.element_order) + letter_suffix(per_order[cls.element_order]++);
    classes_.push_back(std::move(cls));
  }
}

const ConjugacyClass& ClassPartition::at(unsigned id) const {
  if (id >= classes_.size()) throw InputError("class id " + std::to_string(id) + " out of range");
  return classes_[id];
}

ClassPartition conjugacy_classes(const FiniteGroup& g) {
  auto gens = generating_set(g);
  return ClassPartition(g, gens);
}

Subgroup centralizer(const FiniteGroup& g, Element x) {
  g.check(x);
  std::vector<Element> members;
  for (Element y = 0; y < g.order(); ++y) {
    if (g.mul_unchecked(x, y) == g.mul_unchecked(y, x)) members.push_back(y);
  }
  return subgroup_from_members(g, members);
}

}  // namespace sccg
