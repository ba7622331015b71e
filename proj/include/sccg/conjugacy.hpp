#pragma once

#include <span>
#include <string>
#include <vector>

#include "sccg/group.hpp"
#include "sccg/subgroup.hpp"

namespace sccg {

struct ConjugacyClass {
  unsigned id = 0;
  Element representative = kIdentity;  // smallest member
  std::vector<Element> members;        // sorted
  unsigned element_order = 1;
  std::string name;  // element order plus a letter in id order: "2a", "5a", "5b"

  std::size_t size() const { return members.size(); }
};

// Orbits of conjugation, listed by increasing representative; the identity
// class has id 0.
class ClassPartition {
 public:
  ClassPartition(const FiniteGroup& g, std::span<const Element> generators);

  std::size_t count() const { return classes_.size(); }
  std::span<const ConjugacyClass> classes() const { return classes_; }
  const ConjugacyClass& at(unsigned id) const;
  unsigned class_of(Element x) const { return class_of_.at(x); }
  // Some t with t x t^-1 equal to the representative of x's class.
  Element to_representative(Element x) const { return to_rep_.at(x); }
  std::span<const unsigned> class_map() const { return class_of_; }

 private:
  std::vector<ConjugacyClass> classes_;
  std::vector<unsigned> class_of_;
  std::vector<Element> to_rep_;
};

ClassPartition conjugacy_classes(const FiniteGroup& g);

Subgroup centralizer(const FiniteGroup& g, Element x);

}  // namespace sccg
