#include "sccg/relation.hpp"

#include <numeric>

#include "sccg/errors.hpp"

namespace sccg {

Relation parse_relation(std::string_view name) {
  if (name == "abelian") return Relation::kAbelian;
  if (name == "nilpotent") return Relation::kNilpotent;
  if (name == "solvable") return Relation::kSolvable;
  throw InputError("unknown relation '" + std::string(name) + "' (expected abelian, nilpotent or solvable)");
}

std::string_view relation_name(Relation rel) {
  switch (rel) {
    case Relation::kAbelian:
      return "abelian";
    case Relation::kNilpotent:
      return "nilpotent";
    case Relation::kSolvable:
      return "solvable";
  }
  return "?";
}

std::string_view relation_graph_name(Relation rel) {
  switch (rel) {
    case Relation::kAbelian:
      return "CCC";
    case Relation::kNilpotent:
      return "NCC";
    case Relation::kSolvable:
      return "SCC";
  }
  return "?";
}

bool subgroup_satisfies(const Subgroup& h, Relation rel, const SolvabilityOptions& opts) {
  switch (rel) {
    case Relation::kAbelian:
      return is_abelian(h);
    case Relation::kNilpotent:
      return is_nilpotent(h, opts);
    case Relation::kSolvable:
      return is_solvable(h, opts);
  }
  return false;
}

bool pair_satisfies(const FiniteGroup& g, Element x, Element y, Relation rel, const SolvabilityOptions& opts) {
  const bool commute = g.mul(x, y) == g.mul(y, x);
  if (rel == Relation::kAbelian) return commute;
  if (opts.shortcuts) {
    if (commute) return true;
    // Elements of coprime order commute in a nilpotent group.
    if (rel == Relation::kNilpotent && std::gcd(g.element_order(x), g.element_order(y)) == 1) return false;
  }
  const Element gens[] = {x, y};
  return subgroup_satisfies(closure(g, gens), rel, opts);
}

}  // namespace sccg
