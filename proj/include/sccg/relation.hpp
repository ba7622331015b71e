#pragma once

#include <string>
#include <string_view>

#include "sccg/group.hpp"
#include "sccg/subgroup.hpp"

namespace sccg {

// Property required of <x, y>. Abelian implies nilpotent implies solvable.
enum class Relation { kAbelian, kNilpotent, kSolvable };

Relation parse_relation(std::string_view name);
std::string_view relation_name(Relation rel);
// Graph family name: CCC, NCC or SCC.
std::string_view relation_graph_name(Relation rel);

bool subgroup_satisfies(const Subgroup& h, Relation rel, const SolvabilityOptions& opts = {});

// Whether <x, y> has the property. Uncached.
bool pair_satisfies(const FiniteGroup& g, Element x, Element y, Relation rel,
                    const SolvabilityOptions& opts = {});

}  // namespace sccg
