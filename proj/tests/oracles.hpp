#pragma once

// Brute-force reference implementations used only by tests. They share no
// code with the library beyond FiniteGroup::mul and are deliberately naive.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sccg/group.hpp"
#include "sccg/relation.hpp"

namespace oracle {

using sccg::Element;
using sccg::FiniteGroup;
using Set = std::set<Element>;

// Repeated pairwise products until nothing new appears.
inline Set closure(const FiniteGroup& g, const std::vector<Element>& gens) {
  Set s{0};
  s.insert(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Element> cur(s.begin(), s.end());
    for (Element a : cur) {
      for (Element b : cur) {
        if (s.insert(g.mul(a, b)).second) grew = true;
      }
    }
  }
  return s;
}

inline Element commutator(const FiniteGroup& g, Element a, Element b) {
  return g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b));
}

inline Set commutator_subgroup(const FiniteGroup& g, const Set& a, const Set& b) {
  std::vector<Element> comms;
  for (Element x : a) {
    for (Element y : b) comms.push_back(commutator(g, x, y));
  }
  return closure(g, comms);
}

inline bool solvable(const FiniteGroup& g, const Set& h) {
  Set d = h;
  while (d.size() > 1) {
    Set next = commutator_subgroup(g, d, d);
    if (next.size() == d.size()) return false;
    d = std::move(next);
  }
  return true;
}

inline bool nilpotent(const FiniteGroup& g, const Set& h) {
  Set gamma = h;
  while (gamma.size() > 1) {
    Set next = commutator_subgroup(g, gamma, h);
    if (next.size() == gamma.size()) return false;
    gamma = std::move(next);
  }
  return true;
}

inline bool abelian(const FiniteGroup& g, const Set& h) {
  for (Element a : h) {
    for (Element b : h) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

inline bool related(const FiniteGroup& g, Element x, Element y, sccg::Relation rel) {
  Set h = closure(g, {x, y});
  switch (rel) {
    case sccg::Relation::kAbelian:
      return abelian(g, h);
    case sccg::Relation::kNilpotent:
      return nilpotent(g, h);
    case sccg::Relation::kSolvable:
      return solvable(g, h);
  }
  return false;
}

// Conjugacy classes as sets {y x y^-1 : y in G}, ordered by least member.
inline std::vector<Set> classes(const FiniteGroup& g) {
  std::map<Element, Set> by_min;
  for (Element x = 0; x < g.order(); ++x) {
    Set c;
    for (Element y = 0; y < g.order(); ++y) c.insert(g.mul(g.mul(y, x), g.inverse(y)));
    by_min[*c.begin()] = c;
  }
  std::vector<Set> out;
  for (auto& [k, v] : by_min) out.push_back(v);
  return out;
}

// Class-level relation graph by testing every pair of elements.
inline std::set<std::pair<std::size_t, std::size_t>> class_graph_edges(const FiniteGroup& g, sccg::Relation rel) {
  auto cls = classes(g);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i < cls.size(); ++i) {
    for (std::size_t j = i + 1; j < cls.size(); ++j) {
      bool adjacent = false;
      for (Element x : cls[i]) {
        for (Element y : cls[j]) {
          if (related(g, x, y, rel)) {
            adjacent = true;
            break;
          }
        }
        if (adjacent) break;
      }
      if (adjacent) edges.insert({i, j});
    }
  }
  return edges;
}

// Element given in 1-based cycle notation, e.g. "(1 2)(3 4)".
inline Element perm(const FiniteGroup& g, const std::string& cycles) {
  auto p = sccg::parse_cycles(cycles, g.degree());
  auto e = g.find(p);
  if (!e) throw std::runtime_error("permutation " + cycles + " not in group");
  return *e;
}

}  // namespace oracle
