#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sccg/group.hpp"

namespace sccg {

// Parsed group description.
//
//   cyclic:n            cyclic group of order n (n >= 1)
//   dihedral:n          symmetries of the n-gon, order 2n (n >= 3)
//   quaternion:m        generalized quaternion group of order m = 2^k >= 8
//   symmetric:n         S_n on n points
//   alternating:n       A_n on n points
//   psl2:q              PSL(2, q) on the q + 1 points of the projective line
//   sl2:q               SL(2, q) on the q^2 - 1 nonzero vectors (q <= 32 for both)
//   product:(A)x(B)     direct product, (a, b) numbered a * |B| + b
//   perm-file:path      generators in cycle notation, see parse_perm_text
//   table-file:path     Cayley table, see parse_table_text
//   named:M10           bundled permutation groups (M10, PSL3_4)
struct GroupSpec {
  enum class Kind {
    kCyclic,
    kDihedral,
    kQuaternion,
    kSymmetric,
    kAlternating,
    kPsl2,
    kSl2,
    kProduct,
    kPermFile,
    kTableFile,
    kNamed
  };

  Kind kind = Kind::kCyclic;
  unsigned long parameter = 0;
  std::string text;  // path or name
  std::vector<GroupSpec> factors;

  // Throws InputError with the column of the first problem.
  static GroupSpec parse(std::string_view spec);
  std::string str() const;
};

// Canonical form of a spec string (parse, then print).
std::string canonical_spec(std::string_view spec);

// Builds the group; its label is the canonical spec.
std::shared_ptr<const FiniteGroup> make_group(std::string_view spec, const GroupLimits& limits = default_limits());
FiniteGroup build_group(const GroupSpec& spec, const GroupLimits& limits = default_limits());

// "perm <degree>" on the first non-comment line, then one generator per line in
// 1-based cycle notation. '#' starts a comment.
FiniteGroup parse_perm_text(std::string_view text, const GroupLimits& limits, std::string label = {});
FiniteGroup parse_perm_file(const std::string& path, const GroupLimits& limits = default_limits());

// Order n on the first line, then n rows of n indices. Row 0 and column 0 must
// be the identity sequence. Associativity is checked exhaustively for n <= 512
// and on 10^6 pseudo-random triples above that.
FiniteGroup parse_table_text(std::string_view text, std::string label = {});
FiniteGroup parse_table_file(const std::string& path);

// Serialized Cayley table in the format read by parse_table_text.
std::string table_text(const FiniteGroup& g);

// Generator text of a bundled group in the perm-file format; empty for groups
// that are constructed rather than read (PSL3_4).
std::string_view bundled_generators(std::string_view name);
std::vector<std::string> bundled_names();

}  // namespace sccg
