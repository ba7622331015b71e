#include "sccg/catalog.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "sccg/errors.hpp"
#include "sccg/field.hpp"

namespace sccg {

namespace {

constexpr std::string_view kM10 =
    "# M10: point stabilizer of M11 acting on the remaining 10 points\n"
    "perm 10\n"
    "(2 6 10 7)(3 9 4 5)\n"
    "(1 5 7 6 9)(2 4 8 3 10)\n";

[[noreturn]] void spec_error(std::string_view spec, std::size_t column, const std::string& what) {
  std::ostringstream os;
  os << "bad group spec '" << spec << "' at column " << (column + 1) << ": " << what;
  throw InputError(os.str());
}

unsigned long parse_number(std::string_view spec, std::size_t offset, std::string_view digits) {
  if (digits.empty()) spec_error(spec, offset, "expected a number");
  unsigned long value = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char c = digits[i];
    if (c < '0' || c > '9') spec_error(spec, offset + i, "expected a digit");
    value = value * 10 + static_cast<unsigned long>(c - '0');
    if (value > 100000000UL) spec_error(spec, offset, "number too large");
  }
  return value;
}

// Index of the parenthesis closing the one at `open`.
std::size_t matching_paren(std::string_view s, std::size_t open, std::string_view whole, std::size_t base) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) return i;
  }
  spec_error(whole, base + open, "unbalanced parenthesis");
}

GroupSpec parse_at(std::string_view whole, std::size_t base, std::string_view s) {
  const std::size_t colon = s.find(':');
  if (colon == std::string_view::npos) spec_error(whole, base, "expected '<kind>:<argument>'");
  const std::string_view kind = s.substr(0, colon);
  const std::string_view arg = s.substr(colon + 1);
  const std::size_t arg_at = base + colon + 1;
  GroupSpec spec;
  using Kind = GroupSpec::Kind;
  auto numeric = [&](Kind k) {
    spec.kind = k;
    spec.parameter = parse_number(whole, arg_at, arg);
  };
  if (kind == "cyclic") {
    numeric(Kind::kCyclic);
    if (spec.parameter < 1) spec_error(whole, arg_at, "cyclic order must be at least 1");
  } else if (kind == "dihedral") {
    numeric(Kind::kDihedral);
    if (spec.parameter < 3) spec_error(whole, arg_at, "dihedral:n needs n >= 3 (order 2n)");
  } else if (kind == "quaternion") {
    numeric(Kind::kQuaternion);
    const unsigned long m = spec.parameter;
    if (m < 8 || (m & (m - 1)) != 0) spec_error(whole, arg_at, "quaternion order must be a power of 2, at least 8");
  } else if (kind == "symmetric") {
    numeric(Kind::kSymmetric);
    if (spec.parameter < 1) spec_error(whole, arg_at, "degree must be at least 1");
  } else if (kind == "alternating") {
    numeric(Kind::kAlternating);
    if (spec.parameter < 1) spec_error(whole, arg_at, "degree must be at least 1");
  } else if (kind == "psl2" || kind == "sl2") {
    numeric(kind == "psl2" ? Kind::kPsl2 : Kind::kSl2);
    const unsigned long q = spec.parameter;
    if (q > 32 || prime_power_decomposition(static_cast<unsigned>(q)).first == 0) {
      spec_error(whole, arg_at, std::to_string(q) + " is not a prime power <= 32");
    }
  } else if (kind == "product") {
    spec.kind = Kind::kProduct;
    if (arg.empty() || arg[0] != '(') spec_error(whole, arg_at, "expected '(' after product:");
    const std::size_t close1 = matching_paren(arg, 0, whole, arg_at);
    if (close1 + 1 >= arg.size() || arg[close1 + 1] != 'x') spec_error(whole, arg_at + close1 + 1, "expected 'x'");
    const std::size_t open2 = close1 + 2;
    if (open2 >= arg.size() || arg[open2] != '(') spec_error(whole, arg_at + open2, "expected '('");
    const std::size_t close2 = matching_paren(arg, open2, whole, arg_at);
    if (close2 + 1 != arg.size()) spec_error(whole, arg_at + close2 + 1, "trailing characters");
    spec.factors.push_back(parse_at(whole, arg_at + 1, arg.substr(1, close1 - 1)));
    spec.factors.push_back(parse_at(whole, arg_at + open2 + 1, arg.substr(open2 + 1, close2 - open2 - 1)));
  } else if (kind == "perm-file" || kind == "table-file") {
    spec.kind = kind == "perm-file" ? Kind::kPermFile : Kind::kTableFile;
    if (arg.empty()) spec_error(whole, arg_at, "missing path");
    spec.text = std::string(arg);
  } else if (kind == "named") {
    spec.kind = Kind::kNamed;
    const auto names = bundled_names();
    if (std::find(names.begin(), names.end(), arg) == names.end()) spec_error(whole, arg_at, "unknown named group '" + std::string(arg) + "'");
    spec.text = std::string(arg);
  } else {
    spec_error(whole, base, "unknown group kind '" + std::string(kind) + "'");
  }
  return spec;
}

unsigned long factorial_capped(unsigned long n, unsigned long cap) {
  unsigned long f = 1;
  for (unsigned long i = 2; i <= n; ++i) {
    f *= i;
    if (f > cap) return cap + 1;
  }
  return f;
}

void check_budget(unsigned long order, const GroupLimits& limits) {
  if (order > limits.max_perm_order) {
    throw BudgetError("group order " + std::to_string(order) + " exceeds budget " +
                      std::to_string(limits.max_perm_order));
  }
}

FiniteGroup cyclic(unsigned long n, const GroupLimits& limits) {
  if (n > limits.max_table_order) throw BudgetError("cyclic order exceeds table budget");
  std::vector<Element> table(n * n);
  for (unsigned long i = 0; i < n; ++i) {
    for (unsigned long j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>((i + j) % n);
  }
  return FiniteGroup::from_table(n, table);
}

// a^i b^j stored as i + (m/2) j, with a^(m/2) = 1, b^2 = a^(m/4), b a b^-1 = a^-1.
FiniteGroup quaternion(unsigned long m, const GroupLimits& limits) {
  if (m > limits.max_table_order) throw BudgetError("quaternion order exceeds table budget");
  const unsigned long n = m / 2;
  std::vector<Element> table(m * m);
  for (unsigned long x = 0; x < m; ++x) {
    const unsigned long i1 = x % n, j1 = x / n;
    for (unsigned long y = 0; y < m; ++y) {
      const unsigned long i2 = y % n, j2 = y / n;
      unsigned long i, j;
      if (j1 == 0) {
        i = (i1 + i2) % n;
        j = j2;
      } else if (j2 == 0) {
        i = (i1 + n - i2) % n;
        j = 1;
      } else {
        i = (i1 + n - i2 + n / 2) % n;
        j = 0;
      }
      table[x * m + y] = static_cast<Element>(i + n * j);
    }
  }
  return FiniteGroup::from_table(m, table);
}

FiniteGroup dihedral(unsigned long n, const GroupLimits& limits) {
  check_budget(2 * n, limits);
  if (n > 65535) throw BudgetError("dihedral degree too large");
  Permutation r(n), s(n);
  for (unsigned long i = 0; i < n; ++i) {
    r[i] = static_cast<std::uint16_t>((i + 1) % n);
    s[i] = static_cast<std::uint16_t>((n - i) % n);
  }
  const Permutation gens[] = {r, s};
  return FiniteGroup::generate(gens, n, limits);
}

bool is_even(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len > 0) transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

FiniteGroup symmetric_or_alternating(unsigned long n, bool alternating, const GroupLimits& limits) {
  unsigned long order = factorial_capped(n, limits.max_perm_order * 2);
  if (alternating && n >= 2) order /= 2;
  check_budget(order, limits);
  std::vector<Permutation> elements;
  Permutation p = identity_permutation(n);
  do {
    if (!alternating || is_even(p)) elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return FiniteGroup::from_permutations(std::move(elements), n, limits);
}

// PSL(2, q) on points [x : 1] -> x and [1 : 0] -> q, or SL(2, q) on nonzero
// vectors (u, v) -> u q + v - 1.
FiniteGroup linear2(unsigned q, bool projective, const GroupLimits& limits) {
  const FieldTable f = FieldTable::make(q);
  const unsigned long order = static_cast<unsigned long>(q) * (q * q - 1) / (projective && q % 2 == 1 ? 2 : 1);
  check_budget(order, limits);
  const std::size_t degree = projective ? q + 1 : q * q - 1;
  std::set<Permutation> elements;
  auto act = [&](unsigned a, unsigned b, unsigned c, unsigned d) {
    Permutation p(degree);
    if (projective) {
      for (unsigned x = 0; x <= q; ++x) {
        unsigned num, den;
        if (x < q) {
          num = f.add(f.mul(a, x), b);
          den = f.add(f.mul(c, x), d);
        } else {
          num = a;
          den = c;
        }
        p[x] = static_cast<std::uint16_t>(den == 0 ? q : f.mul(num, f.inv(den)));
      }
    } else {
      for (unsigned u = 0; u < q; ++u) {
        for (unsigned v = 0; v < q; ++v) {
          if (u == 0 && v == 0) continue;
          const unsigned u2 = f.add(f.mul(a, u), f.mul(b, v));
          const unsigned v2 = f.add(f.mul(c, u), f.mul(d, v));
          p[u * q + v - 1] = static_cast<std::uint16_t>(u2 * q + v2 - 1);
        }
      }
    }
    elements.insert(std::move(p));
  };
  for (unsigned a = 0; a < q; ++a) {
    for (unsigned b = 0; b < q; ++b) {
      for (unsigned c = 0; c < q; ++c) {
        if (a != 0) {
          // d = (1 + b c) / a
          act(a, b, c, f.mul(f.add(1, f.mul(b, c)), f.inv(a)));
        } else if (b != 0) {
          // -b c = 1
          if (f.mul(f.neg(b), c) != 1) continue;
          for (unsigned d = 0; d < q; ++d) act(a, b, c, d);
        }
      }
    }
  }
  return FiniteGroup::from_permutations(std::vector<Permutation>(elements.begin(), elements.end()), degree,
                                        limits);
}

// PSL(3, 4) on the 21 points of the projective plane over GF(4), generated by
// elementary transvections.
FiniteGroup psl3_4(const GroupLimits& limits) {
  const FieldTable f = FieldTable::make(4);
  std::vector<std::array<unsigned, 3>> points;
  for (unsigned a = 0; a < 4; ++a) {
    for (unsigned b = 0; b < 4; ++b) {
      for (unsigned c = 0; c < 4; ++c) {
        const std::array<unsigned, 3> v{a, b, c};
        const unsigned lead = a != 0 ? a : (b != 0 ? b : c);
        if (lead == 1) points.push_back(v);
      }
    }
  }
  auto normalize = [&](std::array<unsigned, 3> v) {
    const unsigned lead = v[0] != 0 ? v[0] : (v[1] != 0 ? v[1] : v[2]);
    const unsigned s = f.inv(lead);
    for (auto& x : v) x = f.mul(x, s);
    return v;
  };
  std::vector<Permutation> gens;
  for (unsigned i = 0; i < 3; ++i) {
    for (unsigned j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (unsigned t : {1U, 2U}) {
        Permutation p(points.size());
        for (std::size_t k = 0; k < points.size(); ++k) {
          auto v = points[k];
          v[i] = f.add(v[i], f.mul(t, v[j]));
          v = normalize(v);
          p[k] = static_cast<std::uint16_t>(std::find(points.begin(), points.end(), v) - points.begin());
        }
        gens.push_back(std::move(p));
      }
    }
  }
  return FiniteGroup::generate(gens, points.size(), limits);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

GroupSpec GroupSpec::parse(std::string_view spec) { return parse_at(spec, 0, spec); }

std::string GroupSpec::str() const {
  switch (kind) {
    case Kind::kCyclic:
      return "cyclic:" + std::to_string(parameter);
    case Kind::kDihedral:
      return "dihedral:" + std::to_string(parameter);
    case Kind::kQuaternion:
      return "quaternion:" + std::to_string(parameter);
    case Kind::kSymmetric:
      return "symmetric:" + std::to_string(parameter);
    case Kind::kAlternating:
      return "alternating:" + std::to_string(parameter);
    case Kind::kPsl2:
      return "psl2:" + std::to_string(parameter);
    case Kind::kSl2:
      return "sl2:" + std::to_string(parameter);
    case Kind::kProduct:
      return "product:(" + factors.at(0).str() + ")x(" + factors.at(1).str() + ")";
    case Kind::kPermFile:
      return "perm-file:" + text;
    case Kind::kTableFile:
      return "table-file:" + text;
    case Kind::kNamed:
      return "named:" + text;
  }
  return {};
}

std::string canonical_spec(std::string_view spec) { return GroupSpec::parse(spec).str(); }

FiniteGroup build_group(const GroupSpec& spec, const GroupLimits& limits) {
  using Kind = GroupSpec::Kind;
  FiniteGroup g = [&]() -> FiniteGroup {
    switch (spec.kind) {
      case Kind::kCyclic:
        return cyclic(spec.parameter, limits);
      case Kind::kDihedral:
        return dihedral(spec.parameter, limits);
      case Kind::kQuaternion:
        return quaternion(spec.parameter, limits);
      case Kind::kSymmetric:
        return symmetric_or_alternating(spec.parameter, false, limits);
      case Kind::kAlternating:
        return symmetric_or_alternating(spec.parameter, true, limits);
      case Kind::kPsl2:
        return linear2(static_cast<unsigned>(spec.parameter), true, limits);
      case Kind::kSl2:
        return linear2(static_cast<unsigned>(spec.parameter), false, limits);
      case Kind::kProduct: {
        FiniteGroup a = build_group(spec.factors.at(0), limits);
        FiniteGroup b = build_group(spec.factors.at(1), limits);
        return direct_product(a, b, limits);
      }
      case Kind::kPermFile:
        return parse_perm_file(spec.text, limits);
      case Kind::kTableFile:
        return parse_table_file(spec.text);
      case Kind::kNamed:
        if (spec.text == "PSL3_4") return psl3_4(limits);
        return parse_perm_text(bundled_generators(spec.text), limits);
    }
    throw InputError("unhandled group kind");
  }();
  g.set_label(spec.str());
  return g;
}

std::shared_ptr<const FiniteGroup> make_group(std::string_view spec, const GroupLimits& limits) {
  return std::make_shared<const FiniteGroup>(build_group(GroupSpec::parse(spec), limits));
}

FiniteGroup parse_perm_text(std::string_view text, const GroupLimits& limits, std::string label) {
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      if (degree == 0) {
        if (line.substr(0, 5) != "perm " && line.substr(0, 5) != "perm\t") throw InputError("expected 'perm <degree>'");
        std::string_view digits = trim(line.substr(5));
        std::size_t d = 0;
        for (char c : digits) {
          if (c < '0' || c > '9') throw InputError("bad degree '" + std::string(digits) + "'");
          d = d * 10 + static_cast<std::size_t>(c - '0');
          if (d > 65535) throw InputError("degree too large");
        }
        if (d == 0) throw InputError("degree must be positive");
        degree = d;
      } else {
        gens.push_back(parse_cycles(line, degree));
      }
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (end == text.size()) break;
  }
  if (degree == 0) throw InputError("missing 'perm <degree>' header");
  if (gens.empty()) throw InputError("no generators given");
  return FiniteGroup::generate(gens, degree, limits, std::move(label));
}

FiniteGroup parse_perm_file(const std::string& path, const GroupLimits& limits) {
  return parse_perm_text(read_file(path), limits, "perm-file:" + path);
}

FiniteGroup parse_table_text(std::string_view text, std::string label) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  if (!(in >> n)) throw InputError("expected the group order on the first line");
  if (n <= 0) throw InputError("group order must be positive");
  if (n > 65535) throw BudgetError("table too large");
  const auto size = static_cast<std::size_t>(n);
  std::vector<Element> table(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      long long v;
      if (!(in >> v)) {
        throw InputError("missing or malformed entry at row " + std::to_string(i) + ", column " + std::to_string(j));
      }
      if (v < 0 || v >= n) {
        throw InputError("entry " + std::to_string(v) + " out of range at row " + std::to_string(i) + ", column " +
                         std::to_string(j));
      }
      table[i * size + j] = static_cast<Element>(v);
    }
  }
  std::string extra;
  if (in >> extra) throw InputError("trailing data after the table");
  for (std::size_t i = 0; i < size; ++i) {
    if (table[i] != i) throw InputError("row 0 is not the identity sequence at column " + std::to_string(i));
    if (table[i * size] != i) throw InputError("column 0 is not the identity sequence at row " + std::to_string(i));
  }
  std::vector<char> seen(size);
  for (std::size_t i = 0; i < size; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < size; ++j) {
      if (seen[table[i * size + j]]++) {
        throw InputError("row " + std::to_string(i) + " repeats an entry at column " + std::to_string(j));
      }
    }
  }
  for (std::size_t j = 0; j < size; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < size; ++i) {
      if (seen[table[i * size + j]]++) {
        throw InputError("column " + std::to_string(j) + " repeats an entry at row " + std::to_string(i));
      }
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(table[a * size + b]); };
  auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (at(at(a, b), c) != at(a, at(b, c))) {
      throw InputError("associativity fails for (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                       std::to_string(c) + ")");
    }
  };
  if (size <= 512) {
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = 0; b < size; ++b) {
        for (std::size_t c = 0; c < size; ++c) check_triple(a, b, c);
      }
    }
  } else {
    std::mt19937_64 rng(0x5cc9);
    std::uniform_int_distribution<std::size_t> pick(0, size - 1);
    for (int t = 0; t < 1000000; ++t) check_triple(pick(rng), pick(rng), pick(rng));
  }
  return FiniteGroup::from_table(size, table, std::move(label));
}

FiniteGroup parse_table_file(const std::string& path) {
  return parse_table_text(read_file(path), "table-file:" + path);
}

std::string table_text(const FiniteGroup& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      if (b > 0) out += ' ';
      out += std::to_string(g.mul_unchecked(a, b));
    }
    out += '\n';
  }
  return out;
}

std::string_view bundled_generators(std::string_view name) {
  if (name == "M10") return kM10;
  return {};
}

std::vector<std::string> bundled_names() { return {"M10", "PSL3_4"}; }

}  // namespace sccg
