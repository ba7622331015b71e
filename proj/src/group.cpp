#include "sccg/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

#include "sccg/errors.hpp"

namespace sccg {

namespace {

std::string_view bytes_of(std::span<const std::uint16_t> p) {
  return {reinterpret_cast<const char*>(p.data()), p.size() * sizeof(std::uint16_t)};
}

}  // namespace

Permutation compose(std::span<const std::uint16_t> p, std::span<const std::uint16_t> q) {
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

Permutation identity_permutation(std::size_t degree) {
  Permutation r(degree);
  for (std::size_t i = 0; i < degree; ++i) r[i] = static_cast<std::uint16_t>(i);
  return r;
}

Permutation invert(std::span<const std::uint16_t> p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint16_t>(i);
  return r;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0 || degree > 65535) throw InputError("permutation degree out of range");
  Permutation result = identity_permutation(degree);
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    std::ostringstream os;
    os << what << " at column " << (pos + 1) << " in '" << text << "'";
    throw InputError(os.str());
  };
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',')) ++pos;
  };
  skip_ws();
  if (pos == text.size()) fail("empty permutation");
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<std::uint16_t> cycle;
    std::unordered_set<std::uint16_t> seen;
    while (true) {
      skip_ws();
      if (pos == text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] < '0' || text[pos] > '9') fail("expected a point number");
      std::size_t value = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > 1000000) fail("point number too large");
        ++pos;
      }
      if (value < 1 || value > degree) fail("point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      auto point = static_cast<std::uint16_t>(value - 1);
      if (!seen.insert(point).second) fail("point " + std::to_string(value) + " repeated within a cycle");
      cycle.push_back(point);
    }
    // Cycles are composed left to right as written, rightmost applied first.
    if (cycle.size() > 1) {
      Permutation c = identity_permutation(degree);
      for (std::size_t i = 0; i < cycle.size(); ++i) c[cycle[i]] = cycle[(i + 1) % cycle.size()];
      result = compose(result, c);
    }
  }
  return result;
}

std::string format_cycles(std::span<const std::uint16_t> p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

GroupLimits default_limits() {
  GroupLimits limits;
  if (const char* env = std::getenv("SCCG_MAX_ORDER")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) limits.max_perm_order = static_cast<std::size_t>(v);
  }
  return limits;
}

FiniteGroup::FiniteGroup(const FiniteGroup& other)
    : n_(other.n_),
      backend_(other.backend_),
      table_(other.table_),
      degree_(other.degree_),
      perms_(other.perms_),
      inverses_(other.inverses_),
      orders_(other.orders_),
      label_(other.label_) {
  build_index();
}

FiniteGroup& FiniteGroup::operator=(const FiniteGroup& other) {
  if (this != &other) {
    FiniteGroup copy(other);
    *this = std::move(copy);
  }
  return *this;
}

Element FiniteGroup::check(Element g) const {
  if (g >= n_) {
    throw InputError("element index " + std::to_string(g) + " out of range for group of order " +
                     std::to_string(n_));
  }
  return g;
}

FiniteGroup FiniteGroup::from_table(std::size_t n, std::span<const Element> table, std::string label) {
  if (n == 0) throw InputError("group order must be positive");
  if (n > 65535) throw BudgetError("table backend supports at most 65535 elements");
  if (table.size() != n * n) throw InputError("table size does not match order");
  FiniteGroup g;
  g.n_ = n;
  g.backend_ = Backend::kTable;
  g.table_.resize(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    if (table[i] >= n) throw InputError("table entry out of range");
    g.table_[i] = static_cast<std::uint16_t>(table[i]);
  }
  g.label_ = std::move(label);
  g.compute_orders_and_inverses();
  return g;
}

FiniteGroup FiniteGroup::from_permutations(std::vector<Permutation> elements, std::size_t degree,
                                           const GroupLimits& limits, std::string label) {
  if (elements.empty()) throw InputError("empty element list");
  if (elements.size() > limits.max_perm_order) {
    throw BudgetError("group order " + std::to_string(elements.size()) + " exceeds budget " +
                      std::to_string(limits.max_perm_order));
  }
  std::sort(elements.begin(), elements.end());
  if (elements.front() != identity_permutation(degree)) throw InputError("element set lacks the identity");
  FiniteGroup g;
  g.n_ = elements.size();
  g.degree_ = degree;
  g.perms_.reserve(g.n_ * degree);
  for (const auto& p : elements) {
    if (p.size() != degree) throw InputError("permutation degree mismatch");
    g.perms_.insert(g.perms_.end(), p.begin(), p.end());
  }
  elements.clear();
  g.label_ = std::move(label);
  g.build_index();
  if (g.index_.size() != g.n_) throw InputError("duplicate permutations in element list");
  g.backend_ = Backend::kPermutation;
  if (g.n_ <= std::min<std::size_t>(limits.max_table_order, 65535)) {
    g.table_.resize(g.n_ * g.n_);
    for (Element a = 0; a < g.n_; ++a) {
      for (Element b = 0; b < g.n_; ++b) g.table_[static_cast<std::size_t>(a) * g.n_ + b] =
          static_cast<std::uint16_t>(g.mul_perm(a, b));
    }
    g.backend_ = Backend::kTable;
  }
  g.compute_orders_and_inverses();
  return g;
}

FiniteGroup FiniteGroup::generate(std::span<const Permutation> generators, std::size_t degree,
                                  const GroupLimits& limits, std::string label) {
  std::set<Permutation> seen;
  std::deque<Permutation> frontier;
  Permutation id = identity_permutation(degree);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Permutation cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& gen : generators) {
      if (gen.size() != degree) throw InputError("generator degree mismatch");
      Permutation next = compose(cur, gen);
      if (seen.insert(next).second) {
        if (seen.size() > limits.max_perm_order) {
          throw BudgetError("generated group exceeds order budget " + std::to_string(limits.max_perm_order));
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  return from_permutations(std::vector<Permutation>(seen.begin(), seen.end()), degree, limits,
                           std::move(label));
}

void FiniteGroup::build_index() {
  index_.clear();
  if (degree_ == 0) return;
  index_.reserve(n_);
  for (Element g = 0; g < n_; ++g) index_.emplace(bytes_of(permutation(g)), g);
}

std::span<const std::uint16_t> FiniteGroup::permutation(Element g) const {
  check(g);
  if (degree_ == 0) throw InputError("group has no permutation representation");
  return {perms_.data() + static_cast<std::size_t>(g) * degree_, degree_};
}

std::optional<Element> FiniteGroup::find(std::span<const std::uint16_t> perm) const {
  if (perm.size() != degree_) return std::nullopt;
  auto it = index_.find(bytes_of(perm));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element FiniteGroup::mul_perm(Element g, Element h) const {
  thread_local Permutation buffer;
  buffer.resize(degree_);
  const std::uint16_t* pg = perms_.data() + static_cast<std::size_t>(g) * degree_;
  const std::uint16_t* ph = perms_.data() + static_cast<std::size_t>(h) * degree_;
  for (std::size_t i = 0; i < degree_; ++i) buffer[i] = pg[ph[i]];
  auto it = index_.find(bytes_of(buffer));
  if (it == index_.end()) throw InputError("permutation set is not closed under composition");
  return it->second;
}

void FiniteGroup::compute_orders_and_inverses() {
  orders_.assign(n_, 0);
  inverses_.assign(n_, 0);
  for (Element g = 0; g < n_; ++g) {
    if (orders_[g] != 0) continue;
    Element prev = kIdentity;
    Element x = g;
    unsigned k = 1;
    while (x != kIdentity) {
      prev = x;
      x = mul_unchecked(x, g);
      ++k;
      if (k > n_ + 1) throw InputError("element has no finite order; table is not a group");
    }
    // x = g^k = 1 at loop exit.
    unsigned order = k;
    orders_[g] = order;
    inverses_[g] = (g == kIdentity) ? kIdentity : prev;
  }
}

Element FiniteGroup::power(Element g, long long k) const {
  check(g);
  long long o = orders_[g];
  k %= o;
  if (k < 0) k += o;
  Element result = kIdentity;
  Element base = g;
  while (k > 0) {
    if (k & 1) result = mul_unchecked(result, base);
    base = mul_unchecked(base, base);
    k >>= 1;
  }
  return result;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const GroupLimits& limits,
                           std::string label) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  const std::size_t n = na * nb;
  if (n > std::max(limits.max_table_order, limits.max_perm_order)) {
    throw BudgetError("direct product order " + std::to_string(n) + " exceeds budget");
  }
  if (n <= std::min<std::size_t>(limits.max_table_order, 65535)) {
    std::vector<Element> table(n * n);
    for (Element x = 0; x < n; ++x) {
      const Element xa = x / nb, xb = x % nb;
      for (Element y = 0; y < n; ++y) {
        const Element ya = y / nb, yb = y % nb;
        table[static_cast<std::size_t>(x) * n + y] =
            a.mul_unchecked(xa, ya) * static_cast<Element>(nb) + b.mul_unchecked(xb, yb);
      }
    }
    return FiniteGroup::from_table(n, table, std::move(label));
  }
  if (n > limits.max_perm_order) throw BudgetError("direct product order " + std::to_string(n) + " exceeds budget");
  // Permutation backend on the disjoint union of the factors' points; factors
  // without a permutation representation use their right regular action.
  auto rep = [](const FiniteGroup& g, Element x) {
    if (g.has_permutations()) {
      auto p = g.permutation(x);
      return Permutation(p.begin(), p.end());
    }
    Permutation p(g.order());
    for (Element y = 0; y < g.order(); ++y) p[y] = static_cast<std::uint16_t>(g.mul_unchecked(y, x));
    return p;
  };
  const std::size_t da = a.has_permutations() ? a.degree() : na;
  const std::size_t db = b.has_permutations() ? b.degree() : nb;
  if (da + db > 65535) throw BudgetError("direct product degree too large");
  std::vector<Permutation> elements;
  elements.reserve(n);
  for (Element x = 0; x < na; ++x) {
    Permutation px = rep(a, x);
    for (Element y = 0; y < nb; ++y) {
      Permutation py = rep(b, y);
      Permutation p(da + db);
      for (std::size_t i = 0; i < da; ++i) p[i] = px[i];
      for (std::size_t i = 0; i < db; ++i) p[da + i] = static_cast<std::uint16_t>(py[i] + da);
      elements.push_back(std::move(p));
    }
  }
  // Factor numberings agree with lexicographic order of their representations
  // (first image of the regular action is the element itself), so the sorted
  // union keeps the g * |H| + h encoding.
  FiniteGroup g = FiniteGroup::from_permutations(std::move(elements), da + db, limits, std::move(label));
  return g;
}

}  // namespace sccg
