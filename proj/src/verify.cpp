#include "sccg/verify.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "sccg/catalog.hpp"
#include "sccg/conjugacy.hpp"
#include "sccg/errors.hpp"

namespace sccg {

namespace {

using Rational = boost::rational<long long>;

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<unsigned> primes_of(unsigned n) {
  std::vector<unsigned> out;
  for (auto p : prime_factors(n)) out.push_back(static_cast<unsigned>(p));
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

struct GroupContext {
  std::string spec;
  std::shared_ptr<const FiniteGroup> group;
  std::unique_ptr<GroupAnalysis> analysis;
  std::map<std::pair<int, int>, ClassGraph> graphs;
  std::optional<MetricsReport> scc_metrics;
  std::optional<std::string> failure;  // budget problem while building
};

class Runner {
 public:
  explicit Runner(const SuiteOptions& opts) : opts_(opts) {}

  const SuiteOptions& options() const { return opts_; }

  // Throws BudgetError when the group cannot be built within limits.
  GroupContext& context(const std::string& spec) {
    auto it = cache_.find(spec);
    if (it == cache_.end()) {
      auto ctx = std::make_unique<GroupContext>();
      ctx->spec = spec;
      try {
        ctx->group = make_group(spec, opts_.limits);
        AnalysisOptions ao;
        ao.threads = opts_.threads;
        ctx->analysis = std::make_unique<GroupAnalysis>(ctx->group, ao);
      } catch (const BudgetError& e) {
        ctx->failure = e.what();
      }
      it = cache_.emplace(spec, std::move(ctx)).first;
    }
    if (it->second->failure) throw BudgetError(*it->second->failure);
    return *it->second;
  }

  const ClassGraph& graph(GroupContext& c, Relation rel, GraphMode mode) {
    const auto key = std::make_pair(static_cast<int>(rel), static_cast<int>(mode));
    auto it = c.graphs.find(key);
    if (it == c.graphs.end()) it = c.graphs.emplace(key, build_graph(*c.analysis, rel, mode)).first;
    return it->second;
  }

  const ClassGraph& scc(GroupContext& c) { return graph(c, Relation::kSolvable, GraphMode::kClass); }

  const MetricsReport& scc_metrics(GroupContext& c) {
    if (!c.scc_metrics) c.scc_metrics = compute_metrics(scc(c).adjacency, opts_.node_budget);
    return *c.scc_metrics;
  }

 private:
  SuiteOptions opts_;
  std::map<std::string, std::unique_ptr<GroupContext>> cache_;
};

using PerGroup = std::function<GroupResult(Runner&, GroupContext&)>;

// Runs `fn` on every corpus group; budget problems become skipped verdicts.
void each_group(Runner& run, const std::vector<std::string>& corpus, CheckResult& out, const PerGroup& fn) {
  for (const auto& spec : corpus) {
    GroupResult r;
    try {
      GroupContext& c = run.context(spec);
      r = fn(run, c);
    } catch (const BudgetError& e) {
      r.verdict = Verdict::kSkipped;
      r.detail = e.what();
    }
    r.group = spec;
    out.results.push_back(std::move(r));
  }
}

GroupResult result(Verdict v, std::string detail) {
  GroupResult r;
  r.verdict = v;
  r.detail = std::move(detail);
  return r;
}

GroupResult expect(bool ok, std::string detail) { return result(ok ? Verdict::kPass : Verdict::kFail, std::move(detail)); }

std::string vertex_name(const ClassGraph& g, std::size_t v) { return g.vertices[v].class_name; }

// First pair of distinct non-adjacent vertices, if any.
std::optional<std::pair<std::size_t, std::size_t>> first_non_edge(const SimpleGraph& g) {
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      if (!g.adjacent(u, v)) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

GroupResult c1_complete_iff_solvable(Runner& run, GroupContext& c) {
  const ClassGraph& g = run.scc(c);
  const bool solvable = c.analysis->group_is_solvable();
  const auto gap = first_non_edge(g.adjacency);
  const bool complete = !gap;
  std::string detail = std::string(solvable ? "solvable" : "not solvable") + ", graph " +
                       (complete ? "complete" : "incomplete");
  if (gap) detail += " (" + vertex_name(g, gap->first) + " and " + vertex_name(g, gap->second) + " not adjacent)";
  return expect(complete == solvable, detail);
}

GroupResult c2_ncc_complete_nilpotent(Runner& run, GroupContext& c) {
  const bool solvable = c.analysis->group_is_solvable();
  const ClassGraph& g = run.graph(c, Relation::kNilpotent, GraphMode::kExpanded);
  const bool complete = g.adjacency.is_complete();
  if (!solvable || !complete) {
    return result(Verdict::kNotApplicable, std::string(solvable ? "solvable" : "not solvable") +
                                               ", expanded NCC graph " + (complete ? "complete" : "incomplete"));
  }
  const bool nilpotent = c.analysis->group_is_nilpotent();
  return expect(nilpotent, std::string("expanded NCC graph complete, group ") + (nilpotent ? "nilpotent" : "not nilpotent"));
}

GroupResult c3_monotonicity(Runner& run, GroupContext& c) {
  std::vector<std::string> parts;
  for (GraphMode mode : {GraphMode::kClass, GraphMode::kExpanded}) {
    const ClassGraph& ccc = run.graph(c, Relation::kAbelian, mode);
    const ClassGraph& ncc = run.graph(c, Relation::kNilpotent, mode);
    const ClassGraph& scc = run.graph(c, Relation::kSolvable, mode);
    const std::pair<const ClassGraph*, const ClassGraph*> steps[] = {{&ccc, &ncc}, {&ncc, &scc}};
    for (const auto& [lo, hi] : steps) {
      const GraphComparison cmp = compare_graphs(*lo, *hi);
      if (!cmp.left_in_right()) {
        const auto [u, v] = *cmp.witness;
        return result(Verdict::kFail, lo->title() + " edge " + lo->vertices[u].class_name + "(" +
                                          std::to_string(lo->vertices[u].element) + ")-" + lo->vertices[v].class_name +
                                          "(" + std::to_string(lo->vertices[v].element) + ") missing from " + hi->title());
      }
    }
    parts.push_back(std::string(mode_name(mode)) + " " + std::to_string(ccc.adjacency.edge_count()) + " <= " +
                    std::to_string(ncc.adjacency.edge_count()) + " <= " + std::to_string(scc.adjacency.edge_count()));
  }
  return result(Verdict::kPass, "edges " + join(parts, ", "));
}

GroupResult c4_order_pq_girth(Runner& run, GroupContext& c) {
  const FiniteGroup& g = *c.group;
  if (c.analysis->group_is_solvable()) return result(Verdict::kNotApplicable, "solvable");
  // Least element whose order has two distinct prime factors.
  std::optional<Element> a;
  for (Element x = 1; x < g.order() && !a; ++x) {
    if (prime_factors(g.element_order(x)).size() >= 2) a = x;
  }
  if (!a) return result(Verdict::kNotApplicable, "every element has prime-power order");
  const auto ps = primes_of(g.element_order(*a));
  const unsigned p = ps[0], q = ps[1];
  // b = a^(o(a)/pq) has order pq; its powers b^q and b^p have orders p and q.
  const Element b = g.power(*a, g.element_order(*a) / (p * q));
  const Element bp = g.power(b, q), bq = g.power(b, p);
  const ClassGraph& scc = run.scc(c);
  const ClassPartition& cp = c.analysis->classes();
  const unsigned ids[] = {cp.class_of(b), cp.class_of(bp), cp.class_of(bq)};
  bool triangle = ids[0] != ids[1] && ids[1] != ids[2] && ids[0] != ids[2];
  for (int i = 0; i < 3 && triangle; ++i) {
    for (int j = i + 1; j < 3 && triangle; ++j) triangle = scc.adjacency.adjacent(ids[i] - 1, ids[j] - 1);
  }
  const Length gi = girth(scc.adjacency);
  const std::string detail = "element " + std::to_string(b) + " of order " + std::to_string(p * q) + ": classes " +
                             cp.at(ids[0]).name + ", " + cp.at(ids[1]).name + ", " + cp.at(ids[2]).name +
                             (triangle ? " form a triangle" : " do not form a triangle") + "; girth " + gi.str();
  return expect(triangle && gi == Length(3), detail);
}

GroupResult c5_radical(Runner& run, GroupContext& c) {
  const Subgroup& rad = c.analysis->solvable_radical();
  if (rad.order() == 1) return result(Verdict::kNotApplicable, "trivial solvable radical");
  const MetricsReport& m = run.scc_metrics(c);
  const bool ok = m.connected && m.diameter && *m.diameter <= Length(2) && m.domination_number == 1;
  return expect(ok, "|Sol(G)| = " + std::to_string(rad.order()) + ", connected " + (m.connected ? "yes" : "no") +
                        ", diameter " + (m.diameter ? m.diameter->str() : "-") + ", domination " +
                        std::to_string(m.domination_number));
}

constexpr std::size_t kIsolatedOrderLimit = 360;

GroupResult c6_isolated(Runner& run, GroupContext& c) {
  const FiniteGroup& g = *c.group;
  if (g.order() > kIsolatedOrderLimit) {
    return result(Verdict::kNotApplicable, "order above " + std::to_string(kIsolatedOrderLimit));
  }
  const GroupAnalysis& a = *c.analysis;
  const ClassPartition& cp = a.classes();
  const ClassGraph& scc = run.scc(c);
  const std::size_t k = cp.count();
  std::size_t isolated = 0;
  for (unsigned ci = 1; ci < k; ++ci) {
    // met[d]: every conjugate x' of the representative has Sol(x') meeting class d.
    std::vector<char> met(k, 1);
    for (Element x : cp.at(ci).members) {
      std::vector<char> hit(k, 0);
      for (Element y = 0; y < g.order(); ++y) {
        if (a.related(x, y, Relation::kSolvable)) hit[cp.class_of(y)] = 1;
      }
      for (std::size_t d = 0; d < k; ++d) met[d] = met[d] && hit[d];
    }
    // Sol(x') within x^G and {1} for every x' is the same as: no other class met by any of them.
    bool inside = true;
    for (Element x : cp.at(ci).members) {
      for (Element y = 0; y < g.order() && inside; ++y) {
        const unsigned d = cp.class_of(y);
        if (d != 0 && d != ci && a.related(x, y, Relation::kSolvable)) inside = false;
      }
    }
    const bool is_isolated = scc.adjacency.degree(ci - 1) == 0;
    if (inside != is_isolated) {
      return result(Verdict::kFail, "class " + cp.at(ci).name + ": isolated in graph " + (is_isolated ? "yes" : "no") +
                                        ", solvabilizer criterion " + (inside ? "yes" : "no"));
    }
    isolated += is_isolated ? 1 : 0;
    for (unsigned d = 1; d < k; ++d) {
      if (d == ci) continue;
      if (static_cast<bool>(met[d]) != scc.adjacency.adjacent(ci - 1, d - 1)) {
        return result(Verdict::kFail, "classes " + cp.at(ci).name + ", " + cp.at(d).name + ": adjacency " +
                                          (met[d] ? "predicted" : "not predicted") + " by solvabilizers");
      }
    }
  }
  return result(Verdict::kPass, std::to_string(isolated) + " isolated classes; adjacency agrees with solvabilizers");
}

GroupResult c7_products(Runner& run, GroupContext& c) {
  const GroupSpec spec = GroupSpec::parse(c.spec);
  if (spec.kind != GroupSpec::Kind::kProduct) return result(Verdict::kNotApplicable, "not a direct product");
  const std::string left = spec.factors[0].str(), right = spec.factors[1].str();
  GroupContext& lc = run.context(left);
  GroupContext& rc = run.context(right);
  if (lc.group->order() == 1 || rc.group->order() == 1) return result(Verdict::kNotApplicable, "trivial factor");
  const MetricsReport& m = run.scc_metrics(c);
  const Length diam = m.diameter.value_or(Length(0));
  bool ok = m.connected && diam <= Length(3);
  std::string detail = "connected " + std::string(m.connected ? "yes" : "no") + ", diameter " + diam.str();
  if (left == right) {
    const MetricsReport& fm = run.scc_metrics(lc);
    const bool factor_far = !fm.connected || (fm.diameter && Length(3) <= *fm.diameter);
    const bool three = diam == Length(3);
    ok = ok && (three == factor_far);
    detail += "; factor graph " + std::string(fm.connected ? "connected" : "disconnected") + " with diameter " +
              (fm.diameter ? fm.diameter->str() : "-") + ", so diameter 3 is " + (factor_far ? "expected" : "excluded");
  }
  return expect(ok, detail);
}

GroupResult c8_landau(Runner&, GroupContext& c) {
  const FiniteGroup& g = *c.group;
  const ClassPartition& cp = c.analysis->classes();
  Rational sum(0);
  std::size_t largest = 0;
  for (const auto& cls : cp.classes()) {
    const std::size_t n = centralizer(g, cls.representative).order();
    sum += Rational(1, static_cast<long long>(n));
    largest = std::max(largest, n);
  }
  std::ostringstream detail;
  detail << "k = " << cp.count() << ", sum = " << sum.numerator() << "/" << sum.denominator()
         << ", largest centralizer " << largest;
  return expect(sum == Rational(1) && largest == g.order(), detail.str());
}

GroupResult c9_divisor_clique(Runner& run, GroupContext& c) {
  const unsigned bound = clique_lower_bound_orders(*c.group);
  const std::size_t omega = run.scc_metrics(c).clique_number;
  return expect(omega >= bound, "bound " + std::to_string(bound) + ", clique number " + std::to_string(omega));
}

const std::set<std::string> kTriangleFree = {"C1", "C2", "C3", "S3"};

GroupResult c10_triangles(Runner& run, GroupContext& c) {
  const auto tri = find_triangle(run.scc(c).adjacency);
  const std::string name = small_group_name(*c.group);
  const bool exception = kTriangleFree.count(name) > 0;
  if (tri) {
    const ClassGraph& g = run.scc(c);
    return expect(!exception, "triangle " + vertex_name(g, (*tri)[0]) + ", " + vertex_name(g, (*tri)[1]) + ", " +
                                  vertex_name(g, (*tri)[2]));
  }
  return expect(exception, "no triangle; group is " + (name.empty() ? std::string("not of order <= 6") : name));
}

// One named fact: a solvable subgroup meeting three classes of the given
// element orders, found by `search`.
struct NamedFact {
  std::string spec;
  std::string subgroup;
  std::vector<unsigned> orders;
  std::function<std::optional<Subgroup>(const FiniteGroup&, const std::function<bool(const Subgroup&)>&)> search;
};

std::vector<Element> elements_of_order(const FiniteGroup& g, unsigned n) {
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == n) out.push_back(x);
  }
  return out;
}

// <a> for a of order n.
auto cyclic_search(unsigned n) {
  return [n](const FiniteGroup& g, const std::function<bool(const Subgroup&)>& accept) -> std::optional<Subgroup> {
    for (Element a : elements_of_order(g, n)) {
      const Element gens[] = {a};
      Subgroup h = closure(g, gens);
      if (accept(h)) return h;
    }
    return std::nullopt;
  };
}

// <r, t> with o(r) = n, t of order m normalizing <r> without centralizing it.
auto metacyclic_search(unsigned n, unsigned m) {
  return [n, m](const FiniteGroup& g, const std::function<bool(const Subgroup&)>& accept) -> std::optional<Subgroup> {
    const auto tops = elements_of_order(g, m);
    for (Element r : elements_of_order(g, n)) {
      const Element rg[] = {r};
      const Subgroup cyc = closure(g, rg);
      for (Element t : tops) {
        const Element c = g.conjugate(r, t);
        if (c == r || !cyc.contains(c)) continue;
        const Element gens[] = {r, t};
        Subgroup h = closure(g, gens);
        if (h.order() == static_cast<std::size_t>(n) * m && accept(h)) return h;
      }
    }
    return std::nullopt;
  };
}

// <i, j> quaternion of order 8.
std::optional<Subgroup> quaternion_search(const FiniteGroup& g, const std::function<bool(const Subgroup&)>& accept) {
  const auto fours = elements_of_order(g, 4);
  for (Element i : fours) {
    const Element i2 = g.mul(i, i);
    for (Element j : fours) {
      if (g.mul(j, j) != i2 || g.conjugate(i, j) != g.inverse(i)) continue;
      const Element gens[] = {i, j};
      Subgroup h = closure(g, gens);
      if (h.order() == 8 && accept(h)) return h;
    }
  }
  return std::nullopt;
}

std::vector<NamedFact> named_facts() {
  return {
      {"psl2:17", "cyclic subgroup of order 9", {3, 9, 9}, cyclic_search(9)},
      {"psl2:8", "cyclic subgroup of order 7", {7, 7, 7}, cyclic_search(7)},
      {"psl2:4", "dihedral subgroup of order 10", {2, 5, 5}, metacyclic_search(5, 2)},
      {"alternating:6", "dihedral subgroup of order 10", {2, 5, 5}, metacyclic_search(5, 2)},
      {"psl2:7", "non-abelian subgroup of order 21", {3, 7, 7}, metacyclic_search(7, 3)},
      {"named:M10", "quaternion subgroup of order 8", {2, 4, 4}, quaternion_search},
      {"named:PSL3_4", "non-abelian subgroup of order 21", {3, 7, 7}, metacyclic_search(7, 3)},
  };
}

GroupResult c11_named(Runner& run, GroupContext& c) {
  const auto facts = named_facts();
  auto it = std::find_if(facts.begin(), facts.end(), [&](const NamedFact& f) { return f.spec == c.spec; });
  if (it == facts.end()) return result(Verdict::kNotApplicable, "no named fact");
  const FiniteGroup& g = *c.group;
  const ClassPartition& cp = c.analysis->classes();
  // Distinct classes met by h, grouped by element order.
  auto classes_met = [&](const Subgroup& h) {
    std::map<unsigned, std::set<unsigned>> met;
    for (Element x : h.members()) {
      if (x != kIdentity) met[g.element_order(x)].insert(cp.class_of(x));
    }
    return met;
  };
  std::map<unsigned, unsigned> need;
  for (unsigned o : it->orders) need[o]++;
  auto accept = [&](const Subgroup& h) {
    auto met = classes_met(h);
    for (auto [o, n] : need) {
      if (met[o].size() < n) return false;
    }
    return true;
  };
  const auto h = it->search(g, accept);
  if (!h) return result(Verdict::kFail, "no " + it->subgroup + " meeting classes of orders as required");
  std::vector<unsigned> chosen;
  auto met = classes_met(*h);
  for (auto [o, n] : need) {
    auto cls = met[o].begin();
    for (unsigned i = 0; i < n; ++i) chosen.push_back(*cls++);
  }
  const ClassGraph& scc = run.scc(c);
  bool triangle = is_solvable(*h);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) triangle = triangle && scc.adjacency.adjacent(chosen[i] - 1, chosen[j] - 1);
  }
  std::vector<std::string> names;
  for (unsigned id : chosen) names.push_back(cp.at(id).name);
  std::vector<std::string> gens;
  for (Element x : h->generators()) gens.push_back(std::to_string(x));
  return expect(triangle, it->subgroup + " <" + join(gens, ", ") + "> meets " + join(names, ", ") +
                              (triangle ? ", a triangle" : ", but they do not form a triangle"));
}

GroupResult c12_dominance(Runner& run, GroupContext& c) {
  const bool exact = c.spec == "psl2:4";
  if (!exact && c.spec != "psl2:8") return result(Verdict::kNotApplicable, "not PSL(2, 4) or PSL(2, 8)");
  const ClassGraph& scc = run.scc(c);
  const MetricsReport& m = run.scc_metrics(c);
  std::vector<std::size_t> involutions;
  for (std::size_t v = 0; v < scc.size(); ++v) {
    if (scc.vertices[v].element_order == 2) involutions.push_back(v);
  }
  const std::size_t radical = c.analysis->solvable_radical().order();
  bool ok = involutions.size() == 1 && radical == 1;
  if (ok) {
    ok = exact ? m.dominant_vertices == involutions
               : std::find(m.dominant_vertices.begin(), m.dominant_vertices.end(), involutions[0]) !=
                     m.dominant_vertices.end();
  }
  std::vector<std::string> dom;
  for (std::size_t v : m.dominant_vertices) dom.push_back(vertex_name(scc, v));
  return expect(ok, "dominant {" + join(dom, ", ") + "}, |Sol(G)| = " + std::to_string(radical));
}

// Distance bounds between classes in terms of element orders and Sylow shapes.
GroupResult c13_distances(Runner& run, GroupContext& c) {
  const FiniteGroup& g = *c.group;
  const ClassGraph& scc = run.scc(c);
  const std::size_t n = scc.size();
  if (n < 2) return result(Verdict::kNotApplicable, "fewer than two classes");
  std::vector<std::vector<int>> dist(n);
  for (std::size_t v = 0; v < n; ++v) dist[v] = bfs_distances(scc.adjacency, v);
  auto d_of = [&](std::size_t u, std::size_t v) { return dist[u][v] < 0 ? 1000 : dist[u][v]; };

  std::set<unsigned> orders(g.element_orders().begin(), g.element_orders().end());
  auto has_order_pq = [&](unsigned p, unsigned q) {
    return std::any_of(orders.begin(), orders.end(), [&](unsigned o) { return o % (p * q) == 0; });
  };
  std::map<unsigned, bool> nice;  // Sylow p-subgroup cyclic or generalized quaternion
  auto sylow_nice = [&](unsigned p) {
    auto it = nice.find(p);
    if (it == nice.end()) it = nice.emplace(p, check_sylow_shape(g, p) != SylowShape::kOther).first;
    return it->second;
  };

  std::size_t n_cp1 = 0, n_coprime = 0, n_cp = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      const unsigned ox = scc.vertices[u].element_order, oy = scc.vertices[v].element_order;
      const int d = d_of(u, v);
      auto fail = [&](const std::string& claim, int bound) {
        return result(Verdict::kFail, claim + ": d(" + vertex_name(scc, u) + ", " + vertex_name(scc, v) + ") = " +
                                          (d >= 1000 ? std::string("inf") : std::to_string(d)) + " > " +
                                          std::to_string(bound));
      };
      const auto px = primes_of(ox), py = primes_of(oy);
      const bool ppx = px.size() == 1, ppy = py.size() == 1;
      const bool prime_end = is_prime(ox) || is_prime(oy);
      if (u < v && ppx && ppy && px[0] == py[0]) {
        ++n_cp1;
        if (d > 1) return fail("p-elements", 1);
      }
      if (u < v && std::gcd(ox, oy) > 1) {
        ++n_coprime;
        const int bound = prime_end ? 2 : 3;
        if (d > bound) return fail("non-coprime orders", bound);
      }
      for (unsigned p : px) {
        for (unsigned q : py) {
          if (p == q || !has_order_pq(p, q)) continue;
          ++n_cp;
          int bound = (ppx || ppy) ? 4 : 5;
          const bool np = sylow_nice(p), nq = sylow_nice(q);
          if (np || nq) bound = std::min(bound, prime_end ? 3 : 4);
          if (np && nq) bound = std::min(bound, prime_end ? 2 : 3);
          if (d > bound) {
            return fail("order pq with p = " + std::to_string(p) + ", q = " + std::to_string(q), bound);
          }
        }
      }
    }
  }
  return result(Verdict::kPass, "pairs checked: p-elements " + std::to_string(n_cp1) + ", non-coprime " +
                                    std::to_string(n_coprime) + ", order pq " + std::to_string(n_cp));
}

struct Triple {
  std::string description;
  Subgroup h;
  Subgroup k;
};

std::vector<Triple> hk_triples(Runner& run, GroupContext& c) {
  const FiniteGroup& g = *c.group;
  std::vector<Triple> out;
  if (g.order() == 1) return out;
  const Subgroup& whole = c.analysis->whole();
  const Subgroup derived = derived_subgroup(whole);
  if (derived.order() > 1 && derived.order() < g.order()) {
    std::optional<Element> x;
    if (c.spec == "symmetric:5") x = g.find(parse_cycles("(1 2)", g.degree()));
    for (Element y = 1; y < g.order() && !x; ++y) {
      const Element e[] = {y};
      if (extend(derived, e).order() == g.order()) x = y;
    }
    if (x) {
      const Element gens[] = {*x};
      out.push_back({"H = G', K = <" + std::to_string(*x) + ">", derived, closure(g, gens)});
    }
  }
  const GroupSpec spec = GroupSpec::parse(c.spec);
  if (spec.kind == GroupSpec::Kind::kProduct) {
    const std::size_t nb = run.context(spec.factors[1].str()).group->order();
    std::vector<Element> left, right;
    for (Element x = 0; x < g.order(); ++x) {
      if (x % nb == 0) left.push_back(x);
      if (x < nb) right.push_back(x);
    }
    out.push_back({"H = A x 1, K = 1 x B", subgroup_from_members(g, left), subgroup_from_members(g, right)});
  }
  return out;
}

bool scc_connected(const Subgroup& h, const SuiteOptions& opts) {
  auto grp = std::make_shared<const FiniteGroup>(as_group(h, opts.limits));
  AnalysisOptions ao;
  ao.threads = opts.threads;
  GroupAnalysis a(grp, ao);
  return is_connected(build_class_graph(a, Relation::kSolvable).adjacency);
}

GroupResult c14_hk(Runner& run, GroupContext& c) {
  const FiniteGroup& g = *c.group;
  const ClassGraph& scc = run.scc(c);
  const ClassPartition& cp = c.analysis->classes();
  const auto comps = components(scc.adjacency);
  std::vector<std::size_t> comp_of(scc.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t v : comps[i]) comp_of[v] = i;
  }
  std::vector<std::string> used;
  for (const Triple& t : hk_triples(run, c)) {
    const bool normal = is_normal(t.h, c.analysis->whole());
    std::size_t meet = 0;
    for (Element x : t.k.members()) meet += t.h.contains(x) ? 1 : 0;
    const bool product = t.h.order() * t.k.order() == g.order() * meet;
    if (!normal || !product) return result(Verdict::kFail, t.description + ": not a factorization G = HK with H normal");
    if (!scc_connected(t.h, run.options()) || !scc_connected(t.k, run.options())) continue;
    // Some h in H \ 1 and x outside H with classes in one component.
    std::set<std::size_t> in_h, out_h;
    for (Element x = 1; x < g.order(); ++x) (t.h.contains(x) ? in_h : out_h).insert(comp_of[cp.class_of(x) - 1]);
    const bool linked = std::any_of(in_h.begin(), in_h.end(), [&](std::size_t i) { return out_h.count(i) > 0; });
    if (!linked) continue;
    if (comps.size() != 1) return result(Verdict::kFail, t.description + ": hypotheses hold but graph is disconnected");
    used.push_back(t.description + " (|H| = " + std::to_string(t.h.order()) + ", |K| = " + std::to_string(t.k.order()) + ")");
  }
  if (used.empty()) return result(Verdict::kNotApplicable, "no factorization meeting the hypotheses");
  return result(Verdict::kPass, join(used, "; ") + ": connected");
}

GroupResult c15_solvable_clique(Runner& run, GroupContext& c) {
  if (!c.analysis->group_is_solvable()) return result(Verdict::kNotApplicable, "not solvable");
  const std::size_t k = c.analysis->classes().count();
  const std::size_t omega = run.scc_metrics(c).clique_number;
  return expect(omega + 1 == k, "k = " + std::to_string(k) + ", clique number " + std::to_string(omega));
}

struct Registered {
  CheckInfo info;
  PerGroup fn;
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> checks = {
      {{"C1", "complete-iff-solvable", "The SCC graph is complete exactly when the group is solvable.", "all groups"},
       c1_complete_iff_solvable},
      {{"C2", "ncc-complete-nilpotent", "A solvable group with complete expanded NCC graph is nilpotent.",
        "solvable groups with complete expanded NCC graph"},
       c2_ncc_complete_nilpotent},
      {{"C3", "monotonicity", "CCC edges are NCC edges and NCC edges are SCC edges, in class and expanded mode.",
        "all groups"},
       c3_monotonicity},
      {{"C4", "order-pq-girth",
        "A non-solvable group with an element of order pq, p and q distinct primes, has SCC girth 3.",
        "non-solvable groups with an element of order pq"},
       c4_order_pq_girth},
      {{"C5", "radical-diameter",
        "A nontrivial solvable radical forces a connected SCC graph of diameter at most 2 and domination number 1.",
        "groups with Sol(G) != 1"},
       c5_radical},
      {{"C6", "isolated-vertex",
        "A class is isolated exactly when every solvabilizer of its elements stays inside the class and 1; two classes "
        "are adjacent exactly when every solvabilizer of one meets the other.",
        "groups of order at most 360"},
       c6_isolated},
      {{"C7", "product-diameter",
        "SCC graphs of direct products of nontrivial groups are connected of diameter at most 3; for G x G the "
        "diameter is 3 exactly when the SCC graph of G is disconnected or has diameter at least 3.",
        "direct products"},
       c7_products},
      {{"C8", "landau", "Reciprocal centralizer orders of class representatives sum to 1, the largest being |G|.",
        "all groups"},
       c8_landau},
      {{"C9", "divisor-clique", "The SCC clique number is at least d(n) - 1 for every element order n.", "all groups"},
       c9_divisor_clique},
      {{"C10", "triangle-exceptions", "The SCC graph has a triangle unless the group is C1, C2, C3 or S3.",
        "all groups"},
       c10_triangles},
      {{"C11", "named-triangles",
        "Explicit solvable subgroups give triangles in PSL(2,17), PSL(2,8), PSL(2,4), A6, PSL(2,7) and M10.",
        "the named groups"},
       c11_named},
      {{"C12", "involution-dominance",
        "The involution class is the unique dominant vertex for PSL(2,4) and a dominant vertex for PSL(2,8); both "
        "have trivial solvable radical.",
        "psl2:4, psl2:8"},
       c12_dominance},
      {{"C13", "distance-bounds",
        "Class distances: at most 1 for p-elements of one prime, at most 3 (2 with a prime-order end) for non-coprime "
        "orders, and the order-pq bounds with their Sylow refinements.",
        "all groups, every eligible pair of classes"},
       c13_distances},
      {{"C14", "hk-connectivity",
        "G = HK with H normal, connected SCC graphs of H and K, and a class of H linked to a class outside H gives a "
        "connected SCC graph of G.",
        "groups with a derived-subgroup or direct-factor factorization"},
       c14_hk},
      {{"C15", "solvable-clique", "For solvable groups the SCC clique number is k(G) - 1.", "solvable groups"},
       c15_solvable_clique},
  };
  return checks;
}

Verdict aggregate(const CheckResult& r) {
  if (r.count(Verdict::kFail)) return Verdict::kFail;
  if (r.count(Verdict::kSkipped)) return Verdict::kSkipped;
  if (r.count(Verdict::kPass)) return Verdict::kPass;
  return Verdict::kNotApplicable;
}

void add_notes(CheckResult& r, Runner& run) {
  if (r.id == "C8") {
    std::map<std::size_t, std::vector<std::string>> by_k;
    for (const auto& g : r.results) {
      if (g.verdict == Verdict::kSkipped) continue;
      by_k[run.context(g.group).analysis->classes().count()].push_back(g.group);
    }
    for (const auto& [k, groups] : by_k) r.notes.push_back("k = " + std::to_string(k) + ": " + join(groups, ", "));
  }
  if (r.id == "C10") {
    std::vector<std::string> free;
    for (const auto& g : r.results) {
      if (g.verdict == Verdict::kSkipped) continue;
      GroupContext& c = run.context(g.group);
      if (!find_triangle(run.scc(c).adjacency)) free.push_back(g.group + " (" + small_group_name(*c.group) + ")");
    }
    r.notes.push_back("triangle-free: " + (free.empty() ? std::string("none") : join(free, ", ")));
  }
  if (r.id == "C12") {
    r.notes.push_back("dominant involutions in J1 (order 175560) are out of reach here and not checked");
  }
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kSkipped:
      return "skipped";
    case Verdict::kNotApplicable:
      return "n/a";
  }
  return "?";
}

std::size_t CheckResult::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [v](const GroupResult& r) { return r.verdict == v; }));
}

bool SuiteReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.verdict == Verdict::kFail; });
}

std::vector<std::string> default_corpus() {
  std::vector<std::string> out;
  for (int n = 1; n <= 24; ++n) out.push_back("cyclic:" + std::to_string(n));
  for (int n = 3; n <= 12; ++n) out.push_back("dihedral:" + std::to_string(n));
  for (int m : {8, 16, 32}) out.push_back("quaternion:" + std::to_string(m));
  for (int n = 3; n <= 6; ++n) out.push_back("symmetric:" + std::to_string(n));
  for (int n = 4; n <= 6; ++n) out.push_back("alternating:" + std::to_string(n));
  for (int q : {4, 5, 7, 8, 9, 11, 13, 17}) out.push_back("psl2:" + std::to_string(q));
  out.push_back("sl2:5");
  out.push_back("named:M10");
  out.push_back("product:(cyclic:2)x(alternating:5)");
  out.push_back("product:(alternating:5)x(alternating:5)");
  out.push_back("product:(cyclic:3)x(symmetric:4)");
  return out;
}

std::vector<std::string> stretch_corpus() {
  std::vector<std::string> out = default_corpus();
  out.push_back("named:PSL3_4");
  return out;
}

std::vector<std::string> parse_corpus_text(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(canonical_spec(line.substr(b, e - b + 1)));
  }
  if (out.empty()) throw InputError("corpus is empty");
  return out;
}

const std::vector<CheckInfo>& registered_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& r : registry()) out.push_back(r.info);
    return out;
  }();
  return infos;
}

std::vector<std::string> resolve_check_ids(std::string_view comma_list) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in{std::string(comma_list)};
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto& checks = registered_checks();
    auto it = std::find_if(checks.begin(), checks.end(),
                           [&](const CheckInfo& c) { return c.id == item || c.name == item; });
    if (it == checks.end()) throw InputError("unknown check '" + item + "'");
    if (std::find(out.begin(), out.end(), it->id) == out.end()) out.push_back(it->id);
  }
  if (out.empty()) throw InputError("no checks selected");
  return out;
}

SuiteReport run_suite(const std::vector<std::string>& corpus, const std::vector<std::string>& check_ids,
                      const SuiteOptions& opts, std::string suite_name) {
  SuiteReport report;
  report.suite = std::move(suite_name);
  for (const auto& s : corpus) report.corpus.push_back(canonical_spec(s));
  Runner run(opts);
  for (const auto& reg : registry()) {
    if (std::find(check_ids.begin(), check_ids.end(), reg.info.id) == check_ids.end()) continue;
    CheckResult r;
    r.id = reg.info.id;
    r.name = reg.info.name;
    r.statement = reg.info.statement;
    r.applies_to = reg.info.applies_to;
    const auto start = std::chrono::steady_clock::now();
    each_group(run, report.corpus, r, reg.fn);
    add_notes(r, run);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.verdict = aggregate(r);
    report.checks.push_back(std::move(r));
  }
  return report;
}

Json report_json(const SuiteReport& r, bool include_timings) {
  Json j;
  j["suite"] = r.suite;
  j["corpus"] = r.corpus;
  Json checks = Json::array();
  std::map<std::string, std::size_t> totals;
  for (const auto& c : r.checks) {
    Json o;
    o["id"] = c.id;
    o["name"] = c.name;
    o["statement"] = c.statement;
    o["applies_to"] = c.applies_to;
    o["verdict"] = std::string(verdict_name(c.verdict));
    Json counts;
    for (Verdict v : {Verdict::kPass, Verdict::kFail, Verdict::kSkipped, Verdict::kNotApplicable}) {
      counts[std::string(verdict_name(v))] = c.count(v);
    }
    o["counts"] = counts;
    totals[std::string(verdict_name(c.verdict))]++;
    Json results = Json::array();
    for (const auto& g : c.results) {
      results.push_back(Json{{"group", g.group}, {"verdict", std::string(verdict_name(g.verdict))}, {"detail", g.detail}});
    }
    o["results"] = std::move(results);
    o["notes"] = c.notes;
    if (include_timings) o["seconds"] = c.seconds;
    checks.push_back(std::move(o));
  }
  j["checks"] = std::move(checks);
  Json summary;
  for (Verdict v : {Verdict::kPass, Verdict::kFail, Verdict::kSkipped, Verdict::kNotApplicable}) {
    summary[std::string(verdict_name(v))] = totals[std::string(verdict_name(v))];
  }
  j["summary"] = summary;
  j["passed"] = r.passed();
  return j;
}

std::string report_text(const SuiteReport& r) {
  std::ostringstream out;
  out << "suite " << r.suite << ", " << r.corpus.size() << " groups\n\n";
  out << "check  verdict  pass  fail  skip   n/a  name\n";
  for (const auto& c : r.checks) {
    char line[160];
    std::snprintf(line, sizeof line, "%-6s %-8s %4zu  %4zu  %4zu  %4zu  %s\n", c.id.c_str(),
                  std::string(verdict_name(c.verdict)).c_str(), c.count(Verdict::kPass), c.count(Verdict::kFail),
                  c.count(Verdict::kSkipped), c.count(Verdict::kNotApplicable), c.name.c_str());
    out << line;
  }
  std::ostringstream problems, notes;
  for (const auto& c : r.checks) {
    for (const auto& g : c.results) {
      if (g.verdict == Verdict::kFail || g.verdict == Verdict::kSkipped) {
        problems << c.id << " " << verdict_name(g.verdict) << " on " << g.group << ": " << g.detail << "\n";
      }
    }
    for (const auto& n : c.notes) notes << c.id << " note: " << n << "\n";
  }
  if (!problems.str().empty()) out << "\n" << problems.str();
  if (!notes.str().empty()) out << "\n" << notes.str();
  out << "\n" << (r.passed() ? "all checks passed" : "some checks failed") << "\n";
  return out.str();
}

std::string_view sylow_shape_name(SylowShape s) {
  switch (s) {
    case SylowShape::kCyclic:
      return "cyclic";
    case SylowShape::kGeneralizedQuaternion:
      return "generalized_quaternion";
    case SylowShape::kOther:
      return "other";
  }
  return "?";
}

Subgroup sylow_subgroup(const FiniteGroup& g, unsigned p) {
  if (p < 2 || !is_prime(p) || g.order() % p != 0) {
    throw InputError(std::to_string(p) + " is not a prime dividing " + std::to_string(g.order()));
  }
  auto is_p_element = [&](Element x) { return x != kIdentity && primes_of(g.element_order(x)) == std::vector<unsigned>{p}; };
  Subgroup s = trivial_subgroup(g);
  bool grew = true;
  while (grew) {
    grew = false;
    for (Element x = 1; x < g.order(); ++x) {
      if (s.contains(x) || !is_p_element(x)) continue;
      bool normalizes = true;
      for (Element h : s.generators()) {
        if (!s.contains(g.conjugate(h, x))) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes) continue;
      const Element e[] = {x};
      s = extend(s, e);
      grew = true;
      break;
    }
  }
  std::size_t part = 1;
  for (std::size_t n = g.order(); n % p == 0; n /= p) part *= p;
  if (s.order() != part) throw std::logic_error("Sylow construction stopped early");
  return s;
}

SylowShape check_sylow_shape(const FiniteGroup& g, unsigned p) {
  const Subgroup s = sylow_subgroup(g, p);
  const std::size_t n = s.order();
  std::size_t involutions = 0;
  bool half = false;
  for (Element x : s.members()) {
    const unsigned o = g.element_order(x);
    if (o == n) return SylowShape::kCyclic;
    if (o == 2) ++involutions;
    if (2 * static_cast<std::size_t>(o) == n) half = true;
  }
  if (n >= 8 && involutions == 1 && half) return SylowShape::kGeneralizedQuaternion;
  return SylowShape::kOther;
}

std::string small_group_name(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n > 6) return {};
  if (n == 4) {
    for (Element x = 0; x < 4; ++x) {
      if (g.element_order(x) == 4) return "C4";
    }
    return "V4";
  }
  if (n == 6 && !is_abelian(whole_group(g))) return "S3";
  return "C" + std::to_string(n);
}

}  // namespace sccg
