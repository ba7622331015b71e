#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sccg/class_graph.hpp"
#include "sccg/export.hpp"
#include "sccg/metrics.hpp"

namespace sccg {

enum class Verdict { kPass, kFail, kSkipped, kNotApplicable };
std::string_view verdict_name(Verdict v);

struct GroupResult {
  std::string group;
  Verdict verdict = Verdict::kPass;
  // Short explanation; on failure it names the offending classes or pair so
  // the case can be rechecked on its own.
  std::string detail;
};

struct CheckResult {
  std::string id;         // "C1" .. "C15"
  std::string name;       // slug, e.g. "complete-iff-solvable"
  std::string statement;  // what is checked, in one sentence
  std::string applies_to;
  Verdict verdict = Verdict::kNotApplicable;
  std::vector<GroupResult> results;
  std::vector<std::string> notes;
  double seconds = 0;

  std::size_t count(Verdict v) const;
};

struct SuiteReport {
  std::string suite;
  std::vector<std::string> corpus;
  std::vector<CheckResult> checks;

  // No check failed.
  bool passed() const;
};

struct SuiteOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  unsigned threads = 0;
  GroupLimits limits = default_limits();
};

// Corpus lists. The stretch list adds groups that take minutes.
std::vector<std::string> default_corpus();
std::vector<std::string> stretch_corpus();
// One spec per line; '#' starts a comment.
std::vector<std::string> parse_corpus_text(std::string_view text);

struct CheckInfo {
  std::string id;
  std::string name;
  std::string statement;
  std::string applies_to;
};
const std::vector<CheckInfo>& registered_checks();
// Accepts ids ("C3") and names ("monotonicity"); InputError for unknown ones.
std::vector<std::string> resolve_check_ids(std::string_view comma_list);

SuiteReport run_suite(const std::vector<std::string>& corpus, const std::vector<std::string>& check_ids,
                      const SuiteOptions& opts = {}, std::string suite_name = "default");

Json report_json(const SuiteReport& r, bool include_timings = false);
std::string report_text(const SuiteReport& r);

enum class SylowShape { kCyclic, kGeneralizedQuaternion, kOther };
std::string_view sylow_shape_name(SylowShape s);

// Builds one Sylow p-subgroup by repeatedly adjoining p-elements of its
// normalizer, then classifies it. InputError if p does not divide |G|.
Subgroup sylow_subgroup(const FiniteGroup& g, unsigned p);
SylowShape check_sylow_shape(const FiniteGroup& g, unsigned p);

// Name of a group of order at most 6 up to isomorphism ("C1", "C2", "C3",
// "V4", "C4", "C5", "C6", "S3"); empty for anything larger.
std::string small_group_name(const FiniteGroup& g);

}  // namespace sccg
