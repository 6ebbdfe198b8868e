#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stop_token>
#include <string>
#include <string_view>
#include <vector>

#include "wildnum/natural.hpp"
#include "wildnum/rules.hpp"
#include "wildnum/sequence.hpp"
#include "wildnum/trajectory.hpp"

namespace wildnum {

/// Inclusive integer interval; empty when lo > hi.
struct IntRange {
  int lo = 0;
  int hi = 0;

  bool empty() const { return lo > hi; }
  std::size_t size() const { return empty() ? 0 : static_cast<std::size_t>(hi - lo) + 1; }

  // "a..b" or a single integer "a". Throws ParseError.
  static IntRange parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const IntRange&, const IntRange&) = default;
};

// Candidates usually die within a few steps, so the search budget is lower
// than the engine default.
inline Limits search_default_limits() { return Limits{1000, 65536}; }

struct SearchBox {
  IntRange alpha;
  IntRange beta;
  IntRange gamma;
  Limits limits = search_default_limits();
  ReferenceTable target;

  std::size_t candidate_count() const { return alpha.size() * beta.size() * gamma.size(); }
};

struct FirstMismatch {
  std::uint64_t index = 0;
  Natural expected;
  Natural got;

  friend bool operator==(const FirstMismatch&, const FirstMismatch&) = default;
};

struct RuleScore {
  FamilyParams params;
  std::size_t matched_prefix_length = 0;
  std::optional<FirstMismatch> first_mismatch;

  bool exact() const { return !first_mismatch.has_value(); }

  friend bool operator==(const RuleScore&, const RuleScore&) = default;
};

struct MatchReport {
  SearchBox box;
  std::size_t target_length = 0;
  // Sorted by matched_prefix_length descending, then params ascending.
  std::vector<RuleScore> ranking;

  std::vector<FamilyParams> exact_matches() const;
};

/// Scores one family member against the target, stopping at the first
/// mismatch. Exhausted runs count as value 0.
RuleScore score_rule(const FamilyParams& params, const ReferenceTable& target,
                     const Limits& limits = search_default_limits());

struct SearchOptions {
  // 0 means default_workers().
  std::size_t workers = 1;
  std::stop_token stop;
};

/// Scores every candidate in the box. Throws UsageError for an empty box or
/// empty target. If stopped early, the ranking covers only the candidates
/// that finished.
MatchReport search(const SearchBox& box, const SearchOptions& options = {});

/// Human-readable ranked report. At most `top` non-exact rows are listed;
/// exact matches are always listed.
std::string format_report(const MatchReport& report, std::size_t top = 10);

}  // namespace wildnum
