#include "wildnum/search.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "wildnum/errors.hpp"
#include "wildnum/parallel.hpp"

namespace wildnum {

namespace {

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("bad range \"" + std::string(whole) + "\" (expected a..b)");
  }
  return value;
}

std::string params_string(const FamilyParams& p) {
  return "(" + std::to_string(p.alpha) + "," + std::to_string(p.beta) + "," +
         std::to_string(p.gamma) + ")";
}

}  // namespace

IntRange IntRange::parse(std::string_view text) {
  auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    int v = parse_int(text, text);
    return {v, v};
  }
  return {parse_int(text.substr(0, dots), text), parse_int(text.substr(dots + 2), text)};
}

std::string IntRange::to_string() const { return std::to_string(lo) + ".." + std::to_string(hi); }

std::vector<FamilyParams> MatchReport::exact_matches() const {
  std::vector<FamilyParams> out;
  for (const auto& score : ranking) {
    if (score.exact()) out.push_back(score.params);
  }
  return out;
}

RuleScore score_rule(const FamilyParams& params, const ReferenceTable& target,
                     const Limits& limits) {
  const RuleSpec rule = RuleSpec::family(params);
  RuleScore score;
  score.params = params;
  for (std::size_t i = 0; i < target.values.size(); ++i) {
    std::uint64_t n = target.offset + i;
    SequenceRecord rec = compute_record(rule, n, limits);
    if (rec.value != target.values[i]) {
      score.first_mismatch = FirstMismatch{n, target.values[i], rec.value};
      return score;
    }
    ++score.matched_prefix_length;
  }
  return score;
}

MatchReport search(const SearchBox& box, const SearchOptions& options) {
  if (box.candidate_count() == 0) {
    throw UsageError("empty search box: alpha " + box.alpha.to_string() + ", beta " +
                     box.beta.to_string() + ", gamma " + box.gamma.to_string());
  }
  if (box.target.values.empty()) throw UsageError("empty search target");
  box.limits.validate();
  for (const IntRange& r : {box.alpha, box.beta, box.gamma}) {
    if (r.lo < -kFamilyCoefficientBound || r.hi > kFamilyCoefficientBound) {
      throw UsageError("search range " + r.to_string() + " exceeds the family bound " +
                       std::to_string(kFamilyCoefficientBound));
    }
  }

  std::vector<FamilyParams> candidates;
  candidates.reserve(box.candidate_count());
  for (int a = box.alpha.lo; a <= box.alpha.hi; ++a) {
    for (int b = box.beta.lo; b <= box.beta.hi; ++b) {
      for (int c = box.gamma.lo; c <= box.gamma.hi; ++c) candidates.push_back({a, b, c});
    }
  }

  std::vector<std::optional<RuleScore>> slots(candidates.size());
  parallel_for(
      candidates.size(), options.workers, 4,
      [&](std::size_t i) { slots[i] = score_rule(candidates[i], box.target, box.limits); },
      options.stop);

  MatchReport report;
  report.box = box;
  report.target_length = box.target.values.size();
  for (auto& slot : slots) {
    if (slot) report.ranking.push_back(*std::move(slot));
  }
  std::sort(report.ranking.begin(), report.ranking.end(),
            [](const RuleScore& x, const RuleScore& y) {
              if (x.matched_prefix_length != y.matched_prefix_length) {
                return x.matched_prefix_length > y.matched_prefix_length;
              }
              return x.params < y.params;
            });
  return report;
}

std::string format_report(const MatchReport& report, std::size_t top) {
  std::ostringstream out;
  const SearchBox& box = report.box;
  out << "box: alpha " << box.alpha.to_string() << ", beta " << box.beta.to_string()
      << ", gamma " << box.gamma.to_string() << "; max_steps " << box.limits.max_steps
      << ", max_bits " << box.limits.max_bits << "\n";
  out << "target: " << box.target.name << " (" << report.target_length << " terms from index "
      << box.target.offset << ")\n";
  out << "candidates: " << box.candidate_count() << " (scored " << report.ranking.size()
      << ")\n";
  auto exact = report.exact_matches();
  out << "exact matches: " << exact.size() << "\n";
  std::size_t listed = 0;
  for (const auto& score : report.ranking) {
    if (!score.exact() && listed >= top) break;
    if (!score.exact()) ++listed;
    out << (score.exact() ? "EXACT " : "      ") << params_string(score.params) << " matched "
        << score.matched_prefix_length << "/" << report.target_length;
    if (score.first_mismatch) {
      const auto& m = *score.first_mismatch;
      out << " first mismatch at " << m.index << ": expected " << m.expected << ", got " << m.got;
    }
    out << "\n";
  }
  if (exact.empty()) {
    out << "no exact match within this box\n";
  }
  return out.str();
}

}  // namespace wildnum
