#include "wildnum/sequence.hpp"

#include <map>

#include "wildnum/errors.hpp"
#include "wildnum/parallel.hpp"

namespace wildnum {

namespace {

SequenceRecord record_for(const RuleSpec& rule, std::uint64_t n, const Limits& limits,
                          std::stop_token stop) {
  SequenceRecord rec;
  rec.index = n;
  if (rule.kind() == RuleKind::Collatz && n == 0) {
    rec.exhausted = ExhaustReason::RuleUndefined;
    return rec;
  }
  RunOptions options;
  options.retain_trace = false;
  options.stop = std::move(stop);
  TrajectoryResult result = run(rule, Natural(n), limits, options);
  if (!result.reached()) {
    rec.exhausted = result.as_exhausted().reason;
    return rec;
  }
  const Reached& reached = result.as_reached();
  rec.steps = reached.steps;
  rec.value = rule.is_rational() ? reached.value : Natural(reached.steps);
  return rec;
}

std::vector<Natural> naturals(std::initializer_list<std::uint64_t> values) {
  return {values.begin(), values.end()};
}

}  // namespace

SequenceRecord compute_record(const RuleSpec& rule, std::uint64_t n, const Limits& limits) {
  return record_for(rule, n, limits, {});
}

std::vector<SequenceRecord> generate(const RuleSpec& rule, std::uint64_t from, std::uint64_t to,
                                     const Limits& limits, const GenerateOptions& options) {
  if (from > to) throw UsageError("empty range: from > to");
  if (to - from >= kMaxGenerateCount) {
    throw UsageError("range holds more than " + std::to_string(kMaxGenerateCount) +
                     " indices; split it into smaller ranges");
  }
  limits.validate();
  const std::size_t count = static_cast<std::size_t>(to - from) + 1;
  std::vector<std::optional<SequenceRecord>> slots(count);
  parallel_for(
      count, options.workers, options.chunk,
      [&](std::size_t i) { slots[i] = record_for(rule, from + i, limits, options.stop); },
      options.stop);

  std::vector<SequenceRecord> records;
  records.reserve(count);
  for (auto& slot : slots) {
    if (!slot || slot->exhausted == ExhaustReason::Cancelled) break;
    records.push_back(*std::move(slot));
  }
  return records;
}

const ReferenceTable& paper48() {
  static const ReferenceTable table{
      "paper48", 0,
      naturals({0, 66, 66, 462, 180, 66, 31395, 714,
                72, 9, 5, 15, 3, 36, 42, 39,
                2, 9, 45, 462, 12, 12, 90, 3703207920,
                1692600, 84, 234, 27, 3043425, 74613, 6, 7930296,
                264, 4290, 510, 315, 315, 73302369360, 1155, 3,
                8, 239872017, 6, 4386, 1989, 18, 17740866, 499954980})};
  return table;
}

const ReferenceTable& fictional_wild() {
  static const ReferenceTable table{"fictional", 0, naturals({11, 67, 2, 4769, 67})};
  return table;
}

std::optional<ReferenceTable> builtin_reference(std::string_view name) {
  if (name == "paper48") return paper48();
  if (name == "fictional") return fictional_wild();
  return std::nullopt;
}

VerificationReport verify(std::span<const SequenceRecord> records,
                          const ReferenceTable& reference) {
  std::map<std::uint64_t, const SequenceRecord*> by_index;
  for (const auto& rec : records) by_index.emplace(rec.index, &rec);

  VerificationReport report;
  report.reference = reference.name;
  std::string missing;
  std::size_t missing_count = 0;
  for (std::size_t i = 0; i < reference.values.size(); ++i) {
    std::uint64_t index = reference.offset + i;
    auto it = by_index.find(index);
    if (it == by_index.end()) {
      if (missing_count++ < 20) missing += (missing.empty() ? "" : ", ") + std::to_string(index);
      continue;
    }
    const SequenceRecord& rec = *it->second;
    ++report.checked;
    if (rec.value != reference.values[i]) {
      report.mismatches.push_back({index, reference.values[i], rec.value, rec.exhausted});
    }
  }
  if (missing_count > 0) {
    if (missing_count > 20) missing += ", ...";
    throw UsageError("records do not cover reference \"" + reference.name + "\"; missing " +
                     std::to_string(missing_count) + " indices: " + missing);
  }
  return report;
}

}  // namespace wildnum
