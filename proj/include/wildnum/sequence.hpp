#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stop_token>
#include <string>
#include <vector>

#include "wildnum/natural.hpp"
#include "wildnum/rules.hpp"
#include "wildnum/trajectory.hpp"

namespace wildnum {

/// One row of a generated sequence. Exhausted rows carry value 0 and
/// steps 0; `exhausted` tells them apart from a genuine a(n) = 0.
struct SequenceRecord {
  std::uint64_t index = 0;
  Natural value;
  std::optional<ExhaustReason> exhausted;
  std::size_t steps = 0;

  bool reached() const { return !exhausted.has_value(); }

  friend bool operator==(const SequenceRecord&, const SequenceRecord&) = default;
};

/// Record for a single index. Rational rules give the first integer reached;
/// Collatz gives the total stopping time (steps to reach 1), with index 0
/// recorded as RuleUndefined.
SequenceRecord compute_record(const RuleSpec& rule, std::uint64_t n, const Limits& limits = {});

struct GenerateOptions {
  // 0 means default_workers().
  std::size_t workers = 1;
  std::size_t chunk = 16;
  std::stop_token stop;
};

// Largest index count a single generate() call accepts; all records are
// held in memory.
inline constexpr std::uint64_t kMaxGenerateCount = std::uint64_t{1} << 22;

/// Records for every n in [from, to], in index order. On cancellation only
/// the completed prefix is returned. Throws UsageError when from > to or the
/// range holds more than kMaxGenerateCount indices.
std::vector<SequenceRecord> generate(const RuleSpec& rule, std::uint64_t from, std::uint64_t to,
                                     const Limits& limits = {},
                                     const GenerateOptions& options = {});

/// Consecutive expected values starting at `offset`.
struct ReferenceTable {
  std::string name;
  std::uint64_t offset = 0;
  std::vector<Natural> values;

  std::uint64_t last_index() const { return offset + values.size() - 1; }
};

/// The 48 van Lamoen terms a(0)..a(47).
const ReferenceTable& paper48();

/// The fictional wild numbers 11, 67, 2, 4769, 67 at indices 0..4.
const ReferenceTable& fictional_wild();

// Built-in tables by name ("paper48", "fictional"); nullopt otherwise.
std::optional<ReferenceTable> builtin_reference(std::string_view name);

struct Mismatch {
  std::uint64_t index = 0;
  Natural expected;
  Natural got;
  std::optional<ExhaustReason> exhausted;
};

struct VerificationReport {
  std::string reference;
  std::size_t checked = 0;
  std::vector<Mismatch> mismatches;

  bool passed() const { return mismatches.empty(); }
};

/// Compares records against every index of the reference. Throws UsageError
/// naming the missing indices when records do not cover the reference.
VerificationReport verify(std::span<const SequenceRecord> records,
                          const ReferenceTable& reference);

}  // namespace wildnum
