#pragma once

#include <cstddef>
#include <stop_token>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wildnum/natural.hpp"
#include "wildnum/rational.hpp"
#include "wildnum/rules.hpp"

namespace wildnum {

/// Budgets that make "no integer is ever reached" operational.
struct Limits {
  std::size_t max_steps = 10000;
  // Cap on the bit length of any numerator or denominator.
  std::size_t max_bits = 65536;

  // Throws UsageError unless max_steps >= 1 and max_bits >= 8.
  void validate() const;

  friend bool operator==(const Limits&, const Limits&) = default;
};

enum class ExhaustReason {
  StepBudget,
  SizeBudget,
  RuleUndefined,
  // Only with RunOptions::detect_cycles.
  CycleDetected,
  // Stop requested through RunOptions::stop.
  Cancelled,
};

std::string_view to_string(ExhaustReason reason);

struct Reached {
  Natural value;
  std::size_t steps = 0;

  friend bool operator==(const Reached&, const Reached&) = default;
};

struct Exhausted {
  ExhaustReason reason = ExhaustReason::StepBudget;
  // Step applications completed before the abort.
  std::size_t steps = 0;

  friend bool operator==(const Exhausted&, const Exhausted&) = default;
};

struct RunOptions {
  bool retain_trace = true;
  bool detect_cycles = false;
  std::stop_token stop;
};

struct TrajectoryResult {
  std::variant<Reached, Exhausted> outcome;
  // Start state first. Empty unless trace_retained.
  std::vector<Rational> trace;
  bool trace_retained = false;
  // States are rationals (p/q) rather than integers.
  bool rational_states = false;
  // Largest numerator or denominator bit length over every visited state.
  std::size_t max_bits_seen = 0;

  bool reached() const { return std::holds_alternative<Reached>(outcome); }
  const Reached& as_reached() const { return std::get<Reached>(outcome); }
  const Exhausted& as_exhausted() const { return std::get<Exhausted>(outcome); }
  std::size_t steps() const;

  friend bool operator==(const TrajectoryResult&, const TrajectoryResult&) = default;
};

/// Iterates a rational rule from start/1. The start is never accepted: the
/// integrality test runs only after each step application.
TrajectoryResult run_rational(const RuleSpec& rule, const Natural& start,
                              const Limits& limits = {}, const RunOptions& options = {});

/// Iterates the Collatz map until 1. A start of 1 is Reached(1, 0).
/// Throws DomainError for start == 0.
TrajectoryResult run_integer(const RuleSpec& rule, const Natural& start,
                             const Limits& limits = {}, const RunOptions& options = {});

/// run_rational or run_integer depending on the rule.
TrajectoryResult run(const RuleSpec& rule, const Natural& start, const Limits& limits = {},
                     const RunOptions& options = {});

struct TrajectoryStats {
  std::size_t steps = 0;
  // Maximum value over the trace; maximum numerator for rational traces.
  Natural peak;
  std::size_t peak_bits = 0;
};

// Throws UsageError when the trace was not retained.
TrajectoryStats trajectory_stats(const TrajectoryResult& result);

// "2/1 -> 2/3 -> 6/5 -> 30/11 -> 66". The rational start prints as n/1,
// later integral states without a denominator.
std::string format_trace(const TrajectoryResult& result, std::string_view separator = " -> ");

}  // namespace wildnum
