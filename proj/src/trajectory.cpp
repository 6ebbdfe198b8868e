#include "wildnum/trajectory.hpp"

#include <algorithm>
#include <set>

#include "wildnum/errors.hpp"

namespace wildnum {

void Limits::validate() const {
  if (max_steps < 1) throw UsageError("max_steps must be at least 1");
  if (max_bits < 8) throw UsageError("max_bits must be at least 8");
}

std::string_view to_string(ExhaustReason reason) {
  switch (reason) {
    case ExhaustReason::StepBudget:
      return "StepBudget";
    case ExhaustReason::SizeBudget:
      return "SizeBudget";
    case ExhaustReason::RuleUndefined:
      return "RuleUndefined";
    case ExhaustReason::CycleDetected:
      return "CycleDetected";
    case ExhaustReason::Cancelled:
      return "Cancelled";
  }
  return "Unknown";
}

std::size_t TrajectoryResult::steps() const {
  return std::visit([](const auto& o) { return o.steps; }, outcome);
}

namespace {

std::size_t state_bits(const Rational& r) {
  return std::max(r.num().bit_length(), r.den().bit_length());
}

// Shared loop bookkeeping for both engines.
class Recorder {
 public:
  Recorder(const Limits& limits, const RunOptions& options, bool rational)
      : limits_(limits), options_(options) {
    limits_.validate();
    result_.trace_retained = options.retain_trace;
    result_.rational_states = rational;
  }

  // Returns false if the state breaks the size budget or closes a cycle; the
  // outcome is already set in that case.
  bool visit(const Rational& state, std::size_t steps) {
    std::size_t bits = state_bits(state);
    result_.max_bits_seen = std::max(result_.max_bits_seen, bits);
    if (options_.retain_trace) result_.trace.push_back(state);
    if (bits > limits_.max_bits) return exhaust(ExhaustReason::SizeBudget, steps);
    if (options_.detect_cycles && !seen_.insert(state).second) {
      return exhaust(ExhaustReason::CycleDetected, steps);
    }
    return true;
  }

  bool stop_requested() const { return options_.stop.stop_requested(); }

  bool exhaust(ExhaustReason reason, std::size_t steps) {
    result_.outcome = Exhausted{reason, steps};
    return false;
  }

  TrajectoryResult reach(Natural value, std::size_t steps) {
    result_.outcome = Reached{std::move(value), steps};
    return std::move(result_);
  }

  TrajectoryResult finish() { return std::move(result_); }

  std::size_t max_steps() const { return limits_.max_steps; }

 private:
  Limits limits_;
  const RunOptions& options_;
  TrajectoryResult result_;
  std::set<Rational> seen_;
};

}  // namespace

TrajectoryResult run_rational(const RuleSpec& rule, const Natural& start, const Limits& limits,
                              const RunOptions& options) {
  if (!rule.is_rational()) throw UsageError(rule.to_string() + " is not a rational rule");
  Recorder rec(limits, options, true);
  Rational state = Rational::integer(start);
  if (!rec.visit(state, 0)) return rec.finish();
  for (std::size_t step = 1; step <= rec.max_steps(); ++step) {
    if (rec.stop_requested()) {
      rec.exhaust(ExhaustReason::Cancelled, step - 1);
      return rec.finish();
    }
    auto next = try_rational_step(rule, state);
    if (!next) {
      rec.exhaust(ExhaustReason::RuleUndefined, step - 1);
      return rec.finish();
    }
    state = *std::move(next);
    if (!rec.visit(state, step)) return rec.finish();
    if (state.is_integer()) return rec.reach(state.num(), step);
  }
  rec.exhaust(ExhaustReason::StepBudget, rec.max_steps());
  return rec.finish();
}

TrajectoryResult run_integer(const RuleSpec& rule, const Natural& start, const Limits& limits,
                             const RunOptions& options) {
  if (rule.kind() != RuleKind::Collatz) {
    throw UsageError(rule.to_string() + " is not an integer rule");
  }
  if (start.is_zero()) throw DomainError("Collatz undefined at 0");
  Recorder rec(limits, options, false);
  const Natural one(1U);
  Natural state = start;
  if (!rec.visit(Rational::integer(state), 0)) return rec.finish();
  if (state == one) return rec.reach(one, 0);
  for (std::size_t step = 1; step <= rec.max_steps(); ++step) {
    if (rec.stop_requested()) {
      rec.exhaust(ExhaustReason::Cancelled, step - 1);
      return rec.finish();
    }
    state = collatz_step(state);
    if (!rec.visit(Rational::integer(state), step)) return rec.finish();
    if (state == one) return rec.reach(one, step);
  }
  rec.exhaust(ExhaustReason::StepBudget, rec.max_steps());
  return rec.finish();
}

TrajectoryResult run(const RuleSpec& rule, const Natural& start, const Limits& limits,
                     const RunOptions& options) {
  return rule.is_rational() ? run_rational(rule, start, limits, options)
                            : run_integer(rule, start, limits, options);
}

TrajectoryStats trajectory_stats(const TrajectoryResult& result) {
  if (!result.trace_retained || result.trace.empty()) {
    throw UsageError("trajectory_stats needs a retained trace");
  }
  TrajectoryStats stats;
  stats.steps = result.steps();
  for (const auto& state : result.trace) {
    if (state.num() > stats.peak) stats.peak = state.num();
  }
  stats.peak_bits = stats.peak.bit_length();
  return stats;
}

std::string format_trace(const TrajectoryResult& result, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < result.trace.size(); ++i) {
    const auto& state = result.trace[i];
    if (i > 0) out.append(separator);
    out += (i == 0 && result.rational_states) ? state.to_string() : state.to_display_string();
  }
  return out;
}

}  // namespace wildnum
