#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "wildnum/natural.hpp"
#include "wildnum/rational.hpp"

namespace wildnum {

/// Coefficients of the digit-sum family
///   p/q  ->  p*q / (alpha*ds(p) + beta*ds(q) + gamma).
/// (1, 1, 0) is the van Lamoen map.
struct FamilyParams {
  int alpha = 1;
  int beta = 1;
  int gamma = 0;

  friend auto operator<=>(const FamilyParams&, const FamilyParams&) = default;
};

// Every family coefficient must lie in [-kFamilyCoefficientBound, kFamilyCoefficientBound].
inline constexpr int kFamilyCoefficientBound = 1000;

enum class RuleKind { VanLamoen, Collatz, DigitSumFamily };

class RuleSpec {
 public:
  static RuleSpec van_lamoen() { return RuleSpec(RuleKind::VanLamoen, {}); }
  static RuleSpec collatz() { return RuleSpec(RuleKind::Collatz, {}); }
  // Throws UsageError when a coefficient is out of bounds.
  static RuleSpec family(FamilyParams params);

  // "vanlamoen", "collatz", "family:a,b,c". Throws ParseError.
  static RuleSpec parse(std::string_view text);

  RuleKind kind() const noexcept { return kind_; }
  // Meaningful for DigitSumFamily; (1, 1, 0) for VanLamoen.
  const FamilyParams& params() const noexcept { return params_; }

  // VanLamoen and DigitSumFamily act on rationals, Collatz on integers.
  bool is_rational() const noexcept { return kind_ != RuleKind::Collatz; }

  std::string to_string() const;

  friend bool operator==(const RuleSpec&, const RuleSpec&) = default;

 private:
  RuleSpec(RuleKind kind, FamilyParams params) : kind_(kind), params_(params) {}

  RuleKind kind_;
  FamilyParams params_;
};

Rational van_lamoen_step(const Rational& r);

// Throws DomainError("Collatz undefined at 0").
Natural collatz_step(const Natural& n);

// Throws StepError("nonpositive divisor") when the divisor evaluates <= 0.
Rational family_step(const FamilyParams& params, const Rational& r);

// Non-throwing variant: std::nullopt where the rule is undefined.
std::optional<Rational> try_family_step(const FamilyParams& params, const Rational& r);

// Dispatches on a rational rule. Throws UsageError for Collatz.
std::optional<Rational> try_rational_step(const RuleSpec& rule, const Rational& r);

}  // namespace wildnum
