#include "wildnum/rules.hpp"

#include <charconv>
#include <cstdint>
#include <vector>

#include "wildnum/errors.hpp"

namespace wildnum {

namespace {

std::int64_t small_digit_sum(const Natural& n) {
  // A digit sum fits comfortably in 63 bits for any number we can store.
  return static_cast<std::int64_t>(digit_sum(n).to_u64());
}

int parse_coefficient(std::string_view text, std::string_view whole) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("bad family coefficient in rule \"" + std::string(whole) + "\"");
  }
  return value;
}

}  // namespace

RuleSpec RuleSpec::family(FamilyParams params) {
  for (int c : {params.alpha, params.beta, params.gamma}) {
    if (c < -kFamilyCoefficientBound || c > kFamilyCoefficientBound) {
      throw UsageError("family coefficient " + std::to_string(c) + " outside [-" +
                       std::to_string(kFamilyCoefficientBound) + ", " +
                       std::to_string(kFamilyCoefficientBound) + "]");
    }
  }
  return RuleSpec(RuleKind::DigitSumFamily, params);
}

RuleSpec RuleSpec::parse(std::string_view text) {
  if (text == "vanlamoen") return van_lamoen();
  if (text == "collatz") return collatz();
  constexpr std::string_view kPrefix = "family:";
  if (text.substr(0, kPrefix.size()) != kPrefix) {
    throw ParseError("unknown rule \"" + std::string(text) +
                     "\" (expected vanlamoen, collatz or family:a,b,c)");
  }
  std::vector<int> coefs;
  std::string_view rest = text.substr(kPrefix.size());
  while (true) {
    auto comma = rest.find(',');
    coefs.push_back(parse_coefficient(rest.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (coefs.size() != 3) {
    throw ParseError("rule \"" + std::string(text) + "\" needs exactly three coefficients");
  }
  try {
    return family({coefs[0], coefs[1], coefs[2]});
  } catch (const UsageError& e) {
    throw ParseError(e.what());
  }
}

std::string RuleSpec::to_string() const {
  switch (kind_) {
    case RuleKind::VanLamoen:
      return "vanlamoen";
    case RuleKind::Collatz:
      return "collatz";
    case RuleKind::DigitSumFamily:
      break;
  }
  return "family:" + std::to_string(params_.alpha) + "," + std::to_string(params_.beta) + "," +
         std::to_string(params_.gamma);
}

Rational van_lamoen_step(const Rational& r) {
  Natural divisor = digit_sum(r.num()) + digit_sum(r.den());
  return make_rational(r.num() * r.den(), std::move(divisor));
}

Natural collatz_step(const Natural& n) {
  if (n.is_zero()) throw DomainError("Collatz undefined at 0");
  if (n.is_even()) return n / Natural(2U);
  return n * Natural(3U) + Natural(1U);
}

std::optional<Rational> try_family_step(const FamilyParams& params, const Rational& r) {
  std::int64_t divisor = std::int64_t{params.alpha} * small_digit_sum(r.num()) +
                         std::int64_t{params.beta} * small_digit_sum(r.den()) +
                         std::int64_t{params.gamma};
  if (divisor <= 0) return std::nullopt;
  return make_rational(r.num() * r.den(), Natural(static_cast<std::uint64_t>(divisor)));
}

Rational family_step(const FamilyParams& params, const Rational& r) {
  auto next = try_family_step(params, r);
  if (!next) throw StepError("nonpositive divisor");
  return *std::move(next);
}

std::optional<Rational> try_rational_step(const RuleSpec& rule, const Rational& r) {
  switch (rule.kind()) {
    case RuleKind::VanLamoen:
      return van_lamoen_step(r);
    case RuleKind::DigitSumFamily:
      return try_family_step(rule.params(), r);
    case RuleKind::Collatz:
      break;
  }
  throw UsageError("collatz is not a rational rule");
}

}  // namespace wildnum
