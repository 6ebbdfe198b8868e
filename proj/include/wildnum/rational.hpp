#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "wildnum/natural.hpp"

namespace wildnum {

/// Nonnegative fraction in lowest terms: den >= 1, gcd(num, den) == 1.
/// Zero is 0/1. The only way to build one is through canonicalization.
class Rational {
 public:
  Rational() : num_(0U), den_(1U) {}

  // Throws DomainError("zero denominator") when q == 0.
  static Rational make(Natural p, Natural q);
  static Rational integer(Natural n) { return Rational(std::move(n), Natural(1U)); }

  // Accepts "p/q" or a bare integer "p"; canonicalizes. Throws ParseError or
  // DomainError.
  static Rational parse(std::string_view text);

  const Natural& num() const noexcept { return num_; }
  const Natural& den() const noexcept { return den_; }

  bool is_integer() const { return den_ == Natural(1U); }

  // Always "p/q", even for integers ("66/1").
  std::string to_string() const;
  // "p" for integers, "p/q" otherwise.
  std::string to_display_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  // Ordering by (num, den) for use as a container key; not numeric order.
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (auto c = a.num_ <=> b.num_; c != 0) return c;
    return a.den_ <=> b.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  Rational(Natural p, Natural q) : num_(std::move(p)), den_(std::move(q)) {}

  Natural num_;
  Natural den_;
};

inline Rational make_rational(Natural p, Natural q) {
  return Rational::make(std::move(p), std::move(q));
}

inline bool is_integer(const Rational& r) { return r.is_integer(); }

}  // namespace wildnum
