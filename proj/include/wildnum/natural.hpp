#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace wildnum {

/// Arbitrary-precision nonnegative integer.
///
/// Thin value wrapper over boost::multiprecision::cpp_int that enforces the
/// nonnegativity invariant at every construction site. Arithmetic never
/// overflows; subtraction is deliberately absent.
class Natural {
 public:
  using Rep = boost::multiprecision::cpp_int;

  Natural() = default;
  // Negative values of signed types throw DomainError.
  template <std::integral T>
  Natural(T v) : rep_(v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      if (v < 0) throw_negative();
    }
  }

  // Throws DomainError if v < 0.
  explicit Natural(Rep v);

  // Parses a plain decimal string ("4769"). No sign, no whitespace, no
  // leading '+'. Leading zeros are accepted. Throws ParseError.
  static Natural parse(std::string_view text);

  const Rep& rep() const noexcept { return rep_; }

  bool is_zero() const noexcept { return rep_.is_zero(); }
  bool is_even() const { return !boost::multiprecision::bit_test(rep_, 0); }

  // 0 for zero, floor(log2 n) + 1 otherwise.
  std::size_t bit_length() const;

  bool fits_u64() const { return rep_ <= std::numeric_limits<std::uint64_t>::max(); }
  // Requires fits_u64().
  std::uint64_t to_u64() const { return rep_.convert_to<std::uint64_t>(); }

  std::string to_string() const { return rep_.str(); }

  Natural& operator+=(const Natural& o) {
    rep_ += o.rep_;
    return *this;
  }
  Natural& operator*=(const Natural& o) {
    rep_ *= o.rep_;
    return *this;
  }

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }

  // Floor division and remainder. Throw DomainError on a zero divisor.
  friend Natural operator/(const Natural& a, const Natural& b);
  friend Natural operator%(const Natural& a, const Natural& b);

  friend bool operator==(const Natural& a, const Natural& b) { return a.rep_ == b.rep_; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    int c = a.rep_.compare(b.rep_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n);

 private:
  [[noreturn]] static void throw_negative();

  Rep rep_;
};

Natural gcd(const Natural& a, const Natural& b);

/// Sum of the base-10 digits of n. digit_sum(n) == 0 exactly when n == 0.
Natural digit_sum(const Natural& n);

}  // namespace wildnum
