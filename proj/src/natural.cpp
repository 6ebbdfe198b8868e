#include "wildnum/natural.hpp"

#include <ostream>

#include "wildnum/errors.hpp"

namespace wildnum {

namespace {

constexpr std::uint64_t kChunk = 10'000'000'000'000'000'000ULL;  // 10^19

std::uint64_t digit_sum_u64(std::uint64_t v) {
  std::uint64_t s = 0;
  while (v != 0) {
    s += v % 10;
    v /= 10;
  }
  return s;
}

}  // namespace

Natural::Natural(Rep v) : rep_(std::move(v)) {
  if (rep_.sign() < 0) throw_negative();
}

void Natural::throw_negative() { throw DomainError("negative value is not a Natural"); }

Natural Natural::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty number");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw ParseError("invalid digit '" + std::string(1, c) + "' in \"" + std::string(text) +
                       "\"");
    }
  }
  // cpp_int treats a leading 0 as an octal prefix.
  auto first = text.find_first_not_of('0');
  if (first == std::string_view::npos) return Natural{};
  return Natural(Rep(std::string(text.substr(first))));
}

std::size_t Natural::bit_length() const {
  if (rep_.is_zero()) return 0;
  return boost::multiprecision::msb(rep_) + 1;
}

Natural operator/(const Natural& a, const Natural& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return Natural(Natural::Rep(a.rep_ / b.rep_));
}

Natural operator%(const Natural& a, const Natural& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return Natural(Natural::Rep(a.rep_ % b.rep_));
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.to_string(); }

Natural gcd(const Natural& a, const Natural& b) {
  return Natural(Natural::Rep(boost::multiprecision::gcd(a.rep(), b.rep())));
}

Natural digit_sum(const Natural& n) {
  if (n.fits_u64()) return Natural(digit_sum_u64(n.to_u64()));
  std::uint64_t total = 0;
  Natural::Rep rest = n.rep();
  Natural::Rep q;
  Natural::Rep r;
  while (!rest.is_zero()) {
    boost::multiprecision::divide_qr(rest, Natural::Rep(kChunk), q, r);
    total += digit_sum_u64(r.convert_to<std::uint64_t>());
    rest.swap(q);
  }
  return Natural(total);
}

}  // namespace wildnum
