#include "wildnum/rational.hpp"

#include <ostream>

#include "wildnum/errors.hpp"

namespace wildnum {

Rational Rational::make(Natural p, Natural q) {
  if (q.is_zero()) throw DomainError("zero denominator");
  if (p.is_zero()) return Rational();
  Natural g = gcd(p, q);
  if (g == Natural(1U)) return Rational(std::move(p), std::move(q));
  return Rational(p / g, q / g);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return integer(Natural::parse(text));
  return make(Natural::parse(text.substr(0, slash)), Natural::parse(text.substr(slash + 1)));
}

std::string Rational::to_string() const { return num_.to_string() + "/" + den_.to_string(); }

std::string Rational::to_display_string() const {
  return is_integer() ? num_.to_string() : to_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace wildnum
