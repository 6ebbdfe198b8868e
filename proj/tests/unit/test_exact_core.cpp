#include <doctest.h>

#include <numeric>

#include "support/generators.hpp"
#include "wildnum/errors.hpp"
#include "wildnum/natural.hpp"
#include "wildnum/rational.hpp"

using namespace wildnum;
using wildnum::testing::Rng;

TEST_CASE("make_rational canonicalizes") {
  CHECK(make_rational(330U, 5U) == Rational::integer(66U));
  CHECK(make_rational(330U, 5U).to_string() == "66/1");

  Rational zero = make_rational(0U, 7U);
  CHECK(zero.num() == Natural(0U));
  CHECK(zero.den() == Natural(1U));

  // gcd(84, 10) = 2 by the standard library on fixed-width integers.
  CHECK(std::gcd(84, 10) == 2);
  Rational r = make_rational(84U, 10U);
  CHECK(r.num() == Natural(42U));
  CHECK(r.den() == Natural(5U));
}

TEST_CASE("make_rational rejects a zero denominator") {
  CHECK_THROWS_WITH_AS(make_rational(3U, 0U), "zero denominator", DomainError);
  CHECK_THROWS_AS(make_rational(0U, 0U), DomainError);
}

TEST_CASE("digit_sum") {
  using wildnum::testing::string_digit_sum;
  CHECK(digit_sum(0U) == Natural(0U));
  CHECK(string_digit_sum(330U) == 6);
  CHECK(digit_sum(330U) == Natural(6U));
  CHECK(string_digit_sum(4769U) == 26);
  CHECK(digit_sum(4769U) == Natural(26U));
  CHECK(digit_sum(73302369360ULL) == Natural(string_digit_sum(73302369360ULL)));

  // Crosses the 10^19 chunk boundary used internally.
  Natural big = Natural::parse("10000000000000000000");
  CHECK(digit_sum(big) == Natural(1U));
  Natural nines = Natural::parse(std::string(100, '9'));
  CHECK(digit_sum(nines) == Natural(900U));
}

TEST_CASE("is_integer") {
  CHECK(is_integer(Rational::integer(66U)));
  CHECK(is_integer(Rational()));
  CHECK_FALSE(is_integer(make_rational(30U, 11U)));
}

TEST_CASE("Natural rejects negatives and bad text") {
  CHECK_THROWS_AS(Natural(-1), DomainError);
  CHECK_THROWS_AS(Natural(Natural::Rep(-5)), DomainError);
  CHECK_NOTHROW(Natural(0));
  CHECK_THROWS_AS(Natural::parse(""), ParseError);
  CHECK_THROWS_AS(Natural::parse("-3"), ParseError);
  CHECK_THROWS_AS(Natural::parse("12a"), ParseError);
  CHECK_THROWS_AS(Natural::parse(" 1"), ParseError);
  CHECK(Natural::parse("0007") == Natural(7U));
  CHECK(Natural::parse("000") == Natural(0U));
  CHECK(Natural::parse("4769").to_string() == "4769");
}

TEST_CASE("Natural bit_length") {
  CHECK(Natural(0U).bit_length() == 0);
  CHECK(Natural(1U).bit_length() == 1);
  CHECK(Natural(255U).bit_length() == 8);
  CHECK(Natural(256U).bit_length() == 9);
  CHECK(Natural(73302369360ULL).bit_length() == 37);
  CHECK(Natural::parse("340282366920938463463374607431768211456").bit_length() == 129);
}

TEST_CASE("Natural division") {
  CHECK(Natural(17U) / Natural(5U) == Natural(3U));
  CHECK(Natural(17U) % Natural(5U) == Natural(2U));
  CHECK_THROWS_AS(Natural(1U) / Natural(0U), DomainError);
}

TEST_CASE("Rational parse and display") {
  CHECK(Rational::parse("84/10") == make_rational(42U, 5U));
  CHECK(Rational::parse("66") == Rational::integer(66U));
  CHECK(Rational::parse("330/5").to_display_string() == "66");
  CHECK(Rational::parse("30/11").to_display_string() == "30/11");
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
}

TEST_CASE("canonicalization properties") {
  Rng rng(0x5eed01);
  for (int i = 0; i < 500; ++i) {
    Rational r = wildnum::testing::random_rational(rng, 200);
    CHECK(gcd(r.num(), r.den()) == Natural(1U));
    CHECK(r.den() >= Natural(1U));
    CHECK(make_rational(r.num(), r.den()) == r);

    Natural k = wildnum::testing::random_natural_any(rng, 80);
    if (k.is_zero()) k = Natural(1U);
    CHECK(make_rational(k * r.num(), k * r.den()) == r);
  }
}

TEST_CASE("digit_sum properties") {
  Rng rng(0x5eed02);
  for (int i = 0; i < 500; ++i) {
    Natural a = wildnum::testing::random_natural_any(rng, 400);
    Natural b = wildnum::testing::random_natural_any(rng, 400);
    CHECK(digit_sum(a) == Natural(wildnum::testing::string_digit_sum(a)));
    CHECK(digit_sum(a) % Natural(9U) == a % Natural(9U));
    CHECK(digit_sum(a * Natural(10U)) == digit_sum(a));
    CHECK(digit_sum(a) + digit_sum(b) >= digit_sum(a + b));
    CHECK(digit_sum(a).is_zero() == a.is_zero());
  }
}
