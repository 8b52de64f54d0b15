#include <doctest.h>

#include "strval/errors.hpp"
#include "strval/rational.hpp"

using namespace strval;

TEST_CASE("rationals serialize as p/q") {
  CHECK(to_string(Rational(3, 6)) == "1/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("parse_rational round trips and rejects junk") {
  for (const char* s : {"0", "7", "-7", "3/4", "-12/5"}) CHECK(to_string(parse_rational(s)) == s);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("x"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), DomainError);
}

TEST_CASE("floor and ceil") {
  CHECK(floor_div(Rational(7, 2)) == 3);
  CHECK(ceil_div(Rational(7, 2)) == 4);
  CHECK(floor_div(Rational(-7, 2)) == -4);
  CHECK(ceil_div(Rational(-7, 2)) == -3);
  CHECK(floor_div(Rational(4)) == 4);
  CHECK(ceil_div(Rational(-4)) == -4);
  CHECK(is_integer(Rational(8, 4)));
  CHECK_FALSE(is_integer(Rational(1, 3)));
}
