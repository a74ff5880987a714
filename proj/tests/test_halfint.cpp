#include "catch_amalgamated.hpp"

#include "tacs/halfint.hpp"

using tacs::HalfInt;

TEST_CASE("parse accepts fractions, decimals and integers") {
  CHECK(HalfInt::parse("21/2").twice() == 21);
  CHECK(HalfInt::parse("10.5").twice() == 21);
  CHECK(HalfInt::parse("4").twice() == 8);
  CHECK(HalfInt::parse("6/2").twice() == 6);
  CHECK(HalfInt::parse("0").twice() == 0);
  CHECK(HalfInt::parse("-3/2").twice() == -3);
}

TEST_CASE("parse rejects values that are not multiples of 1/2") {
  CHECK_THROWS_AS(HalfInt::parse("1/3"), std::invalid_argument);
  CHECK_THROWS_AS(HalfInt::parse("0.25"), std::invalid_argument);
  CHECK_THROWS_AS(HalfInt::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(HalfInt::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(HalfInt::parse("3/0"), std::invalid_argument);
}

TEST_CASE("canonical form round-trips through the twice-integer") {
  for (int t = -7; t <= 41; ++t) {
    const auto j = HalfInt::from_twice(t);
    CHECK(HalfInt::parse(j.str()) == j);
    CHECK(HalfInt::parse(std::to_string(j.value())) == j);
  }
  CHECK(HalfInt::from_twice(21).str() == "21/2");
  CHECK(HalfInt::from_twice(8).str() == "4");
}

TEST_CASE("parity, multiplicity and arithmetic") {
  const auto j = HalfInt::from_twice(9);
  CHECK(j.is_half_integer());
  CHECK_FALSE(j.is_integer());
  CHECK(j.multiplicity() == 10);
  CHECK(j.value() == 4.5);
  CHECK((j + HalfInt::from_twice(1)).twice() == 10);
  CHECK((j - HalfInt::from_twice(11)).twice() == -2);
  CHECK((-j).twice() == -9);
  CHECK(HalfInt::from_twice(3) < j);
}
