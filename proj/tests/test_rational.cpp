#include <catch2/catch_amalgamated.hpp>

#include <np3/error.hpp>
#include <np3/rational.hpp>

using namespace np3;

TEST_CASE("rationals are always reduced with positive denominators") {
  REQUIRE(Rational::of(6, 4) == Rational::of(3, 2));
  REQUIRE(Rational::of(-3, -6) == Rational::of(1, 2));
  const Rational r = Rational::of(3, -6);
  REQUIRE(r.num == -1);
  REQUIRE(r.den == 2);
  REQUIRE(Rational::of(0, 7) == Rational::integer(0));
  REQUIRE_THROWS_AS(Rational::of(1, 0), Error);
}

TEST_CASE("exact arithmetic") {
  REQUIRE(Rational::of(1, 3) + Rational::of(1, 6) == Rational::of(1, 2));
  REQUIRE(Rational::of(3, 7) * Rational::of(7, 3) == Rational::integer(1));
  REQUIRE(Rational::of(1, 2) - Rational::of(1, 3) == Rational::of(1, 6));
  REQUIRE(Rational::of(30, 7) - 4 == Rational::of(2, 7));
  REQUIRE(Rational::of(9, 2) + 0 == Rational::of(9, 2));
}

TEST_CASE("exact comparisons avoid floating point") {
  REQUIRE(Rational::of(30, 7) < Rational::of(9, 2));
  REQUIRE(Rational::of(9, 2) >= Rational::of(30, 7));
  REQUIRE(Rational::of(30, 7) >= Rational::of(30, 7));
  REQUIRE(Rational::of(1000000000, 3) > Rational::of(999999999, 3));
  REQUIRE(Rational::of(168, 31) < 6);
  // A comparison a float would get wrong: 1/3 vs huge/3*huge.
  REQUIRE(Rational::of(333333333333333333, 1000000000000000000) < Rational::of(1, 3));
}

TEST_CASE("rendering is deterministic and exact") {
  REQUIRE(Rational::of(30, 7).fraction_string() == "30/7");
  REQUIRE(Rational::integer(3).fraction_string() == "3/1");
  REQUIRE(Rational::of(30, 7).decimal_string() == "4.285714");
  REQUIRE(Rational::of(168, 31).decimal_string() == "5.419355");
  REQUIRE(Rational::of(42, 5).decimal_string() == "8.400000");
  REQUIRE(Rational::of(1, 2).decimal_string() == "0.500000");
  REQUIRE(Rational::of(-1, 2).decimal_string() == "-0.500000");
  REQUIRE(Rational::of(2, 3).decimal_string(3) == "0.667");  // round half up
  REQUIRE(Rational::integer(12).decimal_string() == "12.000000");
}

TEST_CASE("large intermediate products do not overflow") {
  const Rational big = Rational::of(48083184, 6017334);
  REQUIRE(big < Rational::integer(8));
  REQUIRE(100 * big.num >= 799 * big.den);
  const Rational a = Rational::of(1'000'000'007, 998'244'353);
  const Rational b = Rational::of(998'244'353, 1'000'000'007);
  REQUIRE(a * b == Rational::integer(1));
}
