#include "doctest.h"
#include "judicious/rational.hpp"

using judicious::input_error;
using judicious::Rational;

TEST_CASE("rational normalizes and compares exactly") {
  Rational a(2, 4);
  CHECK(a.num() == 1);
  CHECK(a.den() == 2);
  CHECK(a == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0, 1));
  CHECK(Rational(20, 9) < Rational(7, 3));
  CHECK(Rational(5, 9) > Rational(1, 2));
}

TEST_CASE("integer comparisons cross-multiply, never round") {
  Rational tau(20, 9);  // 2.22..
  CHECK(2 < tau);
  CHECK(3 > tau);
  CHECK(tau <= 3);
  CHECK(Rational(6, 3) == 2);
  CHECK_FALSE(Rational(7, 3) == 2);
  // boundary: 2m/3 with m = 3 is exactly 2
  CHECK(Rational(2 * 3, 3) == 2);
  CHECK(2 >= Rational(2 * 3, 3));
}

TEST_CASE("arithmetic stays exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) - Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * 3 == 2);
  CHECK(Rational(2, 3) / 2 == Rational(1, 3));
  CHECK(Rational(20, 9) * Rational(10, 9) == Rational(200, 81));
  CHECK((Rational(2, 3) + Rational(1, 3) / 6) == Rational(13, 18));
}

TEST_CASE("ceil of non-negative rationals") {
  CHECK(Rational(20, 9).ceil() == 3);
  CHECK(Rational(6, 3).ceil() == 2);
  CHECK(Rational(0, 5).ceil() == 0);
  CHECK_THROWS_AS(Rational(-1, 2).ceil(), input_error);
}

TEST_CASE("zero denominator rejected") {
  CHECK_THROWS_AS(Rational(1, 0), input_error);
}

TEST_CASE("string form") {
  CHECK(Rational(20, 9).str() == "20/9");
  CHECK(Rational(4, 1).str() == "4");
  CHECK(Rational(32, 8).str() == "4");
}
