#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tautint/rational.hpp"

using tautint::Rational;
using tautint::factorial;

TEST_CASE("construction reduces to lowest terms with positive denominator") {
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(-6, 4).str() == "-3/2");
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(-6, -4).str() == "3/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(5).str() == "5");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("string round-trip is canonical") {
  for (const char* s : {"0", "1", "-1", "3/2", "-22/7", "1000000000000000000000/7"}) {
    CHECK(Rational::from_string(s).str() == s);
  }
  CHECK(Rational::from_string("4/6").str() == "2/3");
  CHECK_THROWS(Rational::from_string(""));
  CHECK_THROWS(Rational::from_string("abc"));
  CHECK_THROWS(Rational::from_string("1/0"));
}

TEST_CASE("exact arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 7) / Rational(1, 7) == Rational(1));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(-Rational(3, 5) == Rational(-3, 5));

  // Repeated operations stay exact where doubles would drift.
  Rational acc(0);
  for (int i = 0; i < 300; ++i) acc += Rational(1, 3);
  CHECK(acc == Rational(100));
}

TEST_CASE("ordering and predicates") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-5) < Rational(0));
  CHECK(Rational(7, 7).is_integer());
  CHECK_FALSE(Rational(1, 2).is_integer());
  CHECK(Rational(0).is_zero());
  CHECK(Rational(3, 2).sign() == 1);
  CHECK(Rational(-3, 2).sign() == -1);
}

TEST_CASE("to_long") {
  CHECK(Rational(42).to_long() == 42);
  CHECK(Rational(-8, 2).to_long() == -4);
  CHECK_THROWS_AS(Rational(1, 2).to_long(), std::domain_error);
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(5) == Rational(120));
  CHECK(factorial(12) == Rational(479001600));
  CHECK_THROWS_AS(factorial(-1), std::domain_error);
}
