#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tautint/bivariate.hpp"

using namespace tautint;

namespace {

std::vector<FitSample> sample_grid(const BivariatePolynomial& p, long dmax, long gmax) {
  std::vector<FitSample> samples;
  for (long d = 0; d <= dmax; ++d) {
    for (long g = 0; g <= gmax; ++g) {
      samples.push_back({Rational(d), Rational(g), p.eval(Rational(d), Rational(g))});
    }
  }
  return samples;
}

}  // namespace

TEST_CASE("evaluation") {
  BivariatePolynomial d_only(1);
  d_only.set_coefficient(1, 0, Rational(1));
  CHECK(d_only.eval(Rational(7), Rational(3)) == Rational(7));

  BivariatePolynomial half_d_squared(2);
  half_d_squared.set_coefficient(2, 0, Rational(1, 2));
  half_d_squared.set_coefficient(1, 0, Rational(-1, 2));
  CHECK(half_d_squared.eval(Rational(5), Rational(9)) == Rational(10));

  const BivariatePolynomial zero(3);
  CHECK(zero.eval(Rational(11), Rational(-4)) == Rational(0));

  CHECK_THROWS(d_only.set_coefficient(1, 1, Rational(1)));
}

TEST_CASE("fit recovers the degree-1 coordinate function") {
  BivariatePolynomial p(1);
  p.set_coefficient(1, 0, Rational(1));
  const auto fitted = fit_bivariate(sample_grid(p, 2, 2), 2);
  CHECK(fitted.coefficients().size() == 1);
  CHECK(fitted.coefficient(1, 0) == Rational(1));
  CHECK(fitted.str() == "d");
}

TEST_CASE("fit recovers d(d-1)/2 exactly") {
  BivariatePolynomial p(2);
  p.set_coefficient(2, 0, Rational(1, 2));
  p.set_coefficient(1, 0, Rational(-1, 2));
  const auto fitted = fit_bivariate(sample_grid(p, 3, 3), 2);
  CHECK(fitted == p);
}

TEST_CASE("inconsistent over-determined data is a first-class diagnostic") {
  std::vector<FitSample> samples = {
      {Rational(0), Rational(0), Rational(0)},
      {Rational(1), Rational(0), Rational(0)},
      {Rational(2), Rational(0), Rational(1)},
  };
  CHECK_THROWS_AS(fit_bivariate(samples, 1), FitError);
  try {
    fit_bivariate(samples, 1);
  } catch (const FitError& e) {
    CHECK(e.kind == FitError::Kind::Inconsistent);
  }
}

TEST_CASE("rank deficiency is detected") {
  // Consistent affine data on a single line cannot determine the g slope.
  std::vector<FitSample> samples = {
      {Rational(0), Rational(0), Rational(0)},
      {Rational(1), Rational(0), Rational(1)},
      {Rational(2), Rational(0), Rational(2)},
  };
  try {
    fit_bivariate(samples, 1);
    FAIL("expected FitError");
  } catch (const FitError& e) {
    CHECK(e.kind == FitError::Kind::RankDeficient);
  }
}

TEST_CASE("input validation") {
  std::vector<FitSample> dup = {
      {Rational(0), Rational(0), Rational(0)},
      {Rational(0), Rational(0), Rational(1)},
      {Rational(1), Rational(0), Rational(0)},
  };
  CHECK_THROWS_AS(fit_bivariate(dup, 1), std::invalid_argument);
  CHECK_THROWS_AS(fit_bivariate({}, 1), std::invalid_argument);
}

TEST_CASE("fit then eval reproduces every sample") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (int trial = 0; trial < 5; ++trial) {
    BivariatePolynomial p(3);
    for (int i = 0; i <= 3; ++i) {
      for (int j = 0; i + j <= 3; ++j) p.set_coefficient(i, j, Rational(coeff(rng), 2));
    }
    const auto samples = sample_grid(p, 4, 4);
    const auto fitted = fit_bivariate(samples, 3);
    for (const auto& s : samples) CHECK(fitted.eval(s.d, s.g) == s.value);
    CHECK(fitted.eval(Rational(-13), Rational(21)) == p.eval(Rational(-13), Rational(21)));
  }
}
