#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tautint/binomial.hpp"
#include "tautint/partition_sums.hpp"
#include "tautint/secant.hpp"

using namespace tautint;

TEST_CASE("expected dimension") {
  CHECK(expected_dimension(4, 2, 3) == 0);
  CHECK(expected_dimension(6, 2, 6) == 0);
  for (long e = 2; e <= 8; ++e) CHECK(expected_dimension(e, 1, 2 * e - 2) == 0);
  CHECK(expected_dimension(4, 1, 7) == -1);
  CHECK(expected_dimension(6, 2, 7) == -2);
}

TEST_CASE("problem validation") {
  const SecantProblem p = validate_problem(4, 2, 6, 0);
  CHECK(p.r == 3);
  CHECK(p.warnings.size() == 1);  // d != g + r
  CHECK(p.warnings[0].find("d != g + r") != std::string::npos);

  const SecantProblem complete = validate_problem(4, 2, 7, 4);  // d = g + r
  CHECK(complete.warnings.empty());

  const SecantProblem f1 = validate_problem(3, 1, 8, 4);  // r = 4 = d - g
  CHECK(f1.r == 4);
  CHECK(f1.warnings.empty());

  const SecantProblem small = validate_problem(2, 1, 4, 0);
  CHECK(small.r == 2);
  REQUIRE(small.warnings.size() == 2);
  CHECK(small.warnings[0].find("r = 2 < 3") != std::string::npos);

  CHECK_THROWS_AS(validate_problem(5, 2, 6, 0), InvalidProblem);
  CHECK_THROWS_AS(validate_problem(2, 2, 6, 0), InvalidProblem);
  CHECK_THROWS_AS(validate_problem(4, 3, 6, 0), InvalidProblem);
  CHECK_THROWS_AS(validate_problem(4, 0, 6, 0), InvalidProblem);
  CHECK_THROWS_AS(validate_problem(1, 1, 6, 0), InvalidProblem);
  CHECK_THROWS_AS(validate_problem(4, 2, 6, -1), InvalidProblem);
}

TEST_CASE("f=2 class expression") {
  const ClassExpr e4 = f2_class_expression(4);
  CHECK(e4 == ClassExpr::generator(ClassKind::segre, 2, 2) -
                  ClassExpr::generator(ClassKind::segre, 1) * ClassExpr::generator(ClassKind::segre, 3));
  const ClassExpr e6 = f2_class_expression(6);
  CHECK(e6 == ClassExpr::generator(ClassKind::segre, 3, 2) -
                  ClassExpr::generator(ClassKind::segre, 2) * ClassExpr::generator(ClassKind::segre, 4));
  CHECK_THROWS_AS(f2_class_expression(5), InvalidProblem);
  CHECK_THROWS_AS(f2_class_expression(2), InvalidProblem);

  // Both monomials have even total parity, so dualization is a no-op.
  CHECK(e4.dualized() == e4);
  CHECK(e6.dualized() == e6);
}

TEST_CASE("f=1 counts") {
  UniversalEngine engine;
  CHECK(count_f1(engine, 3, 6, 0) == Rational(4));
  CHECK(count_f1(engine, 2, 4, 0) == Rational(3));
  for (int e = 2; e <= 4; ++e) {
    for (long d = e; d <= e + 4; ++d) {
      for (long g = 0; g <= 3; ++g) {
        const Rational v = count_f1(engine, e, d, g);
        CHECK(v == castelnuovo_count(e, d, g));
        CHECK(v.is_integer());
      }
    }
  }
}

TEST_CASE("f=2 counts at e=4") {
  UniversalEngine engine;
  CHECK(count_f2(engine, 4, 6, 0) == Rational(6));
  CHECK(count_f2(engine, 4, 4, 0) == Rational(0));
  for (long d = 4; d <= 10; ++d) {
    CHECK(count_f2(engine, 4, d, 0) ==
          binomial_general(d - 3, 2) * binomial_general(d - 3, 2) -
              binomial_general(d - 3, 1) * binomial_general(d - 3, 3));
  }

  // The decomposition through the three closed-form integrands.
  const ClassExpr c4 = ClassExpr::generator(ClassKind::chern, 4);
  const ClassExpr s4 = ClassExpr::generator(ClassKind::segre, 4);
  const ClassExpr c1ch3 = ClassExpr::generator(ClassKind::chern, 1) * ClassExpr::generator(ClassKind::ch, 3);
  for (long d = 4; d <= 8; ++d) {
    for (long g = 0; g <= 3; ++g) {
      const Rational assembled = engine.eval_universal(c4, 4, d, g) + engine.eval_universal(s4, 4, d, g) -
                                 Rational(6) * engine.eval_universal(c1ch3, 4, d, g);
      CHECK(count_f2(engine, 4, d, g) == assembled);
      CHECK(count_f2(engine, 4, d, g).is_integer());
    }
  }

  CHECK_THROWS_AS(count_f2(engine, 5, 6, 0), InvalidProblem);
  CHECK_THROWS_AS(count_f2(engine, 2, 6, 0), InvalidProblem);
}

TEST_CASE("route dispatch") {
  UniversalEngine engine;
  const SecantProblem f1 = validate_problem(2, 1, 5, 1);
  CHECK(secant_count(engine, f1) == castelnuovo_count(2, 5, 1));
  const SecantProblem f2 = validate_problem(4, 2, 6, 0);
  CHECK(secant_count(engine, f2) == Rational(6));
}

TEST_CASE("ch-expansion integrands have the right shape") {
  // The e=4 route-(b) expression: s_2(dual)^2 - s_1(dual) s_3(dual)
  // expanded in ch monomials, weight 4.
  const ClassExpr expr = ssq_expansion(2) - sshift_expansion(2);
  CHECK(expr.weight() == 4);
  const ClassExpr expected = ClassExpr::generator(ClassKind::ch, 1, 4).scaled(Rational(1, 12)) +
                             ClassExpr::generator(ClassKind::ch, 2, 2) -
                             ClassExpr::generator(ClassKind::ch, 1) * ClassExpr::generator(ClassKind::ch, 3)
                                 .scaled(Rational(2));
  CHECK(expr == expected);
}
