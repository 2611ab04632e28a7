#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "tautint/binomial.hpp"
#include "tautint/universal.hpp"

using namespace tautint;

namespace {

ClassExpr gen(ClassKind kind, int degree, int exp = 1) { return ClassExpr::generator(kind, degree, exp); }

}  // namespace

TEST_CASE("universal polynomial of c_1 is d") {
  UniversalEngine engine;
  const auto& u = engine.universal_integral(gen(ClassKind::chern, 1), 1);
  CHECK(u.polynomial.coefficients().size() == 1);
  CHECK(u.polynomial.coefficient(1, 0) == Rational(1));
  CHECK(u.degree_bound == 1);
  CHECK(u.held_out.size() >= 3);
}

TEST_CASE("universal polynomial of c_2 is d(d-1)/2") {
  UniversalEngine engine;
  const auto& u = engine.universal_integral(gen(ClassKind::chern, 2), 2);
  CHECK(u.polynomial.coefficient(2, 0) == Rational(1, 2));
  CHECK(u.polynomial.coefficient(1, 0) == Rational(-1, 2));
  CHECK(u.polynomial.coefficients().size() == 2);
}

TEST_CASE("universal ch_k matches the closed formula") {
  UniversalEngine engine;
  for (int k = 1; k <= 4; ++k) {
    for (long d = -4; d <= 6; d += 2) {
      for (long g = 0; g <= 4; ++g) {
        CHECK(engine.eval_universal(gen(ClassKind::ch, k), k, d, g) == ch_integral_formula(k, g, d));
      }
    }
  }
}

TEST_CASE("genus-0 direct evaluation") {
  const ClassExpr c1ch3 = gen(ClassKind::chern, 1) * gen(ClassKind::ch, 3);
  for (long d = 4; d <= 9; ++d) {
    CHECK(genus_zero_integral(c1ch3, d) == Rational((d - 3) * (d - 3), 6));
  }
  CHECK(genus_zero_integral(ClassExpr::constant(Rational(7)), 3) == Rational(7));
}

TEST_CASE("recursion route agrees with interpolation route") {
  UniversalEngine engine;
  const std::vector<std::pair<ClassExpr, int>> exprs = {
      {gen(ClassKind::chern, 2), 2},
      {gen(ClassKind::segre, 3), 3},
      {gen(ClassKind::ch, 2), 2},
      {gen(ClassKind::chern, 1) * gen(ClassKind::ch, 3), 4},
      {gen(ClassKind::ch, 1, 2), 2},
  };
  for (const auto& [expr, k] : exprs) {
    for (long g = 0; g <= 4; ++g) {
      for (long d = -6; d <= 6; d += 2) {
        CHECK(engine.recursion_integral(expr, k, g, d) == engine.eval_universal(expr, k, d, g));
      }
    }
  }
}

TEST_CASE("recursion examples") {
  UniversalEngine engine;
  const ClassExpr c1ch3 = gen(ClassKind::chern, 1) * gen(ClassKind::ch, 3);
  for (long d = 4; d <= 10; ++d) {
    CHECK(engine.recursion_integral(c1ch3, 4, 0, d) == Rational((d - 3) * (d - 3), 6));
  }
  for (long g = 0; g <= 5; ++g) {
    for (long d = 0; d <= 8; ++d) {
      CHECK(engine.recursion_integral(gen(ClassKind::ch, 2), 2, g, d) == -Rational(d + g - 1, 2));
    }
  }
  CHECK_THROWS_AS(engine.recursion_integral(c1ch3, 4, -1, 5), std::invalid_argument);
  CHECK_THROWS_AS(engine.recursion_integral(c1ch3, 3, 2, 5), WeightMismatch);
}

TEST_CASE("an explicitly wrong degree bound is rejected, not smoothed") {
  UniversalEngine engine;
  CHECK_THROWS_AS(engine.universal_integral(gen(ClassKind::chern, 2), 2, 1), ConsistencyError);
}

TEST_CASE("castelnuovo count") {
  CHECK(castelnuovo_count(2, 4, 0) == Rational(3));
  CHECK(castelnuovo_count(3, 6, 0) == Rational(4));
  for (long d = -2; d <= 9; ++d) {
    for (long g = 0; g <= 7; ++g) {
      CHECK(castelnuovo_count(2, d, g) == binomial_general(d - 1, 2) - Rational(g));
    }
    for (int e = 1; e <= 6; ++e) {
      CHECK(castelnuovo_count(e, d, 0) == binomial_general(d - e + 1, e));
    }
  }
}

TEST_CASE("castelnuovo generating function") {
  for (long d = 2; d <= 8; ++d) {
    for (long g = 0; g <= 4; ++g) {
      const auto s = castelnuovo_series(d, g, 5);
      CHECK(s.at(0) == Rational(1));
      CHECK(s.at(1) == Rational(d));
      for (int e = 2; e <= 5; ++e) {
        CHECK(s.at(e) == castelnuovo_count(e, d, g));
      }
    }
  }
  // Degree-0 and negative-degree expansions stay exact (inverse powers).
  const auto s0 = castelnuovo_series(0, 2, 4);
  for (int e = 0; e <= 4; ++e) CHECK(s0.at(e) == castelnuovo_count(e, 0, 2));
}

TEST_CASE("closed-form transcriptions") {
  CHECK(closed_b(4, 1, 5) == Rational(5, 6));
  CHECK(closed_b(4, 0, 7) == Rational(16, 6));
  CHECK_THROWS(closed_b(1, 0, 5));

  // The printed and corrected variants differ exactly when k != 4 and the
  // suspect Sigma_1 term is active.
  CHECK(closed_b(2, 1, 3) != closed_b_corrected(2, 1, 3));
  CHECK(closed_b(4, 3, 7) == closed_b_corrected(4, 3, 7));

  CHECK(closed_s4(4, 0) == Rational(0));
  CHECK(closed_s4(7, 0) == Rational(1));

  CHECK(closed_c4(0, 9) == binomial_general(9, 4));
  CHECK(closed_c4(1, 6) == binomial_general(7, 4) - binomial_general(7, 3) + binomial_general(6, 2));
}

TEST_CASE("closed forms match the engine on a small grid") {
  UniversalEngine engine;
  for (long d = 4; d <= 7; ++d) {
    for (long g = 0; g <= 3; ++g) {
      CHECK(engine.eval_universal(gen(ClassKind::segre, 4), 4, d, g) == closed_s4(d, g));
      CHECK(engine.eval_universal(gen(ClassKind::chern, 4), 4, d, g) == closed_c4(g, d));
      CHECK(engine.eval_universal(gen(ClassKind::chern, 1) * gen(ClassKind::ch, 3), 4, d, g) == closed_b(4, g, d));
    }
  }
}

TEST_CASE("hpsi series") {
  for (long g = 0; g <= 4; ++g) {
    for (long d = 0; d <= 6; ++d) {
      const auto s = hpsi_series(g, d, 7);
      CHECK(s.at(0) == Rational(0));
      CHECK(s.at(1) == Rational(-d + g - 1));  // formal k=1 extension
      CHECK(s.at(2) == Rational(d));
      for (int k = 2; k <= 7; ++k) CHECK(s.at(k) == ch_integral_formula(k - 1, g, d));
    }
  }
  const auto vanishing = hpsi_series(1, 0, 6);
  for (int k = 0; k <= 6; ++k) CHECK(vanishing.at(k) == Rational(0));
}

TEST_CASE("hphipsi0 series") {
  for (long d = 0; d <= 8; ++d) {
    const auto s = hphipsi0_series(d, 6);
    CHECK(s.at(1) == Rational(-d * d));  // formal k=1 extension
    CHECK(s.at(4) == Rational((d - 3) * (d - 3), 6));
    for (int k = 2; k <= 6; ++k) {
      Rational expected = Rational((d - k + 1) * (d - k + 1)) / factorial(k - 1);
      if (k % 2 == 1) expected = -expected;
      CHECK(s.at(k) == expected);
    }
    // The printed z^2/2 variant diverges from its own coefficient display.
    const auto printed = hphipsi0_series_as_printed(d, 6);
    CHECK(printed.at(3) != s.at(3));
  }
}

TEST_CASE("structure series") {
  UniversalEngine engine;
  const auto t = top_segre_series(engine, 6, 2, 4);
  CHECK(t.at(0) == Rational(1));
  for (int e = 1; e <= 4; ++e) CHECK(t.at(e) == castelnuovo_count(e, 6, 2));

  const auto d_series = defect_series(engine, 5, 3, 4);
  CHECK(d_series.at(0) == Rational(0));
  CHECK(d_series.at(1) == Rational(5));
  CHECK(d_series.at(2) == Rational(-2 * 5 - 3 + 1));
}

TEST_CASE("cache round-trip") {
  const std::string path = "/tmp/tautint_test_cache.jsonl";
  std::remove(path.c_str());
  const ClassExpr det = gen(ClassKind::segre, 2, 2) - gen(ClassKind::segre, 1) * gen(ClassKind::segre, 3);
  BivariatePolynomial reference;
  BivariatePolynomial det_reference;
  {
    UniversalEngine engine;
    engine.universal_integral(gen(ClassKind::chern, 2), 2);
    engine.universal_integral(gen(ClassKind::ch, 3), 3);
    det_reference = engine.universal_integral(det, 4).polynomial;
    reference = engine.universal_integral(gen(ClassKind::chern, 2), 2).polynomial;
    CHECK(engine.save_cache(path) == 3);
  }
  {
    UniversalEngine engine;
    CHECK(engine.load_cache(path) == 3);
    const auto& u = engine.universal_integral(gen(ClassKind::chern, 2), 2);
    CHECK(u.polynomial == reference);
    CHECK(u.held_out.size() >= 3);
    // Multi-term expressions round-trip through the canonical text too.
    CHECK(engine.universal_integral(det, 4).polynomial == det_reference);
  }
  {
    // A corrupted entry is skipped and recomputed.
    FILE* f = std::fopen(path.c_str(), "w");
    REQUIRE(f);
    std::fputs("{\"expr\":\"c2\",\"weight\":2,\"degree_bound\":2,\"coefficients\":{\"d^2\":\"9\"}}\n", f);
    std::fputs("not json at all\n", f);
    std::fclose(f);
    UniversalEngine engine;
    engine.load_cache(path);
    const auto& u = engine.universal_integral(gen(ClassKind::chern, 2), 2);
    CHECK(u.polynomial == reference);  // the bad polynomial failed validation
  }
  std::remove(path.c_str());
}

TEST_CASE("input validation") {
  UniversalEngine engine;
  CHECK_THROWS_AS(engine.universal_integral(ClassExpr::zero(), 1), std::invalid_argument);
  CHECK_THROWS_AS(engine.universal_integral(gen(ClassKind::chern, 2), 3), WeightMismatch);
}
