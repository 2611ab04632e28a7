#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tautint/class_expr.hpp"
#include "tautint/graded_vector.hpp"
#include "tautint/partition_sums.hpp"

using namespace tautint;

namespace {

ClassExpr gen(ClassKind kind, int degree, int exp = 1) { return ClassExpr::generator(kind, degree, exp); }

GradedClassVector<Rational> chern_from_roots(const std::vector<Rational>& roots, int cap) {
  // prod_i (1 + a_i t) expanded by hand.
  std::vector<Rational> e(static_cast<size_t>(cap) + 1, Rational(0));
  e[0] = Rational(1);
  for (const Rational& a : roots) {
    for (int j = cap; j >= 1; --j) e[static_cast<size_t>(j)] += a * e[static_cast<size_t>(j) - 1];
  }
  auto v = GradedClassVector<Rational>::make(ClassKind::chern, cap);
  for (int j = 0; j <= cap; ++j) v.set(j, e[static_cast<size_t>(j)]);
  return v;
}

GradedClassVector<Rational> random_chern(std::mt19937& rng, int cap) {
  std::uniform_int_distribution<long> num(-7, 7);
  std::uniform_int_distribution<long> den(1, 3);
  auto v = GradedClassVector<Rational>::make(ClassKind::chern, cap);
  v.set(0, Rational(1));
  for (int i = 1; i <= cap; ++i) v.set(i, Rational(num(rng), den(rng)));
  return v;
}

GradedClassVector<ClassExpr> symbolic_chern(int cap) {
  auto v = GradedClassVector<ClassExpr>::make(ClassKind::chern, cap);
  v.set(0, ClassExpr::constant(Rational(1)));
  for (int i = 1; i <= cap; ++i) v.set(i, gen(ClassKind::chern, i));
  return v;
}

}  // namespace

TEST_CASE("chern_to_segre basics") {
  auto c = GradedClassVector<Rational>::make(ClassKind::chern, 1);
  c.set(0, Rational(1));
  c.set(1, Rational(5));
  const auto s = chern_to_segre(c);
  CHECK(s.kind == ClassKind::segre);
  CHECK(s.at(0) == Rational(1));
  CHECK(s.at(1) == Rational(-5));

  auto trivial = GradedClassVector<Rational>::make(ClassKind::chern, 4);
  trivial.set(0, Rational(1));
  const auto st = chern_to_segre(trivial);
  for (int i = 1; i <= 4; ++i) CHECK(st.at(i) == Rational(0));

  CHECK_THROWS(chern_to_segre(st));  // wrong kind
}

TEST_CASE("single Chern root: segre classes are the geometric series of -a") {
  const Rational a(2);
  const auto c = chern_from_roots({a}, 6);
  const auto s = chern_to_segre(c);
  Rational expected(1);
  for (int l = 1; l <= 6; ++l) {
    expected *= -a;
    CHECK(s.at(l) == expected);
  }
  // ... and the dual's segre classes are the plain geometric series.
  const auto sd = dualize(s);
  CHECK(sd.at(3) == a * a * a);
}

TEST_CASE("segre conversion is involutive") {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto c = random_chern(rng, 1 + static_cast<int>(rng() % 8));
    CHECK(segre_to_chern(chern_to_segre(c)) == c);
  }
}

TEST_CASE("dualize") {
  auto c = GradedClassVector<Rational>::make(ClassKind::chern, 2);
  c.set(0, Rational(1));
  c.set(1, Rational(4));
  c.set(2, Rational(7));
  const auto d = dualize(c);
  CHECK(d.at(0) == Rational(1));
  CHECK(d.at(1) == Rational(-4));
  CHECK(d.at(2) == Rational(7));
  CHECK(dualize(d) == c);
}

TEST_CASE("chern_to_ch follows Newton's identities") {
  {
    auto c = GradedClassVector<Rational>::make(ClassKind::chern, 1);
    c.set(0, Rational(1));
    c.set(1, Rational(9));
    const auto ch = chern_to_ch(c, Rational(3));
    CHECK(ch.at(0) == Rational(3));
    CHECK(ch.at(1) == Rational(9));
  }
  {
    // ch_2 = (c_1^2 - 2 c_2)/2 symbolically.
    const auto c = symbolic_chern(2);
    const auto ch = chern_to_ch(c, Rational(2));
    const ClassExpr expected =
        (gen(ClassKind::chern, 1, 2) - gen(ClassKind::chern, 2).scaled(Rational(2))).scaled(Rational(1, 2));
    CHECK(ch.at(2) == expected);
  }
  {
    // Single root a: ch_i = a^i / i!.
    const Rational a(3);
    const auto ch = chern_to_ch(chern_from_roots({a}, 6), Rational(1));
    Rational power(1);
    for (int i = 1; i <= 6; ++i) {
      power *= a;
      CHECK(ch.at(i) == power / factorial(i));
    }
  }
}

TEST_CASE("ch_to_chern inverts chern_to_ch") {
  std::mt19937 rng(29);
  for (int t = 0; t < 20; ++t) {
    const int cap = 1 + static_cast<int>(rng() % 10);
    const auto c = random_chern(rng, cap);
    const auto back = ch_to_chern(chern_to_ch(c, Rational(5)));
    for (int i = 1; i <= cap; ++i) CHECK(back.at(i) == c.at(i));
  }

  // Newton at l=2: e_2 = (p_1^2 - p_2)/2 with p_j = j! ch_j.
  auto ch = GradedClassVector<Rational>::make(ClassKind::ch, 2);
  ch.set(0, Rational(2));
  ch.set(1, Rational(3));
  ch.set(2, Rational(5, 2));
  const auto c = ch_to_chern(ch);
  CHECK(c.at(1) == Rational(3));
  CHECK(c.at(2) == (Rational(9) - Rational(5)) / Rational(2));
}

TEST_CASE("delta determinant") {
  const auto c = symbolic_chern(6);
  CHECK(delta_determinant(1, 3, c) == c.at(3));
  CHECK(delta_determinant(1, 0, c) == ClassExpr::constant(Rational(1)));

  const auto s = chern_to_segre(c);
  const ClassExpr expected = s.at(2) * s.at(2) - s.at(1) * s.at(3);
  CHECK(delta_determinant(2, 2, s) == expected);

  CHECK_THROWS(delta_determinant(4, 4, c));  // needs cap 7
  CHECK_THROWS(delta_determinant(0, 1, c));
}

TEST_CASE("Thom-Porteous duality against the dual Segre classes") {
  std::mt19937 rng(31);
  for (int t = 0; t < 10; ++t) {
    const auto c = random_chern(rng, 8);
    const auto beta = dualize(chern_to_segre(c));
    const auto s = chern_to_segre(c);
    for (int p = 1; p <= 4; ++p) {
      for (int q = 1; q <= 4; ++q) {
        const Rational lhs = delta_determinant(p, q, c);
        CHECK(lhs == delta_determinant(q, p, beta));
        Rational rhs = delta_determinant(q, p, s);
        if ((p * q) % 2 == 1) rhs = -rhs;
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("the e=4 determinant identity in c1..c4") {
  const auto c = symbolic_chern(4);
  const auto s = chern_to_segre(c);
  const auto ch = chern_to_ch(c, Rational(4));
  const ClassExpr lhs = s.at(2) * s.at(2) - s.at(1) * s.at(3);
  const ClassExpr rhs = c.at(4) + s.at(4) - (c.at(1) * ch.at(3)).scaled(Rational(6));
  CHECK(lhs == rhs);
  // Both sides reduce to c2^2 - c1 c3.
  const ClassExpr reduced = gen(ClassKind::chern, 2, 2) - gen(ClassKind::chern, 1) * gen(ClassKind::chern, 3);
  CHECK(lhs == reduced);
}

TEST_CASE("ClassExpr algebra and canonical text") {
  const ClassExpr e = gen(ClassKind::ch, 1, 4).scaled(Rational(1, 2)) + gen(ClassKind::ch, 2, 2).scaled(Rational(2));
  CHECK(e.str() == "1/2*ch1^4 + 2*ch2^2");
  CHECK(e.weight() == 4);

  CHECK(ClassExpr::zero().str() == "0");
  CHECK(ClassExpr::constant(Rational(-3, 7)).str() == "-3/7");
  CHECK((gen(ClassKind::chern, 2) - gen(ClassKind::segre, 2)).str() == "c2 - s2");

  // Mixing weights is rejected.
  CHECK_THROWS_AS(gen(ClassKind::chern, 1) + gen(ClassKind::chern, 2), WeightMismatch);

  // Duals pick up (-1)^weight.
  CHECK(gen(ClassKind::segre, 3).dualized() == gen(ClassKind::segre, 3).scaled(Rational(-1)));
  CHECK(gen(ClassKind::segre, 4).dualized() == gen(ClassKind::segre, 4));

  CHECK(gen(ClassKind::segre, 2).eval_single_root() == Rational(1));
  CHECK(gen(ClassKind::segre, 3).eval_single_root() == Rational(-1));
  CHECK(gen(ClassKind::chern, 2).eval_single_root() == Rational(0));
  CHECK(gen(ClassKind::ch, 2).eval_single_root() == Rational(1, 2));
}

TEST_CASE("canonical text round-trips") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  std::uniform_int_distribution<int> degree(1, 5), exp(1, 3), kind(0, 2), nfactors(0, 3);
  for (int t = 0; t < 60; ++t) {
    // Random homogeneous expression: a few monomials padded to a common
    // weight with powers of ch1.
    ClassExpr e;
    const int target = 12;
    for (int term = 0; term < 3; ++term) {
      ClassMonomial m;
      int w = 0;
      for (int f = nfactors(rng); f > 0; --f) {
        const Generator g{static_cast<ClassKind>(kind(rng)), degree(rng)};
        const int x = exp(rng);
        if (w + g.degree * x > target) continue;
        m.multiply_by(g, x);
        w += g.degree * x;
      }
      m.multiply_by({ClassKind::ch, 1}, target - w);
      ClassExpr mono = ClassExpr::constant(Rational(1));
      for (const auto& [g, x] : m.factors()) mono = mono * ClassExpr::generator(g.kind, g.degree, x);
      e = e + mono.scaled(Rational(num(rng), den(rng)));
    }
    CHECK(ClassExpr::parse_canonical(e.str()) == e);
  }
  CHECK(ClassExpr::parse_canonical("0") == ClassExpr::zero());
  CHECK(ClassExpr::parse_canonical("-5/3") == ClassExpr::constant(Rational(-5, 3)));
  CHECK(ClassExpr::parse_canonical("s2^2 - s1*s3") ==
        gen(ClassKind::segre, 2, 2) - gen(ClassKind::segre, 1) * gen(ClassKind::segre, 3));
  CHECK_THROWS(ClassExpr::parse_canonical(""));
  CHECK_THROWS(ClassExpr::parse_canonical("c2 +"));
  CHECK_THROWS(ClassExpr::parse_canonical("c2 ++ c2"));
}

TEST_CASE("monomial parser") {
  CHECK(ClassExpr::parse_monomial("c2") == gen(ClassKind::chern, 2));
  CHECK(ClassExpr::parse_monomial("s3") == gen(ClassKind::segre, 3));
  CHECK(ClassExpr::parse_monomial("ch3^2*c1") == gen(ClassKind::ch, 3, 2) * gen(ClassKind::chern, 1));
  CHECK(ClassExpr::parse_monomial("c1*c1") == gen(ClassKind::chern, 1, 2));
  for (const char* bad : {"", "x2", "c", "c2^", "c2^0", "c0", "c2*", "c2**s1", "c2 s1"}) {
    CHECK_THROWS_AS(ClassExpr::parse_monomial(bad), std::invalid_argument);
  }
}

TEST_CASE("multiplicity vectors enumerate partitions") {
  int count5 = 0, count6 = 0;
  for_each_multiplicity_vector(5, [&](const std::vector<int>&) { ++count5; });
  for_each_multiplicity_vector(6, [&](const std::vector<int>&) { ++count6; });
  CHECK(count5 == 7);
  CHECK(count6 == 11);
  int count0 = 0;
  for_each_multiplicity_vector(0, [&](const std::vector<int>& m) {
    ++count0;
    CHECK(m.empty());
  });
  CHECK(count0 == 1);
}

TEST_CASE("complete homogeneous expansion in ch generators") {
  CHECK(complete_homogeneous_ch(0) == ClassExpr::constant(Rational(1)));
  CHECK(complete_homogeneous_ch(1) == gen(ClassKind::ch, 1));
  CHECK(complete_homogeneous_ch(2) == gen(ClassKind::ch, 1, 2).scaled(Rational(1, 2)) + gen(ClassKind::ch, 2));
  const ClassExpr h3 = gen(ClassKind::ch, 1, 3).scaled(Rational(1, 6)) +
                       gen(ClassKind::ch, 1) * gen(ClassKind::ch, 2) + gen(ClassKind::ch, 3).scaled(Rational(2));
  CHECK(complete_homogeneous_ch(3) == h3);
}

TEST_CASE("partition expansions against explicit-root oracles") {
  CHECK(ssq_expansion(0) == ClassExpr::constant(Rational(1)));
  CHECK(ssq_expansion(1) == gen(ClassKind::ch, 1, 2));
  CHECK(sshift_expansion(1) == gen(ClassKind::ch, 1, 2).scaled(Rational(1, 2)) + gen(ClassKind::ch, 2));
  CHECK_THROWS(sshift_expansion(0));

  for (int n = 0; n <= 6; ++n) {
    CHECK(ssq_expansion(n).eval_single_root() == Rational(1));
    if (n >= 1) CHECK(sshift_expansion(n).eval_single_root() == Rational(1));
  }

  // Rank-3 bundle with explicit roots: evaluate the ch-monomial expansions
  // numerically and compare with h_n products computed through the Segre
  // route.
  const std::vector<Rational> roots = {Rational(1), Rational(-1, 2), Rational(3)};
  const int cap = 14;
  const auto c = chern_from_roots(roots, cap);
  const auto ch = chern_to_ch(c, Rational(3));
  const auto segre = chern_to_segre(c);
  const auto h = dualize(segre);
  auto eval = [&](const ClassExpr& expr) {
    Rational total(0);
    for (const auto& [mono, coeff] : expr.terms()) {
      Rational v = coeff;
      for (const auto& [g, exp] : mono.factors()) {
        const auto& vec = g.kind == ClassKind::chern ? c : (g.kind == ClassKind::segre ? segre : ch);
        for (int i = 0; i < exp; ++i) v *= vec.at(g.degree);
      }
      total += v;
    }
    return total;
  };
  for (int n = 1; n <= 6; ++n) {
    CHECK(eval(ssq_expansion(n)) == h.at(n) * h.at(n));
    CHECK(eval(sshift_expansion(n)) == h.at(n - 1) * h.at(n + 1));
  }
}
