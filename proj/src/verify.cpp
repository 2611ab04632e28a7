#include "tautint/verify.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "tautint/binomial.hpp"
#include "tautint/graded_vector.hpp"
#include "tautint/model_space.hpp"
#include "tautint/partition_sums.hpp"
#include "tautint/secant.hpp"

namespace tautint {

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

struct Checker {
  std::vector<CheckResult> results;

  void run(const std::string& name, bool hard, const std::function<Outcome()>& fn) {
    CheckResult r;
    r.name = name;
    r.hard = hard;
    try {
      Outcome o = fn();
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
};

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  return Rational(num(rng), den(rng));
}

GradedClassVector<Rational> random_chern_vector(std::mt19937& rng, int cap) {
  auto v = GradedClassVector<Rational>::make(ClassKind::chern, cap);
  v.set(0, Rational(1));
  for (int i = 1; i <= cap; ++i) v.set(i, random_rational(rng));
  return v;
}

ClassExpr mono_expr(std::initializer_list<std::pair<ClassKind, std::pair<int, int>>> gens) {
  ClassExpr e = ClassExpr::constant(Rational(1));
  for (const auto& [kind, di] : gens) e = e * ClassExpr::generator(kind, di.first, di.second);
  return e;
}

Outcome check_pascal(std::mt19937& rng, int trials) {
  for (int t = 0; t < trials; ++t) {
    const Rational x = random_rational(rng);
    for (long k = 1; k <= 12; ++k) {
      if (binomial_general(x, k) != binomial_general(x - Rational(1), k - 1) + binomial_general(x - Rational(1), k)) {
        return {false, "Pascal recurrence fails at x=" + x.str() + ", k=" + std::to_string(k)};
      }
    }
  }
  return {true, std::to_string(trials) + " random rational x, k <= 12"};
}

Outcome check_hockey_stick() {
  for (long d = -3; d <= 8; ++d) {
    for (long k = 0; k <= 6; ++k) {
      for (long l = 1; l <= 8; ++l) {
        Rational lhs(0);
        for (long j = 1; j <= l; ++j) lhs += binomial_general(Rational(d - k + l - j), l - j);
        if (lhs != binomial_general(Rational(d - k + l), l - 1)) {
          return {false, "hockey-stick fails at d=" + std::to_string(d) + ", k=" + std::to_string(k) +
                             ", l=" + std::to_string(l)};
        }
      }
    }
  }
  return {true, "integer grid d in [-3,8], k <= 6, l <= 8"};
}

Outcome check_exp_additivity(std::mt19937& rng, int max_order) {
  for (int order = 4; order <= max_order; order += 4) {
    PowerSeries<Rational> a(order), b(order);
    for (int i = 1; i <= order; ++i) {
      a.set(i, random_rational(rng));
      b.set(i, random_rational(rng));
    }
    if (!(ps_exp(a + b) == ps_exp(a) * ps_exp(b))) {
      return {false, "exp(a+b) != exp(a)exp(b) at order " + std::to_string(order)};
    }
    if (!(ps_exp(ps_log(ps_exp(a))) == ps_exp(a))) {
      return {false, "exp/log round-trip fails at order " + std::to_string(order)};
    }
  }
  return {true, "orders up to " + std::to_string(max_order)};
}

Outcome check_fit_roundtrip(std::mt19937& rng, int trials) {
  for (int t = 0; t < trials; ++t) {
    BivariatePolynomial p(3);
    for (int i = 0; i <= 3; ++i) {
      for (int j = 0; i + j <= 3; ++j) p.set_coefficient(i, j, random_rational(rng));
    }
    std::vector<FitSample> samples;
    for (long d = 0; d <= 4; ++d) {
      for (long g = 0; g <= 4; ++g) {
        samples.push_back({Rational(d), Rational(g), p.eval(Rational(d), Rational(g))});
      }
    }
    const BivariatePolynomial q = fit_bivariate(samples, 3);
    for (const auto& s : samples) {
      if (q.eval(s.d, s.g) != s.value) return {false, "fit does not reproduce its samples"};
    }
    if (!(q == p)) return {false, "fit recovered different coefficients"};
  }
  return {true, std::to_string(trials) + " random cubic surfaces on a 5x5 grid"};
}

Outcome check_newton_roundtrip(std::mt19937& rng, int trials) {
  for (int t = 0; t < trials; ++t) {
    const int cap = 1 + static_cast<int>(rng() % 10);
    const auto c = random_chern_vector(rng, cap);
    const Rational rank = random_rational(rng);
    const auto back = ch_to_chern(chern_to_ch(c, rank));
    for (int i = 1; i <= cap; ++i) {
      if (back.at(i) != c.at(i)) return {false, "ch round-trip fails at degree " + std::to_string(i)};
    }
    const auto back2 = segre_to_chern(chern_to_segre(c));
    for (int i = 0; i <= cap; ++i) {
      if (back2.at(i) != c.at(i)) return {false, "segre round-trip fails at degree " + std::to_string(i)};
    }
    const auto twice = dualize(dualize(c));
    if (!(twice == c)) return {false, "dualize is not an involution"};
  }
  return {true, std::to_string(trials) + " random vectors, cap <= 10"};
}

Outcome check_thom_porteous_duality(std::mt19937& rng, int trials) {
  for (int t = 0; t < trials; ++t) {
    const auto c = random_chern_vector(rng, 8);
    const auto dual_segre = dualize(chern_to_segre(c));
    const auto segre = chern_to_segre(c);
    for (int p = 1; p <= 4; ++p) {
      for (int q = 1; q <= 4; ++q) {
        const Rational lhs = delta_determinant(p, q, c);
        if (lhs != delta_determinant(q, p, dual_segre)) {
          return {false, "duality fails at p=" + std::to_string(p) + ", q=" + std::to_string(q)};
        }
        Rational signed_rhs = delta_determinant(q, p, segre);
        if ((p * q) % 2 == 1) signed_rhs = -signed_rhs;
        if (lhs != signed_rhs) {
          return {false, "signed duality fails at p=" + std::to_string(p) + ", q=" + std::to_string(q)};
        }
      }
    }
  }
  return {true, std::to_string(trials) + " random Chern vectors, cap 8, p,q <= 4"};
}

Outcome check_eq11_identity() {
  auto c = GradedClassVector<ClassExpr>::make(ClassKind::chern, 4);
  c.set(0, ClassExpr::constant(Rational(1)));
  for (int i = 1; i <= 4; ++i) c.set(i, ClassExpr::generator(ClassKind::chern, i));
  const auto s = chern_to_segre(c);
  const auto ch = chern_to_ch(c, Rational(4));
  const ClassExpr lhs = s.at(2) * s.at(2) - s.at(1) * s.at(3);
  const ClassExpr rhs = c.at(4) + s.at(4) - (c.at(1) * ch.at(3)).scaled(Rational(6));
  if (!(lhs == rhs)) {
    return {false, "s2^2 - s1 s3 != c4 + s4 - 6 c1 ch3: lhs=" + lhs.str() + " rhs=" + rhs.str()};
  }
  return {true, "s2^2 - s1 s3 = c4 + s4 - 6 c1 ch3 as polynomials in c1..c4; both sides equal " + lhs.str()};
}

PowerSeries<CohClass> dual_segre_series_of_roots(const std::vector<int>& caps, int roots, int order) {
  PowerSeries<CohClass> s_t(order);
  s_t.set(0, CohClass::one());
  for (int i = 0; i < roots; ++i) {
    PowerSeries<CohClass> geo(order);
    for (int n = 0; n <= order; ++n) geo.set(n, CohClass::variable_power(caps, i, n));
    s_t = s_t * geo;
  }
  return s_t;
}

Outcome check_log_hadamard() {
  const int order = 4;
  {
    // Rank 1: the Hadamard square of the dual Segre series is exactly
    // exp(sum t^n/n (n!)^2 ch_n^2).
    const std::vector<int> caps = {2 * order};
    const auto s_t = dual_segre_series_of_roots(caps, 1, order);
    PowerSeries<CohClass> log_arg(order);
    for (int n = 1; n <= order; ++n) {
      const CohClass pn = CohClass::variable_power(caps, 0, n);
      log_arg.set(n, (pn * pn).scaled(Rational(1, n)));
    }
    if (!(hadamard(s_t, s_t) == ps_exp(log_arg))) {
      return {false, "rank-1 Hadamard square != exp of squared power sums"};
    }
  }
  {
    // Higher rank: exp(sum t^n/n p_n^2) is the complete homogeneous series
    // of the product alphabet {a_i a_j}, not the Hadamard square.  Both
    // sides of the corrected statement are checked with 3 symbolic roots.
    const int roots = 3;
    const std::vector<int> caps(roots, 2 * order);
    PowerSeries<CohClass> log_arg(order);
    for (int n = 1; n <= order; ++n) {
      CohClass pn;
      for (int i = 0; i < roots; ++i) pn = pn + CohClass::variable_power(caps, i, n);
      log_arg.set(n, (pn * pn).scaled(Rational(1, n)));
    }
    PowerSeries<CohClass> product_alphabet(order);
    product_alphabet.set(0, CohClass::one());
    for (int i = 0; i < roots; ++i) {
      for (int j = 0; j < roots; ++j) {
        PowerSeries<CohClass> geo(order);
        for (int n = 0; n <= order; ++n) {
          // (a_i a_j)^n
          geo.set(n, CohClass::variable_power(caps, i, n) * CohClass::variable_power(caps, j, n));
        }
        product_alphabet = product_alphabet * geo;
      }
    }
    if (!(ps_exp(log_arg) == product_alphabet)) {
      return {false, "exp of squared power sums != product-alphabet series at rank 3"};
    }
    const auto s_t = dual_segre_series_of_roots(caps, roots, order);
    const auto had = hadamard(s_t, s_t);
    for (int n = 0; n <= order; ++n) {
      if (!(had.at(n) == s_t.at(n) * s_t.at(n))) return {false, "Hadamard square is not coefficient-wise"};
    }
    if (had == ps_exp(log_arg)) {
      return {false, "rank-3 Hadamard square unexpectedly equals the exp series"};
    }
  }
  return {true, "exact at rank 1; at higher rank the exp series is the product alphabet (verified), not the "
                "Hadamard square"};
}

Rational eval_expr_rational(const ClassExpr& expr, const GradedClassVector<Rational>& chern,
                            const GradedClassVector<Rational>& segre, const GradedClassVector<Rational>& ch) {
  Rational total(0);
  for (const auto& [mono, coeff] : expr.terms()) {
    Rational v = coeff;
    for (const auto& [gen, exp] : mono.factors()) {
      const GradedClassVector<Rational>* vec = nullptr;
      switch (gen.kind) {
        case ClassKind::chern: vec = &chern; break;
        case ClassKind::segre: vec = &segre; break;
        case ClassKind::ch: vec = &ch; break;
      }
      for (int i = 0; i < exp; ++i) v *= vec->at(gen.degree);
      if (v.is_zero()) break;
    }
    total += v;
  }
  return total;
}

Outcome check_partition_expansions() {
  for (int n = 0; n <= 6; ++n) {
    if (ssq_expansion(n).eval_single_root() != Rational(1)) {
      return {false, "ssq_expansion single-root value wrong at n=" + std::to_string(n)};
    }
    if (n >= 1 && sshift_expansion(n).eval_single_root() != Rational(1)) {
      return {false, "sshift_expansion single-root value wrong at n=" + std::to_string(n)};
    }
  }
  // Rank-2 oracle with explicit roots: build the class vectors of a bundle
  // with roots (a, b) through the Newton/Segre conversions and compare the
  // expansions against h_n(a,b) products computed from them.
  const Rational a(3, 2), b(-2, 1);
  const int cap = 14;
  auto c = GradedClassVector<Rational>::make(ClassKind::chern, cap);
  c.set(0, Rational(1));
  c.set(1, a + b);
  c.set(2, a * b);
  const auto h = dualize(chern_to_segre(c));  // h_n(a, b)
  const auto ch = chern_to_ch(c, Rational(2));
  const auto segre = chern_to_segre(c);
  for (int n = 1; n <= 6; ++n) {
    if (eval_expr_rational(ssq_expansion(n), c, segre, ch) != h.at(n) * h.at(n)) {
      return {false, "ssq_expansion disagrees with h_n^2 on a rank-2 bundle at n=" + std::to_string(n)};
    }
    if (eval_expr_rational(sshift_expansion(n), c, segre, ch) != h.at(n - 1) * h.at(n + 1)) {
      return {false, "sshift_expansion disagrees with h_{n-1} h_{n+1} on a rank-2 bundle at n=" + std::to_string(n)};
    }
  }
  const ClassExpr two = ssq_expansion(2);
  const ClassExpr expected = mono_expr({{ClassKind::ch, {1, 4}}}).scaled(Rational(1, 4)) +
                             mono_expr({{ClassKind::ch, {1, 2}}, {ClassKind::ch, {2, 1}}}) +
                             mono_expr({{ClassKind::ch, {2, 2}}});
  if (!(two == expected)) {
    return {false, "ssq_expansion(2) != 1/4 ch1^4 + ch1^2 ch2 + ch2^2, got " + two.str()};
  }
  const ClassExpr shift1 = sshift_expansion(1);
  const ClassExpr shift1_expected =
      mono_expr({{ClassKind::ch, {1, 2}}}).scaled(Rational(1, 2)) + mono_expr({{ClassKind::ch, {2, 1}}});
  if (!(shift1 == shift1_expected)) {
    return {false, "sshift_expansion(1) != 1/2 ch1^2 + ch2, got " + shift1.str()};
  }
  return {true, "single-root oracle n <= 6; rank-2 explicit-root oracle n <= 6"};
}

Outcome check_taut_consistency(int kmax) {
  for (int k = 1; k <= kmax; ++k) {
    for (long d = 0; d <= 10; ++d) {
      const ModelSpace space{{k}, {d}};
      const auto chern = taut_classes_on_component(space, k);
      const auto segre = chern_to_segre(chern);
      const auto ch = chern_to_ch(chern, Rational(k));
      for (int l = 0; l <= k; ++l) {
        if (!(chern.at(l) == taut_chern(k, d, l))) {
          return {false, "Whitney chern != closed form at k=" + std::to_string(k) + ", l=" + std::to_string(l)};
        }
        if (!(segre.at(l) == taut_segre(k, d, l))) {
          return {false, "segre inversion != closed form at k=" + std::to_string(k) + ", l=" + std::to_string(l)};
        }
        if (!(ch.at(l) == taut_ch(k, d, l))) {
          return {false, "Newton ch != closed form at k=" + std::to_string(k) + ", l=" + std::to_string(l)};
        }
      }
    }
  }
  return {true, "k <= " + std::to_string(kmax) + ", d <= 10"};
}

Outcome check_union_top_chern(int kmax) {
  const std::vector<std::vector<long>> degree_sets = {{5}, {3, 4}, {2, 3, 4}, {1, 1, 6}};
  for (int k = 1; k <= kmax; ++k) {
    const ClassExpr ck = ClassExpr::generator(ClassKind::chern, k);
    for (const auto& degrees : degree_sets) {
      const int m = static_cast<int>(degrees.size());
      long total = 0;
      for (long d : degrees) total += d;
      if (eval_expr_on_union(ck, m, degrees, k) != binomial_general(Rational(total), k)) {
        return {false, "top Chern over a union is not binom(sum d, k) at k=" + std::to_string(k)};
      }
    }
  }
  return {true, "k <= " + std::to_string(kmax) + ", up to 3 lines"};
}

Outcome check_castelnuovo_three_way(UniversalEngine& engine, int emax, int dspan, long gmax) {
  for (int e = 2; e <= emax; ++e) {
    for (long g = 0; g <= gmax; ++g) {
      for (long d = e; d <= e + dspan; ++d) {
        const Rational count = count_f1(engine, e, d, g);  // universal route == Castelnuovo inside
        const Rational series_coeff = castelnuovo_series(d, g, e).at(e);
        if (count != series_coeff) {
          return {false, "series coefficient disagrees at e=" + std::to_string(e) + ", d=" + std::to_string(d) +
                             ", g=" + std::to_string(g)};
        }
        if (!count.is_integer()) return {false, "non-integer count at expected dimension zero"};
      }
    }
  }
  // Classical specializations of the Castelnuovo sum.
  for (long d = -3; d <= 10; ++d) {
    for (long g = 0; g <= 8; ++g) {
      if (castelnuovo_count(2, d, g) != binomial_general(Rational(d - 1), 2) - Rational(g)) {
        return {false, "double-point formula fails at d=" + std::to_string(d) + ", g=" + std::to_string(g)};
      }
    }
    for (int e = 1; e <= 6; ++e) {
      if (castelnuovo_count(e, d, 0) != binomial_general(Rational(d - e + 1), e)) {
        return {false, "genus-0 closed form fails at e=" + std::to_string(e) + ", d=" + std::to_string(d)};
      }
    }
  }
  return {true, "count = S(t) coefficient = universal integral, e <= " + std::to_string(emax)};
}

Outcome check_f2_routes(UniversalEngine& engine, bool include_e6, int dspan, long gmax) {
  std::vector<int> es = {4};
  if (include_e6) es.push_back(6);
  for (int e : es) {
    for (long g = 0; g <= gmax; ++g) {
      for (long d = e; d <= e + dspan; ++d) {
        const Rational v = count_f2(engine, e, d, g);  // determinant route == ch route inside
        if (!v.is_integer()) {
          return {false, "non-integer f=2 count at e=" + std::to_string(e) + ", d=" + std::to_string(d) +
                             ", g=" + std::to_string(g)};
        }
      }
    }
  }
  std::ostringstream os;
  os << "both routes agree on e in {4" << (include_e6 ? ",6" : "") << "}, d span " << dspan << ", g <= " << gmax;
  return {true, os.str()};
}

Outcome check_genus0_closed_forms(UniversalEngine& engine) {
  for (int e = 2; e <= 6; ++e) {
    for (long d = 4; d <= 14; ++d) {
      if (count_f1(engine, e, d, 0) != binomial_general(Rational(d - e + 1), e)) {
        return {false, "count_f1(" + std::to_string(e) + "," + std::to_string(d) + ",0) != C(d-e+1,e)"};
      }
    }
  }
  for (long d = 4; d <= 14; ++d) {
    const Rational expected = binomial_general(Rational(d - 3), 2) * binomial_general(Rational(d - 3), 2) -
                              binomial_general(Rational(d - 3), 1) * binomial_general(Rational(d - 3), 3);
    if (count_f2(engine, 4, d, 0) != expected) {
      return {false, "count_f2(4," + std::to_string(d) + ",0) != C(d-3,2)^2 - C(d-3,1)C(d-3,3)"};
    }
  }
  if (count_f2(engine, 4, 6, 0) != Rational(6)) return {false, "count_f2(4,6,0) != 6"};
  if (count_f2(engine, 4, 4, 0) != Rational(0)) return {false, "count_f2(4,4,0) != 0"};
  return {true, "f=1 e <= 6 and f=2 e=4 on d in [4,14]; count_f2(4,6,0)=6, count_f2(4,4,0)=0"};
}

Outcome check_eq11_integrated(UniversalEngine& engine, long gmax) {
  const ClassExpr c4 = ClassExpr::generator(ClassKind::chern, 4);
  const ClassExpr s4 = ClassExpr::generator(ClassKind::segre, 4);
  const ClassExpr c1ch3 = mono_expr({{ClassKind::chern, {1, 1}}, {ClassKind::ch, {3, 1}}});
  for (long g = 0; g <= gmax; ++g) {
    for (long d = 4; d <= 10; ++d) {
      const Rational decomposed = engine.eval_universal(c4, 4, d, g) + engine.eval_universal(s4, 4, d, g) -
                                  Rational(6) * engine.eval_universal(c1ch3, 4, d, g);
      if (decomposed != count_f2(engine, 4, d, g)) {
        return {false, "c4 + s4 - 6 c1ch3 != count_f2(4) at d=" + std::to_string(d) + ", g=" + std::to_string(g)};
      }
    }
  }
  return {true, "integrated identity reproduces count_f2(4,d,g) on d in [4,10], g <= " + std::to_string(gmax)};
}

Outcome check_segre_factorization(UniversalEngine& engine, std::mt19937& rng, int order, int pairs) {
  std::uniform_int_distribution<long> dd(3, 12), gg(0, 5);
  for (int t = 0; t < pairs; ++t) {
    const long d1 = dd(rng), d2 = dd(rng), g1 = gg(rng), g2 = gg(rng);
    const auto lhs = top_segre_series(engine, d1 + d2, g1 + g2 - 1, order);
    const auto rhs = top_segre_series(engine, d1, g1, order) * top_segre_series(engine, d2, g2, order);
    if (!(lhs == rhs)) {
      return {false, "T(d1+d2, g1+g2-1) != T(d1,g1) T(d2,g2) at (" + std::to_string(d1) + "," + std::to_string(g1) +
                         ") + (" + std::to_string(d2) + "," + std::to_string(g2) + ")"};
    }
  }
  return {true, std::to_string(pairs) + " random pairs, order " + std::to_string(order)};
}

Outcome check_defect_additivity(UniversalEngine& engine, std::mt19937& rng, int order, int pairs) {
  std::uniform_int_distribution<long> dd(3, 12), gg(0, 5);
  for (int t = 0; t < pairs; ++t) {
    const long d1 = dd(rng), d2 = dd(rng), g1 = gg(rng), g2 = gg(rng);
    const auto lhs = defect_series(engine, d1 + d2, g1 + g2 - 1, order);
    const auto rhs = defect_series(engine, d1, g1, order) + defect_series(engine, d2, g2, order);
    if (!(lhs == rhs)) {
      return {false, "defect additivity fails at (" + std::to_string(d1) + "," + std::to_string(g1) + ") + (" +
                         std::to_string(d2) + "," + std::to_string(g2) + ")"};
    }
  }
  return {true, std::to_string(pairs) + " random pairs, order " + std::to_string(order)};
}

Outcome check_defect_linearity(UniversalEngine& engine, int order) {
  for (int k = 1; k <= order; ++k) {
    std::vector<FitSample> samples;
    for (long d = 2; d <= 6; ++d) {
      for (long g = 0; g <= 4; ++g) {
        samples.push_back({Rational(d), Rational(g), defect_series(engine, d, g, order).at(k)});
      }
    }
    BivariatePolynomial p = fit_bivariate(samples, 1);  // FitError here means not affine
    if (p.coefficient(0, 0) != -p.coefficient(0, 1)) {
      return {false, "z^" + std::to_string(k) + " coefficient is not of the form a*d + b*(2-2g)"};
    }
  }
  return {true, "every z^k defect coefficient is a*d + b*(2-2g), k <= " + std::to_string(order)};
}

Outcome check_a_series(UniversalEngine& engine) {
  for (int k = 1; k <= 6; ++k) {
    const ClassExpr chk = ClassExpr::generator(ClassKind::ch, k);
    for (long d = -5; d <= 8; ++d) {
      for (long g = 0; g <= 5; ++g) {
        if (engine.eval_universal(chk, k, d, g) != ch_integral_formula(k, g, d)) {
          return {false, "ch_k integral formula fails at k=" + std::to_string(k) + ", d=" + std::to_string(d) +
                             ", g=" + std::to_string(g)};
        }
      }
    }
  }
  return {true, "(-1)^{k-1}(d+(k-1)g-k+1)/k! for k <= 6 on d in [-5,8], g <= 5"};
}

Outcome check_b4_closed_form(UniversalEngine& engine) {
  const ClassExpr c1ch3 = mono_expr({{ClassKind::chern, {1, 1}}, {ClassKind::ch, {3, 1}}});
  for (long d = 4; d <= 10; ++d) {
    for (long g = 0; g <= 5; ++g) {
      const Rational engine_value = engine.eval_universal(c1ch3, 4, d, g);
      const Rational display = (Rational(d + g - 3) * Rational(d + g - 3) - Rational(4 * g) -
                                Rational(g) * Rational(g - 1)) /
                               Rational(6);
      if (engine_value != display) {
        return {false, "b4 display fails at d=" + std::to_string(d) + ", g=" + std::to_string(g)};
      }
      if (engine_value != closed_b(4, g, d) || engine_value != closed_b_corrected(4, g, d)) {
        return {false, "closed_b(4) disagrees at d=" + std::to_string(d) + ", g=" + std::to_string(g)};
      }
    }
  }
  return {true, "engine = (1/6)((d+g-3)^2 - 4g - g(g-1)) on d in [4,10], g <= 5"};
}

Outcome check_s4_closed_form(UniversalEngine& engine) {
  const ClassExpr s4 = ClassExpr::generator(ClassKind::segre, 4);
  for (long d = 4; d <= 10; ++d) {
    for (long g = 0; g <= 5; ++g) {
      if (engine.eval_universal(s4, 4, d, g) != closed_s4(d, g)) {
        return {false, "s4 closed form fails at d=" + std::to_string(d) + ", g=" + std::to_string(g)};
      }
    }
  }
  return {true, "engine matches the s4 display on d in [4,10], g <= 5"};
}

Outcome check_c4_closed_form(UniversalEngine& engine) {
  const ClassExpr c4 = ClassExpr::generator(ClassKind::chern, 4);
  for (long d = 4; d <= 10; ++d) {
    for (long g = 0; g <= 5; ++g) {
      if (engine.eval_universal(c4, 4, d, g) != closed_c4(g, d)) {
        return {false, "printed C4 double-sum disagrees with the engine at d=" + std::to_string(d) +
                           ", g=" + std::to_string(g) + "; transcription flagged"};
      }
    }
  }
  return {true, "printed C4 double-sum form confirmed against the engine (index ranges are equivalent)"};
}

Outcome check_hphipsi0_coefficients(UniversalEngine& engine) {
  for (long d = 2; d <= 10; ++d) {
    const auto series = hphipsi0_series(d, 8);
    for (int k = 2; k <= 8; ++k) {
      Rational expected = Rational(d - k + 1) * Rational(d - k + 1) / factorial(k - 1);
      if (k % 2 == 1) expected = -expected;
      if (series.at(k) != expected) {
        return {false, "H_phipsi(0,d) coefficient fails at d=" + std::to_string(d) + ", k=" + std::to_string(k)};
      }
    }
    const ClassExpr c1ch3 = mono_expr({{ClassKind::chern, {1, 1}}, {ClassKind::ch, {3, 1}}});
    if (series.at(4) != engine.eval_universal(c1ch3, 4, d, 0)) {
      return {false, "z^4 coefficient != engine b_{4,0,d} at d=" + std::to_string(d)};
    }
  }
  return {true, "(-1)^k (d-k+1)^2/(k-1)! for 2 <= k <= 8, d in [2,10]"};
}

Outcome check_hpsi_coefficients() {
  for (long g = 0; g <= 5; ++g) {
    for (long d = 0; d <= 8; ++d) {
      const auto series = hpsi_series(g, d, 8);
      for (int k = 2; k <= 8; ++k) {
        if (series.at(k) != ch_integral_formula(k - 1, g, d)) {
          return {false, "H_psi coefficient fails at g=" + std::to_string(g) + ", d=" + std::to_string(d) +
                             ", k=" + std::to_string(k)};
        }
      }
    }
  }
  return {true, "z^k coefficient equals the ch-integral formula at k-1 for 2 <= k <= 8"};
}

Outcome check_recursion_vs_universal(UniversalEngine& engine, bool full) {
  std::vector<std::pair<ClassExpr, int>> exprs = {
      {ClassExpr::generator(ClassKind::chern, 1), 1},
      {ClassExpr::generator(ClassKind::chern, 2), 2},
      {ClassExpr::generator(ClassKind::chern, 3), 3},
      {ClassExpr::generator(ClassKind::chern, 4), 4},
      {ClassExpr::generator(ClassKind::segre, 2), 2},
      {ClassExpr::generator(ClassKind::segre, 4), 4},
      {ClassExpr::generator(ClassKind::ch, 2), 2},
      {ClassExpr::generator(ClassKind::ch, 3), 3},
      {mono_expr({{ClassKind::ch, {1, 2}}}), 2},
      {mono_expr({{ClassKind::chern, {1, 1}}, {ClassKind::ch, {3, 1}}}), 4},
      {f2_class_expression(4).dualized(), 4},
  };
  if (full) {
    exprs.push_back({mono_expr({{ClassKind::ch, {1, 2}}, {ClassKind::ch, {2, 2}}}), 6});
    exprs.push_back({f2_class_expression(6).dualized(), 6});
  }
  const long gmax = full ? 5 : 3;
  const long dmax = full ? 12 : 6;
  for (const auto& [expr, k] : exprs) {
    for (long g = 0; g <= gmax; ++g) {
      for (long d = -dmax; d <= dmax; d += 2) {
        if (engine.recursion_integral(expr, k, g, d) != engine.eval_universal(expr, k, d, g)) {
          return {false, "recursion != interpolation for '" + expr.str() + "' at d=" + std::to_string(d) +
                             ", g=" + std::to_string(g)};
        }
      }
    }
  }
  return {true, std::to_string(exprs.size()) + " integrands on g <= " + std::to_string(gmax) + ", |d| <= " +
                    std::to_string(dmax)};
}

Outcome check_f2_parity(UniversalEngine& engine) {
  for (int e : {4, 6}) {
    const ClassExpr expr = f2_class_expression(e);
    if (!(expr.dualized() == expr)) return {false, "f=2 determinant class not dualization-invariant"};
  }
  // The same cancellation numerically: integrating the ch expansion with
  // all ch_i negated (the dual bundle) changes nothing.
  const ClassExpr ch_expr = ssq_expansion(2) - sshift_expansion(2);
  if (!(ch_expr.dualized() == ch_expr)) return {false, "f=2 ch expansion not dualization-invariant"};
  for (long d = 4; d <= 8; ++d) {
    const Rational a = engine.eval_universal(f2_class_expression(4), 4, d, 2);
    const Rational b = engine.eval_universal(f2_class_expression(4).dualized(), 4, d, 2);
    if (a != b) return {false, "dualization changed the f=2 value"};
  }
  return {true, "even total parity makes the dual convention immaterial (checked, not assumed)"};
}

Outcome check_sigma1_erratum(UniversalEngine& engine) {
  const ClassExpr c1 = ClassExpr::generator(ClassKind::chern, 1);
  bool corrected_matches = true;
  bool printed_matches = true;
  bool k4_both = true;
  for (int k : {2, 3, 5, 6}) {
    const ClassExpr expr = c1 * ClassExpr::generator(ClassKind::ch, k - 1);
    for (long d = 3; d <= 8; ++d) {
      for (long g = 1; g <= 5; ++g) {
        const Rational b = engine.recursion_integral(expr, k, g, d);
        if (b != closed_b_corrected(k, g, d)) corrected_matches = false;
        if (b != closed_b(k, g, d)) printed_matches = false;
      }
    }
  }
  {
    const ClassExpr expr = c1 * ClassExpr::generator(ClassKind::ch, 3);
    for (long d = 3; d <= 8; ++d) {
      for (long g = 1; g <= 5; ++g) {
        const Rational b = engine.recursion_integral(expr, 4, g, d);
        if (b != closed_b(4, g, d) || b != closed_b_corrected(4, g, d)) k4_both = false;
      }
    }
  }
  std::ostringstream os;
  if (corrected_matches && !printed_matches && k4_both) {
    os << "Sigma_1 z-coefficient is the arithmetic sum g(2d+g-1)/2: the corrected A(k,g,d) matches the engine "
          "for k in {2,3,5,6}, the printed (g-2)(2d+g-1)/2 variant does not; the k=4 specialization "
          "(1/6)((d+g-3)^2-4g-g(g-1)) carries the factor (4-k) and is unaffected";
  } else {
    os << "unexpected adjudication: corrected=" << corrected_matches << " printed=" << printed_matches
       << " k4=" << k4_both;
  }
  return {corrected_matches && !printed_matches && k4_both, os.str()};
}

Outcome check_hphipsi0_erratum(UniversalEngine& engine) {
  const ClassExpr c1 = ClassExpr::generator(ClassKind::chern, 1);
  bool corrected_matches = true;
  bool printed_matches = true;
  for (long d = 2; d <= 8; ++d) {
    const auto series = hphipsi0_series(d, 6);
    const auto printed = hphipsi0_series_as_printed(d, 6);
    for (int k = 2; k <= 6; ++k) {
      const ClassExpr expr = (k == 1) ? c1 : c1 * ClassExpr::generator(ClassKind::ch, k - 1);
      const Rational b = engine.eval_universal(expr, k, d, 0);
      if (series.at(k) != b) corrected_matches = false;
      if (printed.at(k) != b) printed_matches = false;
    }
  }
  std::ostringstream os;
  if (corrected_matches && !printed_matches) {
    os << "H_phipsi(0,d) needs the z^2 prefactor (not z^2/2) to match its own coefficient display and the "
          "engine; the printed variant disagrees from k=3 on";
  } else {
    os << "unexpected adjudication: corrected=" << corrected_matches << " printed=" << printed_matches;
  }
  return {corrected_matches && !printed_matches, os.str()};
}

Outcome check_held_out(UniversalEngine& engine) {
  const auto all = engine.snapshot();
  if (all.empty()) return {false, "no universal polynomials were computed"};
  for (const auto& u : all) {
    if (u.held_out.size() < 3) {
      return {false, "'" + u.expr.str() + "' verified only " + std::to_string(u.held_out.size()) +
                         " held-out points"};
    }
  }
  return {true, std::to_string(all.size()) + " universal polynomials, each with >= 3 exact held-out checks"};
}

}  // namespace

std::vector<CheckResult> run_verification(UniversalEngine& engine, Suite suite) {
  const bool full = suite == Suite::full;
  std::mt19937 rng(20240611u);
  Checker checker;

  checker.run("binomial-pascal", true, [&] { return check_pascal(rng, full ? 25 : 10); });
  checker.run("binomial-hockey-stick", true, [&] { return check_hockey_stick(); });
  checker.run("series-exp-additivity", true, [&] { return check_exp_additivity(rng, full ? 12 : 8); });
  checker.run("fit-roundtrip", true, [&] { return check_fit_roundtrip(rng, full ? 6 : 3); });
  checker.run("newton-roundtrip", true, [&] { return check_newton_roundtrip(rng, full ? 40 : 15); });
  checker.run("thom-porteous-duality", true, [&] { return check_thom_porteous_duality(rng, full ? 12 : 5); });
  checker.run("eq11-identity", true, [&] { return check_eq11_identity(); });
  checker.run("log-hadamard-identity", true, [&] { return check_log_hadamard(); });
  checker.run("partition-expansions", true, [&] { return check_partition_expansions(); });
  checker.run("taut-class-consistency", true, [&] { return check_taut_consistency(6); });
  checker.run("union-top-chern", true, [&] { return check_union_top_chern(full ? 5 : 4); });
  checker.run("castelnuovo-three-way", true, [&] {
    return full ? check_castelnuovo_three_way(engine, 6, 8, 5) : check_castelnuovo_three_way(engine, 4, 4, 3);
  });
  checker.run("f2-route-agreement", true, [&] {
    return full ? check_f2_routes(engine, true, 6, 4) : check_f2_routes(engine, false, 3, 2);
  });
  checker.run("genus0-closed-forms", true, [&] { return check_genus0_closed_forms(engine); });
  checker.run("eq11-integrated", true, [&] { return check_eq11_integrated(engine, full ? 5 : 3); });
  checker.run("segre-factorization", true,
              [&] { return check_segre_factorization(engine, rng, full ? 6 : 4, 10); });
  checker.run("defect-additivity", true, [&] { return check_defect_additivity(engine, rng, full ? 6 : 4, 10); });
  checker.run("defect-linearity", true, [&] { return check_defect_linearity(engine, full ? 6 : 4); });
  checker.run("a-series-closed-form", true, [&] { return check_a_series(engine); });
  checker.run("b4-closed-form", true, [&] { return check_b4_closed_form(engine); });
  checker.run("s4-closed-form", true, [&] { return check_s4_closed_form(engine); });
  checker.run("hphipsi0-coefficients", true, [&] { return check_hphipsi0_coefficients(engine); });
  checker.run("hpsi-coefficients", true, [&] { return check_hpsi_coefficients(); });
  checker.run("recursion-vs-universal", true, [&] { return check_recursion_vs_universal(engine, full); });
  checker.run("f2-dualization-parity", true, [&] { return check_f2_parity(engine); });
  checker.run("held-out-validation", true, [&] { return check_held_out(engine); });

  // Transcription adjudications: reported, never gating.
  checker.run("c4-closed-form", false, [&] { return check_c4_closed_form(engine); });
  checker.run("sigma1-erratum", false, [&] { return check_sigma1_erratum(engine); });
  checker.run("hphipsi0-erratum", false, [&] { return check_hphipsi0_erratum(engine); });

  return checker.results;
}

bool all_hard_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (r.hard && !r.passed) return false;
  }
  return true;
}

}  // namespace tautint
