#include "tautint/secant.hpp"

#include "tautint/partition_sums.hpp"

namespace tautint {

long expected_dimension(long e, long f, long r) { return e - f * (r + 1 - e + f); }

SecantProblem validate_problem(int e, int f, long d, long g) {
  if (f != 1 && f != 2) throw InvalidProblem("f must be 1 or 2");
  if (e < 2) throw InvalidProblem("e must be >= 2");
  if (f == 2 && e % 2 != 0) throw InvalidProblem("e must be even for f=2");
  if (f == 2 && e < 4) throw InvalidProblem("e must be >= 4 for f=2");
  if (g < 0) throw InvalidProblem("genus must be >= 0");

  SecantProblem p;
  p.e = e;
  p.f = f;
  p.d = d;
  p.g = g;
  p.r = (f == 1) ? 2 * e - 2 : 3 * e / 2 - 3;
  if (expected_dimension(e, f, p.r) != 0) {
    throw std::logic_error("validate_problem: derived r is not zero-dimensional");
  }
  if (p.r < 3) {
    p.warnings.push_back("r = " + std::to_string(p.r) + " < 3; outside the stated range, count is classical");
  }
  if (d != g + p.r) {
    p.warnings.push_back("d != g + r: the series is incomplete or special; the count is virtual");
  }
  return p;
}

ClassExpr f2_class_expression(int e) {
  if (e < 4 || e % 2 != 0) throw InvalidProblem("f2_class_expression: e must be even and >= 4");
  const int h = e / 2;
  return ClassExpr::generator(ClassKind::segre, h, 2) -
         ClassExpr::generator(ClassKind::segre, h - 1) * ClassExpr::generator(ClassKind::segre, h + 1);
}

Rational count_f1(UniversalEngine& engine, int e, long d, long g) {
  if (e < 1) throw InvalidProblem("count_f1: e must be >= 1");
  const Rational via_universal = engine.eval_universal(dual_top_segre_expr(e), e, d, g);
  const Rational via_castelnuovo = castelnuovo_count(e, d, g);
  if (via_universal != via_castelnuovo) {
    throw ConsistencyError("count_f1(" + std::to_string(e) + ", " + std::to_string(d) + ", " + std::to_string(g) +
                           "): universal route " + via_universal.str() + " != Castelnuovo sum " +
                           via_castelnuovo.str());
  }
  return via_universal;
}

Rational count_f2(UniversalEngine& engine, int e, long d, long g) {
  if (e < 4 || e % 2 != 0) throw InvalidProblem("count_f2: e must be even and >= 4");
  const int h = e / 2;

  // Route (a): the determinant class, dualized (a no-op on its value since
  // both monomials have even total parity, but the convention is fixed).
  const ClassExpr det_expr = f2_class_expression(e).dualized();
  const Rational via_determinant = engine.eval_universal(det_expr, e, d, g);

  // Route (b): expand s_{e/2}(dual)^2 - s_{e/2-1}(dual) s_{e/2+1}(dual)
  // into ch monomials and integrate each monomial separately.
  const ClassExpr ch_expr = ssq_expansion(h) - sshift_expansion(h);
  Rational via_ch(0);
  for (const auto& [mono, coeff] : ch_expr.terms()) {
    ClassExpr m = ClassExpr::constant(Rational(1));
    for (const auto& [gen, exp] : mono.factors()) m = m * ClassExpr::generator(gen.kind, gen.degree, exp);
    via_ch += coeff * engine.eval_universal(m, e, d, g);
  }

  if (via_determinant != via_ch) {
    throw ConsistencyError("count_f2(" + std::to_string(e) + ", " + std::to_string(d) + ", " + std::to_string(g) +
                           "): determinant route " + via_determinant.str() + " != ch-expansion route " +
                           via_ch.str());
  }
  return via_determinant;
}

Rational secant_count(UniversalEngine& engine, const SecantProblem& problem) {
  return problem.f == 1 ? count_f1(engine, problem.e, problem.d, problem.g)
                        : count_f2(engine, problem.e, problem.d, problem.g);
}

}  // namespace tautint
