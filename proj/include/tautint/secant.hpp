#pragma once

#include <string>
#include <vector>

#include "tautint/class_expr.hpp"
#include "tautint/universal.hpp"

namespace tautint {

struct InvalidProblem : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A zero-expected-dimension secant counting problem: e-secant
/// (e-f-1)-planes to a degree-d genus-g curve embedded by a complete
/// linear system in P^r, with r derived from (e, f).
struct SecantProblem {
  int e = 0;
  int f = 0;
  long d = 0;
  long g = 0;
  int r = 0;
  std::vector<std::string> warnings;
};

/// e - f(r+1-e+f).
long expected_dimension(long e, long f, long r);

/// Validates (e, f, d, g), derives r (f=1: r = 2e-2; f=2: r = 3e/2-3) and
/// collects warnings.  d != g + r only warns: the intersection numbers
/// depend on (e, d, g) alone and remain well-defined virtual counts.
SecantProblem validate_problem(int e, int f, long d, long g);

/// The f=2 Thom-Porteous class s_{e/2}^2 - s_{e/2-1} s_{e/2+1} as a
/// weight-e expression in Segre generators.
ClassExpr f2_class_expression(int e);

/// Number of e-secant (e-2)-planes, computed through the universal
/// polynomial of the dual top Segre class and through Castelnuovo's sum;
/// the two routes must agree exactly.
Rational count_f1(UniversalEngine& engine, int e, long d, long g);

/// Number of e-secant (e-3)-planes (e even >= 4), computed through the
/// determinant route and through the ch-monomial expansion route; the two
/// must agree exactly.
Rational count_f2(UniversalEngine& engine, int e, long d, long g);

/// Dispatches on f.
Rational secant_count(UniversalEngine& engine, const SecantProblem& problem);

}  // namespace tautint
