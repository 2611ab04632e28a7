#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tautint/bivariate.hpp"
#include "tautint/class_expr.hpp"
#include "tautint/model_space.hpp"
#include "tautint/power_series.hpp"

namespace tautint {

/// Raised when two computation routes that must agree exactly do not, or
/// when a fitted polynomial fails its held-out validation.  This always
/// means an internal bug or a wrong degree bound, never a tolerance issue.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HeldOutCheck {
  int lines = 0;               // number of lines in the disjoint union
  std::vector<long> degrees;   // degree split used
  std::string value;           // exact value at this configuration
};

/// A weight-k integrand together with its universal polynomial in (d, g):
/// evaluating the polynomial at (deg L, genus) gives the integral of the
/// expression over C^{[k]}.
struct UniversalIntegral {
  ClassExpr expr;
  int weight = 0;
  int degree_bound = 0;
  BivariatePolynomial polynomial;
  int sample_count = 0;
  std::vector<std::pair<long, long>> sample_grid;  // (d, g) pairs fitted
  std::vector<HeldOutCheck> held_out;              // all verified exactly
};

/// Computes universal polynomials by exact interpolation of integrals over
/// disjoint unions of lines, and independently by the disjoint-union
/// recursion.  Memoized and safe for concurrent use.
class UniversalEngine {
 public:
  /// Fits the universal polynomial for a weight-k expression by sampling
  /// eval_expr_on_union on m = 1..bound+1 lines (genus 1-m) at bound+1
  /// total degrees each, then verifies >= 3 held-out degree splits
  /// exactly.  On an inconsistent fit the degree bound is raised once to
  /// k+2; a second failure throws ConsistencyError.
  const UniversalIntegral& universal_integral(const ClassExpr& expr, int k, int degree_bound = -1);

  Rational eval_universal(const ClassExpr& expr, int k, long d, long g);

  /// Independent second route with no interpolation: expands the identity
  /// (C - P^1)^{[k]} component-wise to reduce genus g to g-1 at degree
  /// d+1 plus lower-weight mixed terms, bottoming out at the genus-0
  /// closed form on P^k.
  Rational recursion_integral(const ClassExpr& expr, int k, long g, long d);

  /// Cache file: one JSON object per line, mapping canonical expression
  /// text to polynomial coefficients.  Loaded entries are re-validated
  /// against held-out sample points before first use.
  size_t load_cache(const std::string& path);
  size_t save_cache(const std::string& path) const;

  /// Copy of every universal polynomial computed so far.
  std::vector<UniversalIntegral> snapshot() const;

 private:
  UniversalIntegral compute(const ClassExpr& expr, int k, int bound) const;
  Rational recursion_value(const ClassExpr& expr, long g, long d);

  mutable std::mutex mu_;
  std::map<std::string, UniversalIntegral> memo_;
  std::map<std::string, UniversalIntegral> pending_;  // loaded, not yet re-validated
  std::map<std::tuple<std::string, long, long>, Rational> recursion_memo_;
};

/// Direct genus-0 evaluation on P^k with O(d): a weight-k monomial in
/// tautological classes integrates to the product of its scalar
/// coefficients.
Rational genus_zero_integral(const ClassExpr& expr, long d);

/// Castelnuovo's count of e-secant (e-2)-planes to a degree-d genus-g
/// curve in P^{2e-2}:
///   v_e = sum_a (-1)^a C(g+2e-d-2, a) C(g, e-a).
Rational castelnuovo_count(int e, long d, long g);

/// Generating function sum_e v_e t^e:
///   S(t) = ((1+sqrt(1+4t))/2)^d * ((-1-4t+(1+2t)sqrt(1+4t))/(2t^2))^{g-1}.
/// The second base has an exact power-series expansion (the t^-2 pole
/// cancels identically); negative exponents are handled by series
/// inversion.
PowerSeries<Rational> castelnuovo_series(long d, long g, int order);

/// Coefficient formula int_{C^{[k]}} ch_k(L^{[k]}) = (-1)^{k-1}(d+(k-1)g-k+1)/k!.
Rational ch_integral_formula(int k, long g, long d);

/// Generating function sum_k z^k int_{C^{[k]}} c_1 ch_{k-1} evaluated at
/// genus 0: -(z^2 + (2d-1)z + d^2) z e^{-z}.  A circulating variant has
/// z^2/2 in the prefactor; it contradicts the coefficient expansion
/// (-1)^k (d-k+1)^2/(k-1)! and is kept separately for the erratum
/// report.
PowerSeries<Rational> hphipsi0_series(long d, int order);
PowerSeries<Rational> hphipsi0_series_as_printed(long d, int order);

/// ((g-1)z - d + g - 1) z e^{-z}; coefficient of z^k is the ch-integral
/// formula at k-1 for k >= 2 (the z^1 coefficient is a formal extension).
PowerSeries<Rational> hpsi_series(long g, long d, int order);

/// Closed form for int c_1 ch_{k-1} as printed: (-1)^k/(k-1)! * A(k,g,d)
/// with A = (d+g-k+1)^2 - g(2-k)(2-k-(g-1)/2) - (4-k)(g-2)(2d+g-1)/2.
/// The (g-2) factor in the last term is suspect; closed_b_corrected uses
/// the arithmetic-sum coefficient g instead.  Both require k >= 2.
Rational closed_b(int k, long g, long d);
Rational closed_b_corrected(int k, long g, long d);

/// int s_4(L^{[4]}) = C(d,4) - 3C(d,3) + C(d,2)(6-g) + 5d(g-2) + C(g,2) - 15g + 15.
Rational closed_s4(long d, long g);

/// int c_4(L^{[4]}) = C(d+g,4) - sum_{m<g} (C(d+g+m,3) - sum_{n<g} C(d+m+n,2)).
Rational closed_c4(long g, long d);

/// The dual top Segre integrand s_e((L^{[e]})~dual) = (-1)^e s_e.
ClassExpr dual_top_segre_expr(int e);

/// Series assemblies used by the structure-theorem invariants, all built
/// from universal polynomials (geometric conventions: the z^0 and rank
/// terms that vanish on Hilbert schemes are zero here).
PowerSeries<Rational> top_segre_series(UniversalEngine& engine, long d, long g, int order);
PowerSeries<Rational> defect_series(UniversalEngine& engine, long d, long g, int order);

}  // namespace tautint
