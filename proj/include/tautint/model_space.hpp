#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "tautint/class_expr.hpp"
#include "tautint/graded_vector.hpp"
#include "tautint/rational.hpp"

namespace tautint {

/// One Hilbert-scheme component of a disjoint union of lines: the product
/// P^{k_1} x ... x P^{k_m}, where the i-th line carries O(d_i).
struct ModelSpace {
  std::vector<int> dims;      // (k_1, ..., k_m), k_i >= 0
  std::vector<long> degrees;  // (d_1, ..., d_m)

  int factors() const { return static_cast<int>(dims.size()); }
  int total_points() const { return std::accumulate(dims.begin(), dims.end(), 0); }
};

/// Truncated polynomial in the hyperplane classes h_1..h_m with the
/// relations h_i^{k_i + 1} = 0.  Scalars (empty context) combine freely
/// with classes from any space.
class CohClass {
 public:
  CohClass() = default;

  static CohClass scalar(const Rational& c);
  static CohClass one() { return scalar(Rational(1)); }

  /// h_var^power in the given context; the zero class if power exceeds
  /// the cap.
  static CohClass variable_power(const std::vector<int>& caps, int var, int power,
                                 const Rational& coeff = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const { return caps_.empty(); }
  const std::vector<int>& caps() const { return caps_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  Rational coefficient(const std::vector<int>& exponents) const;

  /// Sum of the terms of total degree j.
  CohClass graded_part(int j) const;

  CohClass operator+(const CohClass& o) const;
  CohClass operator-(const CohClass& o) const;
  CohClass operator*(const CohClass& o) const;
  CohClass scaled(const Rational& c) const;
  CohClass pow(int n) const;

  bool operator==(const CohClass& o) const;

 private:
  void add_term(const std::vector<int>& exps, const Rational& c);
  static CohClass lifted(const CohClass& x, const std::vector<int>& caps);

  std::vector<int> caps_;  // empty for pure scalars
  std::map<std::vector<int>, Rational> terms_;
};

template <>
struct RingTraits<CohClass> {
  static CohClass zero() { return CohClass(); }
  static CohClass one() { return CohClass::one(); }
  static CohClass scale(const CohClass& x, const Rational& c) { return x.scaled(c); }
  static bool is_zero(const CohClass& x) { return x.is_zero(); }
};

/// Scalar coefficients of the tautological classes of O(d)^{[k]} on P^k:
/// c_l = C(d-k+l, l) h^l, s_l = (-1)^l C(d-k+1, l) h^l,
/// ch_0 = k and ch_i = (-1)^{i-1} (d-k+1)/i! h^i.
Rational taut_chern_coeff(int k, long d, int l);
Rational taut_segre_coeff(int k, long d, int l);
Rational taut_ch_coeff(int k, long d, int i);

/// Single-factor classes as cohomology elements on P^k.
CohClass taut_chern(int k, long d, int l);
CohClass taut_segre(int k, long d, int l);
CohClass taut_ch(int k, long d, int i);

/// All components of the Hilbert scheme of k points on a disjoint union of
/// m lines with the given degrees: one ModelSpace per composition of k
/// into m non-negative parts.  Count: C(k+m-1, m-1).
std::vector<ModelSpace> model_components(int m, int k, const std::vector<long>& degrees);

/// Total Chern class of the tautological bundle on one component (the
/// Whitney product of the pulled-back factor classes), graded by degree
/// 0..cap.
GradedClassVector<CohClass> taut_classes_on_component(const ModelSpace& space, int cap);

/// Coefficient of h_1^{k_1} ... h_m^{k_m}.
Rational integrate(const CohClass& cls, const ModelSpace& space);

/// Integral of a weight-k ClassExpr over all components of the Hilbert
/// scheme of k points of a union of m lines.  The expression's c/s/ch
/// generators refer to the tautological bundle of the union.
Rational eval_expr_on_union(const ClassExpr& expr, int m, const std::vector<long>& degrees, int k);

}  // namespace tautint
