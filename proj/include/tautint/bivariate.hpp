#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tautint/rational.hpp"

namespace tautint {

/// sum c_ij d^i g^j with i + j <= max_total_degree; zero coefficients are
/// never stored.
class BivariatePolynomial {
 public:
  using Exponents = std::pair<int, int>;

  BivariatePolynomial() : max_total_degree_(0) {}
  explicit BivariatePolynomial(int max_total_degree) : max_total_degree_(max_total_degree) {}

  int max_total_degree() const { return max_total_degree_; }
  const std::map<Exponents, Rational>& coefficients() const { return coeffs_; }

  void set_coefficient(int i, int j, const Rational& c);
  Rational coefficient(int i, int j) const;

  Rational eval(const Rational& d, const Rational& g) const;

  bool operator==(const BivariatePolynomial& o) const { return coeffs_ == o.coeffs_; }

  /// Human-readable form, monomials ordered by (total degree, d-exponent).
  std::string str() const;

 private:
  int max_total_degree_;
  std::map<Exponents, Rational> coeffs_;
};

struct FitError : std::runtime_error {
  enum class Kind { RankDeficient, Inconsistent };
  FitError(Kind k, std::string msg) : std::runtime_error(std::move(msg)), kind(k) {}
  Kind kind;
};

struct FitSample {
  Rational d;
  Rational g;
  Rational value;
};

/// Exact interpolation of a total-degree-bounded bivariate polynomial.
/// Solves the linear system over the rationals by Gaussian elimination;
/// when the system is over-determined every extra sample is checked for
/// exact consistency and a mismatch raises FitError::Kind::Inconsistent
/// (it means the degree bound is wrong, not that smoothing is wanted).
BivariatePolynomial fit_bivariate(const std::vector<FitSample>& samples, int max_total_degree);

inline Rational eval_bivariate(const BivariatePolynomial& p, const Rational& d, const Rational& g) {
  return p.eval(d, g);
}

}  // namespace tautint
