#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tautint/class_kind.hpp"
#include "tautint/power_series.hpp"
#include "tautint/rational.hpp"

namespace tautint {

/// One abstract characteristic-class generator of a single bundle:
/// c_i, s_i or ch_i with i >= 1.
struct Generator {
  ClassKind kind;
  int degree;
  auto operator<=>(const Generator&) const = default;
};

/// Product of generators with positive exponents, kept sorted by
/// (kind, degree).  The empty product is the unit monomial.
class ClassMonomial {
 public:
  ClassMonomial() = default;

  void multiply_by(Generator gen, int exponent);

  const std::vector<std::pair<Generator, int>>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  int weight() const;

  ClassMonomial operator*(const ClassMonomial& o) const;

  auto operator<=>(const ClassMonomial&) const = default;

  std::string str() const;

 private:
  std::vector<std::pair<Generator, int>> factors_;
};

struct WeightMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Weight-homogeneous rational polynomial in the generators c_i, s_i,
/// ch_i of one bundle — the integrand language of the engine, also used
/// as a plain commutative ring for symbolic identity checking.
class ClassExpr {
 public:
  ClassExpr() = default;

  static ClassExpr zero() { return ClassExpr(); }
  static ClassExpr constant(const Rational& c);
  static ClassExpr generator(ClassKind kind, int degree, int exponent = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;

  /// Common weighted degree of every monomial; -1 for the zero expression
  /// (compatible with any weight).
  int weight() const;

  const std::map<ClassMonomial, Rational>& terms() const { return terms_; }

  ClassExpr operator+(const ClassExpr& o) const;
  ClassExpr operator-(const ClassExpr& o) const;
  ClassExpr operator*(const ClassExpr& o) const;
  ClassExpr operator-() const { return scaled(Rational(-1)); }
  ClassExpr scaled(const Rational& c) const;
  ClassExpr pow(int n) const;

  bool operator==(const ClassExpr& o) const { return terms_ == o.terms_; }

  /// Applies F -> F^dual: each generator of degree i picks up (-1)^i, so a
  /// monomial of weight w is scaled by (-1)^w.
  ClassExpr dualized() const;

  /// Substitutes the classes of a bundle with a single Chern root a
  /// (c_1 = a, c_i = 0 for i > 1, s_i = (-1)^i a^i, ch_i = a^i / i!) and
  /// returns the coefficient of a^weight.  Test oracle for the partition
  /// expansions.
  Rational eval_single_root() const;

  /// Canonical display / cache-key form, e.g. "1/2*ch1^4 + 2*ch2^2".
  std::string str() const;

  /// Parses a product of tokens c<i>, s<i>, ch<i> with optional ^<exp>,
  /// separated by '*'.  Throws std::invalid_argument on bad syntax.
  static ClassExpr parse_monomial(std::string_view text);

  /// Parses the output of str(): terms joined by " + " / " - ", each an
  /// optional "p/q*" coefficient followed by a monomial, or a bare
  /// rational.  Inverse of str() on every ClassExpr.
  static ClassExpr parse_canonical(std::string_view text);

 private:
  void add_term(const ClassMonomial& m, const Rational& c);
  std::map<ClassMonomial, Rational> terms_;
};

template <>
struct RingTraits<ClassExpr> {
  static ClassExpr zero() { return ClassExpr::zero(); }
  static ClassExpr one() { return ClassExpr::constant(Rational(1)); }
  static ClassExpr scale(const ClassExpr& x, const Rational& c) { return x.scaled(c); }
  static bool is_zero(const ClassExpr& x) { return x.is_zero(); }
};

}  // namespace tautint
