#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tautint {

/// Exact arbitrary-precision rational, always in lowest terms with a
/// positive denominator.  This is the scalar type of the whole engine;
/// there is no floating-point fallback anywhere.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(n) {}   // NOLINT(google-explicit-constructor)

  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  /// Parses the canonical form "p/q" or "p".
  static Rational from_string(std::string_view s);

  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// Canonical serialization: "p/q" in lowest terms, bare "p" when q=1.
  std::string str() const;

  /// Exact conversion to long; throws if the value is not an integer or
  /// does not fit.
  long to_long() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

/// Factorial as a Rational (exact, n >= 0).
Rational factorial(long n);

}  // namespace tautint
