#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "tautint/binomial.hpp"
#include "tautint/rational.hpp"

namespace tautint {

/// Customization point for coefficient rings of PowerSeries and for the
/// graded class-vector conversions.  The default covers Rational; other
/// rings (cohomology classes, symbolic class expressions) specialize it.
template <class R>
struct RingTraits {
  static R zero() { return R(0); }
  static R one() { return R(1); }
  static R scale(const R& x, const Rational& c) { return x * c; }
  static bool is_zero(const R& x) { return x.is_zero(); }
};

struct SeriesOrderMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Truncated formal power series with coefficients in a commutative ring.
/// Binary operations demand equal truncation orders; mixing orders without
/// an explicit truncated() call is treated as a caller bug.
template <class R = Rational>
class PowerSeries {
 public:
  explicit PowerSeries(int order)
      : order_(check_order(order)), coeffs_(static_cast<size_t>(order) + 1, RingTraits<R>::zero()) {}

  PowerSeries(int order, std::vector<R> coeffs) : order_(check_order(order)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<size_t>(order_) + 1) {
      throw std::invalid_argument("PowerSeries: coefficient count must be order+1");
    }
  }

  int order() const { return order_; }

  const R& at(int i) const { return coeffs_.at(static_cast<size_t>(i)); }
  void set(int i, R value) { coeffs_.at(static_cast<size_t>(i)) = std::move(value); }

  const std::vector<R>& coefficients() const { return coeffs_; }

  PowerSeries truncated(int new_order) const {
    if (new_order > order_) throw std::invalid_argument("PowerSeries::truncated: cannot extend");
    std::vector<R> c(coeffs_.begin(), coeffs_.begin() + new_order + 1);
    return PowerSeries(new_order, std::move(c));
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b, "add");
    PowerSeries r(a.order_);
    for (int i = 0; i <= a.order_; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
  }

  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b, "subtract");
    PowerSeries r(a.order_);
    for (int i = 0; i <= a.order_; ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
  }

  /// Cauchy product truncated to the common order.
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b, "multiply");
    PowerSeries r(a.order_);
    for (int i = 0; i <= a.order_; ++i) {
      R acc = RingTraits<R>::zero();
      for (int j = 0; j <= i; ++j) acc = acc + a.coeffs_[j] * b.coeffs_[i - j];
      r.coeffs_[i] = std::move(acc);
    }
    return r;
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
    return order;
  }

  static void require_same_order(const PowerSeries& a, const PowerSeries& b, const char* op) {
    if (a.order_ != b.order_) {
      throw SeriesOrderMismatch(std::string("PowerSeries ") + op + ": order mismatch (" +
                                std::to_string(a.order_) + " vs " + std::to_string(b.order_) + ")");
    }
  }

  int order_;
  std::vector<R> coeffs_;
};

template <class R>
PowerSeries<R> ps_mul(const PowerSeries<R>& a, const PowerSeries<R>& b) {
  return a * b;
}

/// exp(a) for a series with vanishing constant term, via the recurrence
/// n f_n = sum_j j a_j f_{n-j}.
template <class R>
PowerSeries<R> ps_exp(const PowerSeries<R>& a) {
  if (!RingTraits<R>::is_zero(a.at(0))) {
    throw std::domain_error("ps_exp: nonzero constant term");
  }
  PowerSeries<R> f(a.order());
  f.set(0, RingTraits<R>::one());
  for (int n = 1; n <= a.order(); ++n) {
    R acc = RingTraits<R>::zero();
    for (int j = 1; j <= n; ++j) {
      acc = acc + RingTraits<R>::scale(a.at(j) * f.at(n - j), Rational(j));
    }
    f.set(n, RingTraits<R>::scale(acc, Rational(1, n)));
  }
  return f;
}

/// log(a) for a series with constant term equal to one.
template <class R>
PowerSeries<R> ps_log(const PowerSeries<R>& a) {
  if (!(a.at(0) == RingTraits<R>::one())) {
    throw std::domain_error("ps_log: constant term must be 1");
  }
  PowerSeries<R> g(a.order());
  for (int n = 1; n <= a.order(); ++n) {
    R acc = a.at(n);
    for (int j = 1; j < n; ++j) {
      acc = acc - RingTraits<R>::scale(g.at(j) * a.at(n - j), Rational(j, n));
    }
    g.set(n, std::move(acc));
  }
  return g;
}

/// Coefficient-wise (Hadamard) product.
template <class R>
PowerSeries<R> hadamard(const PowerSeries<R>& a, const PowerSeries<R>& b) {
  if (a.order() != b.order()) throw SeriesOrderMismatch("hadamard: order mismatch");
  PowerSeries<R> r(a.order());
  for (int i = 0; i <= a.order(); ++i) r.set(i, a.at(i) * b.at(i));
  return r;
}

/// Multiplicative inverse; requires an invertible (nonzero) constant term.
PowerSeries<Rational> ps_inverse(const PowerSeries<Rational>& a);

/// Integer power, negative exponents via ps_inverse.
PowerSeries<Rational> ps_pow(const PowerSeries<Rational>& a, long n);

/// The binomial series sqrt(1 + c z) = sum_k C(1/2, k) c^k z^k.
PowerSeries<Rational> ps_sqrt_one_plus(const Rational& c, int order);

}  // namespace tautint
