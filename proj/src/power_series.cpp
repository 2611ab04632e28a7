#include "tautint/power_series.hpp"

namespace tautint {

PowerSeries<Rational> ps_inverse(const PowerSeries<Rational>& a) {
  if (a.at(0).is_zero()) throw std::domain_error("ps_inverse: constant term is zero");
  const Rational lead_inv = Rational(1) / a.at(0);
  PowerSeries<Rational> b(a.order());
  b.set(0, lead_inv);
  for (int n = 1; n <= a.order(); ++n) {
    Rational acc(0);
    for (int j = 1; j <= n; ++j) acc += a.at(j) * b.at(n - j);
    b.set(n, -(lead_inv * acc));
  }
  return b;
}

PowerSeries<Rational> ps_pow(const PowerSeries<Rational>& a, long n) {
  if (n < 0) return ps_pow(ps_inverse(a), -n);
  PowerSeries<Rational> result(a.order());
  result.set(0, Rational(1));
  PowerSeries<Rational> base = a;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

PowerSeries<Rational> ps_sqrt_one_plus(const Rational& c, int order) {
  PowerSeries<Rational> r(order);
  Rational ck(1);
  for (int k = 0; k <= order; ++k) {
    r.set(k, binomial_general(Rational(1, 2), k) * ck);
    ck *= c;
  }
  return r;
}

}  // namespace tautint
