#include "tautint/binomial.hpp"

namespace tautint {

Rational binomial_general(const Rational& x, long k) {
  if (k < 0) return Rational(0);
  Rational result(1);
  for (long i = 0; i < k; ++i) {
    result *= (x - Rational(i));
  }
  return result / factorial(k);
}

}  // namespace tautint
