#pragma once

#include "tautint/rational.hpp"

namespace tautint {

/// Generalized binomial coefficient x(x-1)...(x-k+1)/k! for any rational x.
/// Returns 0 for k < 0 and 1 for k = 0, so sums over binomials with
/// out-of-range indices can be written without edge-case guards.
Rational binomial_general(const Rational& x, long k);

inline Rational binomial_general(long x, long k) {
  return binomial_general(Rational(x), k);
}

}  // namespace tautint
