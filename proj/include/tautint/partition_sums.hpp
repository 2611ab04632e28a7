#pragma once

#include <functional>
#include <vector>

#include "tautint/class_expr.hpp"

namespace tautint {

/// Calls fn for every multiplicity vector (n_1, ..., n_r) of non-negative
/// integers with n_1 + 2 n_2 + ... + r n_r = n (trailing zeros trimmed).
void for_each_multiplicity_vector(int n, const std::function<void(const std::vector<int>&)>& fn);

/// Complete homogeneous symmetric function h_m of the Chern roots as a
/// polynomial in ch generators:
///   h_m = sum over n_1 + 2 n_2 + ... = m of prod_i (i! ch_i)^{n_i} / (i^{n_i} n_i!).
/// h_m equals s_m of the dual bundle.
ClassExpr complete_homogeneous_ch(int m);

/// s_n(dual)^2 as a ch-monomial sum: the square of the multiplicity-vector
/// expansion of h_n.  (The exp of squared power sums generates the series
/// of the product alphabet {a_i a_j}, which differs from sum h_n^2 t^n for
/// rank >= 2, so squaring the h_n expansion is the correct route.)
/// Weight 2n.
ClassExpr ssq_expansion(int n);

/// s_{n-1}(dual) s_{n+1}(dual) as the product of the two partition sums
/// (one of weight n-1, one of weight n+1) coming from the shifted Segre
/// series.  Weight 2n; requires n >= 1.
ClassExpr sshift_expansion(int n);

}  // namespace tautint
