#include "tautint/partition_sums.hpp"

#include <stdexcept>

namespace tautint {

namespace {

void enumerate(int remaining, int part, std::vector<int>& multiplicities,
               const std::function<void(const std::vector<int>&)>& fn) {
  if (remaining == 0) {
    fn(multiplicities);
    return;
  }
  if (part > remaining) return;
  // multiplicity of `part` can be 0..remaining/part
  for (int count = 0; count * part <= remaining; ++count) {
    if (count > 0) multiplicities[part - 1] = count;
    enumerate(remaining - count * part, part + 1, multiplicities, fn);
    multiplicities[part - 1] = 0;
  }
}

}  // namespace

void for_each_multiplicity_vector(int n, const std::function<void(const std::vector<int>&)>& fn) {
  if (n < 0) throw std::invalid_argument("for_each_multiplicity_vector: negative n");
  std::vector<int> multiplicities(static_cast<size_t>(n), 0);
  if (n == 0) {
    fn(multiplicities);
    return;
  }
  enumerate(n, 1, multiplicities, fn);
}

ClassExpr complete_homogeneous_ch(int m) {
  if (m < 0) throw std::invalid_argument("complete_homogeneous_ch: negative degree");
  ClassExpr result;
  for_each_multiplicity_vector(m, [&](const std::vector<int>& mult) {
    Rational coeff(1);
    ClassExpr term = ClassExpr::constant(Rational(1));
    for (size_t idx = 0; idx < mult.size(); ++idx) {
      const int n_i = mult[idx];
      if (n_i == 0) continue;
      const int i = static_cast<int>(idx) + 1;
      Rational f = factorial(i);
      Rational num(1);
      for (int rep = 0; rep < n_i; ++rep) num *= f;
      Rational den(1);
      for (int rep = 0; rep < n_i; ++rep) den *= Rational(i);
      den *= factorial(n_i);
      coeff *= num / den;
      term = term * ClassExpr::generator(ClassKind::ch, i, n_i);
    }
    result = result + term.scaled(coeff);
  });
  return result;
}

ClassExpr ssq_expansion(int n) {
  if (n < 0) throw std::invalid_argument("ssq_expansion: negative n");
  const ClassExpr h = complete_homogeneous_ch(n);
  return h * h;
}

ClassExpr sshift_expansion(int n) {
  if (n < 1) throw std::invalid_argument("sshift_expansion: requires n >= 1");
  return complete_homogeneous_ch(n - 1) * complete_homogeneous_ch(n + 1);
}

}  // namespace tautint
