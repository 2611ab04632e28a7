#include "tautint/bivariate.hpp"

#include <set>
#include <sstream>

namespace tautint {

void BivariatePolynomial::set_coefficient(int i, int j, const Rational& c) {
  if (i < 0 || j < 0 || i + j > max_total_degree_) {
    throw std::invalid_argument("BivariatePolynomial: exponents out of range");
  }
  if (c.is_zero()) {
    coeffs_.erase({i, j});
  } else {
    coeffs_[{i, j}] = c;
  }
}

Rational BivariatePolynomial::coefficient(int i, int j) const {
  auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational BivariatePolynomial::eval(const Rational& d, const Rational& g) const {
  // Horner is awkward on sparse bivariate supports; plain powers are exact
  // and the degrees here never exceed ~10.
  Rational result(0);
  for (const auto& [exps, c] : coeffs_) {
    Rational term = c;
    for (int i = 0; i < exps.first; ++i) term *= d;
    for (int j = 0; j < exps.second; ++j) term *= g;
    result += term;
  }
  return result;
}

std::string BivariatePolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::vector<std::pair<Exponents, Rational>> items(coeffs_.begin(), coeffs_.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    const int ta = a.first.first + a.first.second;
    const int tb = b.first.first + b.first.second;
    if (ta != tb) return ta > tb;
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [exps, c] : items) {
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    if (first && c.sign() < 0) os << "-";
    first = false;
    Rational a = c.sign() < 0 ? -c : c;
    const bool has_vars = exps.first > 0 || exps.second > 0;
    if (a != Rational(1) || !has_vars) os << a.str();
    if (a != Rational(1) && has_vars) os << "*";
    if (exps.first > 0) {
      os << "d";
      if (exps.first > 1) os << "^" << exps.first;
    }
    if (exps.second > 0) {
      if (exps.first > 0) os << "*";
      os << "g";
      if (exps.second > 1) os << "^" << exps.second;
    }
  }
  return os.str();
}

namespace {

std::vector<BivariatePolynomial::Exponents> monomial_basis(int max_total_degree) {
  std::vector<BivariatePolynomial::Exponents> basis;
  for (int t = 0; t <= max_total_degree; ++t) {
    for (int i = t; i >= 0; --i) basis.push_back({i, t - i});
  }
  return basis;
}

}  // namespace

BivariatePolynomial fit_bivariate(const std::vector<FitSample>& samples, int max_total_degree) {
  if (max_total_degree < 0) throw std::invalid_argument("fit_bivariate: negative degree bound");
  const auto basis = monomial_basis(max_total_degree);
  const size_t n = basis.size();
  const size_t m = samples.size();
  if (m < n) {
    throw std::invalid_argument("fit_bivariate: need at least " + std::to_string(n) + " samples, got " +
                                std::to_string(m));
  }
  {
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& s : samples) {
      if (!seen.insert({s.d.str(), s.g.str()}).second) {
        throw std::invalid_argument("fit_bivariate: duplicate sample point (" + s.d.str() + ", " + s.g.str() + ")");
      }
    }
  }

  // Augmented m x (n+1) matrix.
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n + 1, Rational(0)));
  for (size_t r = 0; r < m; ++r) {
    for (size_t c = 0; c < n; ++c) {
      Rational v(1);
      for (int i = 0; i < basis[c].first; ++i) v *= samples[r].d;
      for (int j = 0; j < basis[c].second; ++j) v *= samples[r].g;
      a[r][c] = v;
    }
    a[r][n] = samples[r].value;
  }

  // Forward elimination with exact pivoting.
  std::vector<size_t> pivot_row_of_col(n, m);
  size_t rank = 0;
  for (size_t col = 0; col < n && rank < m; ++col) {
    size_t pivot = m;
    for (size_t r = rank; r < m; ++r) {
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot == m) continue;
    std::swap(a[rank], a[pivot]);
    const Rational inv = Rational(1) / a[rank][col];
    for (size_t c = col; c <= n; ++c) a[rank][c] *= inv;
    for (size_t r = 0; r < m; ++r) {
      if (r == rank || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (size_t c = col; c <= n; ++c) a[r][c] -= f * a[rank][c];
    }
    pivot_row_of_col[col] = rank;
    ++rank;
  }

  // Any residual nonzero right-hand side means the samples cannot come
  // from a polynomial of this degree; report it as a first-class
  // diagnostic rather than smoothing it away.
  for (size_t r = rank; r < m; ++r) {
    if (!a[r][n].is_zero()) {
      throw FitError(FitError::Kind::Inconsistent,
                     "fit_bivariate: over-determined system inconsistent at degree bound " +
                         std::to_string(max_total_degree));
    }
  }
  if (rank < n) {
    throw FitError(FitError::Kind::RankDeficient,
                   "fit_bivariate: sample grid does not determine all " + std::to_string(n) +
                       " coefficients (rank " + std::to_string(rank) + ")");
  }

  BivariatePolynomial p(max_total_degree);
  for (size_t c = 0; c < n; ++c) {
    p.set_coefficient(basis[c].first, basis[c].second, a[pivot_row_of_col[c]][n]);
  }
  return p;
}

}  // namespace tautint
