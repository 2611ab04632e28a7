#include "tautint/model_space.hpp"

#include <algorithm>
#include <stdexcept>

#include "tautint/binomial.hpp"

namespace tautint {

CohClass CohClass::scalar(const Rational& c) {
  CohClass r;
  if (!c.is_zero()) r.terms_[{}] = c;
  return r;
}

CohClass CohClass::variable_power(const std::vector<int>& caps, int var, int power, const Rational& coeff) {
  if (var < 0 || var >= static_cast<int>(caps.size())) {
    throw std::invalid_argument("CohClass::variable_power: variable index out of range");
  }
  if (power < 0) throw std::invalid_argument("CohClass::variable_power: negative power");
  CohClass r;
  r.caps_ = caps;
  if (power <= caps[static_cast<size_t>(var)] && !coeff.is_zero()) {
    std::vector<int> exps(caps.size(), 0);
    exps[static_cast<size_t>(var)] = power;
    r.terms_[exps] = coeff;
  }
  return r;
}

Rational CohClass::coefficient(const std::vector<int>& exponents) const {
  if (is_scalar()) {
    const bool all_zero = std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
    if (!all_zero) return Rational(0);
    auto it = terms_.find({});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

CohClass CohClass::graded_part(int j) const {
  CohClass r;
  r.caps_ = caps_;
  for (const auto& [exps, c] : terms_) {
    const int total = std::accumulate(exps.begin(), exps.end(), 0);
    if (total == j) r.terms_[exps] = c;
  }
  return r;
}

CohClass CohClass::lifted(const CohClass& x, const std::vector<int>& caps) {
  if (!x.caps_.empty()) {
    if (x.caps_ != caps) throw std::invalid_argument("CohClass: mixing classes from different spaces");
    return x;
  }
  CohClass r;
  r.caps_ = caps;
  auto it = x.terms_.find({});
  if (it != x.terms_.end()) r.terms_[std::vector<int>(caps.size(), 0)] = it->second;
  return r;
}

void CohClass::add_term(const std::vector<int>& exps, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CohClass CohClass::operator+(const CohClass& o) const {
  const std::vector<int>& caps = caps_.empty() ? o.caps_ : caps_;
  if (caps.empty()) {
    CohClass r = *this;
    for (const auto& [exps, c] : o.terms_) r.add_term(exps, c);
    return r;
  }
  CohClass a = lifted(*this, caps);
  for (const auto& [exps, c] : lifted(o, caps).terms_) a.add_term(exps, c);
  return a;
}

CohClass CohClass::operator-(const CohClass& o) const { return *this + o.scaled(Rational(-1)); }

CohClass CohClass::operator*(const CohClass& o) const {
  const std::vector<int>& caps = caps_.empty() ? o.caps_ : caps_;
  if (caps.empty()) {
    // scalar * scalar
    CohClass r;
    const Rational a = coefficient({});
    const Rational b = o.coefficient({});
    return scalar(a * b);
  }
  CohClass a = lifted(*this, caps);
  CohClass b = lifted(o, caps);
  CohClass r;
  r.caps_ = caps;
  std::vector<int> exps(caps.size(), 0);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      bool truncated = false;
      for (size_t i = 0; i < caps.size(); ++i) {
        exps[i] = ea[i] + eb[i];
        if (exps[i] > caps[i]) {
          truncated = true;
          break;
        }
      }
      if (!truncated) r.add_term(exps, ca * cb);
    }
  }
  return r;
}

CohClass CohClass::scaled(const Rational& c) const {
  CohClass r;
  if (c.is_zero()) {
    r.caps_ = caps_;
    return r;
  }
  r.caps_ = caps_;
  for (const auto& [exps, v] : terms_) r.terms_[exps] = v * c;
  return r;
}

CohClass CohClass::pow(int n) const {
  if (n < 0) throw std::invalid_argument("CohClass::pow: negative exponent");
  CohClass r = one();
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

bool CohClass::operator==(const CohClass& o) const {
  // Compare as polynomials; a scalar equals its lift.
  if (caps_ == o.caps_) return terms_ == o.terms_;
  const std::vector<int>& caps = caps_.empty() ? o.caps_ : caps_;
  if (!caps_.empty() && !o.caps_.empty()) return false;
  return lifted(*this, caps).terms_ == lifted(o, caps).terms_;
}

Rational taut_chern_coeff(int k, long d, int l) {
  if (l < 0 || l > k) throw std::invalid_argument("taut_chern_coeff: degree out of range");
  return binomial_general(Rational(d - k + l), l);
}

Rational taut_segre_coeff(int k, long d, int l) {
  if (l < 0 || l > k) throw std::invalid_argument("taut_segre_coeff: degree out of range");
  const Rational b = binomial_general(Rational(d - k + 1), l);
  return (l % 2 == 0) ? b : -b;
}

Rational taut_ch_coeff(int k, long d, int i) {
  if (i < 0 || i > k) throw std::invalid_argument("taut_ch_coeff: degree out of range");
  if (i == 0) return Rational(k);
  Rational v = Rational(d - k + 1) / factorial(i);
  return (i % 2 == 1) ? v : -v;
}

CohClass taut_chern(int k, long d, int l) {
  return CohClass::variable_power({k}, 0, l, taut_chern_coeff(k, d, l));
}

CohClass taut_segre(int k, long d, int l) {
  return CohClass::variable_power({k}, 0, l, taut_segre_coeff(k, d, l));
}

CohClass taut_ch(int k, long d, int i) {
  if (i == 0) return CohClass::scalar(taut_ch_coeff(k, d, 0));
  return CohClass::variable_power({k}, 0, i, taut_ch_coeff(k, d, i));
}

std::vector<ModelSpace> model_components(int m, int k, const std::vector<long>& degrees) {
  if (m < 1) throw std::invalid_argument("model_components: need m >= 1");
  if (k < 0) throw std::invalid_argument("model_components: need k >= 0");
  if (degrees.size() != static_cast<size_t>(m)) {
    throw std::invalid_argument("model_components: need one degree per line");
  }
  std::vector<ModelSpace> result;
  std::vector<int> dims(static_cast<size_t>(m), 0);
  // Enumerate compositions of k into m parts in lexicographic order.
  struct Rec {
    static void run(int pos, int remaining, std::vector<int>& dims, int m,
                    const std::vector<long>& degrees, std::vector<ModelSpace>& out) {
      if (pos == m - 1) {
        dims[static_cast<size_t>(pos)] = remaining;
        out.push_back(ModelSpace{dims, degrees});
        return;
      }
      for (int v = 0; v <= remaining; ++v) {
        dims[static_cast<size_t>(pos)] = v;
        run(pos + 1, remaining - v, dims, m, degrees, out);
      }
    }
  };
  Rec::run(0, k, dims, m, degrees, result);
  return result;
}

GradedClassVector<CohClass> taut_classes_on_component(const ModelSpace& space, int cap) {
  if (cap > space.total_points()) {
    throw std::invalid_argument("taut_classes_on_component: cap exceeds component dimension");
  }
  CohClass total = CohClass::one();
  for (int i = 0; i < space.factors(); ++i) {
    const int ki = space.dims[static_cast<size_t>(i)];
    const long di = space.degrees[static_cast<size_t>(i)];
    CohClass factor_total;
    for (int l = 0; l <= std::min(ki, cap); ++l) {
      factor_total = factor_total + CohClass::variable_power(space.dims, i, l, taut_chern_coeff(ki, di, l));
    }
    total = total * factor_total;
  }
  auto v = GradedClassVector<CohClass>::make(ClassKind::chern, cap);
  for (int j = 0; j <= cap; ++j) v.set(j, total.graded_part(j));
  return v;
}

Rational integrate(const CohClass& cls, const ModelSpace& space) {
  return cls.coefficient(space.dims);
}

Rational eval_expr_on_union(const ClassExpr& expr, int m, const std::vector<long>& degrees, int k) {
  if (expr.is_zero()) return Rational(0);
  if (expr.weight() != k) {
    throw WeightMismatch("eval_expr_on_union: expression weight " + std::to_string(expr.weight()) +
                         " does not match point count " + std::to_string(k));
  }
  Rational total(0);
  for (const ModelSpace& space : model_components(m, k, degrees)) {
    const auto chern = taut_classes_on_component(space, k);
    const auto segre = chern_to_segre(chern);
    const auto ch = chern_to_ch(chern, Rational(k));
    for (const auto& [mono, coeff] : expr.terms()) {
      CohClass value = CohClass::one();
      for (const auto& [gen, exp] : mono.factors()) {
        const GradedClassVector<CohClass>* vec = nullptr;
        switch (gen.kind) {
          case ClassKind::chern: vec = &chern; break;
          case ClassKind::segre: vec = &segre; break;
          case ClassKind::ch: vec = &ch; break;
        }
        value = value * vec->at(gen.degree).pow(exp);
        if (value.is_zero()) break;
      }
      total += coeff * integrate(value, space);
    }
  }
  return total;
}

}  // namespace tautint
