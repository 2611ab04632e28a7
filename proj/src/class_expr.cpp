#include "tautint/class_expr.hpp"

#include <algorithm>
#include <sstream>

namespace tautint {

std::string_view kind_symbol(ClassKind k) {
  switch (k) {
    case ClassKind::chern: return "c";
    case ClassKind::segre: return "s";
    case ClassKind::ch: return "ch";
  }
  throw std::logic_error("kind_symbol: bad kind");
}

void ClassMonomial::multiply_by(Generator gen, int exponent) {
  if (gen.degree < 1) throw std::invalid_argument("ClassMonomial: generator degree must be >= 1");
  if (exponent == 0) return;
  if (exponent < 0) throw std::invalid_argument("ClassMonomial: negative exponent");
  auto it = std::lower_bound(factors_.begin(), factors_.end(), gen,
                             [](const auto& f, const Generator& g) { return f.first < g; });
  if (it != factors_.end() && it->first == gen) {
    it->second += exponent;
  } else {
    factors_.insert(it, {gen, exponent});
  }
}

int ClassMonomial::weight() const {
  int w = 0;
  for (const auto& [gen, exp] : factors_) w += gen.degree * exp;
  return w;
}

ClassMonomial ClassMonomial::operator*(const ClassMonomial& o) const {
  ClassMonomial r = *this;
  for (const auto& [gen, exp] : o.factors_) r.multiply_by(gen, exp);
  return r;
}

std::string ClassMonomial::str() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [gen, exp] : factors_) {
    if (!first) os << "*";
    first = false;
    os << kind_symbol(gen.kind) << gen.degree;
    if (exp > 1) os << "^" << exp;
  }
  return os.str();
}

ClassExpr ClassExpr::constant(const Rational& c) {
  ClassExpr e;
  if (!c.is_zero()) e.terms_[ClassMonomial()] = c;
  return e;
}

ClassExpr ClassExpr::generator(ClassKind kind, int degree, int exponent) {
  ClassMonomial m;
  m.multiply_by({kind, degree}, exponent);
  ClassExpr e;
  e.terms_[m] = Rational(1);
  return e;
}

bool ClassExpr::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational ClassExpr::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("ClassExpr::constant_value: not a constant");
  return terms_.begin()->second;
}

int ClassExpr::weight() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.weight();
}

void ClassExpr::add_term(const ClassMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  if (!terms_.empty() && m.weight() != weight()) {
    throw WeightMismatch("ClassExpr: mixing monomials of weights " + std::to_string(weight()) + " and " +
                         std::to_string(m.weight()));
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ClassExpr ClassExpr::operator+(const ClassExpr& o) const {
  ClassExpr r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

ClassExpr ClassExpr::operator-(const ClassExpr& o) const {
  ClassExpr r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

ClassExpr ClassExpr::operator*(const ClassExpr& o) const {
  ClassExpr r;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      r.add_term(ma * mb, ca * cb);
    }
  }
  return r;
}

ClassExpr ClassExpr::scaled(const Rational& c) const {
  ClassExpr r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
  return r;
}

ClassExpr ClassExpr::pow(int n) const {
  if (n < 0) throw std::invalid_argument("ClassExpr::pow: negative exponent");
  ClassExpr r = constant(Rational(1));
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

ClassExpr ClassExpr::dualized() const {
  ClassExpr r;
  for (const auto& [m, c] : terms_) {
    r.terms_[m] = (m.weight() % 2 == 0) ? c : -c;
  }
  return r;
}

Rational ClassExpr::eval_single_root() const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational factor = c;
    for (const auto& [gen, exp] : m.factors()) {
      Rational base(0);
      switch (gen.kind) {
        case ClassKind::chern:
          base = (gen.degree == 1) ? Rational(1) : Rational(0);
          break;
        case ClassKind::segre:
          base = (gen.degree % 2 == 0) ? Rational(1) : Rational(-1);
          break;
        case ClassKind::ch:
          base = Rational(1) / factorial(gen.degree);
          break;
      }
      for (int i = 0; i < exp; ++i) factor *= base;
      if (factor.is_zero()) break;
    }
    total += factor;
  }
  return total;
}

std::string ClassExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c.sign() < 0;
    if (!first) {
      os << (neg ? " - " : " + ");
    } else if (neg) {
      os << "-";
    }
    first = false;
    const Rational a = neg ? -c : c;
    if (m.is_unit()) {
      os << a.str();
    } else if (a == Rational(1)) {
      os << m.str();
    } else {
      os << a.str() << "*" << m.str();
    }
  }
  return os.str();
}

ClassExpr ClassExpr::parse_canonical(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("parse_canonical: empty input");
  if (text == "0") return ClassExpr::zero();

  ClassExpr result;
  size_t pos = 0;
  Rational sign(1);
  if (text[0] == '-') {
    sign = Rational(-1);
    pos = 1;
  }
  while (pos <= text.size()) {
    size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view term = text.substr(pos, end - pos);
    if (term.empty()) throw std::invalid_argument("parse_canonical: empty term in '" + std::string(text) + "'");

    // Split an optional leading rational coefficient from the monomial.
    Rational coeff = sign;
    std::string_view mono = term;
    const size_t star = term.find('*');
    const bool starts_numeric = std::isdigit(static_cast<unsigned char>(term[0])) != 0;
    if (starts_numeric) {
      const size_t coeff_end = star == std::string_view::npos ? term.size() : star;
      coeff *= Rational::from_string(term.substr(0, coeff_end));
      mono = star == std::string_view::npos ? std::string_view{} : term.substr(star + 1);
    }
    if (mono.empty()) {
      result = result + ClassExpr::constant(coeff);
    } else {
      result = result + ClassExpr::parse_monomial(mono).scaled(coeff);
    }

    if (end == text.size()) break;
    // Expect " + " or " - " between terms; `end` sits on the first space.
    if (end + 3 > text.size() || (text[end + 1] != '+' && text[end + 1] != '-') || text[end + 2] != ' ') {
      throw std::invalid_argument("parse_canonical: bad separator in '" + std::string(text) + "'");
    }
    sign = Rational(text[end + 1] == '-' ? -1 : 1);
    pos = end + 3;
  }
  return result;
}

ClassExpr ClassExpr::parse_monomial(std::string_view text) {
  ClassMonomial mono;
  size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("parse_monomial: " + why + " in '" + std::string(text) + "'");
  };
  if (text.empty()) fail("empty input");
  while (pos < text.size()) {
    ClassKind kind;
    if (text.compare(pos, 2, "ch") == 0) {
      kind = ClassKind::ch;
      pos += 2;
    } else if (text[pos] == 'c') {
      kind = ClassKind::chern;
      pos += 1;
    } else if (text[pos] == 's') {
      kind = ClassKind::segre;
      pos += 1;
    } else {
      fail("expected generator c<i>, s<i> or ch<i>");
      return {};
    }
    size_t len = 0;
    while (pos + len < text.size() && std::isdigit(static_cast<unsigned char>(text[pos + len]))) ++len;
    if (len == 0) fail("missing generator degree");
    const int degree = std::stoi(std::string(text.substr(pos, len)));
    pos += len;
    if (degree < 1) fail("generator degree must be >= 1");
    int exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      size_t elen = 0;
      while (pos + elen < text.size() && std::isdigit(static_cast<unsigned char>(text[pos + elen]))) ++elen;
      if (elen == 0) fail("missing exponent after '^'");
      exponent = std::stoi(std::string(text.substr(pos, elen)));
      pos += elen;
      if (exponent < 1) fail("exponent must be >= 1");
    }
    mono.multiply_by({kind, degree}, exponent);
    if (pos < text.size()) {
      if (text[pos] != '*') fail("expected '*' between factors");
      ++pos;
      if (pos == text.size()) fail("trailing '*'");
    }
  }
  ClassExpr e;
  e.terms_[mono] = Rational(1);
  return e;
}

}  // namespace tautint
