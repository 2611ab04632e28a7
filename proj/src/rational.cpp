#include "tautint/rational.hpp"

#include <ostream>

namespace tautint {

Rational Rational::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("Rational::from_string: empty input");
  mpq_class v;
  if (v.set_str(std::string(s), 10) != 0) {
    throw std::invalid_argument("Rational::from_string: bad input '" + std::string(s) + "'");
  }
  if (v.get_den() == 0) throw std::domain_error("Rational::from_string: zero denominator");
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const { return v_.get_str(); }

long Rational::to_long() const {
  if (!is_integer()) throw std::domain_error("Rational::to_long: not an integer: " + str());
  if (!v_.get_num().fits_slong_p()) throw std::overflow_error("Rational::to_long: overflow");
  return v_.get_num().get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

Rational factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational::from_string(f.get_str());
}

}  // namespace tautint
