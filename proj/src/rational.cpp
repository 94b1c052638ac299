#include "qhecke/rational.hpp"

#include <stdexcept>

namespace qhecke {

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  mpz_class num, den = 1;
  try {
    num = mpz_class(s.substr(0, slash), 10);
    if (slash != std::string::npos) den = mpz_class(s.substr(slash + 1), 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
  if (den == 0) throw std::invalid_argument("zero denominator in rational '" + s + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational pow(const Rational& value, std::int64_t exponent) {
  if (exponent == 0) return Rational(1);
  if (value == 1) return value;
  if (value == -1) return (exponent % 2 == 0) ? Rational(1) : Rational(-1);
  if (exponent < 0) {
    if (value == 0) throw std::domain_error("zero raised to a negative power");
    Rational inv = 1 / value;
    return pow(inv, -exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

}  // namespace qhecke
