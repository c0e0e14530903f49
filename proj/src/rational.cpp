#include "dte/rational.hpp"

#include <cctype>

#include "dte/error.hpp"

namespace dte {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw MathError(ErrorKind::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

} // namespace

Rational Rational::parse(std::string_view text) {
  Integer num, den = 1;
  auto slash = text.find('/');
  bool ok = false;
  if (slash == std::string_view::npos) {
    ok = parse_integer(text, num);
  } else {
    auto d = text.substr(slash + 1);
    ok = parse_integer(text.substr(0, slash), num) && !d.empty() && d[0] != '-' && d[0] != '+' &&
         parse_integer(d, den);
  }
  if (!ok) throw MathError(ErrorKind::InvalidArgument, "cannot parse rational '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::to_string() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw MathError(ErrorKind::DivisionByZero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational inverse(const Rational& a) { return Rational(1) / a; }

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return inverse(pow(base, -exponent));
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

} // namespace dte
