#include "dte/qarith.hpp"

#include "dte/error.hpp"

namespace dte {

Rational q_bracket(unsigned long x, const Rational& q) {
  if (q.is_one()) return Rational(static_cast<long>(x));
  return (Rational(1) - pow(q, static_cast<long>(x))) / (Rational(1) - q);
}

Rational q_bracket_neg(unsigned long x, const Rational& q) {
  if (q == Rational(-1)) throw MathError(ErrorKind::PoleAtMinusOne, "[x]_{-q} at q = -1");
  return (Rational(1) - pow(-q, static_cast<long>(x))) / (Rational(1) + q);
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

long integer_valuation(const Integer& a, unsigned long p) {
  if (a == 0) throw MathError(ErrorKind::InvalidArgument, "integer valuation of zero");
  Integer v = a;
  return static_cast<long>(mpz_remove(v.get_mpz_t(), a.get_mpz_t(), Integer(p).get_mpz_t()));
}

Valuation padic_valuation(const Rational& a, unsigned long p) {
  if (!is_prime(p)) throw MathError(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  if (a.is_zero()) return Valuation::infinity();
  return Valuation(integer_valuation(a.numerator(), p) - integer_valuation(a.denominator(), p));
}

} // namespace dte
