#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "dte/polynomial.hpp"
#include "dte/rational.hpp"

namespace dte {

using ComplexValue = std::complex<double>;

unsigned long euler_phi(unsigned long n);
int moebius(unsigned long n);
unsigned long gcd_ul(unsigned long a, unsigned long b);
unsigned long lcm_ul(unsigned long a, unsigned long b);

// Phi_N via the Moebius product over divisors of N, using exact division.
Polynomial cyclotomic_polynomial(unsigned long order);

// Q(zeta_N) realized as Q[x]/(Phi_N).
class CyclotomicField {
public:
  static std::shared_ptr<const CyclotomicField> make(unsigned long order);

  unsigned long order() const { return order_; }
  std::size_t degree() const { return degree_; }
  const Polynomial& minimal_polynomial() const { return modulus_; }

  // Reduces a coefficient vector of any length modulo Phi_N, returning
  // exactly degree() coefficients.
  std::vector<Rational> reduce(std::vector<Rational> coeffs) const;

  explicit CyclotomicField(unsigned long order);

private:
  unsigned long order_;
  std::size_t degree_;
  Polynomial modulus_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

class CyclotomicNumber {
public:
  CyclotomicNumber(FieldPtr field, std::vector<Rational> coeffs);

  static CyclotomicNumber zero(FieldPtr field);
  static CyclotomicNumber one(FieldPtr field);
  static CyclotomicNumber from_rational(FieldPtr field, const Rational& r);
  // zeta_N^exponent; any integer exponent is accepted.
  static CyclotomicNumber zeta_power(FieldPtr field, long exponent);

  const FieldPtr& field() const { return field_; }
  unsigned long order() const { return field_->order(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  // Only valid when is_rational().
  Rational rational_part() const { return coeffs_.empty() ? Rational(0) : coeffs_[0]; }

  // Image under the automorphism zeta -> zeta^k, gcd(k, N) = 1.
  CyclotomicNumber galois(long k) const;
  // Image in Q(zeta_L) for N | L, via zeta_N -> zeta_L^(L/N).
  CyclotomicNumber lift(const FieldPtr& ambient) const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const Rational& c);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& c) { return a *= c; }
  friend CyclotomicNumber operator*(const Rational& c, CyclotomicNumber a) { return a *= c; }
  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

private:
  void require_same_field(const CyclotomicNumber& o) const;
  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

CyclotomicNumber cyc_add(const CyclotomicNumber& a, const CyclotomicNumber& b);
CyclotomicNumber cyc_mul(const CyclotomicNumber& a, const CyclotomicNumber& b);
// Extended Euclid against Phi_N. DivisionByZero on a = 0.
CyclotomicNumber cyc_inv(const CyclotomicNumber& a);
CyclotomicNumber pow(const CyclotomicNumber& a, long exponent);

// Evaluates the coefficient polynomial at exp(2 pi i k / N).
ComplexValue embed_complex(const CyclotomicNumber& a, long k);

inline CyclotomicNumber zero_like(const CyclotomicNumber& a) { return CyclotomicNumber::zero(a.field()); }
inline CyclotomicNumber one_like(const CyclotomicNumber& a) { return CyclotomicNumber::one(a.field()); }
inline bool is_zero(const CyclotomicNumber& a) { return a.is_zero(); }
inline CyclotomicNumber inverse(const CyclotomicNumber& a) { return cyc_inv(a); }
inline CyclotomicNumber embed_rational(const CyclotomicNumber& like, const Rational& r) {
  return CyclotomicNumber::from_rational(like.field(), r);
}

} // namespace dte
