#include "dte/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "dte/error.hpp"

namespace dte {

unsigned long gcd_ul(unsigned long a, unsigned long b) { return std::gcd(a, b); }

unsigned long lcm_ul(unsigned long a, unsigned long b) { return std::lcm(a, b); }

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

int moebius(unsigned long n) {
  int mu = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

Polynomial cyclotomic_polynomial(unsigned long order) {
  if (order == 0) throw MathError(ErrorKind::InvalidArgument, "cyclotomic order must be >= 1");
  Polynomial numerator = Polynomial::constant(1);
  Polynomial denominator = Polynomial::constant(1);
  for (unsigned long e = 1; e <= order; ++e) {
    if (order % e != 0) continue;
    int mu = moebius(order / e);
    if (mu == 1) numerator = numerator * Polynomial::x_pow_minus_one(e);
    else if (mu == -1) denominator = denominator * Polynomial::x_pow_minus_one(e);
  }
  auto [quot, rem] = divmod(numerator, denominator);
  if (!rem.is_zero()) throw MathError(ErrorKind::InternalInconsistency, "Moebius product left a remainder");
  return quot;
}

std::shared_ptr<const CyclotomicField> CyclotomicField::make(unsigned long order) {
  return std::make_shared<const CyclotomicField>(order);
}

CyclotomicField::CyclotomicField(unsigned long order)
    : order_(order), degree_(euler_phi(order)), modulus_(cyclotomic_polynomial(order)) {}

std::vector<Rational> CyclotomicField::reduce(std::vector<Rational> c) const {
  const auto& m = modulus_.coeffs();
  for (std::size_t k = c.size(); k-- > degree_;) {
    if (c[k].is_zero()) continue;
    const Rational top = c[k];
    const std::size_t shift = k - degree_;
    for (std::size_t j = 0; j < degree_; ++j)
      if (!m[j].is_zero()) c[shift + j] -= top * m[j];
    c[k] = 0;
  }
  c.resize(degree_);
  return c;
}

CyclotomicNumber::CyclotomicNumber(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)) {
  coeffs_ = field_->reduce(std::move(coeffs));
}

CyclotomicNumber CyclotomicNumber::zero(FieldPtr field) { return CyclotomicNumber(std::move(field), {}); }

CyclotomicNumber CyclotomicNumber::one(FieldPtr field) { return from_rational(std::move(field), Rational(1)); }

CyclotomicNumber CyclotomicNumber::from_rational(FieldPtr field, const Rational& r) {
  return CyclotomicNumber(std::move(field), std::vector<Rational>{r});
}

CyclotomicNumber CyclotomicNumber::zeta_power(FieldPtr field, long exponent) {
  const long n = static_cast<long>(field->order());
  const auto e = static_cast<std::size_t>(((exponent % n) + n) % n);
  std::vector<Rational> c(e + 1);
  c[e] = 1;
  return CyclotomicNumber(std::move(field), std::move(c));
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

CyclotomicNumber CyclotomicNumber::galois(long k) const {
  const long n = static_cast<long>(order());
  const long kk = ((k % n) + n) % n;
  if (gcd_ul(static_cast<unsigned long>(kk), static_cast<unsigned long>(n)) != 1)
    throw MathError(ErrorKind::NotAPrimitiveEmbedding, "Galois exponent not coprime to the order");
  std::vector<Rational> c(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[(i * static_cast<std::size_t>(kk)) % n] += coeffs_[i];
  return CyclotomicNumber(field_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::lift(const FieldPtr& ambient) const {
  if (ambient->order() % order() != 0)
    throw MathError(ErrorKind::FieldMismatch, "target field order is not a multiple of the source order");
  const std::size_t step = ambient->order() / order();
  std::vector<Rational> c(coeffs_.empty() ? 0 : (coeffs_.size() - 1) * step + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * step] = coeffs_[i];
  return CyclotomicNumber(ambient, std::move(c));
}

void CyclotomicNumber::require_same_field(const CyclotomicNumber& o) const {
  if (order() != o.order())
    throw MathError(ErrorKind::FieldMismatch,
                    "Q(zeta_" + std::to_string(order()) + ") vs Q(zeta_" + std::to_string(o.order()) + ")");
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  require_same_field(o);
  const std::size_t n = coeffs_.size();
  std::vector<Rational> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!o.coeffs_[j].is_zero()) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = field_->reduce(std::move(prod));
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a * cyc_inv(b); }

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return a.order() == b.order() && a.coeffs_ == b.coeffs_;
}

CyclotomicNumber cyc_add(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + b; }

CyclotomicNumber cyc_mul(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a * b; }

CyclotomicNumber cyc_inv(const CyclotomicNumber& a) {
  if (a.is_zero()) throw MathError(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta_" + std::to_string(a.order()) + ")");
  // Invariant: s_i * a == r_i (mod Phi).
  Polynomial r0 = a.field()->minimal_polynomial(), r1(a.coeffs());
  Polynomial s0, s1 = Polynomial::constant(1);
  while (r1.degree() > 0) {
    auto [q, r] = divmod(r0, r1);
    Polynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.is_zero()) throw MathError(ErrorKind::InternalInconsistency, "cyclotomic polynomial not irreducible");
  Polynomial inv = s1 * inverse(r1.coeffs()[0]);
  return CyclotomicNumber(a.field(), inv.coeffs());
}

CyclotomicNumber pow(const CyclotomicNumber& a, long exponent) {
  if (exponent < 0) return pow(cyc_inv(a), -exponent);
  CyclotomicNumber result = CyclotomicNumber::one(a.field()), base = a;
  for (unsigned long e = static_cast<unsigned long>(exponent); e; e >>= 1) {
    if (e & 1) result *= base;
    if (e > 1) base *= base;
  }
  return result;
}

ComplexValue embed_complex(const CyclotomicNumber& a, long k) {
  const long n = static_cast<long>(a.order());
  const long kk = ((k % n) + n) % n;
  if (gcd_ul(static_cast<unsigned long>(kk), static_cast<unsigned long>(n)) != 1)
    throw MathError(ErrorKind::NotAPrimitiveEmbedding,
                    "k=" + std::to_string(k) + " is not coprime to N=" + std::to_string(n));
  ComplexValue acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    const long e = (static_cast<long>(i) * kk) % n;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(n);
    acc += a.coeffs()[i].to_double() * std::polar(1.0, angle);
  }
  return acc;
}

} // namespace dte
