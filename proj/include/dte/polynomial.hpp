#pragma once

#include <utility>
#include <vector>

#include "dte/rational.hpp"

namespace dte {

// Dense univariate polynomial over Q; coeffs[i] multiplies x^i. Trailing
// zeros are always trimmed, so the zero polynomial has no coefficients.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }
  static Polynomial monomial(const Rational& c, std::size_t power);
  // x^n - 1
  static Polynomial x_pow_minus_one(std::size_t n);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }
  bool has_integer_coeffs() const;

  template <typename F>
  F evaluate(const F& x) const {
    F acc = zero_like(x);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + embed_rational(x, *it);
    return acc;
  }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Rational& c);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Euclidean division; returns (quotient, remainder). DivisionByZero on b = 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

Polynomial power(const Polynomial& base, unsigned exponent);

} // namespace dte
