#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "dte/error.hpp"
#include "dte/rational.hpp"

namespace dte {

// Formal power series truncated to `order` coefficients. coeffs()[i] is the
// ordinary coefficient of t^i; the n! scaling only happens in
// nth_taylor_coefficient. F is Rational or CyclotomicNumber.
template <typename F>
class TruncatedSeries {
public:
  // All coefficients zero. `like` supplies the coefficient field.
  TruncatedSeries(const F& like, std::size_t order) : coeffs_(order, zero_like(like)) {
    if (order == 0) throw MathError(ErrorKind::InvalidArgument, "series order must be >= 1");
  }
  explicit TruncatedSeries(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw MathError(ErrorKind::InvalidArgument, "series order must be >= 1");
  }

  static TruncatedSeries constant(const F& c, std::size_t order) {
    TruncatedSeries s(c, order);
    s.coeffs_[0] = c;
    return s;
  }

  std::size_t order() const { return coeffs_.size(); }
  const std::vector<F>& coeffs() const { return coeffs_; }
  const F& operator[](std::size_t i) const { return coeffs_[i]; }
  F& operator[](std::size_t i) { return coeffs_[i]; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
  std::vector<F> coeffs_;
};

template <typename F>
TruncatedSeries<F> series_add(const TruncatedSeries<F>& a, const TruncatedSeries<F>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<F> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.push_back(a[i] + b[i]);
  return TruncatedSeries<F>(std::move(c));
}

template <typename F>
TruncatedSeries<F> series_sub(const TruncatedSeries<F>& a, const TruncatedSeries<F>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<F> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.push_back(a[i] - b[i]);
  return TruncatedSeries<F>(std::move(c));
}

template <typename F, typename S>
TruncatedSeries<F> series_scale(const TruncatedSeries<F>& a, const S& scalar) {
  std::vector<F> c;
  c.reserve(a.order());
  for (const auto& x : a.coeffs()) c.push_back(x * scalar);
  return TruncatedSeries<F>(std::move(c));
}

template <typename F>
TruncatedSeries<F> series_mul(const TruncatedSeries<F>& a, const TruncatedSeries<F>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries<F> c(a[0], n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// b_n = -a_0^{-1} sum_{j=1..n} a_j b_{n-j}.
template <typename F>
TruncatedSeries<F> series_inv(const TruncatedSeries<F>& a) {
  if (is_zero(a[0])) throw MathError(ErrorKind::NonUnitConstantTerm, "series constant term is zero");
  const F a0_inv = inverse(a[0]);
  TruncatedSeries<F> b(a[0], a.order());
  b[0] = a0_inv;
  for (std::size_t n = 1; n < a.order(); ++n) {
    F acc = zero_like(a[0]);
    for (std::size_t j = 1; j <= n; ++j)
      if (!is_zero(a[j])) acc += a[j] * b[n - j];
    b[n] = -(a0_inv * acc);
  }
  return b;
}

// exp(c t) = sum c^n / n! t^n.
template <typename F>
TruncatedSeries<F> exp_linear(const F& c, std::size_t order) {
  TruncatedSeries<F> s(c, order);
  F term = one_like(c);
  s[0] = term;
  for (std::size_t n = 1; n < order; ++n) {
    term = term * c * Rational(Integer(1), Integer(static_cast<unsigned long>(n)));
    s[n] = term;
  }
  return s;
}

// Coefficient of t^n / n!, i.e. n! * coeffs[n].
template <typename F>
F nth_taylor_coefficient(const TruncatedSeries<F>& a, std::size_t n) {
  if (n >= a.order())
    throw MathError(ErrorKind::OrderTooLow,
                    "index " + std::to_string(n) + " needs order > " + std::to_string(n) + ", have " +
                        std::to_string(a.order()));
  return a[n] * Rational(factorial(n));
}

} // namespace dte
