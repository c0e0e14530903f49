#pragma once

#include <compare>
#include <string>

#include "dte/rational.hpp"

namespace dte {

// [x]_q = (1 - q^x) / (1 - q); returns x at q = 1.
Rational q_bracket(unsigned long x, const Rational& q);
// [x]_{-q} = (1 - (-q)^x) / (1 + q). PoleAtMinusOne at q = -1.
Rational q_bracket_neg(unsigned long x, const Rational& q);

// p-adic valuation; the valuation of zero is +infinity.
class Valuation {
public:
  static Valuation infinity() { return Valuation(); }
  explicit Valuation(long v) : finite_(true), value_(v) {}

  bool is_infinite() const { return !finite_; }
  long value() const { return value_; }
  std::string to_string() const { return finite_ ? std::to_string(value_) : std::string("inf"); }

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (!a.finite_ || !b.finite_) return b.finite_ <=> a.finite_;
    return a.value_ <=> b.value_;
  }
  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (!a.finite_ || !b.finite_) return infinity();
    return Valuation(a.value_ + b.value_);
  }

private:
  Valuation() = default;
  bool finite_ = false;
  long value_ = 0;
};

bool is_prime(unsigned long n);
long integer_valuation(const Integer& a, unsigned long p);
Valuation padic_valuation(const Rational& a, unsigned long p);

} // namespace dte
