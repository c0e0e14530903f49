#pragma once

#include <vector>

#include "dte/error.hpp"
#include "dte/polynomial.hpp"

namespace dte {

// A_n(t) from sum_{k<=n} C(n,k) A_k(t) (t-1)^{n-k} = t A_n(t), n >= 1, A_0 = 1.
Polynomial eulerian_recurrence(unsigned n);
// A_0 .. A_{n_max}.
std::vector<Polynomial> eulerian_table(unsigned n_max);

// Sum of t^des(sigma) over all permutations of n letters; 1 <= n <= 9.
Polynomial descent_oracle(unsigned n);

enum class GfConvention {
  RecurrenceConsistent,  // (1-x) / (e^{t(x-1)} - x), yields A_n
  AsPrinted,             // (1-x) / (e^{t(1-x)} - x), yields (-1)^n A_n
};

// Taylor coefficients of the exponential generating function for n = 0..n_max,
// obtained by expanding at n_max + 1 rational values of x and interpolating.
std::vector<Polynomial> eulerian_gf_coefficients(unsigned n_max,
                                                 GfConvention convention = GfConvention::RecurrenceConsistent);

// sum_{k>=0} k^j w^k as a rational function of w: 1/(1-w) for j = 0,
// w A_j(w) / (1-w)^{j+1} otherwise. PoleAtOne at w = 1.
template <typename F>
F power_sum_rational(unsigned j, const F& w, const Polynomial& eulerian_j) {
  const F one_minus_w = one_like(w) - w;
  if (is_zero(one_minus_w)) throw MathError(ErrorKind::PoleAtOne, "power sum at w = 1");
  F denom = one_minus_w;
  for (unsigned i = 0; i < j; ++i) denom = denom * one_minus_w;
  if (j == 0) return inverse(denom);
  return w * eulerian_j.evaluate(w) * inverse(denom);
}

template <typename F>
F power_sum_rational(unsigned j, const F& w) {
  return power_sum_rational(j, w, eulerian_recurrence(j));
}

} // namespace dte
