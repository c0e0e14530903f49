#pragma once

#include <optional>
#include <vector>

#include "dte/characters.hpp"
#include "dte/cyclotomic.hpp"
#include "dte/error.hpp"
#include "dte/qarith.hpp"
#include "dte/rational.hpp"

namespace dte {

// Moments K_0..K_n of the fermionic integral I_{-r}(omega^x (x+u)^k).
//
// The functional equation r I(f(x+1)) + I(f) = (1+r) f(0) applied to
// f = omega^x (x+u)^k gives the lower-triangular system
//   (1 + r omega) K_k = (1+r) u^k - r omega sum_{j<k} C(k,j) K_j,
// solved upward with u^0 = 1.
template <typename F>
std::vector<F> poly_twist_moments(unsigned n, const F& u, const F& omega, const Rational& r) {
  const F one = one_like(omega);
  const F lead = one + omega * r;
  if (is_zero(lead)) throw MathError(ErrorKind::SingularFunctionalEquation, "1 + r*omega = 0");
  const F lead_inv = inverse(lead);
  const F r_omega = omega * r;
  std::vector<F> k;
  k.reserve(n + 1);
  F u_pow = one;
  for (unsigned m = 0; m <= n; ++m) {
    F acc = zero_like(omega);
    for (unsigned j = 0; j < m; ++j) acc += k[j] * Rational(binomial(m, j));
    k.push_back((u_pow * (Rational(1) + r) - r_omega * acc) * lead_inv);
    u_pow = u_pow * u;
  }
  return k;
}

template <typename F>
F poly_twist_integral(unsigned n, const F& u, const F& omega, const Rational& r) {
  return poly_twist_moments(n, u, omega, r).back();
}

// Smallest field Q(zeta_L) holding both zeta and the character values.
FieldPtr ambient_field(const DirichletCharacter& chi, const CyclotomicNumber& zeta);

// Moments I_0..I_n of I_{-q^{-1}}(zeta^x chi(x) x^k) from the d-step equation
//   I(f(x+d)) + q^d I(f) = [2]_q sum_{l<d} (-1)^l q^{d-1-l} f(l),
// obtained by iterating the one-step equation (d odd). Values live in the
// ambient field of (chi, zeta).
std::vector<CyclotomicNumber> char_twist_moments(unsigned n, const DirichletCharacter& chi,
                                                 const CyclotomicNumber& zeta, const Rational& q);
CyclotomicNumber char_twist_integral(unsigned n, const DirichletCharacter& chi, const CyclotomicNumber& zeta,
                                     const Rational& q);

struct DistributionReport {
  CyclotomicNumber lhs;  // char_twist_integral
  CyclotomicNumber rhs;  // residue-class decomposition
  bool equal;
};

// d^n / [d]_{-q^{-1}} * sum_a (-1)^a chi(a) zeta^a q^{-a} I_{-q^{-d}}(zeta^{dx} (a/d + x)^n).
CyclotomicNumber distribution_rhs(unsigned n, const DirichletCharacter& chi, const CyclotomicNumber& zeta,
                                  const Rational& q);
DistributionReport distribution_identity_check(unsigned n, const DirichletCharacter& chi,
                                               const CyclotomicNumber& zeta, const Rational& q);

struct TruncationLevel {
  unsigned level;      // N, summing over 0 <= x < p^N
  Rational partial;    // S_N (or U_N for the unnormalized variant)
  Valuation valuation; // v_p(partial - target)
};

struct TruncationReport {
  unsigned long p;
  Rational target;
  std::vector<TruncationLevel> levels;

  // v_p(S_N - target) >= N at every level and nondecreasing in N.
  bool converges_at_rate() const;
};

// Checks v_p(q - 1) >= 1, v_p(q) = 0, p an odd prime and that chi (if any) is
// rational-valued with modulus 1 or a power of p, so chi is locally constant
// on Z_p. NotPadicallyConvergent otherwise.
void require_padic_regime(const Rational& q, unsigned long p, const DirichletCharacter* chi);

// S_N = sum_{x<p^N} (-q^{-1})^x f(x) / [p^N]_{-q^{-1}} with f(x) = chi(x) x^n
// (chi omitted means f(x) = x^n), against the exact integral.
TruncationReport padic_truncation(unsigned n, const std::optional<DirichletCharacter>& chi, const Rational& q,
                                  unsigned long p, unsigned max_level);

// U_N = sum_{x<p^N} (-q^{-1})^x chi(x) x^n without normalization, N = 0..max_level.
std::vector<Rational> unnormalized_partial_sums(unsigned n, const std::optional<DirichletCharacter>& chi,
                                                const Rational& q, unsigned long p, unsigned max_level);

struct KernelIterationReport {
  Rational iterated_constant;  // beta in I(f_d) = alpha I(f) + beta
  Rational iterated_slope;     // alpha, expected -q^d
  Rational derived_kernel_sum; // [2]_q sum (-1)^l q^{d-1-l} f(l)
  Rational printed_kernel_sum; // [2]_q sum (-1)^l q^{d-l+1} f(l)
  bool derived_matches() const { return iterated_constant == derived_kernel_sum; }
};

// Iterates I(f_{k+1}) = (1+q) f(k) - q I(f_k) (the q -> q^{-1} one-step
// equation) d times symbolically in I(f) and compares with both d-step kernels.
KernelIterationReport kernel_iteration_check(unsigned long d, const Rational& q, const std::vector<Rational>& f_values);

} // namespace dte
