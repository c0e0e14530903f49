#pragma once

#include <string>
#include <vector>

#include "dte/characters.hpp"
#include "dte/cyclotomic.hpp"
#include "dte/fermionic.hpp"
#include "dte/series.hpp"

namespace dte {

// Parameters of A_{n,chi,zeta}(-q). zeta = zeta_N^k with N odd and
// gcd(k, N) = 1; every value lives in Q(zeta_L), L = lcm(N, order(chi)).
class TwistedConfig {
public:
  TwistedConfig(DirichletCharacter chi, unsigned long zeta_order, long zeta_k, Rational q);

  const DirichletCharacter& chi() const { return chi_; }
  unsigned long modulus() const { return chi_.modulus(); }
  unsigned long zeta_order() const { return zeta_order_; }
  long zeta_k() const { return zeta_k_; }
  const Rational& q() const { return q_; }
  const FieldPtr& field() const { return field_; }
  // zeta as an element of the ambient field.
  const CyclotomicNumber& zeta() const { return zeta_; }
  // zeta in its own field Q(zeta_N).
  CyclotomicNumber zeta_own() const;

  TwistedConfig with_q(const Rational& q) const;
  TwistedConfig with_chi(DirichletCharacter chi) const;
  // Complex conjugate parameters: conj(chi), zeta^{-1}.
  TwistedConfig conjugate() const;

private:
  DirichletCharacter chi_;
  unsigned long zeta_order_;
  long zeta_k_;
  Rational q_;
  FieldPtr field_;
  CyclotomicNumber zeta_;
};

enum class Kernel {
  Printed,             // q^{d-l+1}, the canonical generating function
  FunctionalEquation,  // q^{d-1-l}, iterated one-step functional equation
};

// [2]_q sum_{l<d} (-1)^l q^{kernel} zeta^l chi(l) e^{-l(1+q)t} / (zeta^d e^{-d(1+q)t} + q^d)
TruncatedSeries<CyclotomicNumber> twisted_gf(const TwistedConfig& cfg, std::size_t order,
                                             Kernel kernel = Kernel::Printed);

enum class SeriesStart { FromOne, FromZero };

// sum_{m >= start} (-1)^m zeta^m chi(m) m^n q^{-m} in closed form, grouping m by
// residue mod P = lcm(2, d, N) and summing k^j w^k with w = q^{-P}.
CyclotomicNumber series_closed_form(const TwistedConfig& cfg, unsigned n, SeriesStart start = SeriesStart::FromOne);

// (-1)^n q (1+q)^{n+1} series_closed_form. PoleAtOne when |q| = 1.
CyclotomicNumber twisted_A_series_path(const TwistedConfig& cfg, unsigned n,
                                       SeriesStart start = SeriesStart::FromOne);

struct TwistedValue {
  unsigned n;
  CyclotomicNumber value;
  std::vector<std::string> paths;
};

// Coefficient of t^n/n! of twisted_gf, cross-checked against the series path
// (counting the m = 0 term) whenever |q| != 1.
TwistedValue twisted_A(const TwistedConfig& cfg, unsigned n);
std::vector<TwistedValue> twisted_A_values(const TwistedConfig& cfg, unsigned n_max);

// E_{n,zeta}(x) = I_{-1}(zeta^y (x+y)^n).
template <typename F>
F twisted_euler(unsigned n, const F& zeta, const F& x) {
  return poly_twist_integral(n, x, zeta, Rational(1));
}

struct EulerGfReport {
  TruncatedSeries<CyclotomicNumber> folded;      // d-fold generating function
  TruncatedSeries<CyclotomicNumber> telescoped;  // 2 / (zeta e^t + 1)
  bool series_equal;
  bool taylor_matches_integral;
  bool passed() const { return series_equal && taylor_matches_integral; }
};

EulerGfReport euler_gf_consistency(unsigned long d_fold, const CyclotomicNumber& zeta, std::size_t order);

// A / ((-1)^n (1+q)^n I_{-q^{-1}}(zeta^x chi(x) x^n)); ResidualUndefined if the integral is 0.
CyclotomicNumber integral_residual(const TwistedConfig& cfg, unsigned n);
// (-1)^n A / (1+q)^n divided by the residue-class decomposition of the integral.
CyclotomicNumber decomposition_residual(const TwistedConfig& cfg, unsigned n);

struct EqualityReport {
  CyclotomicNumber lhs;
  CyclotomicNumber rhs;
  bool equal;
};

// A_{n,chi,zeta}(-1) against (-2d)^n sum_a (-1)^a chi(a) zeta^a E_{n,zeta^d}(a/d).
EqualityReport unit_q_check(const DirichletCharacter& chi, unsigned long zeta_order, long zeta_k, unsigned n);

struct UnnormalizedReport {
  TruncationReport observed;  // U_N against 2 * sigma_closed
  Rational sigma_closed;      // (-1)^n A / (q (1+q)^{n+1})
  Rational claimed_limit;     // 2 q^2 sigma_closed
  Rational observed_limit;    // 2 sigma_closed
  Rational ratio;             // claimed / observed
};

// Unnormalized alternating sums over x < p^N against the closed form, zeta = 1.
UnnormalizedReport unnormalized_convergence(unsigned n, const std::optional<DirichletCharacter>& chi, const Rational& q,
                                        unsigned long p, unsigned max_level);

} // namespace dte
