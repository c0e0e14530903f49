#pragma once

#include "dte/cyclotomic.hpp"
#include "dte/twisted.hpp"

namespace dte {

struct LParams {
  ComplexValue s;
  TwistedConfig cfg;  // q must be > 1
  long embedding = 1; // exp(2 pi i embedding / L) for the ambient field
  double tol = 1e-12;
  long max_terms = 1'000'000;
};

struct LEvaluation {
  ComplexValue value;
  long terms_used;
  double tail_bound;  // bound on |returned value - exact value| from truncation
};

// sum_{m>=1} (-1)^m chi(m) zeta^m q^{-m} m^{-s}, truncated once the geometric
// majorant q^{-m/2} / (1 - q^{-1/2}) of the tail, times `scale`, drops below tol.
LEvaluation dirichlet_series(const LParams& params, double scale = 1.0);

// q (1+q)^{1-s}, principal branch.
ComplexValue l_prefactor(const Rational& q, ComplexValue s);

// q / (1+q)^{s-1} * dirichlet_series. OutsideConvergence for q <= 1,
// NotConverged when max_terms runs out first.
LEvaluation l_eval(const LParams& params);

struct InterpolationReport {
  ComplexValue l_value;
  ComplexValue expected;  // (-1)^n A_{n,chi,zeta}(-q) embedded
  double gap;
  double allowed;         // tol (1 + |A|)
  bool passed;
};

// L(-n) against (-1)^n A. Requires d >= 3, or d = 1 with n >= 1.
InterpolationReport interpolation_check(const TwistedConfig& cfg, unsigned n, double tol, long embedding = 1);

struct SeriesCheckReport {
  ComplexValue numeric;
  ComplexValue closed_form;
  double gap;
  bool passed;
};

// Numeric partial sums of sum_{m>=1} (-1)^m zeta^m chi(m) m^n / q^m against
// the exact closed form.
SeriesCheckReport series_check(const TwistedConfig& cfg, unsigned n, double tol, long embedding = 1);

} // namespace dte
