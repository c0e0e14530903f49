#include "dte/lfunction.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace dte {

namespace {

// Smallest M with m^a <= q^{m/2} for every m >= M.
long majorant_start(double a, double log_q) {
  if (a <= 0.0) return 1;
  auto holds = [&](long m) { return a * std::log(static_cast<double>(m)) <= 0.5 * static_cast<double>(m) * log_q; };
  // Beyond 2a / log q the gap (m/2) log q - a log m is increasing.
  long m = std::max<long>(1, static_cast<long>(std::ceil(2.0 * a / log_q)));
  while (!holds(m)) ++m;
  long last_bad = 0;
  for (long k = 1; k < m; ++k)
    if (!holds(k)) last_bad = k;
  return last_bad + 1;
}

void require_convergent(const TwistedConfig& cfg) {
  if (cfg.q() <= Rational(1))
    throw MathError(ErrorKind::OutsideConvergence, "series needs q > 1, got " + cfg.q().to_string());
}

} // namespace

LEvaluation dirichlet_series(const LParams& params, double scale) {
  const auto& cfg = params.cfg;
  require_convergent(cfg);
  if (!(params.tol > 0.0)) throw MathError(ErrorKind::InvalidArgument, "tol must be positive");

  const unsigned long period = lcm_ul(2, lcm_ul(cfg.modulus(), cfg.zeta_order()));
  std::vector<ComplexValue> weights(period);
  for (unsigned long l = 0; l < period; ++l) {
    auto c = pow(cfg.zeta(), static_cast<long>(l)) * cfg.chi().value_in(cfg.field(), static_cast<long>(l));
    weights[l] = embed_complex(l % 2 ? -c : c, params.embedding);
  }

  const double log_q = std::log(cfg.q().to_double());
  const double ratio = std::exp(-0.5 * log_q);
  const long start = majorant_start(std::abs(params.s.real()), log_q);

  ComplexValue sum{0.0, 0.0};
  for (long m = 1; m <= params.max_terms; ++m) {
    const auto& w = weights[static_cast<unsigned long>(m) % period];
    if (w != ComplexValue{0.0, 0.0}) {
      const double log_m = std::log(static_cast<double>(m));
      sum += w * std::exp(-static_cast<double>(m) * log_q - params.s * log_m);
    }
    const long next = m + 1;
    if (next >= start) {
      const double tail = scale * std::exp(-0.5 * static_cast<double>(next) * log_q) / (1.0 - ratio);
      if (tail < params.tol) return {sum, m, tail};
    }
  }
  throw MathError(ErrorKind::NotConverged, "tail bound not met within " + std::to_string(params.max_terms) + " terms");
}

ComplexValue l_prefactor(const Rational& q, ComplexValue s) {
  const double qd = q.to_double();
  return qd * std::exp((1.0 - s) * std::log(1.0 + qd));
}

LEvaluation l_eval(const LParams& params) {
  require_convergent(params.cfg);
  const ComplexValue pre = l_prefactor(params.cfg.q(), params.s);
  auto ev = dirichlet_series(params, std::abs(pre));
  ev.value *= pre;
  if (!std::isfinite(ev.value.real()) || !std::isfinite(ev.value.imag()))
    throw MathError(ErrorKind::NotConverged, "non-finite L value");
  return ev;
}

InterpolationReport interpolation_check(const TwistedConfig& cfg, unsigned n, double tol, long embedding) {
  if (cfg.modulus() == 1 && n == 0)
    throw MathError(ErrorKind::InvalidArgument, "d = 1, n = 0 carries an m = 0 term outside the L-series");
  const auto a = twisted_A(cfg, n).value;
  ComplexValue expected = embed_complex(a, embedding);
  if (n % 2) expected = -expected;
  const auto ev = l_eval(LParams{ComplexValue(-static_cast<double>(n), 0.0), cfg, embedding, tol / 10.0});
  const double gap = std::abs(ev.value - expected);
  const double allowed = tol * (1.0 + std::abs(expected));
  return {ev.value, expected, gap, allowed, gap <= allowed};
}

SeriesCheckReport series_check(const TwistedConfig& cfg, unsigned n, double tol, long embedding) {
  const auto ev = dirichlet_series(LParams{ComplexValue(-static_cast<double>(n), 0.0), cfg, embedding, tol / 10.0});
  const ComplexValue exact = embed_complex(series_closed_form(cfg, n, SeriesStart::FromOne), embedding);
  const double gap = std::abs(ev.value - exact);
  return {ev.value, exact, gap, gap <= tol};
}

} // namespace dte
