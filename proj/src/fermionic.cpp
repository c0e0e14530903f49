#include "dte/fermionic.hpp"

#include <string>

namespace dte {

FieldPtr ambient_field(const DirichletCharacter& chi, const CyclotomicNumber& zeta) {
  return CyclotomicField::make(lcm_ul(chi.order(), zeta.order()));
}

namespace {

void require_q(const Rational& q) {
  if (q.is_zero() || q == Rational(-1))
    throw MathError(ErrorKind::InvalidArgument, "q must avoid 0 and -1, got " + q.to_string());
}

} // namespace

std::vector<CyclotomicNumber> char_twist_moments(unsigned n, const DirichletCharacter& chi,
                                                 const CyclotomicNumber& zeta, const Rational& q) {
  require_q(q);
  const auto field = ambient_field(chi, zeta);
  const CyclotomicNumber z = zeta.lift(field);
  const long d = static_cast<long>(chi.modulus());
  const CyclotomicNumber z_d = pow(z, d);
  const Rational q_d = pow(q, d);
  const CyclotomicNumber lead = z_d + CyclotomicNumber::from_rational(field, q_d);
  if (lead.is_zero()) throw MathError(ErrorKind::SingularFunctionalEquation, "zeta^d + q^d = 0");
  const CyclotomicNumber lead_inv = cyc_inv(lead);

  // kernel[l] = [2]_q (-1)^l q^{d-1-l} zeta^l chi(l)
  std::vector<CyclotomicNumber> kernel;
  for (long l = 0; l < d; ++l) {
    Rational w = (Rational(1) + q) * pow(q, d - 1 - l);
    if (l % 2) w = -w;
    kernel.push_back(pow(z, l) * chi.value_in(field, l) * w);
  }

  std::vector<CyclotomicNumber> moments;
  for (unsigned m = 0; m <= n; ++m) {
    CyclotomicNumber rhs = CyclotomicNumber::zero(field);
    for (long l = 0; l < d; ++l) rhs += kernel[static_cast<std::size_t>(l)] * pow(Rational(l), m);  // 0^0 = 1
    CyclotomicNumber acc = CyclotomicNumber::zero(field);
    for (unsigned k = 0; k < m; ++k)
      acc += moments[k] * (Rational(binomial(m, k)) * pow(Rational(d), static_cast<long>(m - k)));
    moments.push_back((rhs - z_d * acc) * lead_inv);
  }
  return moments;
}

CyclotomicNumber char_twist_integral(unsigned n, const DirichletCharacter& chi, const CyclotomicNumber& zeta,
                                     const Rational& q) {
  return char_twist_moments(n, chi, zeta, q).back();
}

CyclotomicNumber distribution_rhs(unsigned n, const DirichletCharacter& chi, const CyclotomicNumber& zeta,
                                  const Rational& q) {
  require_q(q);
  const auto field = ambient_field(chi, zeta);
  const CyclotomicNumber z = zeta.lift(field);
  const long d = static_cast<long>(chi.modulus());
  const CyclotomicNumber z_d = pow(z, d);
  const Rational q_inv = inverse(q);
  const Rational r_d = pow(q_inv, d);
  CyclotomicNumber sum = CyclotomicNumber::zero(field);
  for (long a = 0; a < d; ++a) {
    const CyclotomicNumber chi_a = chi.value_in(field, a);
    if (chi_a.is_zero()) continue;
    const auto u = CyclotomicNumber::from_rational(field, Rational(Integer(a), Integer(d)));
    const CyclotomicNumber inner = poly_twist_integral(n, u, z_d, r_d);
    Rational w = pow(q_inv, a);
    if (a % 2) w = -w;
    sum += chi_a * pow(z, a) * inner * w;
  }
  const Rational scale = pow(Rational(d), static_cast<long>(n)) / q_bracket_neg(static_cast<unsigned long>(d), q_inv);
  return sum * scale;
}

DistributionReport distribution_identity_check(unsigned n, const DirichletCharacter& chi,
                                               const CyclotomicNumber& zeta, const Rational& q) {
  auto lhs = char_twist_integral(n, chi, zeta, q);
  auto rhs = distribution_rhs(n, chi, zeta, q);
  const bool eq = lhs == rhs;
  return {std::move(lhs), std::move(rhs), eq};
}

bool TruncationReport::converges_at_rate() const {
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i].valuation < Valuation(static_cast<long>(levels[i].level))) return false;
    if (i > 0 && levels[i].valuation < levels[i - 1].valuation) return false;
  }
  return true;
}

void require_padic_regime(const Rational& q, unsigned long p, const DirichletCharacter* chi) {
  if (p < 3 || !is_prime(p)) throw MathError(ErrorKind::NotPadicallyConvergent, "p must be an odd prime");
  if (q.is_zero() || padic_valuation(q, p) != Valuation(0))
    throw MathError(ErrorKind::NotPadicallyConvergent, "need v_p(q) = 0");
  if (padic_valuation(q - Rational(1), p) < Valuation(1))
    throw MathError(ErrorKind::NotPadicallyConvergent, "need v_p(q - 1) >= 1");
  if (chi) {
    if (!chi->is_rational_valued())
      throw MathError(ErrorKind::NotPadicallyConvergent, "character must be rational-valued");
    unsigned long d = chi->modulus();
    while (d % p == 0) d /= p;
    if (d != 1)
      throw MathError(ErrorKind::NotPadicallyConvergent,
                      "character modulus " + std::to_string(chi->modulus()) + " is not a power of p");
  }
}

std::vector<Rational> unnormalized_partial_sums(unsigned n, const std::optional<DirichletCharacter>& chi,
                                                const Rational& q, unsigned long p, unsigned max_level) {
  require_padic_regime(q, p, chi ? &*chi : nullptr);
  const Rational step = -inverse(q);
  std::vector<Rational> out;
  Rational sum, weight(1);
  unsigned long x = 0, bound = 1;
  for (unsigned level = 0; level <= max_level; ++level) {
    for (; x < bound; ++x) {
      const Rational f = pow(Rational(static_cast<long>(x)), n);
      const Rational c = chi ? chi->rational_value(static_cast<long>(x)) : Rational(1);
      if (!c.is_zero()) sum += weight * c * f;
      weight *= step;
    }
    out.push_back(sum);
    bound *= p;
  }
  return out;
}

TruncationReport padic_truncation(unsigned n, const std::optional<DirichletCharacter>& chi, const Rational& q,
                                  unsigned long p, unsigned max_level) {
  const auto sums = unnormalized_partial_sums(n, chi, q, p, max_level);
  Rational exact;
  if (chi) {
    const auto one = CyclotomicNumber::one(CyclotomicField::make(1));
    exact = char_twist_integral(n, *chi, one, q).rational_part();
  } else {
    exact = poly_twist_integral(n, Rational(0), Rational(1), inverse(q));
  }
  TruncationReport report{p, exact, {}};
  unsigned long bound = 1;
  for (unsigned level = 0; level <= max_level; ++level) {
    const Rational s = sums[level] / q_bracket_neg(bound, inverse(q));
    report.levels.push_back({level, s, padic_valuation(s - exact, p)});
    bound *= p;
  }
  return report;
}

KernelIterationReport kernel_iteration_check(unsigned long d, const Rational& q, const std::vector<Rational>& f_values) {
  if (d % 2 == 0) throw MathError(ErrorKind::InvalidArgument, "kernel check requires odd d");
  if (f_values.size() < d) throw MathError(ErrorKind::InvalidArgument, "need f(0..d-1)");
  require_q(q);
  // I(f_k) = alpha * I(f) + beta
  Rational alpha(1), beta(0);
  for (unsigned long k = 0; k < d; ++k) {
    alpha = -q * alpha;
    beta = (Rational(1) + q) * f_values[k] - q * beta;
  }
  KernelIterationReport rep{beta, alpha, Rational(0), Rational(0)};
  const long dd = static_cast<long>(d);
  for (long l = 0; l < dd; ++l) {
    const Rational sign = l % 2 ? Rational(-1) : Rational(1);
    rep.derived_kernel_sum += sign * pow(q, dd - 1 - l) * f_values[static_cast<std::size_t>(l)];
    rep.printed_kernel_sum += sign * pow(q, dd - l + 1) * f_values[static_cast<std::size_t>(l)];
  }
  rep.derived_kernel_sum *= Rational(1) + q;
  rep.printed_kernel_sum *= Rational(1) + q;
  return rep;
}

} // namespace dte
