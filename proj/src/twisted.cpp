#include "dte/twisted.hpp"

#include <string>

#include "dte/eulerian.hpp"

namespace dte {

TwistedConfig::TwistedConfig(DirichletCharacter chi, unsigned long zeta_order, long zeta_k, Rational q)
    : chi_(std::move(chi)),
      zeta_order_(zeta_order),
      zeta_k_(zeta_k),
      q_(std::move(q)),
      field_(CyclotomicField::make(lcm_ul(chi_.order(), zeta_order == 0 ? 1 : zeta_order))),
      zeta_(CyclotomicNumber::zero(field_)) {
  if (zeta_order == 0 || zeta_order % 2 == 0)
    throw MathError(ErrorKind::InvalidArgument, "zeta order must be odd, got " + std::to_string(zeta_order));
  if (gcd_ul(static_cast<unsigned long>(((zeta_k % static_cast<long>(zeta_order)) + static_cast<long>(zeta_order)) %
                                        static_cast<long>(zeta_order)),
             zeta_order) != 1)
    throw MathError(ErrorKind::NotAPrimitiveEmbedding, "zeta exponent must be coprime to its order");
  if (q_.is_zero() || q_ == Rational(-1))
    throw MathError(ErrorKind::InvalidArgument, "q must avoid 0 and -1, got " + q_.to_string());
  zeta_ = zeta_own().lift(field_);
  const long d = static_cast<long>(chi_.modulus());
  if ((pow(zeta_, d) + CyclotomicNumber::from_rational(field_, pow(q_, d))).is_zero())
    throw MathError(ErrorKind::SingularFunctionalEquation, "zeta^d + q^d = 0");
}

CyclotomicNumber TwistedConfig::zeta_own() const {
  return CyclotomicNumber::zeta_power(CyclotomicField::make(zeta_order_), zeta_k_);
}

TwistedConfig TwistedConfig::with_q(const Rational& q) const { return TwistedConfig(chi_, zeta_order_, zeta_k_, q); }

TwistedConfig TwistedConfig::with_chi(DirichletCharacter chi) const {
  return TwistedConfig(std::move(chi), zeta_order_, zeta_k_, q_);
}

TwistedConfig TwistedConfig::conjugate() const { return TwistedConfig(chi_.conjugate(), zeta_order_, -zeta_k_, q_); }

TruncatedSeries<CyclotomicNumber> twisted_gf(const TwistedConfig& cfg, std::size_t order, Kernel kernel) {
  const auto& field = cfg.field();
  const Rational& q = cfg.q();
  const long d = static_cast<long>(cfg.modulus());
  const Rational rate = -(Rational(1) + q);
  const auto zero = CyclotomicNumber::zero(field);

  TruncatedSeries<CyclotomicNumber> numerator(zero, order);
  for (long l = 0; l < d; ++l) {
    const auto chi_l = cfg.chi().value_in(field, l);
    if (chi_l.is_zero()) continue;
    const long q_exp = kernel == Kernel::Printed ? d - l + 1 : d - 1 - l;
    Rational w = pow(q, q_exp);
    if (l % 2) w = -w;
    const auto coeff = pow(cfg.zeta(), l) * chi_l * w;
    const auto e = exp_linear(CyclotomicNumber::from_rational(field, rate * Rational(l)), order);
    numerator = series_add(numerator, series_scale(e, coeff));
  }

  auto denominator = series_scale(exp_linear(CyclotomicNumber::from_rational(field, rate * Rational(d)), order),
                                  pow(cfg.zeta(), d));
  denominator[0] += CyclotomicNumber::from_rational(field, pow(q, d));
  if (is_zero(denominator[0])) throw MathError(ErrorKind::SingularFunctionalEquation, "zeta^d + q^d = 0");
  return series_scale(series_mul(numerator, series_inv(denominator)), Rational(1) + q);
}

namespace {

// (-1)^m zeta^m chi(m)
CyclotomicNumber series_weight(const TwistedConfig& cfg, long m) {
  auto c = pow(cfg.zeta(), m) * cfg.chi().value_in(cfg.field(), m);
  return m % 2 ? -c : c;
}

} // namespace

CyclotomicNumber series_closed_form(const TwistedConfig& cfg, unsigned n, SeriesStart start) {
  const Rational& q = cfg.q();
  if (q == Rational(1) || q == Rational(-1)) throw MathError(ErrorKind::PoleAtOne, "closed form needs |q| != 1");
  const unsigned long period = lcm_ul(2, lcm_ul(cfg.modulus(), cfg.zeta_order()));
  const Rational z = inverse(q);
  const Rational w = pow(z, static_cast<long>(period));
  const auto eulerian = eulerian_table(n);

  // inner[j] = sum_k k^j w^k
  std::vector<Rational> inner;
  for (unsigned j = 0; j <= n; ++j) inner.push_back(power_sum_rational(j, w, eulerian[j]));

  CyclotomicNumber total = CyclotomicNumber::zero(cfg.field());
  for (unsigned long l = 1; l <= period; ++l) {
    const auto c = series_weight(cfg, static_cast<long>(l));
    if (c.is_zero()) continue;
    Rational s;
    for (unsigned j = 0; j <= n; ++j)
      s += Rational(binomial(n, j)) * pow(Rational(static_cast<long>(l)), n - j) *
           pow(Rational(static_cast<long>(period)), j) * inner[j];
    total += c * (s * pow(z, static_cast<long>(l)));
  }
  if (start == SeriesStart::FromZero && n == 0) total += series_weight(cfg, 0);
  return total;
}

CyclotomicNumber twisted_A_series_path(const TwistedConfig& cfg, unsigned n, SeriesStart start) {
  const Rational& q = cfg.q();
  Rational scale = q * pow(Rational(1) + q, static_cast<long>(n) + 1);
  if (n % 2) scale = -scale;
  return series_closed_form(cfg, n, start) * scale;
}

std::vector<TwistedValue> twisted_A_values(const TwistedConfig& cfg, unsigned n_max) {
  const auto gf = twisted_gf(cfg, n_max + 1);
  const bool series_available = !(cfg.q() == Rational(1) || cfg.q() == Rational(-1));
  std::vector<TwistedValue> out;
  for (unsigned n = 0; n <= n_max; ++n) {
    TwistedValue v{n, nth_taylor_coefficient(gf, n), {"generating-function"}};
    if (series_available) {
      if (twisted_A_series_path(cfg, n, SeriesStart::FromZero) != v.value)
        throw MathError(ErrorKind::InternalInconsistency,
                        "generating function and series path disagree at n=" + std::to_string(n));
      v.paths.emplace_back("series-closed-form");
    }
    out.push_back(std::move(v));
  }
  return out;
}

TwistedValue twisted_A(const TwistedConfig& cfg, unsigned n) { return twisted_A_values(cfg, n).back(); }

EulerGfReport euler_gf_consistency(unsigned long d_fold, const CyclotomicNumber& zeta, std::size_t order) {
  if (d_fold % 2 == 0) throw MathError(ErrorKind::InvalidArgument, "d-fold form requires odd d");
  const auto& field = zeta.field();
  const auto zero = CyclotomicNumber::zero(field);
  const auto one = CyclotomicNumber::one(field);
  const long d = static_cast<long>(d_fold);

  TruncatedSeries<CyclotomicNumber> num(zero, order);
  for (long l = 0; l < d; ++l) {
    auto c = pow(zeta, l) * Rational(l % 2 ? -2 : 2);
    num = series_add(num, series_scale(exp_linear(CyclotomicNumber::from_rational(field, Rational(l)), order), c));
  }
  auto den = series_scale(exp_linear(CyclotomicNumber::from_rational(field, Rational(d)), order), pow(zeta, d));
  den[0] += one;
  auto folded = series_mul(num, series_inv(den));

  auto den1 = series_scale(exp_linear(one, order), zeta);
  den1[0] += one;
  auto telescoped = series_scale(series_inv(den1), Rational(2));

  bool taylor_ok = true;
  const auto moments = poly_twist_moments(static_cast<unsigned>(order - 1), zero, zeta, Rational(1));
  for (std::size_t n = 0; n < order; ++n)
    if (nth_taylor_coefficient(folded, n) != moments[n]) taylor_ok = false;
  const bool eq = folded == telescoped;
  return {std::move(folded), std::move(telescoped), eq, taylor_ok};
}

CyclotomicNumber integral_residual(const TwistedConfig& cfg, unsigned n) {
  const auto a = twisted_A(cfg, n).value;
  const auto integral = char_twist_integral(n, cfg.chi(), cfg.zeta_own(), cfg.q());
  if (integral.is_zero()) throw MathError(ErrorKind::ResidualUndefined, "integral vanishes");
  Rational scale = pow(Rational(1) + cfg.q(), static_cast<long>(n));
  if (n % 2) scale = -scale;
  return a / (integral * scale);
}

CyclotomicNumber decomposition_residual(const TwistedConfig& cfg, unsigned n) {
  const auto a = twisted_A(cfg, n).value;
  const auto rhs = distribution_rhs(n, cfg.chi(), cfg.zeta_own(), cfg.q());
  if (rhs.is_zero()) throw MathError(ErrorKind::ResidualUndefined, "integral vanishes");
  Rational scale = inverse(pow(Rational(1) + cfg.q(), static_cast<long>(n)));
  if (n % 2) scale = -scale;
  return (a * scale) / rhs;
}

EqualityReport unit_q_check(const DirichletCharacter& chi, unsigned long zeta_order, long zeta_k, unsigned n) {
  const TwistedConfig cfg(chi, zeta_order, zeta_k, Rational(1));
  auto lhs = twisted_A(cfg, n).value;

  const auto& field = cfg.field();
  const long d = static_cast<long>(chi.modulus());
  const auto z_d = pow(cfg.zeta(), d);
  auto sum = CyclotomicNumber::zero(field);
  for (long a = 0; a < d; ++a) {
    const auto chi_a = chi.value_in(field, a);
    if (chi_a.is_zero()) continue;
    const auto x = CyclotomicNumber::from_rational(field, Rational(Integer(a), Integer(d)));
    auto term = chi_a * pow(cfg.zeta(), a) * twisted_euler(n, z_d, x);
    sum += a % 2 ? -term : term;
  }
  auto rhs = sum * pow(Rational(-2 * d), static_cast<long>(n));
  const bool eq = lhs == rhs;
  return {std::move(lhs), std::move(rhs), eq};
}

UnnormalizedReport unnormalized_convergence(unsigned n, const std::optional<DirichletCharacter>& chi, const Rational& q,
                                        unsigned long p, unsigned max_level) {
  const auto sums = unnormalized_partial_sums(n, chi, q, p, max_level);
  const TwistedConfig cfg(chi ? *chi : DirichletCharacter::principal(1), 1, 1, q);
  const auto a = twisted_A(cfg, n).value;
  if (!a.is_rational()) throw MathError(ErrorKind::InternalInconsistency, "rational inputs gave irrational A");
  Rational sigma = a.rational_part() / (q * pow(Rational(1) + q, static_cast<long>(n) + 1));
  if (n % 2) sigma = -sigma;

  UnnormalizedReport rep{TruncationReport{p, sigma * Rational(2), {}}, sigma, Rational(2) * q * q * sigma,
                       Rational(2) * sigma, Rational(0)};
  for (unsigned level = 0; level <= max_level; ++level)
    rep.observed.levels.push_back({level, sums[level], padic_valuation(sums[level] - rep.observed_limit, p)});
  if (rep.observed_limit.is_zero()) throw MathError(ErrorKind::ResidualUndefined, "closed form vanishes");
  rep.ratio = rep.claimed_limit / rep.observed_limit;
  return rep;
}

} // namespace dte
