#include "dte/eulerian.hpp"

#include <algorithm>
#include <numeric>

#include "dte/series.hpp"

namespace dte {

std::vector<Polynomial> eulerian_table(unsigned n_max) {
  std::vector<Polynomial> a{Polynomial::constant(1)};
  const Polynomial t_minus_one{-1, 1};
  for (unsigned n = 1; n <= n_max; ++n) {
    Polynomial sum;
    for (unsigned k = 0; k < n; ++k) sum = sum + a[k] * power(t_minus_one, n - k) * Rational(binomial(n, k));
    auto [quot, rem] = divmod(sum, t_minus_one);
    if (!rem.is_zero())
      throw MathError(ErrorKind::InternalInconsistency, "Eulerian recurrence not divisible by t-1 at n=" + std::to_string(n));
    a.push_back(std::move(quot));
  }
  return a;
}

Polynomial eulerian_recurrence(unsigned n) { return eulerian_table(n).back(); }

Polynomial descent_oracle(unsigned n) {
  if (n < 1 || n > 9) throw MathError(ErrorKind::OracleTooLarge, "descent oracle supports 1 <= n <= 9");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<long> counts(n, 0);
  do {
    unsigned des = 0;
    for (unsigned i = 0; i + 1 < n; ++i)
      if (perm[i] > perm[i + 1]) ++des;
    ++counts[des];
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<Rational> c(counts.begin(), counts.end());
  return Polynomial(std::move(c));
}

namespace {

// Newton divided differences through (xs[i], ys[i]).
Polynomial interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
  const std::size_t m = xs.size();
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - level]);
  Polynomial result = Polynomial::constant(ys[m - 1]);
  for (std::size_t i = m - 1; i-- > 0;) result = result * Polynomial{0, 1} - result * xs[i] + Polynomial::constant(ys[i]);
  return result;
}

} // namespace

std::vector<Polynomial> eulerian_gf_coefficients(unsigned n_max, GfConvention convention) {
  const std::size_t order = n_max + 1;
  std::vector<Rational> xs;
  std::vector<std::vector<Rational>> samples(order);
  for (unsigned i = 0; i <= n_max; ++i) {
    const Rational x(static_cast<long>(i) + 2);
    xs.push_back(x);
    const Rational rate = convention == GfConvention::RecurrenceConsistent ? x - 1 : Rational(1) - x;
    auto denom = exp_linear(rate, order);
    denom[0] -= x;
    auto gf = series_scale(series_inv(denom), Rational(1) - x);
    for (std::size_t n = 0; n < order; ++n) samples[n].push_back(nth_taylor_coefficient(gf, n));
  }
  std::vector<Polynomial> out;
  for (std::size_t n = 0; n < order; ++n) out.push_back(interpolate(xs, samples[n]));
  return out;
}

} // namespace dte
