#include <doctest.h>

#include <cmath>

#include "dte/eulerian.hpp"
#include "dte/error.hpp"

using namespace dte;

namespace {

Integer factorial_oracle(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer binomial_oracle(unsigned n, unsigned k) {
  return factorial_oracle(n) / (factorial_oracle(k) * factorial_oracle(n - k));
}

} // namespace

TEST_CASE("eulerian polynomials, small n") {
  CHECK(eulerian_recurrence(0) == Polynomial{1});
  CHECK(eulerian_recurrence(1) == Polynomial{1});
  CHECK(eulerian_recurrence(2) == Polynomial{1, 1});
  CHECK(eulerian_recurrence(3) == Polynomial{1, 4, 1});
  CHECK(eulerian_recurrence(4) == Polynomial{1, 11, 11, 1});
  CHECK(eulerian_recurrence(5) == Polynomial{1, 26, 66, 26, 1});
}

TEST_CASE("recurrence matches the descent oracle") {
  for (unsigned n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(eulerian_recurrence(n) == descent_oracle(n));
  }
  CHECK_THROWS_AS(descent_oracle(10), MathError);
}

TEST_CASE("eulerian polynomial invariants") {
  const auto table = eulerian_table(12);
  for (unsigned n = 1; n <= 12; ++n) {
    const auto& a = table[n];
    CAPTURE(n);
    CHECK(a.degree() == static_cast<long>(n) - 1);
    CHECK(a.evaluate(Rational(1)) == Rational(factorial_oracle(n)));
    for (unsigned k = 0; k < n; ++k) {
      CHECK(a.coeff(k) == a.coeff(n - 1 - k));
      CHECK(a.coeff(k) > Rational(0));
    }
  }
}

TEST_CASE("Worpitzky-type expansion") {
  // sum_m (m+1)^n t^m = A_n(t) * sum_k C(n+k, k) t^k, compared up to t^30
  const unsigned M = 30;
  for (unsigned n = 1; n <= 6; ++n) {
    const auto a = eulerian_recurrence(n);
    for (unsigned m = 0; m <= M; ++m) {
      Integer rhs = 0;
      for (unsigned i = 0; i <= m && i < n; ++i) rhs += a.coeff(i).numerator() * binomial_oracle(n + m - i, m - i);
      Integer lhs = 1;
      for (unsigned e = 0; e < n; ++e) lhs *= (m + 1);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("power sums") {
  const Rational half(Integer(1), Integer(2));
  CHECK(power_sum_rational(0, half) == Rational(2));
  CHECK(power_sum_rational(1, half) == Rational(2));
  CHECK(power_sum_rational(2, half) == Rational(6));
  CHECK_THROWS_AS(power_sum_rational(3, Rational(1)), MathError);

  for (unsigned j = 0; j <= 6; ++j) {
    for (double w : {0.5, -0.5, 0.25}) {
      double partial = 0;
      for (int k = 0; k <= 200; ++k) partial += std::pow(k, j) * std::pow(w, k);
      const Rational wq(Integer(static_cast<long>(w * 4)), Integer(4));
      CHECK(std::abs(power_sum_rational(j, wq).to_double() - partial) < 1e-9 * std::max(1.0, std::abs(partial)));
    }
  }
}

TEST_CASE("exponential generating function") {
  const auto consistent = eulerian_gf_coefficients(6);
  const auto printed = eulerian_gf_coefficients(6, GfConvention::AsPrinted);
  REQUIRE(consistent.size() == 7);
  for (unsigned n = 0; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(consistent[n] == eulerian_recurrence(n));
    CHECK(printed[n] == eulerian_recurrence(n) * Rational(n % 2 ? -1 : 1));
  }
  CHECK(printed[1] == Polynomial{-1});
}
