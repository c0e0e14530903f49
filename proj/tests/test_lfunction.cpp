#include <doctest.h>

#include <cmath>

#include "dte/characters.hpp"
#include "dte/error.hpp"
#include "dte/lfunction.hpp"
#include "dte/twisted.hpp"

using namespace dte;

namespace {

Rational frac(long a, long b) { return Rational(Integer(a), Integer(b)); }

LParams params(const TwistedConfig& cfg, ComplexValue s, double tol = 1e-12) {
  return LParams{.s = s, .cfg = cfg, .embedding = 1, .tol = tol, .max_terms = 1'000'000};
}

// q (1+q)^{1-s} sum_{m>=1} (-1)^m chi(m) zeta^m q^{-m} m^{-s}, summed to a fixed cutoff.
ComplexValue direct_l(const DirichletCharacter& chi, unsigned long zeta_order, long zeta_k, double q, ComplexValue s) {
  const double two_pi = 2 * std::acos(-1.0);
  ComplexValue sum = 0;
  for (long m = 1; m < 3000; ++m) {
    const double angle = two_pi * static_cast<double>((zeta_k * m) % static_cast<long>(zeta_order)) /
                         static_cast<double>(zeta_order);
    sum += std::pow(-1.0 / q, static_cast<double>(m)) * chi.complex_value(m) * std::polar(1.0, angle) *
           std::pow(ComplexValue(static_cast<double>(m)), -s);
  }
  return q * std::pow(ComplexValue(1 + q), 1.0 - s) * sum;
}

} // namespace

TEST_CASE("values at non-positive integers") {
  const TwistedConfig cfg(quadratic_character(3), 1, 0, Rational(2));
  CHECK(std::abs(l_eval(params(cfg, 0)).value - ComplexValue(-4)) < 1e-9);
  CHECK(std::abs(l_eval(params(cfg, -1)).value - ComplexValue(-12)) < 1e-9);
  CHECK(std::abs(l_eval(params(cfg, -2)).value - ComplexValue(-12)) < 1e-9);
}

TEST_CASE("l_eval agrees with direct summation") {
  for (const auto& chi : enumerate_characters(5))
    for (unsigned long zo : {1UL, 3UL})
      for (const Rational& q : {Rational(2), Rational(3), frac(5, 2)})
        for (ComplexValue s : {ComplexValue(0.5, 0), ComplexValue(2, 1), ComplexValue(-1.5, -3), ComplexValue(0, 7)}) {
          const TwistedConfig cfg(chi, zo, zo == 1 ? 0 : 1, q);
          const auto got = l_eval(params(cfg, s)).value;
          const auto expected = direct_l(chi, zo, zo == 1 ? 0 : 1, q.to_double(), s);
          CHECK(std::abs(got - expected) < 1e-9 * std::max(1.0, std::abs(expected)));
        }
}

TEST_CASE("conjugate symmetry") {
  for (const auto& chi : enumerate_characters(9)) {
    const TwistedConfig cfg(chi, 3, 1, Rational(3));
    for (ComplexValue s : {ComplexValue(0.3, 1.7), ComplexValue(-2, 0.5)}) {
      const auto a = l_eval(params(cfg, s)).value;
      const auto b = l_eval(params(cfg.conjugate(), std::conj(s))).value;
      CHECK(std::abs(std::conj(a) - b) < 1e-12 * std::max(1.0, std::abs(a)));
    }
  }
}

TEST_CASE("prefactor") {
  const Rational q = frac(5, 2);
  const ComplexValue s1(0.25, -1), s2(-1.5, 2);
  const auto lhs = l_prefactor(q, s1) * l_prefactor(q, s2);
  const auto rhs = q.to_double() * l_prefactor(q, s1 + s2 - 1.0);
  CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(lhs));
  CHECK(std::abs(l_prefactor(Rational(2), 1) - ComplexValue(2)) < 1e-15);
  CHECK(std::abs(l_prefactor(Rational(2), 0) - ComplexValue(6)) < 1e-15);
}

TEST_CASE("truncation tightens with the tolerance") {
  const TwistedConfig cfg(quadratic_character(5), 3, 1, Rational(2));
  long previous = 0;
  for (double tol : {1e-4, 1e-8, 1e-12}) {
    const auto ev = l_eval(params(cfg, ComplexValue(-3, 0.5), tol));
    CHECK(ev.tail_bound <= tol);
    CHECK(ev.terms_used >= previous);
    previous = ev.terms_used;
  }
}

TEST_CASE("error paths") {
  const TwistedConfig cfg(quadratic_character(3), 1, 0, Rational(1));
  try {
    l_eval(params(cfg, 0));
    FAIL("expected OutsideConvergence");
  } catch (const MathError& e) {
    CHECK(e.kind() == ErrorKind::OutsideConvergence);
  }
  CHECK_THROWS_AS(l_eval(params(cfg.with_q(frac(1, 2)), 0)), MathError);
  auto p = params(cfg.with_q(Rational(2)), -4);
  p.max_terms = 5;
  try {
    l_eval(p);
    FAIL("expected NotConverged");
  } catch (const MathError& e) {
    CHECK(e.kind() == ErrorKind::NotConverged);
  }
}

TEST_CASE("interpolation at non-positive integers") {
  const TwistedConfig cfg(quadratic_character(3), 1, 0, Rational(2));
  CHECK(interpolation_check(cfg, 0, 1e-9).passed);
  const auto r2 = interpolation_check(cfg, 2, 1e-9);
  CHECK(r2.passed);
  CHECK(std::abs(r2.expected - ComplexValue(-12)) < 1e-12);
  CHECK(interpolation_check(TwistedConfig(DirichletCharacter::principal(1), 1, 0, Rational(2)), 1, 1e-9).passed);
  CHECK_THROWS_AS(interpolation_check(TwistedConfig(DirichletCharacter::principal(1), 1, 0, Rational(2)), 0, 1e-9),
                  MathError);
  for (const auto& chi : enumerate_characters(5))
    for (unsigned n = 0; n <= 5; ++n) CHECK(interpolation_check(TwistedConfig(chi, 3, 2, Rational(3)), n, 1e-9).passed);
}

TEST_CASE("numeric series against the closed form") {
  const TwistedConfig cfg(quadratic_character(3), 1, 0, Rational(2));
  const auto r1 = series_check(cfg, 1, 1e-10);
  CHECK(r1.passed);
  CHECK(std::abs(r1.numeric - ComplexValue(-2.0 / 3)) < 1e-10);
  const auto r2 = series_check(cfg, 2, 1e-10);
  CHECK(std::abs(r2.numeric - ComplexValue(-2.0 / 9)) < 1e-10);
  const auto zero = series_check(cfg.with_chi(DirichletCharacter::all_zero(3)), 3, 1e-10);
  CHECK(zero.passed);
  CHECK(std::abs(zero.closed_form) == 0.0);
}
