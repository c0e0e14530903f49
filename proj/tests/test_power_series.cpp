#include <doctest.h>

#include <random>

#include "dte/cyclotomic.hpp"
#include "dte/series.hpp"

using namespace dte;

namespace {

using RSeries = TruncatedSeries<Rational>;

RSeries from_longs(std::initializer_list<long> v) {
  std::vector<Rational> c(v.begin(), v.end());
  return RSeries(c);
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

template <typename F, typename Gen>
TruncatedSeries<F> random_series(const F& like, std::size_t order, Gen&& gen) {
  TruncatedSeries<F> s(like, order);
  for (std::size_t i = 0; i < order; ++i) s[i] = gen();
  return s;
}

} // namespace

TEST_CASE("series_mul examples") {
  CHECK(series_mul(from_longs({1, 1, 0}), from_longs({1, -1, 0})) == from_longs({1, 0, -1}));
  CHECK(series_mul(from_longs({3, 1, 4}), RSeries(Rational(0), 3)) == RSeries(Rational(0), 3));
  RSeries geometric(std::vector<Rational>(8, Rational(1)));
  CHECK(series_mul(geometric, from_longs({1, -1, 0, 0, 0, 0, 0, 0})) == RSeries::constant(Rational(1), 8));
  // truncation to the shorter operand
  CHECK(series_add(from_longs({1, 2, 3}), from_longs({1, 1})).order() == 2);
}

TEST_CASE("series_inv examples") {
  CHECK(series_inv(from_longs({1, -1, 0, 0, 0})) == from_longs({1, 1, 1, 1, 1}));
  CHECK(series_inv(RSeries::constant(Rational(7), 3)) == RSeries::constant(Rational(Integer(1), Integer(7)), 3));
  const RSeries expected(std::vector<Rational>{Rational(Integer(1), Integer(2)), Rational(Integer(-1), Integer(4)),
                                              Rational(Integer(1), Integer(8))});
  CHECK(series_inv(from_longs({2, 1, 0})) == expected);
  CHECK_THROWS_AS(series_inv(from_longs({0, 1, 0})), MathError);
}

TEST_CASE("series_inv is a two-sided inverse") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    auto a = random_series(Rational(0), 9, [&] { return random_rational(rng); });
    if (a[0].is_zero()) a[0] = 1;
    CHECK(series_mul(a, series_inv(a)) == RSeries::constant(Rational(1), 9));
  }
  const auto f = CyclotomicField::make(9);
  for (int i = 0; i < 100; ++i) {
    auto a = random_series(CyclotomicNumber::zero(f), 6, [&] {
      std::vector<Rational> c;
      for (std::size_t k = 0; k < f->degree(); ++k) c.push_back(random_rational(rng));
      return CyclotomicNumber(f, c);
    });
    if (a[0].is_zero()) a[0] = CyclotomicNumber::one(f);
    CHECK(series_mul(series_inv(a), a) == TruncatedSeries<CyclotomicNumber>::constant(CyclotomicNumber::one(f), 6));
  }
}

TEST_CASE("exp_linear") {
  CHECK(exp_linear(Rational(0), 5) == RSeries::constant(Rational(1), 5));
  const RSeries e(std::vector<Rational>{Rational(1), Rational(1), Rational(Integer(1), Integer(2)),
                                       Rational(Integer(1), Integer(6))});
  CHECK(exp_linear(Rational(1), 4) == e);

  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_rational(rng), b = random_rational(rng);
    CHECK(series_mul(exp_linear(a, 10), exp_linear(-a, 10)) == RSeries::constant(Rational(1), 10));
    CHECK(exp_linear(a + b, 10) == series_mul(exp_linear(a, 10), exp_linear(b, 10)));
  }
}

TEST_CASE("nth_taylor_coefficient") {
  CHECK(nth_taylor_coefficient(exp_linear(Rational(3), 4), 2) == Rational(9));
  CHECK(nth_taylor_coefficient(RSeries::constant(Rational(1), 4), 3) == Rational(0));
  CHECK(nth_taylor_coefficient(series_inv(from_longs({1, -1, 0, 0, 0})), 4) == Rational(24));
  CHECK_THROWS_AS(nth_taylor_coefficient(RSeries::constant(Rational(1), 4), 4), MathError);
}

TEST_CASE("binomial convolution law for Taylor coefficients") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_series(Rational(0), 8, [&] { return random_rational(rng); });
    const auto b = random_series(Rational(0), 8, [&] { return random_rational(rng); });
    const auto ab = series_mul(a, b);
    for (std::size_t n = 0; n < 8; ++n) {
      Rational expected;
      for (std::size_t k = 0; k <= n; ++k)
        expected += Rational(binomial(n, k)) * nth_taylor_coefficient(a, k) * nth_taylor_coefficient(b, n - k);
      CHECK(nth_taylor_coefficient(ab, n) == expected);
    }
  }
}
