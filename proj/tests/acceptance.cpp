// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "dte/characters.hpp"
#include "dte/checks.hpp"
#include "dte/cli.hpp"
#include "dte/eulerian.hpp"
#include "dte/error.hpp"
#include "dte/fermionic.hpp"
#include "dte/lfunction.hpp"
#include "dte/serialize.hpp"
#include "dte/twisted.hpp"

using namespace dte;

namespace {

constexpr double kInterpolationTol = 1e-9;
constexpr double kAnchorTol = 1e-9;
constexpr double kLimitCriterion1 = 10;
constexpr double kLimitCriterion4 = 30;
constexpr double kLimitCriterion8 = 60;
constexpr double kLimitCriterion11 = 300;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Rational frac(long a, long b) { return Rational(Integer(a), Integer(b)); }

bool equals_rational(const CyclotomicNumber& a, const Rational& r) {
  return a == CyclotomicNumber::from_rational(a.field(), r);
}

std::string label(const TwistedConfig& cfg, unsigned n) {
  std::ostringstream s;
  s << "d=" << cfg.modulus() << " chi-order=" << cfg.chi().order() << " zeta-order=" << cfg.zeta_order()
    << " q=" << cfg.q().to_string() << " n=" << n;
  return s.str();
}

// Every (chi, zeta, q) combination on the default grid.
std::vector<TwistedConfig> grid_configs(const GridSpec& grid) {
  std::vector<TwistedConfig> out;
  for (auto d : grid.moduli)
    for (const auto& lc : grid_characters(d))
      for (auto zo : grid.zeta_orders)
        for (const auto& q : grid.q_values) out.emplace_back(lc.chi, zo, 1, q);
  return out;
}

Outcome classical() {
  Outcome o;
  for (unsigned n = 1; n <= 8; ++n) {
    const auto a = eulerian_recurrence(n);
    o.require(a == descent_oracle(n), "recurrence != descent count at n=" + std::to_string(n));
    o.require(a.evaluate(Rational(1)) == Rational(factorial(n)), "A_n(1) != n! at n=" + std::to_string(n));
    for (unsigned k = 0; k < n; ++k)
      o.require(a.coeff(k) == a.coeff(n - 1 - k), "asymmetric coefficients at n=" + std::to_string(n));
  }
  return o;
}

Outcome moment_formula() {
  Outcome o;
  for (const Rational& q : {Rational(2), Rational(3), frac(5, 2)})
    for (unsigned n = 0; n <= 8; ++n) {
      const Rational sign = n % 2 ? Rational(-1) : Rational(1);
      const Rational expected = sign * eulerian_recurrence(n).evaluate(-q) / pow(Rational(1) + q, n);
      o.require(poly_twist_integral(n, Rational(0), Rational(1), Rational(1) / q) == expected,
                "mismatch at q=" + q.to_string() + " n=" + std::to_string(n));
    }
  return o;
}

Outcome cross_path() {
  Outcome o;
  const auto grid = GridSpec::default_grid();
  std::size_t cells = 0;
  for (const auto& cfg : grid_configs(grid))
    for (unsigned n = 0; n <= 6; ++n) {
      const auto value = twisted_A(cfg, n).value;
      // the m = 0 term only contributes when chi(0) = 1 and n = 0
      const auto start = cfg.modulus() == 1 && n == 0 ? SeriesStart::FromZero : SeriesStart::FromOne;
      o.require(value == twisted_A_series_path(cfg, n, start), label(cfg, n));
      ++cells;
    }
  o.detail = o.ok ? std::to_string(cells) + " cells" : o.detail;
  return o;
}

Outcome interpolation() {
  Outcome o;
  for (unsigned long d : {3UL, 5UL})
    for (const auto& lc : grid_characters(d))
      for (unsigned long zo : {1UL, 3UL})
        for (const Rational& q : {Rational(2), Rational(3)}) {
          const TwistedConfig cfg(lc.chi, zo, 1, q);
          for (unsigned n = 0; n <= 5; ++n) {
            const auto rep = interpolation_check(cfg, n, kInterpolationTol);
            o.require(rep.passed && rep.gap <= kInterpolationTol * (1 + std::abs(rep.expected)), label(cfg, n));
          }
        }
  const TwistedConfig anchor(quadratic_character(3), 1, 0, Rational(2));
  const long expected_a[] = {-4, 12, -12};
  const double expected_l[] = {-4, -12, -12};
  for (unsigned n = 0; n <= 2; ++n) {
    o.require(equals_rational(twisted_A(anchor, n).value, Rational(expected_a[n])), "anchor A_" + std::to_string(n));
    const auto l = l_eval(LParams{.s = -static_cast<double>(n), .cfg = anchor, .tol = kAnchorTol / 10}).value;
    o.require(std::abs(l - ComplexValue(expected_l[n])) <= kAnchorTol, "anchor L(-" + std::to_string(n) + ")");
  }
  return o;
}

Outcome distribution() {
  Outcome o;
  const auto grid = GridSpec::default_grid();
  for (const auto& cfg : grid_configs(grid))
    for (unsigned n : grid.n_values)
      o.require(distribution_identity_check(n, cfg.chi(), cfg.zeta_own(), cfg.q()).equal, label(cfg, n));
  return o;
}

Outcome normalization() {
  Outcome o;
  const auto grid = GridSpec::default_grid();
  for (const auto& cfg : grid_configs(grid))
    for (unsigned n : grid.n_values) {
      const Rational q2 = cfg.q() * cfg.q();
      try {
        o.require(equals_rational(integral_residual(cfg, n), q2), "integral residual " + label(cfg, n));
        o.require(equals_rational(decomposition_residual(cfg, n), q2), "decomposition residual " + label(cfg, n));
      } catch (const MathError& e) {
        o.require(e.kind() == ErrorKind::ResidualUndefined, e.what());
      }
    }
  std::mt19937_64 rng(20261017);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 9);
  for (unsigned long d : {1UL, 3UL, 5UL})
    for (const Rational& q : {Rational(2), Rational(3), frac(5, 2), frac(-2, 7)})
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> f;
        for (unsigned long l = 0; l < d; ++l) f.push_back(frac(num(rng), den(rng)));
        const auto rep = kernel_iteration_check(d, q, f);
        o.require(rep.derived_matches(), "iterated kernel d=" + std::to_string(d));
        o.require(rep.printed_kernel_sum == q * q * rep.derived_kernel_sum, "kernel ratio d=" + std::to_string(d));
      }
  const auto kernel_relation = check_orchestrator("eq28-residual", grid);
  o.require(kernel_relation.passed(), "eq28-residual relation");
  return o;
}

Outcome values_at_one() {
  Outcome o;
  for (unsigned long d : {3UL, 5UL})
    for (const auto& chi : enumerate_characters(d))
      for (unsigned long zo : {1UL, 3UL})
        for (unsigned n = 0; n <= 5; ++n)
          o.require(unit_q_check(chi, zo, zo == 1 ? 0 : 1, n).equal,
                    "d=" + std::to_string(d) + " zeta-order=" + std::to_string(zo) + " n=" + std::to_string(n));
  const auto anchor = unit_q_check(quadratic_character(3), 1, 0, 0);
  o.require(anchor.equal && equals_rational(anchor.lhs, Rational(-2)) && equals_rational(anchor.rhs, Rational(-2)),
            "anchor -2");
  return o;
}

Outcome padic() {
  Outcome o;
  const auto nondecreasing_rate = [](const TruncationReport& r) {
    for (std::size_t i = 0; i < r.levels.size(); ++i) {
      if (r.levels[i].valuation < Valuation(static_cast<long>(r.levels[i].level))) return false;
      if (i > 0 && r.levels[i].valuation < r.levels[i - 1].valuation) return false;
    }
    return true;
  };
  for (unsigned long p : {3UL, 5UL}) {
    const Rational q(static_cast<long>(p + 1));
    for (unsigned n = 0; n <= 4; ++n)
      for (const auto& chi : {std::optional<DirichletCharacter>(), std::optional(quadratic_character(p))}) {
        const std::string where = "p=" + std::to_string(p) + " n=" + std::to_string(n) + (chi ? " quadratic" : "");
        const auto rep = padic_truncation(n, chi, q, p, 4);
        o.require(rep.levels.size() == 5 && nondecreasing_rate(rep), "normalized " + where);
        if (chi) {
          const auto c2 = unnormalized_convergence(n, chi, q, p, 4);
          o.require(nondecreasing_rate(c2.observed), "unnormalized " + where);
          o.require(c2.ratio == q * q, "limit ratio " + where);
        }
      }
  }
  const auto anchor = padic_truncation(1, std::nullopt, Rational(4), 3, 1);
  const Rational exact = poly_twist_integral(1, Rational(0), Rational(1), frac(1, 4));
  o.require(exact == frac(-1, 5) && anchor.levels[1].valuation == Valuation(1), "anchor 3/65");
  return o;
}

Outcome euler_gf() {
  Outcome o;
  for (unsigned long d : {1UL, 3UL, 5UL})
    for (unsigned long zo : {1UL, 3UL, 9UL}) {
      const auto zeta = CyclotomicNumber::zeta_power(CyclotomicField::make(zo), 1);
      o.require(euler_gf_consistency(d, zeta, 12).passed(),
                "d=" + std::to_string(d) + " zeta-order=" + std::to_string(zo));
    }
  o.require(twisted_euler(0, Rational(1), Rational(0)) == Rational(1), "E_0");
  o.require(twisted_euler(1, Rational(1), Rational(0)) == frac(-1, 2), "E_1");
  return o;
}

Outcome characters() {
  Outcome o;
  for (unsigned long d : {1UL, 3UL, 5UL, 9UL, 15UL, 27UL}) {
    const auto chars = enumerate_characters(d);
    o.require(chars.size() == euler_phi(d), "count d=" + std::to_string(d));
    const auto field = CyclotomicField::make(carmichael_lambda(d));
    for (std::size_t i = 0; i < chars.size(); ++i)
      for (std::size_t j = 0; j < chars.size(); ++j) {
        auto sum = CyclotomicNumber::zero(field);
        for (long a = 0; a < static_cast<long>(d); ++a)
          sum += chars[i].value_in(field, a) * chars[j].conjugate().value_in(field, a);
        const Rational expected = i == j ? Rational(static_cast<long>(euler_phi(d))) : Rational(0);
        o.require(sum == CyclotomicNumber::from_rational(field, expected), "orthogonality d=" + std::to_string(d));
      }
  }
  return o;
}

Outcome cli_contract() {
  Outcome o;
  const auto call = [](const std::vector<std::string>& args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    if (out_text) *out_text = out.str();
    return code;
  };
  const std::vector<std::vector<std::string>> commands = {
      {"classic", "--n", "6"},
      {"twisted", "--q", "5/2", "--d", "9", "--char", "index:2", "--zeta-order", "3", "--n", "0..4"},
      {"lfun", "--q", "3", "--d", "5", "--char", "quadratic", "--s", "-1.5,2"},
      {"integral", "--n", "2", "--q", "6", "--p", "5", "--levels", "3"},
      {"chars", "--d", "15"},
  };
  for (const auto& cmd : commands) {
    std::string a, b;
    o.require(call(cmd, &a) == 0 && call(cmd, &b) == 0 && a == b, "determinism: " + cmd[0]);
  }

  std::string text;
  call({"twisted", "--q", "5/2", "--d", "9", "--char", "index:2", "--zeta-order", "3", "--n", "0..4"}, &text);
  const TwistedConfig cfg(enumerate_characters(9)[2], 3, 1, frac(5, 2));
  const auto doc = Json::parse(text);
  for (const auto& v : doc.at("values")) {
    const auto n = v.at("n").get<unsigned>();
    o.require(cyclotomic_from_json(v.at("cyclotomic")) == twisted_A(cfg, n).value, "round trip n=" + std::to_string(n));
  }
  o.require(Json::parse(emit_json(doc)) == doc, "re-emission");

  o.require(call({"classic", "--n", "3"}) == 0, "exit 0");
  o.require(call({"check", "--relation", "unknown"}) == 2, "exit 2");
  o.require(call({"twisted", "--q", "2", "--d", "9", "--char", "quadratic", "--n", "0"}) == 3, "exit 3");

  for (const auto& rel : relation_names()) {
    std::string report;
    const int code = call({"check", "--relation", rel, "--grid", "default"}, &report);
    const auto summary = Json::parse(report).at("summary");
    o.require(code == 0 && summary.at("fail") == 0, "relation " + rel);
  }
  return o;
}

} // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_seconds;  // 0 for no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "classical Eulerian polynomials", kLimitCriterion1, classical},
      {2, "untwisted moments are Eulerian values (exact)", 0, moment_formula},
      {3, "generating function equals series closed form (exact)", 0, cross_path},
      {4, "L-function interpolation at non-positive integers (1e-9)", kLimitCriterion4, interpolation},
      {5, "residue-class decomposition of the integral (exact)", 0, distribution},
      {6, "normalization residual q^2 (exact)", 0, normalization},
      {7, "values at q = 1 via twisted Euler polynomials (exact)", 0, values_at_one},
      {8, "p-adic truncations converge at rate N", kLimitCriterion8, padic},
      {9, "twisted Euler generating function through order 12 (exact)", 0, euler_gf},
      {10, "character counts and orthogonality (exact)", 0, characters},
      {11, "CLI determinism, round trip, exit codes, all relations", kLimitCriterion11, cli_contract},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) outcome.require(false, "over time limit");
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (outcome.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [" << timing;
    if (c.limit_seconds > 0) std::cout << " < " << c.limit_seconds << "s";
    std::cout << "]";
    if (!outcome.detail.empty()) std::cout << " (" << outcome.detail << ")";
    std::cout << '\n';
    if (!outcome.ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
