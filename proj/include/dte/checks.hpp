#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dte/characters.hpp"
#include "dte/rational.hpp"
#include "dte/serialize.hpp"

namespace dte {

struct GridSpec {
  std::vector<unsigned> n_values;
  std::vector<unsigned long> moduli;
  std::vector<unsigned long> zeta_orders;
  std::vector<Rational> q_values;
  std::vector<unsigned long> primes;  // p-adic relations use q = 1 + p
  unsigned max_level = 4;
  std::size_t series_order = 12;      // truncation order for the Euler generating function check
  double tol = 1e-9;

  static GridSpec default_grid();
  // Keys "n", "d", "zeta_orders", "q", "p", "levels", "series_order", "tol";
  // absent keys keep their default-grid value.
  static GridSpec from_json(const Json& j);
  Json to_json() const;
};

struct LabeledCharacter {
  std::string label;
  DirichletCharacter chi;
};

// Principal, the quadratic character when d >= 3 is squarefree, and the first
// enumerated character of order > 2 if one exists.
std::vector<LabeledCharacter> grid_characters(unsigned long modulus);

enum class Verdict { Pass, Fail, Skip };

struct CheckPoint {
  std::string key;
  Verdict verdict;
  std::string detail;  // residual, values or the skip/fail reason
};

struct CheckReport {
  std::string relation;
  Json grid;
  std::vector<CheckPoint> points;  // sorted by key

  std::size_t count(Verdict v) const;
  bool passed() const { return count(Verdict::Fail) == 0; }
  Json to_json() const;
};

const std::vector<std::string>& relation_names();
bool is_known_relation(const std::string& name);

// InvalidArgument for an unknown relation.
CheckReport check_orchestrator(const std::string& relation, const GridSpec& grid);

} // namespace dte
