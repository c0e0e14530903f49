#pragma once

#include <string>

#include <json.hpp>

#include "dte/characters.hpp"
#include "dte/cyclotomic.hpp"
#include "dte/fermionic.hpp"
#include "dte/rational.hpp"
#include "dte/series.hpp"

namespace dte {

using Json = nlohmann::ordered_json;

// Rationals are always the string "num/den".
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// {"order": N, "coeffs": ["a/b", ...]} with phi(N) coefficients.
Json to_json(const CyclotomicNumber& a);
CyclotomicNumber cyclotomic_from_json(const Json& j);

Json to_json(const ComplexValue& z);

template <typename F>
Json to_json(const TruncatedSeries<F>& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

// {"modulus": d, "order": M, "values": {"a": k or null, ...}}
Json to_json(const DirichletCharacter& chi);
DirichletCharacter character_from_json(const Json& j);
DirichletCharacter read_character_file(const std::string& path);

Json to_json(const TruncationReport& report);
// Columns N,S_N,valuation; "inf" for an infinite valuation.
std::string to_csv(const TruncationReport& report);

// Compact, key order preserved, floats printed with 17 significant digits.
std::string emit_json(const Json& j);

} // namespace dte
