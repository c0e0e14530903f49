#include "dte/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dte/error.hpp"

namespace dte {

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw MathError(ErrorKind::InvalidArgument, "expected a rational string, got " + j.dump());
}

Json to_json(const CyclotomicNumber& a) {
  Json coeffs = Json::array();
  for (const auto& c : a.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"order", a.order()}, {"coeffs", std::move(coeffs)}};
}

CyclotomicNumber cyclotomic_from_json(const Json& j) {
  const auto order = j.at("order").get<unsigned long>();
  if (order == 0) throw MathError(ErrorKind::InvalidArgument, "cyclotomic order must be >= 1");
  auto field = CyclotomicField::make(order);
  const auto& arr = j.at("coeffs");
  if (!arr.is_array() || arr.size() != field->degree())
    throw MathError(ErrorKind::InvalidArgument, "coeffs must have phi(N) = " + std::to_string(field->degree()) + " entries");
  std::vector<Rational> c;
  for (const auto& x : arr) c.push_back(rational_from_json(x));
  return CyclotomicNumber(field, std::move(c));
}

Json to_json(const ComplexValue& z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const DirichletCharacter& chi) {
  Json values = Json::object();
  for (std::size_t a = 0; a < chi.values().size(); ++a) {
    const auto& v = chi.values()[a];
    values[std::to_string(a)] = v ? Json(*v) : Json(nullptr);
  }
  return Json{{"modulus", chi.modulus()}, {"order", chi.order()}, {"values", std::move(values)}};
}

DirichletCharacter character_from_json(const Json& j) {
  try {
    const auto d = j.at("modulus").get<unsigned long>();
    const auto m = j.at("order").get<unsigned long>();
    DirichletCharacter::Table table(d);
    std::vector<bool> seen(d, false);
    for (const auto& [key, val] : j.at("values").items()) {
      std::size_t pos = 0;
      const unsigned long a = std::stoul(key, &pos);
      if (pos != key.size() || a >= d) throw MathError(ErrorKind::InvalidCharacter, "bad residue key '" + key + "'");
      seen[a] = true;
      if (!val.is_null()) table[a] = val.get<unsigned long>();
    }
    for (unsigned long a = 0; a < d; ++a)
      if (!seen[a]) throw MathError(ErrorKind::InvalidCharacter, "table misses residue " + std::to_string(a));
    return DirichletCharacter::from_table(d, m, std::move(table));
  } catch (const nlohmann::json::exception& e) {
    throw MathError(ErrorKind::InvalidCharacter, std::string("malformed character JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw MathError(ErrorKind::InvalidCharacter, "non-numeric residue key");
  }
}

DirichletCharacter read_character_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MathError(ErrorKind::InvalidArgument, "cannot open character file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw MathError(ErrorKind::InvalidCharacter, std::string("malformed character JSON: ") + e.what());
  }
  return character_from_json(j);
}

Json to_json(const TruncationReport& report) {
  Json levels = Json::array();
  for (const auto& l : report.levels)
    levels.push_back(Json{{"N", l.level}, {"S_N", to_json(l.partial)}, {"valuation", l.valuation.to_string()}});
  return Json{{"p", report.p}, {"exact", to_json(report.target)}, {"levels", std::move(levels)}};
}

std::string to_csv(const TruncationReport& report) {
  std::ostringstream os;
  os << "N,S_N,valuation\n";
  for (const auto& l : report.levels) os << l.level << ',' << l.partial << ',' << l.valuation.to_string() << '\n';
  return os.str();
}

namespace {

void emit(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(k).dump();
        out += ':';
        emit(v, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        emit(j[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        break;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      // keep it a float on re-parse
      if (std::string_view(buf).find_first_of(".eEn") == std::string_view::npos) out += ".0";
      break;
    }
    default:
      out += j.dump();
  }
}

} // namespace

std::string emit_json(const Json& j) {
  std::string out;
  emit(j, out);
  return out;
}

} // namespace dte
