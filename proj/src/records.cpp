/*
   Copyright 2026 The ppfunctor Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ppf/records.hpp"

#include "ppf/error.hpp"

namespace ppf::records {

  Json rational(Rational const& q) {
    return to_fraction(q);
  }

  Rational to_rational(Json const& j) {
    if (!j.is_string()) {
      throw format_error("expected a \"num/den\" string, got " + j.dump());
    }
    return parse_rational(j.get<std::string>());
  }

  Json cyclo(CycloNum const& x) {
    CycloNum const c = x.canonical();
    Json           coeffs = Json::array();
    for (auto const& q : c.coeffs()) {
      coeffs.push_back(rational(q));
    }
    return Json{{"m", c.modulus()}, {"coeffs", std::move(coeffs)}};
  }

  CycloNum to_cyclo(Json const& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("coeffs") || !j["m"].is_number_unsigned() ||
        !j["coeffs"].is_array()) {
      throw format_error("expected {\"m\", \"coeffs\"}, got " + j.dump());
    }
    unsigned const m = j["m"].get<unsigned>();
    if (m == 0 || m > 512) {
      throw format_error("cyclotomic modulus out of range: " + std::to_string(m));
    }
    std::vector<Rational> coeffs;
    for (auto const& q : j["coeffs"]) {
      coeffs.push_back(to_rational(q));
    }
    if (coeffs.size() != euler_phi(m)) {
      throw format_error("expected " + std::to_string(euler_phi(m)) + " coefficients for m = " + std::to_string(m));
    }
    return CycloNum::from_coeffs(m, std::move(coeffs));
  }

  Json pair(Pair const& a) {
    return Json{{"P", a.p.elements()}, {"s", a.s}};
  }

  Json species(SpeciesVector const& v) {
    Json out = Json::array();
    for (auto const& x : v) {
      out.push_back(cyclo(x));
    }
    return out;
  }

  Json terms(Combination const& c) {
    Json out = Json::array();
    for (auto const& [sym, coeff] : c) {
      std::vector<unsigned> ex;
      for (Elem x : sym.subgroup().elements()) {
        ex.push_back(sym.exponent(x));
      }
      out.push_back(Json{{"L", sym.subgroup().elements()},
                         {"m", sym.modulus()},
                         {"lambda", std::move(ex)},
                         {"coeff", cyclo(coeff)}});
    }
    return out;
  }

  std::string line(Json const& record) {
    return record.dump();
  }

  Json parse_line(std::string_view text) {
    try {
      return Json::parse(text);
    } catch (Json::parse_error const& e) {
      throw format_error("malformed record at byte " + std::to_string(e.byte) + ": " + std::string(text));
    }
  }

}  // namespace ppf::records
