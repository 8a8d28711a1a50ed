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

#ifndef PPF_RECORDS_HPP_
#define PPF_RECORDS_HPP_

// One JSON object per line.  Rationals are "num/den" strings, cyclotomic
// values {"m": m, "coeffs": [...]} in the power basis of the canonical field.

#include <string>
#include <string_view>

#include "json.hpp"
#include "ppf/cyclo.hpp"
#include "ppf/pairs.hpp"
#include "ppf/ppring.hpp"

namespace ppf::records {

  using Json = nlohmann::ordered_json;

  Json     rational(Rational const& q);
  Rational to_rational(Json const& j);

  Json     cyclo(CycloNum const& x);
  CycloNum to_cyclo(Json const& j);

  Json pair(Pair const& a);
  Json species(SpeciesVector const& v);
  Json terms(Combination const& c);

  std::string line(Json const& record);
  Json        parse_line(std::string_view text);

}  // namespace ppf::records

#endif  // PPF_RECORDS_HPP_
