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

#include "ppf/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ppf/catalog.hpp"
#include "ppf/error.hpp"

namespace ppf {

  namespace {

    using nlohmann::json;

    std::size_t as_index(json const& v, std::string const& what) {
      if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw format_error(what + ": expected a nonnegative integer, got " + v.dump());
      }
      return v.get<std::size_t>();
    }

  }  // namespace

  GroupPtr parse_group_file(std::string const& text, std::string name) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (json::parse_error const& e) {
      // "[json.exception.parse_error.101] parse error at line L, column C: ..."
      std::string detail = e.what();
      if (auto const close = detail.find("] "); close != std::string::npos) {
        detail = detail.substr(close + 2);
      }
      throw format_error(name + ": " + detail);
    }
    if (!doc.is_object()) {
      throw format_error(name + ": expected an object with \"table\" or \"perm_gens\"");
    }
    if (doc.contains("table")) {
      json const& t = doc["table"];
      if (!t.is_array() || t.empty()) {
        throw format_error(name + ": \"table\" must be a nonempty array of rows");
      }
      std::vector<std::vector<Elem>> rows;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (!t[i].is_array()) {
          throw format_error(name + ": table row " + std::to_string(i) + " is not an array");
        }
        std::vector<Elem> row;
        for (std::size_t j = 0; j < t[i].size(); ++j) {
          std::size_t const x = as_index(t[i][j], name + ": table[" + std::to_string(i) + "][" + std::to_string(j) + "]");
          row.push_back(static_cast<Elem>(x));
        }
        rows.push_back(std::move(row));
      }
      return share(Group::from_rows(rows, std::move(name)));
    }
    if (doc.contains("perm_gens")) {
      if (!doc.contains("degree")) {
        throw format_error(name + ": \"perm_gens\" needs \"degree\"");
      }
      std::size_t const degree = as_index(doc["degree"], name + ": degree");
      json const&       gens   = doc["perm_gens"];
      if (!gens.is_array()) {
        throw format_error(name + ": \"perm_gens\" must be an array of cycle strings");
      }
      std::vector<Permutation> perms;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!gens[i].is_string()) {
          throw format_error(name + ": perm_gens[" + std::to_string(i) + "] is not a string");
        }
        try {
          perms.push_back(parse_cycles(gens[i].get<std::string>(), degree));
        } catch (format_error const& e) {
          throw format_error(name + ": perm_gens[" + std::to_string(i) + "]: " + e.what());
        }
      }
      return share(from_permutation_generators(degree, perms, std::move(name)));
    }
    throw format_error(name + ": expected \"table\" or \"perm_gens\"");
  }

  GroupPtr load_group(std::string_view source) {
    constexpr std::string_view prefix = "catalog:";
    if (source.substr(0, prefix.size()) == prefix) {
      return catalog::by_name(source.substr(prefix.size()));
    }
    std::ifstream in{std::string(source)};
    if (!in) {
      throw format_error("cannot open group file '" + std::string(source) + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_group_file(buf.str(), std::string(source));
  }

}  // namespace ppf
