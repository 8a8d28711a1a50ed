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

#ifndef PPF_IO_HPP_
#define PPF_IO_HPP_

#include <string>
#include <string_view>

#include "ppf/group.hpp"

namespace ppf {

  // "catalog:NAME" or a path to a group file.
  GroupPtr load_group(std::string_view source);

  // {"table": [[...]]} with 0-based ids and 0 the identity, or
  // {"degree": n, "perm_gens": ["(1 2 3)", "(1 2)"]}.
  // Syntax errors carry the line and column; a bad table raises
  // structure_error from the table validation.
  GroupPtr parse_group_file(std::string const& text, std::string name);

}  // namespace ppf

#endif  // PPF_IO_HPP_
