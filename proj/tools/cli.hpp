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

#ifndef PPF_TOOLS_CLI_HPP_
#define PPF_TOOLS_CLI_HPP_

#include <ostream>

namespace ppf::cli {

  // Exit codes.
  inline constexpr int ok              = 0;
  inline constexpr int failures_found  = 1;
  inline constexpr int bad_input       = 2;
  inline constexpr int bound_exceeded  = 3;

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ppf::cli

#endif  // PPF_TOOLS_CLI_HPP_
