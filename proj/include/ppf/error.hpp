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

#ifndef PPF_ERROR_HPP_
#define PPF_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ppf {

  class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // An input exceeds one of the enumeration bounds.
  class too_large : public error {
   public:
    using error::error;
  };

  // Malformed textual input (cycle strings, group files, records).
  class format_error : public error {
   public:
    using error::error;
  };

  // Structural precondition violated: non-normal kernel, mismatched
  // ambient groups, invalid pair, and the like.
  class structure_error : public error {
   public:
    using error::error;
  };

}  // namespace ppf

#endif  // PPF_ERROR_HPP_
