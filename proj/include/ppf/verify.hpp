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

#ifndef PPF_VERIFY_HPP_
#define PPF_VERIFY_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ppf/group.hpp"

namespace ppf {

  struct Failure {
    std::string suite;
    std::string check;
    std::string group;
    unsigned    prime = 0;
    std::string pair;
    std::string lhs;
    std::string rhs;
  };

  struct SuiteReport {
    std::string          suite;
    std::size_t          checks = 0;
    std::vector<Failure> failures;
  };

  // idempotents, biset, functor, essential, cyclo
  std::vector<std::string> const& suite_names();

  // Runs one suite, or every suite for "all", over the universe.  Each group
  // is checked at 2, 3 and the primes dividing its order.  Throws
  // format_error on an unknown suite.
  std::vector<SuiteReport> run_verify(std::string_view suite, std::vector<GroupPtr> const& universe);

  std::vector<unsigned> verification_primes(Group const& g);

}  // namespace ppf

#endif  // PPF_VERIFY_HPP_
