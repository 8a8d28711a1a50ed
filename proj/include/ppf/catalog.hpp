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

#ifndef PPF_CATALOG_HPP_
#define PPF_CATALOG_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "ppf/group.hpp"

namespace ppf::catalog {

  GroupPtr cyclic(unsigned n);
  // Dihedral group of the given order (2n, n >= 2), acting on n points.
  GroupPtr dihedral(unsigned order);
  GroupPtr symmetric(unsigned n);  // n <= 4
  GroupPtr alternating4();
  GroupPtr quaternion8();
  GroupPtr elementary_abelian(unsigned p, unsigned rank);
  // C_m ⋊ C_n with the generator of C_n acting as x -> x^r.
  GroupPtr cyclic_semidirect(unsigned m, unsigned n, unsigned r);
  GroupPtr direct(GroupPtr const& a, GroupPtr const& b);

  // Names: C<n>, D<2n>, S<n>, A4, Q8, C<a>xC<b>, C<m>:C<n> (least r > 1
  // with r^n = 1 mod m).  Throws format_error on an unknown name.
  GroupPtr by_name(std::string_view name);

  // Default verification universe, in catalog order.
  std::vector<std::string> const& default_names();
  std::vector<GroupPtr>           default_groups(std::size_t max_order = 1u << 20);

}  // namespace ppf::catalog

#endif  // PPF_CATALOG_HPP_
