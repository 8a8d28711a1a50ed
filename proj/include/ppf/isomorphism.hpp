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

#ifndef PPF_ISOMORPHISM_HPP_
#define PPF_ISOMORPHISM_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ppf/group.hpp"

namespace ppf {

  // Bound on |A| = |B| for exhaustive isomorphism search.
  inline constexpr std::size_t max_isomorphism_order = 128;

  // Lazy stream of all isomorphisms A -> B.  Generators of A form an
  // irredundant sequence (pinned generators first, then greedily the element
  // enlarging the span most); images are found by backtracking, with every
  // partial assignment checked on the Cayley graph of the span generated so
  // far.
  class IsomorphismSearch {
   public:
    struct Pin {
      Elem              generator;   // element of A
      std::vector<Elem> candidates;  // allowed images in B
    };

    using Filter = std::function<bool(GroupMap const&)>;

    IsomorphismSearch(GroupPtr         a,
                      GroupPtr         b,
                      std::vector<Pin> pins   = {},
                      Filter           filter = {});

    std::optional<GroupMap> next();

    std::vector<Elem> const& generators() const noexcept {
      return gens_;
    }

   private:
    bool extend(std::size_t depth, Elem image);

    GroupPtr                       a_;
    GroupPtr                       b_;
    Filter                         filter_;
    std::vector<Elem>              gens_;
    std::vector<std::vector<Elem>> candidates_;
    std::vector<std::size_t>       pos_;
    // maps_[d]: partial map on <g_0..g_{d-1}>, unset entries = order of B
    std::vector<std::vector<Elem>> maps_;
    std::size_t                    depth_   = 0;
    bool                           done_    = false;
    bool                           yielded_ = false;
  };

  // Irredundant generating sequence of g, starting with `first`.
  std::vector<Elem> generating_sequence(Group const&      g,
                                        std::vector<Elem> first = {});

  std::vector<GroupMap> all_isomorphisms(GroupPtr const& a, GroupPtr const& b);
  bool                  are_isomorphic(GroupPtr const& a, GroupPtr const& b);

  std::size_t automorphism_count(GroupPtr const& g);

  // |Aut(G)| / |Inn(G)|, Inn(G) ≅ G/Z(G).  |G| <= 64.
  std::size_t outer_automorphism_order(GroupPtr const& g);

}  // namespace ppf

#endif  // PPF_ISOMORPHISM_HPP_
