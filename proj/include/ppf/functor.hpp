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

#ifndef PPF_FUNCTOR_HPP_
#define PPF_FUNCTOR_HPP_

// Subfunctors e_{P,s} of the diagonal p-permutation functor, their
// evaluations, the simple summand dimensions, the essential algebra
// invariants and the composition of idempotents across groups.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ppf/group.hpp"
#include "ppf/pairs.hpp"
#include "ppf/ppring.hpp"

namespace ppf {

  struct CompositionResult {
    TElement                 product;  // over H
    bool                     zero_by_support = false;
    std::vector<std::string> conditions;
    Elem                     conjugator = 0;  // g with (1,g) t (1,g)^-1 = (u, s^j)
    unsigned                 j          = 0;
  };

  // F^{HxG}_{Q,t} ⊗_{kG} F^G_{P,s} with G = ⟨Ps⟩ = the right factor of the
  // product.  Throws structure_error otherwise.
  CompositionResult compose_idempotents(DiagonalPair const& dq, Pair const& a);

  // Interned D^Δ-pairs up to pair isomorphism.
  class LabelRegistry {
   public:
    // Label of the reduction of a.
    std::size_t label_of(Pair const& a);
    // Label of an already reduced pair.
    std::size_t intern(Pair const& reduced);

    std::vector<Pair> const& labels() const noexcept {
      return labels_;
    }

   private:
    std::vector<Pair> labels_;
  };

  // Indices into the pair table of H whose idempotents span e_{P,s}(H).
  std::vector<std::size_t> subfunctor_eval(Pair const& a, GroupPtr const& h);

  struct Block {
    std::size_t              label;
    std::vector<std::size_t> pairs;  // indices into the pair table of H
  };

  // Pair classes of H grouped by the label of their reduction, in order of
  // first occurrence.
  std::vector<Block> functor_decomposition(GroupPtr const& h, unsigned prime, LabelRegistry& registry);

  // Number of pair classes of H whose reduction is isomorphic to the label.
  std::size_t simple_dim(Pair const& label, GroupPtr const& h);

  // Conjugacy classes of p'-elements of H.
  std::size_t s11_dim(GroupPtr const& h, unsigned prime);

  struct LatticeReport {
    std::size_t              label_sets = 0;
    std::size_t              checks     = 0;
    std::vector<std::string> failures;

    bool ok() const noexcept {
      return failures.empty();
    }
  };

  // For label sets A (all subsets up to 12 labels, else singletons and
  // pairs): A -> (span of e_A at every H of the universe) is injective, the
  // labels below the sum are exactly A, each lies below a single summand,
  // and all labels of H span all of FT(H).
  LatticeReport lattice_check(std::vector<GroupPtr> const& universe, std::vector<Pair> const& labels,
                              unsigned prime);

  struct EssentialReport {
    GroupPtr            group;
    unsigned            prime = 2;
    bool                nonzero = false;
    std::optional<Pair> witness;
    unsigned            n         = 0;
    std::size_t         dimension = 0;
  };

  // |G| <= 64.
  EssentialReport essential_report(GroupPtr const& g, unsigned prime);

}  // namespace ppf

#endif  // PPF_FUNCTOR_HPP_
