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

#ifndef PPF_BISET_HPP_
#define PPF_BISET_HPP_

// Restriction, induction, inflation, deflation and transport of structure on
// monomial expansions, together with the closed forms these operations take
// on primitive idempotents.

#include <cstddef>

#include "ppf/cyclo.hpp"
#include "ppf/group.hpp"
#include "ppf/pairs.hpp"
#include "ppf/ppring.hpp"

namespace ppf {

  // Res^G_K along k.embedding; x over G = k.embedding.target().
  TElement op_res(SubgroupGroup const& k, TElement const& x);
  // Ind^G_K; x over k.group.
  TElement op_ind(SubgroupGroup const& k, TElement const& x);
  // Inf^G_{G/N}; x over q.group.
  TElement op_inf(Quotient const& q, TElement const& x);
  // Def^G_{G/N}; x over q.parent.
  TElement op_def(Quotient const& q, TElement const& x);
  // Transport along a bijective f; x over f.source().
  TElement op_iso(GroupMap const& f, TElement const& x);

  // Σ F^K_{Q,t} over the K-classes of G-conjugates of the given G-pair.
  TElement predicted_res(SubgroupGroup const& k, unsigned prime, std::size_t g_index);
  // |N_G(Q,t) : N_K(Q,t)| F^G_{Q,t}
  TElement predicted_ind(SubgroupGroup const& k, unsigned prime, std::size_t k_index);
  // Σ F^G_{Q,t} over the classes whose image is conjugate to the G/N-pair.
  TElement predicted_inf(Quotient const& q, unsigned prime, std::size_t quotient_index);
  // m_{P,s,N} F^{G/N}_{PN/N, sN}; requires G = ⟨Ps⟩.
  TElement predicted_def(Quotient const& q, Pair const& a);

  // m_{P,s,N} for G = ⟨Ps⟩, as a sum over s-stable Q <= P with ⟨Qs⟩N = G.
  CycloNum deflation_constant(Pair const& a, Subgroup const& n);

  // Whether every vertex of the permutation bimodule k[G/N] is twisted
  // diagonal, taken as a (G/N, G)-biset (deflation) or a (G, G/N)-biset
  // (inflation): Sylow subgroups of the point stabilizers.
  bool deflation_is_diagonal(Quotient const& q, unsigned prime);
  bool inflation_is_diagonal(Quotient const& q, unsigned prime);

}  // namespace ppf

#endif  // PPF_BISET_HPP_
