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

#ifndef PPF_PAIRS_HPP_
#define PPF_PAIRS_HPP_

// Pairs (P, s): a p-subgroup P of G together with a p'-element s of its
// normalizer.  ⟨Ps⟩ = P⟨s⟩ is always realized inside the ambient group.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ppf/group.hpp"

namespace ppf {

  struct Pair {
    GroupPtr group;
    Subgroup p;
    Elem     s = 0;
    unsigned prime = 2;

    // Checks that P is a p-group, s a p'-element and s ∈ N_G(P).
    static Pair make(Subgroup p, Elem s, unsigned prime);

    // "(P=[ids], s=id)"
    std::string to_string() const;
  };

  Subgroup      span(Pair const& a);
  SubgroupGroup span_group(Pair const& a);

  // The same pair inside its own span, with local identifiers.
  Pair localize(Pair const& a);

  // C_{⟨s⟩}(P)
  Subgroup core_centralizer(Pair const& a);

  // Pair classes of (G, p), with a classifier for arbitrary pairs.
  class PairTable {
   public:
    struct Location {
      std::size_t index;      // pair class
      Elem        conjugator; // g with g·(P_rep, s_rep)·g^-1 = (P, s)
    };

    PairTable(GroupPtr g, unsigned prime);

    GroupPtr const& group() const noexcept {
      return group_;
    }
    unsigned prime() const noexcept {
      return prime_;
    }
    std::vector<Pair> const& pairs() const noexcept {
      return pairs_;
    }
    std::size_t size() const noexcept {
      return pairs_.size();
    }
    // lcm of the orders of the p'-elements of G
    unsigned modulus() const noexcept {
      return modulus_;
    }

    // p-subgroup class representatives, ascending
    std::vector<Subgroup> const& p_subgroups() const noexcept {
      return p_reps_;
    }
    Subgroup const& normalizer_of(std::size_t p_class) const {
      return normalizers_[p_class];
    }
    std::size_t p_class_of_pair(std::size_t index) const {
      return pair_p_class_[index];
    }

    // Where a p-subgroup lies: (class, g) with g P_rep g^-1 = P.
    std::pair<std::size_t, Elem> locate_subgroup(Subgroup const& p) const;
    std::optional<Location>      locate(Subgroup const& p, Elem s) const;
    Location                     locate(Pair const& a) const;

    // |N_G(P, s)| = |C_{N_G(P)}(s)| for the class representative.
    std::size_t stabilizer_order(std::size_t index) const;

   private:
    GroupPtr                                 group_;
    unsigned                                 prime_;
    unsigned                                 modulus_ = 1;
    std::vector<Subgroup>                    p_reps_;
    std::vector<Subgroup>                    normalizers_;
    // per p-class: element of G -> (pair index or -1, n ∈ N with n s_rep n^-1 = elem)
    std::vector<std::vector<std::pair<std::ptrdiff_t, Elem>>> s_class_;
    std::vector<Pair>                        pairs_;
    std::vector<std::size_t>                 pair_p_class_;
    struct Hit {
      std::size_t p_class;
      Elem        conjugator;
    };
    std::unordered_map<ElementSet, Hit, ElementSetHash> subgroup_index_;
  };

  using PairTablePtr = std::shared_ptr<PairTable const>;

  // Memoized per group object and prime.
  PairTablePtr pair_table(GroupPtr const& g, unsigned prime);

  std::vector<Pair> enumerate_pairs(GroupPtr const& g, unsigned prime);

  // g (P, s) g^-1
  Pair conjugate(Pair const& a, Elem g);
  bool pairs_conjugate(Pair const& a, Pair const& b);

  // An isomorphism ⟨P_a s_a⟩ -> ⟨P_b s_b⟩ sending s_a to a conjugate of s_b.
  bool pairs_isomorphic(Pair const& a, Pair const& b);

  // The image of a in ⟨Ps⟩ / C_{⟨s⟩}(P).  The quotient numbers cosets by
  // their least element of the span.
  Pair reduce_pair(Pair const& a);

  bool is_ddelta(Pair const& a);

  // Some normal p'-subgroup K of ⟨P_source s_source⟩ has
  // (P_source K/K, s_source K) ≅ target.
  bool is_pprime_quotient(Pair const& target, Pair const& source);

  struct DiagonalPair {
    std::shared_ptr<DirectProduct const> product;  // H x G
    Pair                                 pair;
    Subgroup                             first;    // p_1(Q) <= H
    Subgroup                             second;   // p_2(Q) <= G
    std::vector<Elem>                    eta;      // H elem -> G elem on p_1(Q)

    Elem u() const noexcept {
      return product->left_of(pair.s);
    }
    Elem v() const noexcept {
      return product->right_of(pair.s);
    }
    std::string to_string() const;
  };

  // Pairs of H x G with twisted diagonal P, up to H x G conjugacy.  Ordered
  // by the classes of p_1(P) in H, of p_2(P) in G, the fused isomorphism,
  // then t.
  std::vector<DiagonalPair> enumerate_diagonal_pairs(GroupPtr const& h,
                                                     GroupPtr const& g,
                                                     unsigned        prime);

  inline constexpr std::size_t max_diagonal_factor_order = 32;

}  // namespace ppf

#endif  // PPF_PAIRS_HPP_
