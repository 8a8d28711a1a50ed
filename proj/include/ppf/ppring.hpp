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

#ifndef PPF_PPRING_HPP_
#define PPF_PPRING_HPP_

// The ring FT(G) in species coordinates.  Elements carry, when available, an
// expansion in monomial modules Ind_L^G k_λ.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ppf/cyclo.hpp"
#include "ppf/group.hpp"
#include "ppf/pairs.hpp"

namespace ppf {

  // Ind_L^G k_λ with λ: L -> Z/m a homomorphism (λ(x) is ζ_m^{λ(x)} through
  // the Brauer lift).  The modulus is reduced to the order of the image.
  class MonomialSymbol {
   public:
    // exponents[i] belongs to L.elements()[i].  Throws structure_error if λ
    // is not a homomorphism or its image has order divisible by the prime.
    static MonomialSymbol make(Subgroup l, std::vector<unsigned> exponents, unsigned m, unsigned prime);
    static MonomialSymbol trivial(Subgroup l);

    Subgroup const& subgroup() const noexcept {
      return l_;
    }
    GroupPtr const& group() const noexcept {
      return l_.parent();
    }
    unsigned modulus() const noexcept {
      return m_;
    }
    std::vector<unsigned> const& exponents() const noexcept {
      return lambda_;
    }
    // λ(x) for x ∈ L
    unsigned exponent(Elem x) const;

    friend bool operator==(MonomialSymbol const& a, MonomialSymbol const& b) noexcept {
      return a.m_ == b.m_ && a.l_ == b.l_ && a.lambda_ == b.lambda_;
    }
    friend std::strong_ordering operator<=>(MonomialSymbol const& a, MonomialSymbol const& b) noexcept {
      if (auto c = a.l_ <=> b.l_; c != 0) {
        return c;
      }
      if (auto c = a.m_ <=> b.m_; c != 0) {
        return c;
      }
      return a.lambda_ <=> b.lambda_;
    }

   private:
    MonomialSymbol(Subgroup l, std::vector<unsigned> lambda, unsigned m);

    Subgroup              l_;
    std::vector<unsigned> lambda_;
    unsigned              m_ = 1;
  };

  using Combination = std::map<MonomialSymbol, CycloNum>;

  void add_term(Combination& c, MonomialSymbol const& s, CycloNum const& coeff);

  // Brauer character of (Ind_L^G k_λ)[P] at s: Σ λ(x^-1 s x) over cosets xL
  // with x^-1 P x <= L and x^-1 s x ∈ L.
  CycloNum species_of_monomial(MonomialSymbol const& m, Subgroup const& p, Elem s);
  CycloNum species_of_monomial(MonomialSymbol const& m, Pair const& a);

  using SpeciesVector = std::vector<CycloNum>;

  class TElement {
   public:
    explicit TElement(PairTablePtr table);  // zero

    static TElement from_terms(PairTablePtr table, Combination terms);
    static TElement from_species(PairTablePtr table, SpeciesVector species);
    static TElement symbol(PairTablePtr table, MonomialSymbol const& m);
    static TElement trivial(PairTablePtr table);  // [k]

    PairTablePtr const& table() const noexcept {
      return table_;
    }
    GroupPtr const& group() const noexcept {
      return table_->group();
    }
    unsigned prime() const noexcept {
      return table_->prime();
    }

    bool has_terms() const noexcept {
      return terms_.has_value();
    }
    // Throws error for species-only elements.
    Combination const& terms() const;

    SpeciesVector const& species() const noexcept {
      return species_;
    }

    TElement scaled(CycloNum const& c) const;

    friend TElement operator+(TElement const& a, TElement const& b);
    friend TElement operator-(TElement const& a, TElement const& b);
    // Pointwise in species; the result has no symbol expansion.
    friend TElement operator*(TElement const& a, TElement const& b);
    friend bool     operator==(TElement const& a, TElement const& b);

   private:
    PairTablePtr               table_;
    std::optional<Combination> terms_;
    SpeciesVector              species_;
  };

  // μ(x, top) in a poset of subgroups ordered by inclusion; entries for x not
  // below top are 0.
  std::vector<long long> mobius_to(std::vector<Subgroup> const& poset, std::size_t top);

  // Subgroups of P normalized by s, in canonical order.
  std::vector<Subgroup> stable_subgroups(Subgroup const& p, Elem s);

  // Every subgroup of ⟨Ps⟩ as subgroups of the ambient group.
  std::vector<Subgroup> span_subgroups(Pair const& a);

  // i with x ∈ P s^i, for x in ⟨Ps⟩; indexed by ambient element, -1 outside.
  std::vector<int> span_exponents(Pair const& a);

  // |C_{N_G(P)/P}(sP)|
  std::size_t quotient_centralizer_order(Pair const& a);
  // |C_{N_G(P)}(s)|
  std::size_t normalizer_centralizer_order(Pair const& a);

  // Sum over L <= ⟨Ps⟩ with PL = ⟨Ps⟩ and characters φ of ⟨s⟩.
  TElement idempotent_v1(Pair const& a);
  // Sum over s-stable L <= P, modules induced from ⟨Ls⟩.
  TElement idempotent_v2(Pair const& a);

  // F^G for the i-th pair class
  TElement idempotent(PairTablePtr const& table, std::size_t index);

}  // namespace ppf

#endif  // PPF_PPRING_HPP_
