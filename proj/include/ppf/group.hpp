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

#ifndef PPF_GROUP_HPP_
#define PPF_GROUP_HPP_

// Finite groups stored as full multiplication tables over element
// identifiers 0..order-1, with 0 the identity.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ppf/element_set.hpp"

namespace ppf {

  // Tables up to this order are accepted; direct products of two groups of
  // order 32 need the full range.
  inline constexpr std::size_t max_table_order       = 1024;
  inline constexpr std::size_t max_permutation_order = 512;
  inline constexpr std::size_t max_subgroup_order    = 128;
  inline constexpr std::size_t max_associativity_check = 128;

  class Group {
   public:
    // Validates the Latin-square and identity conditions, and associativity
    // for orders up to max_associativity_check.  Throws structure_error.
    static Group from_rows(std::vector<std::vector<Elem>> const& rows,
                           std::string                           name);
    static Group from_flat(std::size_t       order,
                           std::vector<Elem> table,
                           std::string       name);

    std::size_t order() const noexcept {
      return order_;
    }

    Elem mul(Elem a, Elem b) const noexcept {
      return table_[static_cast<std::size_t>(a) * order_ + b];
    }

    Elem inv(Elem a) const noexcept {
      return inverse_[a];
    }

    // g x g^-1
    Elem conj(Elem g, Elem x) const noexcept {
      return mul(mul(g, x), inverse_[g]);
    }

    Elem pow(Elem x, long long k) const noexcept;

    std::uint32_t elem_order(Elem x) const noexcept {
      return orders_[x];
    }

    std::string const& name() const noexcept {
      return name_;
    }

    std::vector<Elem> const& flat_table() const noexcept {
      return table_;
    }

    // Lowest common multiple of all element orders.
    std::uint64_t exponent() const noexcept;

   private:
    Group() = default;
    void finish();

    std::size_t                order_ = 0;
    std::vector<Elem>          table_;
    std::vector<Elem>          inverse_;
    std::vector<std::uint32_t> orders_;
    std::string                name_;
  };

  using GroupPtr = std::shared_ptr<Group const>;

  inline GroupPtr share(Group g) {
    return std::make_shared<Group const>(std::move(g));
  }

  class Subgroup {
   public:
    Subgroup() = default;

    // Checks closure; throws structure_error if the set is not a subgroup.
    Subgroup(GroupPtr parent, std::vector<Elem> elements);

    // No checks: the caller guarantees closure.
    static Subgroup closed(GroupPtr parent, ElementSet mask);

    GroupPtr const& parent() const noexcept {
      return parent_;
    }

    std::vector<Elem> const& elements() const noexcept {
      return elements_;
    }

    ElementSet const& mask() const noexcept {
      return mask_;
    }

    std::size_t order() const noexcept {
      return elements_.size();
    }

    bool contains(Elem x) const noexcept {
      return mask_.contains(x);
    }

    bool is_subgroup_of(Subgroup const& other) const noexcept {
      return mask_.is_subset_of(other.mask_);
    }

    friend bool operator==(Subgroup const& a, Subgroup const& b) noexcept {
      return a.mask_ == b.mask_;
    }

    // Canonical order: size, then lexicographic element list.
    friend std::strong_ordering operator<=>(Subgroup const& a,
                                            Subgroup const& b) noexcept {
      if (auto c = a.order() <=> b.order(); c != 0) {
        return c;
      }
      return a.elements_ <=> b.elements_;
    }

   private:
    GroupPtr          parent_;
    std::vector<Elem> elements_;
    ElementSet        mask_;
  };

  class GroupMap {
   public:
    GroupMap() = default;
    GroupMap(GroupPtr source, GroupPtr target, std::vector<Elem> images);

    Elem operator()(Elem x) const noexcept {
      return images_[x];
    }

    GroupPtr const& source() const noexcept {
      return source_;
    }
    GroupPtr const& target() const noexcept {
      return target_;
    }
    std::vector<Elem> const& images() const noexcept {
      return images_;
    }

    bool is_homomorphism() const noexcept;
    bool is_injective() const;
    bool is_bijective() const;

    // (this after first)(x) = this(first(x))
    GroupMap after(GroupMap const& first) const;
    // Inverse of a bijective map.
    GroupMap inverse() const;

   private:
    GroupPtr          source_;
    GroupPtr          target_;
    std::vector<Elem> images_;
  };

  // Subgroups generated from elements.
  Subgroup trivial_subgroup(GroupPtr const& g);
  Subgroup whole_group(GroupPtr const& g);
  Subgroup generate(GroupPtr const& g, std::span<Elem const> gens);
  Subgroup join(Subgroup const& s, Elem x);

  // Every subgroup exactly once, sorted canonically.  |G| <= 128.
  std::vector<Subgroup> all_subgroups(GroupPtr const& g);

  // Orbits of conjugation, each sorted, ordered by least element.
  std::vector<std::vector<Elem>> conjugacy_classes(Group const& g);

  Subgroup centralizer(GroupPtr const& g, std::span<Elem const> elems);
  Subgroup centralizer_in(Subgroup const& within, std::span<Elem const> elems);
  Subgroup normalizer(Subgroup const& p);
  Subgroup normalizer_in(Subgroup const& within, Subgroup const& p);
  Subgroup center(GroupPtr const& g);
  bool     is_normal(Subgroup const& n);
  bool     is_normal_in(Subgroup const& n, Subgroup const& within);
  // g S g^-1
  Subgroup conjugate(Subgroup const& s, Elem g);
  Subgroup intersection(Subgroup const& a, Subgroup const& b);
  // Product set AB, which must be a subgroup (one factor normalizes the other).
  Subgroup product(Subgroup const& a, Subgroup const& b);

  bool is_prime(std::uint64_t p) noexcept;
  bool is_power_of(std::uint64_t n, std::uint64_t p) noexcept;
  bool is_p_element(Group const& g, Elem x, unsigned p) noexcept;
  bool is_pprime_element(Group const& g, Elem x, unsigned p) noexcept;

  // g = p_part(g) * pprime_part(g), commuting factors of p-power and
  // p'-order, both powers of g.
  Elem p_part(Group const& g, Elem x, unsigned p) noexcept;
  Elem pprime_part(Group const& g, Elem x, unsigned p) noexcept;

  // A Sylow p-subgroup, grown one p-element of the normalizer at a time.
  Subgroup sylow_subgroup(GroupPtr const& g, unsigned p);

  struct Quotient {
    GroupPtr          parent;
    Subgroup          kernel;
    GroupPtr          group;
    GroupMap          projection;
    std::vector<Elem> coset_rep;  // quotient element -> least parent element

    Subgroup image(Subgroup const& s) const;
    Subgroup preimage(Subgroup const& s) const;
  };

  // Cosets are numbered by their least element, in increasing order.
  Quotient quotient(Subgroup const& n, std::string name = {});

  struct SubgroupGroup {
    GroupPtr group;
    GroupMap embedding;  // group -> parent

    Subgroup pull_back(Subgroup const& s) const;  // s inside the image
    Subgroup push_forward(Subgroup const& s) const;
    Elem     local(Elem parent_elem) const;
  };

  // Local identifiers follow the sorted element list of s.
  SubgroupGroup as_group(Subgroup const& s, std::string name = {});

  Subgroup image(GroupMap const& f, Subgroup const& s);
  Subgroup preimage(GroupMap const& f, Subgroup const& s);

  struct DirectProduct {
    GroupPtr group;
    GroupPtr left;
    GroupPtr right;

    Elem make(Elem h, Elem g) const noexcept {
      return static_cast<Elem>(h * right->order() + g);
    }
    Elem left_of(Elem x) const noexcept {
      return static_cast<Elem>(x / right->order());
    }
    Elem right_of(Elem x) const noexcept {
      return static_cast<Elem>(x % right->order());
    }
    // p_1 and p_2 of a subgroup of the product
    Subgroup project_left(Subgroup const& x) const;
    Subgroup project_right(Subgroup const& x) const;
    // k_1 = p_1(X ∩ ker p_2), k_2 = p_2(X ∩ ker p_1)
    Subgroup kernel_left(Subgroup const& x) const;
    Subgroup kernel_right(Subgroup const& x) const;
    bool     is_twisted_diagonal(Subgroup const& x) const;
  };

  DirectProduct direct_product(GroupPtr const& left, GroupPtr const& right);

  // P ⋊ C_n, where the generator of C_n acts through the automorphism
  // `action` of P, whose order must divide n.  Elements (x, i) are numbered
  // i * |P| + x.
  GroupPtr semidirect_product(GroupPtr const& p,
                              unsigned        n,
                              GroupMap const& action,
                              std::string     name);

  // Permutations are 0-based image vectors; products compose left to right.
  using Permutation = std::vector<std::uint32_t>;

  // Disjoint-cycle notation on points 1..degree, e.g. "(1 2 3)(4 5)".
  Permutation parse_cycles(std::string_view text, std::size_t degree);

  // Closure numbered breadth-first from the identity, generators tried in
  // input order.
  Group from_permutation_generators(std::size_t                     degree,
                                    std::vector<Permutation> const& gens,
                                    std::string                     name);

}  // namespace ppf

#endif  // PPF_GROUP_HPP_
