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

#include "doctest.h"
#include "oracles.hpp"
#include "ppf/catalog.hpp"
#include "ppf/error.hpp"
#include "ppf/ppring.hpp"

using namespace ppf;

namespace {

  Subgroup subgroup_of_order(GroupPtr const& g, std::size_t order) {
    for (auto const& s : all_subgroups(g)) {
      if (s.order() == order) {
        return s;
      }
    }
    throw error("no subgroup of that order");
  }

  SpeciesVector ints(std::initializer_list<long> v) {
    SpeciesVector out;
    for (long x : v) {
      out.emplace_back(x);
    }
    return out;
  }

}  // namespace

TEST_CASE("species of permutation modules on C2") {
  auto g     = catalog::cyclic(2);
  auto table = pair_table(g, 2);
  auto reg   = TElement::symbol(table, MonomialSymbol::trivial(trivial_subgroup(g)));
  CHECK(reg.species() == ints({2, 0}));
  CHECK(TElement::trivial(table).species() == ints({1, 1}));
  CHECK(TElement(table).species() == ints({0, 0}));
}

TEST_CASE("dimension at the trivial pair is the index") {
  for (auto const& g : catalog::default_groups(24)) {
    for (auto const& l : all_subgroups(g)) {
      auto m = MonomialSymbol::trivial(l);
      CHECK(species_of_monomial(m, trivial_subgroup(g), 0) ==
            CycloNum(static_cast<long>(g->order() / l.order())));
    }
  }
}

TEST_CASE("coset scan in S3 at (C3, transposition)") {
  auto g  = catalog::symmetric(3);
  auto c3 = subgroup_of_order(g, 3);
  Elem t  = 0;
  while (g->elem_order(t) != 2) {
    ++t;
  }
  CHECK(species_of_monomial(MonomialSymbol::trivial(c3), c3, t).is_zero());
  CHECK(species_of_monomial(MonomialSymbol::trivial(c3), c3, 0) == CycloNum(2));
}

TEST_CASE("idempotents of C2") {
  auto g     = catalog::cyclic(2);
  auto table = pair_table(g, 2);
  auto e0    = idempotent_v1(table->pairs()[0]);
  auto e1    = idempotent_v1(table->pairs()[1]);
  CHECK(e0.species() == ints({1, 0}));
  CHECK(e1.species() == ints({0, 1}));
  REQUIRE(e0.terms().size() == 1);
  CHECK(e0.terms().begin()->second == CycloNum(Rational(1, 2)));
  REQUIRE(e1.terms().size() == 2);
  auto reg = MonomialSymbol::trivial(trivial_subgroup(g));
  auto one = MonomialSymbol::trivial(whole_group(g));
  CHECK(e1.terms().at(reg) == CycloNum(Rational(-1, 2)));
  CHECK(e1.terms().at(one) == CycloNum(1));
  CHECK(idempotent_v2(table->pairs()[0]).terms() == e0.terms());
  CHECK(idempotent_v2(table->pairs()[1]).terms() == e1.terms());
}

TEST_CASE("idempotent at (1,1) is the regular module over |G|") {
  for (auto const& g : catalog::default_groups(24)) {
    auto table = pair_table(g, 2);
    auto e     = idempotent_v1(table->pairs()[0]);
    REQUIRE(e.terms().size() == 1);
    CHECK(e.terms().begin()->first.subgroup().order() == 1);
    CHECK(e.terms().begin()->second == CycloNum(Rational(1, static_cast<long>(g->order()))));
  }
}

TEST_CASE("S3 at p = 3: second formula gives the indicator") {
  auto g     = catalog::symmetric(3);
  auto table = pair_table(g, 3);
  auto e     = idempotent_v2(table->pairs()[3]);
  CHECK(e.species() == ints({0, 0, 0, 1}));
}

TEST_CASE("delta duality, formula agreement and completeness") {
  for (auto const& g : catalog::default_groups(24)) {
    for (unsigned p : {2u, 3u}) {
      CAPTURE(g->name());
      CAPTURE(p);
      auto     table = pair_table(g, p);
      TElement sum(table);
      for (std::size_t i = 0; i < table->size(); ++i) {
        auto e1 = idempotent_v1(table->pairs()[i]);
        auto e2 = idempotent_v2(table->pairs()[i]);
        for (std::size_t j = 0; j < table->size(); ++j) {
          CHECK(e1.species()[j] == CycloNum(i == j ? 1 : 0));
        }
        CHECK(e1 == e2);
        sum = sum + e1;
      }
      CHECK(sum == TElement::trivial(table));
    }
  }
}

TEST_CASE("ring operations") {
  auto g     = catalog::symmetric(3);
  auto table = pair_table(g, 3);
  auto one   = TElement::trivial(table);
  for (std::size_t i = 0; i < table->size(); ++i) {
    auto e = idempotent(table, i);
    CHECK(e * one == e);
    CHECK(e * e == e);
    for (std::size_t j = 0; j < table->size(); ++j) {
      if (i != j) {
        CHECK(e * idempotent(table, j) == TElement(table));
      }
    }
  }
  auto prod = idempotent(table, 0) * one;
  CHECK_FALSE(prod.has_terms());
  CHECK_THROWS_AS(prod.terms(), error);
  auto other = pair_table(catalog::cyclic(6), 3);
  CHECK_THROWS_AS(one + TElement::trivial(other), structure_error);
}

TEST_CASE("tensor products of permutation modules multiply species") {
  // k[G/A] ⊗ k[G/B] = ⊕ k[G/(A ∩ xBx^-1)] over double cosets
  auto g     = catalog::symmetric(3);
  auto table = pair_table(g, 2);
  auto c2    = subgroup_of_order(g, 2);
  auto x     = TElement::symbol(table, MonomialSymbol::trivial(c2));
  auto prod  = x * x;
  // S3/C2 x S3/C2 has orbits with stabilizers C2 and 1
  auto expected = TElement::symbol(table, MonomialSymbol::trivial(c2)) +
                  TElement::symbol(table, MonomialSymbol::trivial(trivial_subgroup(g)));
  CHECK(prod == expected);
}

TEST_CASE("monomial symbol validation") {
  auto g  = catalog::cyclic(6);
  auto w  = whole_group(g);
  CHECK_NOTHROW(MonomialSymbol::make(w, {0, 1, 2, 3, 4, 5}, 6, 7));
  CHECK_THROWS_AS(MonomialSymbol::make(w, {0, 1, 2, 3, 4, 5}, 6, 2), structure_error);
  CHECK_THROWS_AS(MonomialSymbol::make(w, {0, 1, 1, 3, 4, 5}, 6, 7), structure_error);
  auto s = MonomialSymbol::make(w, {0, 2, 4, 0, 2, 4}, 6, 2);
  CHECK(s.modulus() == 3);
  CHECK(s.exponent(4) == 1);
}

TEST_CASE("Mobius function of the subgroup lattice of S3") {
  auto g    = catalog::symmetric(3);
  auto subs = all_subgroups(g);
  auto mu   = mobius_to(subs, subs.size() - 1);
  // known values: μ(1,S3) = 3, μ(C2,S3) = -1, μ(C3,S3) = -1
  CHECK(mu[0] == 3);
  CHECK(mu[1] == -1);
  CHECK(mu[4] == -1);
  CHECK(mu[5] == 1);
}

TEST_CASE("species of a nontrivial character") {
  // C3 at p = 2: the pair (1, g) sees λ(g)
  auto g     = catalog::cyclic(3);
  auto w     = whole_group(g);
  auto sym   = MonomialSymbol::make(w, {0, 1, 2}, 3, 2);
  auto table = pair_table(g, 2);
  auto x     = TElement::symbol(table, sym);
  REQUIRE(table->size() == 3);
  CHECK(x.species()[0] == CycloNum(1));
  CHECK(x.species()[1] == CycloNum::root_of_unity(3, 1));
  CHECK(x.species()[2] == CycloNum::root_of_unity(3, 2));
}

TEST_CASE("species agree with Brauer quotients in characteristic 2") {
  std::size_t compared = 0;
  for (auto const& g : catalog::default_groups(8)) {
    auto const table = pair_table(g, 2);
    for (auto const& m : oracle::sample_symbols(g, 2)) {
      for (auto const& a : table->pairs()) {
        CAPTURE(g->name());
        CAPTURE(a.to_string());
        CHECK(species_of_monomial(m, a) == oracle::brauer_species_char2(m, a.p, a.s));
        ++compared;
      }
    }
  }
  CHECK(compared > 100);
}
