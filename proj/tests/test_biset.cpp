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

#include <numeric>

#include "doctest.h"
#include "ppf/biset.hpp"
#include "ppf/catalog.hpp"
#include "ppf/error.hpp"
#include "ppf/isomorphism.hpp"

using namespace ppf;

namespace {

  std::vector<Subgroup> subgroup_class_reps(GroupPtr const& g) {
    std::vector<Subgroup> reps;
    for (auto const& s : all_subgroups(g)) {
      bool fresh = true;
      for (auto const& r : reps) {
        for (Elem x = 0; x < g->order() && fresh; ++x) {
          fresh = !(conjugate(r, x) == s);
        }
      }
      if (fresh) {
        reps.push_back(s);
      }
    }
    return reps;
  }

  std::vector<Subgroup> normal_subgroups(GroupPtr const& g) {
    std::vector<Subgroup> out;
    for (auto const& s : all_subgroups(g)) {
      if (is_normal(s)) {
        out.push_back(s);
      }
    }
    return out;
  }

  bool is_pprime_group(Subgroup const& n, unsigned p) {
    return std::gcd(n.order(), std::size_t{p}) == 1;
  }

}  // namespace

TEST_CASE("restriction and induction of idempotents") {
  for (char const* name : {"C4", "C6", "S3", "D8", "Q8", "A4", "S4", "C3:C4"}) {
    auto g = catalog::by_name(name);
    for (unsigned p : {2u, 3u}) {
      auto tg = pair_table(g, p);
      for (auto const& k : subgroup_class_reps(g)) {
        CAPTURE(name);
        CAPTURE(p);
        CAPTURE(k.order());
        auto kg = as_group(k, "K");
        for (std::size_t i = 0; i < tg->size(); ++i) {
          CHECK(op_res(kg, idempotent(tg, i)) == predicted_res(kg, p, i));
        }
        auto tk = pair_table(kg.group, p);
        for (std::size_t j = 0; j < tk->size(); ++j) {
          CHECK(op_ind(kg, idempotent(tk, j)) == predicted_ind(kg, p, j));
        }
      }
    }
  }
}

TEST_CASE("inflation and deflation of idempotents") {
  for (char const* name : {"C4", "C6", "S3", "D8", "Q8", "A4", "S4", "C3:C4", "C2xC2"}) {
    auto g = catalog::by_name(name);
    for (unsigned p : {2u, 3u}) {
      auto tg = pair_table(g, p);
      for (auto const& n : normal_subgroups(g)) {
        CAPTURE(name);
        CAPTURE(p);
        CAPTURE(n.order());
        auto q  = quotient(n);
        auto tq = pair_table(q.group, p);
        for (std::size_t j = 0; j < tq->size(); ++j) {
          CHECK(op_inf(q, idempotent(tq, j)) == predicted_inf(q, p, j));
        }
        for (std::size_t i = 0; i < tg->size(); ++i) {
          auto const& a   = tg->pairs()[i];
          auto        def = op_def(q, idempotent(tg, i));
          // always a multiple of a single idempotent
          std::size_t nonzero = 0;
          for (auto const& v : def.species()) {
            nonzero += v.is_zero() ? 0 : 1;
          }
          CHECK(nonzero <= 1);
          if (span(a).order() == g->order()) {
            CHECK(def == predicted_def(q, a));
            if (is_pprime_group(n, p)) {
              CHECK(deflation_constant(a, n) == CycloNum(ratio(1, static_cast<long>(n.order()))));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("deflation constant examples") {
  auto c2 = catalog::cyclic(2);
  auto a  = pair_table(c2, 2)->pairs()[1];
  CHECK(deflation_constant(a, whole_group(c2)) == CycloNum(ratio(1, 2)));
  CHECK(deflation_constant(a, trivial_subgroup(c2)) == CycloNum(1));
  auto q = quotient(whole_group(c2));
  CHECK(op_def(q, idempotent(pair_table(c2, 2), 1)).species() == SpeciesVector{CycloNum(ratio(1, 2))});
  auto s3 = catalog::symmetric(3);
  auto t3 = pair_table(s3, 3);
  CHECK_THROWS_AS(deflation_constant(t3->pairs()[0], trivial_subgroup(s3)), structure_error);
  CHECK(deflation_constant(t3->pairs()[3], trivial_subgroup(s3)) == CycloNum(1));
}

TEST_CASE("deflation and inflation bimodules are diagonal exactly for p'-kernels") {
  for (auto const& g : catalog::default_groups(8)) {
    for (unsigned p : {2u, 3u}) {
      for (auto const& n : normal_subgroups(g)) {
        CAPTURE(g->name());
        CAPTURE(n.order());
        auto q = quotient(n);
        CHECK(deflation_is_diagonal(q, p) == is_pprime_group(n, p));
        CHECK(inflation_is_diagonal(q, p) == is_pprime_group(n, p));
      }
    }
  }
}

TEST_CASE("transport along isomorphisms permutes idempotents") {
  auto a  = catalog::by_name("S3");
  auto b  = share(from_permutation_generators(3, {parse_cycles("(1 2 3)", 3), parse_cycles("(2 3)", 3)}, "S3'"));
  auto ta = pair_table(a, 3);
  auto tb = pair_table(b, 3);
  for (auto const& f : all_isomorphisms(a, b)) {
    for (std::size_t i = 0; i < ta->size(); ++i) {
      auto const& x   = ta->pairs()[i];
      auto        loc = tb->locate(image(f, x.p), f(x.s));
      CHECK(op_iso(f, idempotent(ta, i)) == idempotent(tb, loc->index));
    }
  }
}

TEST_CASE("operations reject elements of the wrong group") {
  auto s3 = catalog::symmetric(3);
  auto c3 = all_subgroups(s3)[4];
  auto kg = as_group(c3);
  auto x  = TElement::trivial(pair_table(s3, 3));
  CHECK_THROWS_AS(op_ind(kg, x), structure_error);
  CHECK_NOTHROW(op_res(kg, x));
}

TEST_CASE("restriction of the trivial module is trivial") {
  auto g  = catalog::by_name("S4");
  auto tg = pair_table(g, 2);
  for (auto const& k : subgroup_class_reps(g)) {
    auto kg = as_group(k);
    CHECK(op_res(kg, TElement::trivial(tg)) == TElement::trivial(pair_table(kg.group, 2)));
  }
}
