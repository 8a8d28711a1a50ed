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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "ppf/catalog.hpp"
#include "ppf/error.hpp"
#include "ppf/group.hpp"
#include "ppf/isomorphism.hpp"

using namespace ppf;

namespace {

  // Subgroup count by brute force over all subsets generated by pairs of
  // elements' closures; enough for groups whose subgroups are 2-generated.
  std::size_t count_two_generated(GroupPtr const& g) {
    std::set<std::vector<Elem>> seen;
    for (Elem a = 0; a < g->order(); ++a) {
      for (Elem b = 0; b < g->order(); ++b) {
        Elem const gens[] = {a, b};
        seen.insert(generate(g, gens).elements());
      }
    }
    return seen.size();
  }

}  // namespace

TEST_CASE("cyclic table is addition mod n") {
  auto g = catalog::cyclic(6);
  for (Elem a = 0; a < 6; ++a) {
    for (Elem b = 0; b < 6; ++b) {
      CHECK(g->mul(a, b) == (a + b) % 6);
    }
  }
  CHECK(g->elem_order(2) == 3);
  CHECK(g->exponent() == 6);
}

TEST_CASE("table validation rejects broken tables") {
  std::vector<std::vector<Elem>> rows = {{0, 1}, {1, 1}};
  CHECK_THROWS_AS(Group::from_rows(rows, "bad"), structure_error);
  std::vector<std::vector<Elem>> no_identity = {{1, 0}, {0, 1}};
  CHECK_THROWS_AS(Group::from_rows(no_identity, "bad"), structure_error);
  try {
    Group::from_rows(rows, "bad");
  } catch (structure_error const& e) {
    CHECK(std::string(e.what()).find("Latin") != std::string::npos);
  }
}

TEST_CASE("non-associative loop is rejected") {
  // A Latin square with identity 0 that is not a group (order 5 loop).
  std::vector<std::vector<Elem>> rows = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(Group::from_rows(rows, "loop"), structure_error);
}

TEST_CASE("subgroup counts match known values") {
  struct Case {
    char const* name;
    std::size_t count;
  };
  for (auto [name, count] : {Case{"C1", 1}, Case{"C2", 2}, Case{"C6", 4}, Case{"C2xC2", 5},
                             Case{"S3", 6}, Case{"D8", 10}, Case{"Q8", 6}, Case{"A4", 10},
                             Case{"S4", 30}, Case{"C3:C4", 8}, Case{"C7:C3", 10}}) {
    CAPTURE(name);
    auto g = catalog::by_name(name);
    CHECK(all_subgroups(g).size() == count);
  }
}

TEST_CASE("subgroup enumeration agrees with two-generator closure on small groups") {
  for (char const* name : {"S3", "D8", "Q8", "C2xC2", "C3:C4", "C7:C3"}) {
    CAPTURE(name);
    auto g = catalog::by_name(name);
    CHECK(all_subgroups(g).size() == count_two_generated(g));
  }
}

TEST_CASE("subgroups are sorted and closed") {
  auto g    = catalog::by_name("S4");
  auto subs = all_subgroups(g);
  CHECK(std::is_sorted(subs.begin(), subs.end()));
  for (auto const& s : subs) {
    for (Elem a : s.elements()) {
      for (Elem b : s.elements()) {
        CHECK(s.contains(g->mul(a, g->inv(b))));
      }
    }
  }
}

TEST_CASE("sylow subgroups have full p-part") {
  auto g = catalog::by_name("S4");
  CHECK(sylow_subgroup(g, 2).order() == 8);
  CHECK(sylow_subgroup(g, 3).order() == 3);
  CHECK(sylow_subgroup(catalog::by_name("C7:C3"), 7).order() == 7);
  CHECK(sylow_subgroup(catalog::by_name("C5"), 2).order() == 1);
}

TEST_CASE("p-part decomposition") {
  auto g = catalog::cyclic(12);
  for (Elem x = 0; x < 12; ++x) {
    Elem a = p_part(*g, x, 2);
    Elem b = pprime_part(*g, x, 2);
    CHECK(g->mul(a, b) == x);
    CHECK(g->mul(b, a) == x);
    CHECK(is_p_element(*g, a, 2));
    CHECK(is_pprime_element(*g, b, 2));
  }
}

TEST_CASE("centre, normalizer and quotient") {
  auto d8 = catalog::by_name("D8");
  CHECK(center(d8).order() == 2);
  auto q = quotient(center(d8));
  CHECK(q.group->order() == 4);
  CHECK(are_isomorphic(q.group, catalog::by_name("C2xC2")));
  auto s3 = catalog::by_name("S3");
  auto subs = all_subgroups(s3);
  CHECK_THROWS_AS(quotient(subs[1]), structure_error);
  CHECK(normalizer(subs[1]).order() == 2);
}

TEST_CASE("permutation closure and cycle parsing") {
  auto p = parse_cycles("(1 2 3)(4 5)", 5);
  CHECK(p == Permutation{1, 2, 0, 4, 3});
  CHECK_THROWS_AS(parse_cycles("(1 2 x)", 3), format_error);
  CHECK_THROWS_AS(parse_cycles("(1 9)", 3), format_error);
  auto s3 = from_permutation_generators(3, {parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)}, "S3");
  CHECK(s3.order() == 6);
}

TEST_CASE("automorphism and outer automorphism counts") {
  struct Case {
    char const* name;
    std::size_t aut;
    std::size_t out;
  };
  for (auto [name, aut, out] : {Case{"C1", 1, 1}, Case{"C5", 4, 4}, Case{"C8", 4, 4},
                                Case{"C2xC2", 6, 6}, Case{"S3", 6, 1}, Case{"D8", 8, 2},
                                Case{"Q8", 24, 6}, Case{"A4", 24, 2}, Case{"S4", 24, 1},
                                Case{"C7:C3", 42, 2}}) {
    CAPTURE(name);
    auto g = catalog::by_name(name);
    CHECK(automorphism_count(g) == aut);
    CHECK(outer_automorphism_order(g) == out);
  }
}

TEST_CASE("isomorphism search lists every isomorphism once") {
  auto a = catalog::by_name("S3");
  auto b = share(from_permutation_generators(3, {parse_cycles("(1 2 3)", 3), parse_cycles("(2 3)", 3)}, "S3'"));
  auto maps = all_isomorphisms(a, b);
  CHECK(maps.size() == 6);
  std::set<std::vector<Elem>> distinct;
  for (auto const& f : maps) {
    CHECK(f.is_homomorphism());
    CHECK(f.is_bijective());
    distinct.insert(f.images());
  }
  CHECK(distinct.size() == 6);
  CHECK_FALSE(are_isomorphic(catalog::by_name("D8"), catalog::by_name("Q8")));
  CHECK_FALSE(are_isomorphic(catalog::by_name("C4"), catalog::by_name("C2xC2")));
}

TEST_CASE("direct product projections") {
  auto dp = direct_product(catalog::cyclic(2), catalog::cyclic(3));
  CHECK(dp.group->order() == 6);
  CHECK(are_isomorphic(dp.group, catalog::cyclic(6)));
  Elem x = dp.make(1, 2);
  CHECK(dp.left_of(x) == 1);
  CHECK(dp.right_of(x) == 2);
}

TEST_CASE("catalog rejects unknown names") {
  CHECK_THROWS_AS(catalog::by_name("Z9"), format_error);
  CHECK_THROWS_AS(catalog::by_name("C0"), format_error);
}
