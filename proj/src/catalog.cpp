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

#include "ppf/catalog.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include "ppf/error.hpp"

namespace ppf::catalog {

  namespace {
    Permutation perm(std::string_view cycles, std::size_t degree) {
      return parse_cycles(cycles, degree);
    }

    std::string n_cycle(unsigned n) {
      std::ostringstream os;
      os << "(";
      for (unsigned i = 1; i <= n; ++i) {
        os << i << (i < n ? " " : "");
      }
      os << ")";
      return os.str();
    }

    bool parse_uint(std::string_view s, unsigned& out) {
      if (s.empty()) {
        return false;
      }
      auto r = std::from_chars(s.data(), s.data() + s.size(), out);
      return r.ec == std::errc{} && r.ptr == s.data() + s.size();
    }
  }  // namespace

  GroupPtr cyclic(unsigned n) {
    if (n == 0) {
      throw structure_error("cyclic group of order 0");
    }
    std::string name = "C" + std::to_string(n);
    if (n == 1) {
      return share(from_permutation_generators(1, {}, name));
    }
    return share(from_permutation_generators(n, {perm(n_cycle(n), n)}, name));
  }

  GroupPtr dihedral(unsigned order) {
    if (order < 4 || order % 2 != 0) {
      throw structure_error("dihedral order must be even and at least 4");
    }
    unsigned const n = order / 2;
    Permutation    reflection(n);
    for (unsigned i = 0; i < n; ++i) {
      reflection[i] = (n - i) % n;
    }
    return share(from_permutation_generators(
        n, {perm(n_cycle(n), n), reflection}, "D" + std::to_string(order)));
  }

  GroupPtr symmetric(unsigned n) {
    if (n == 0 || n > 4) {
      throw structure_error("symmetric groups are provided for n <= 4");
    }
    std::string name = "S" + std::to_string(n);
    if (n == 1) {
      return share(from_permutation_generators(1, {}, name));
    }
    if (n == 2) {
      return share(from_permutation_generators(2, {perm("(1 2)", 2)}, name));
    }
    return share(from_permutation_generators(
        n, {perm(n_cycle(n), n), perm("(1 2)", n)}, name));
  }

  GroupPtr alternating4() {
    return share(from_permutation_generators(
        4, {perm("(1 2 3)", 4), perm("(1 2)(3 4)", 4)}, "A4"));
  }

  GroupPtr quaternion8() {
    // ±1, ±i, ±j, ±k as sign * 4 + unit, unit in {1, i, j, k}
    static constexpr int unit_mul[4][4][2] = {
        {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
        {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
        {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
        {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
    };
    std::vector<Elem> table(64);
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) {
        auto const& r    = unit_mul[a % 4][b % 4];
        int         sign = (a / 4 + b / 4 + r[0]) % 2;
        table[a * 8 + b] = static_cast<Elem>(sign * 4 + r[1]);
      }
    }
    return share(Group::from_flat(8, std::move(table), "Q8"));
  }

  GroupPtr elementary_abelian(unsigned p, unsigned rank) {
    if (!is_prime(p)) {
      throw structure_error("elementary abelian group needs a prime");
    }
    if (rank == 0) {
      return cyclic(1);
    }
    GroupPtr g = cyclic(p);
    for (unsigned i = 1; i < rank; ++i) {
      g = direct(g, cyclic(p));
    }
    return g;
  }

  GroupPtr direct(GroupPtr const& a, GroupPtr const& b) {
    return direct_product(a, b).group;
  }

  GroupPtr cyclic_semidirect(unsigned m, unsigned n, unsigned r) {
    if (std::gcd(m, r) != 1) {
      throw structure_error("semidirect exponent must be a unit mod m");
    }
    auto              cm = cyclic(m);
    std::vector<Elem> im(m);
    // cyclic(m) numbers x^k as element k (breadth-first from one generator)
    for (Elem x = 0; x < m; ++x) {
      im[x] = cm->pow(1, static_cast<long long>(x) * r);
    }
    for (Elem x = 0; x < m; ++x) {
      if (cm->pow(1, x) != x) {
        throw structure_error("unexpected cyclic numbering");
      }
    }
    GroupMap action(cm, cm, std::move(im));
    return semidirect_product(cm, n, action,
                              "C" + std::to_string(m) + ":C" + std::to_string(n));
  }

  GroupPtr by_name(std::string_view name) {
    auto bad = [&]() -> GroupPtr {
      throw format_error("unknown catalog group '" + std::string(name) + "'");
    };
    if (name == "A4") {
      return alternating4();
    }
    if (name == "Q8") {
      return quaternion8();
    }
    if (auto colon = name.find(':'); colon != std::string_view::npos) {
      unsigned m = 0, n = 0;
      auto     left  = name.substr(0, colon);
      auto     right = name.substr(colon + 1);
      if (left.size() < 2 || right.size() < 2 || left[0] != 'C' || right[0] != 'C'
          || !parse_uint(left.substr(1), m) || !parse_uint(right.substr(1), n)
          || m < 2 || n < 1) {
        return bad();
      }
      for (unsigned r = 2; r < m; ++r) {
        if (std::gcd(r, m) != 1) {
          continue;
        }
        unsigned long long x = 1;
        for (unsigned i = 0; i < n; ++i) {
          x = (x * r) % m;
        }
        if (x == 1) {
          return cyclic_semidirect(m, n, r);
        }
      }
      return bad();
    }
    if (auto cross = name.find('x'); cross != std::string_view::npos) {
      auto a = by_name(name.substr(0, cross));
      auto b = by_name(name.substr(cross + 1));
      return direct(a, b);
    }
    unsigned n = 0;
    if (name.size() >= 2 && parse_uint(name.substr(1), n)) {
      switch (name[0]) {
        case 'C':
          if (n >= 1 && n <= max_permutation_order) {
            return cyclic(n);
          }
          break;
        case 'D':
          if (n >= 4 && n % 2 == 0) {
            return dihedral(n);
          }
          break;
        case 'S':
          if (n >= 1 && n <= 4) {
            return symmetric(n);
          }
          break;
        default:
          break;
      }
    }
    return bad();
  }

  std::vector<std::string> const& default_names() {
    static std::vector<std::string> const names = {
        "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C2xC2",
        "S3", "D8", "Q8", "A4", "S4", "C3:C4", "C7:C3"};
    return names;
  }

  std::vector<GroupPtr> default_groups(std::size_t max_order) {
    std::vector<GroupPtr> out;
    for (auto const& n : default_names()) {
      auto g = by_name(n);
      if (g->order() <= max_order) {
        out.push_back(std::move(g));
      }
    }
    return out;
  }

}  // namespace ppf::catalog
