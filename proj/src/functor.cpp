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

#include "ppf/functor.hpp"

#include <map>
#include <numeric>
#include <set>

#include "ppf/error.hpp"
#include "ppf/isomorphism.hpp"

namespace ppf {

  CompositionResult compose_idempotents(DiagonalPair const& dq, Pair const& a) {
    DirectProduct const& prod = *dq.product;
    GroupPtr const&      h    = prod.left;
    auto const&          H    = *h;
    auto const&          G    = *a.group;
    auto const&          X    = *prod.group;
    if (a.group.get() != prod.right.get()) {
      throw structure_error("pair lives in " + G.name() + ", product acts on " + prod.right->name());
    }
    if (span(a).order() != G.order()) {
      throw structure_error("composition needs G = <Ps>, got |<Ps>| = " + std::to_string(span(a).order()) +
                            " in a group of order " + std::to_string(G.order()));
    }
    auto const        table_h = pair_table(h, a.prime);
    CompositionResult result{TElement(table_h), false, {}, 0, 0};

    Subgroup const p2   = prod.project_right(dq.pair.p);
    Elem const     v    = dq.v();
    if (join(p2, v).order() != G.order()) {
      result.zero_by_support = true;
      result.conditions.push_back("p_2(<Qt>) != G");
      return result;
    }
    Elem const     s_arr[] = {a.s};
    Subgroup const cyc     = generate(a.group, s_arr);
    std::optional<Elem> shift;
    for (Elem g = 0; g < G.order() && !shift; ++g) {
      if (cyc.contains(G.conj(g, v))) {
        shift = g;
      }
    }
    if (!shift) {
      result.zero_by_support = true;
      result.conditions.push_back("no conjugate of t has second coordinate in <s>");
      return result;
    }
    Elem const     c  = prod.make(0, *shift);
    Subgroup const q  = conjugate(dq.pair.p, c);
    Elem const     t  = X.conj(c, dq.pair.s);
    Elem const     u  = prod.left_of(t);
    Elem const     sj = prod.right_of(t);
    unsigned       j  = 0;
    while (G.pow(a.s, j) != sj) {
      ++j;
    }
    result.conjugator = *shift;
    result.j          = j;

    Subgroup const    r = prod.project_left(q);
    std::vector<Elem> eta(H.order(), 0);
    for (Elem x : q.elements()) {
      eta[prod.left_of(x)] = prod.right_of(x);
    }

    std::size_t c1 = 0;
    for (Elem e = 0; e < X.order(); ++e) {
      if (X.mul(e, t) != X.mul(t, e)) {
        continue;
      }
      bool normalizes = true;
      for (Elem y : q.elements()) {
        if (!q.contains(X.conj(e, y))) {
          normalizes = false;
          break;
        }
      }
      c1 += normalizes ? 1 : 0;
    }
    Elem const        t_arr[] = {t};
    std::size_t const c2      = centralizer(a.group, s_arr).order();
    std::size_t const cqt     = centralizer_in(q, t_arr).order();

    unsigned const n  = G.elem_order(a.s);
    unsigned const nt = X.elem_order(t);
    unsigned const nu = H.elem_order(u);
    unsigned const m  = std::lcm(nt, n);

    auto const stable_p = stable_subgroups(a.p, a.s);
    auto const mu       = mobius_to(stable_p, stable_p.size() - 1);
    std::map<std::vector<Elem>, std::size_t> stable_index;
    for (std::size_t i = 0; i < stable_p.size(); ++i) {
      stable_index.emplace(stable_p[i].elements(), i);
    }

    Pair const        ru{h, r, u, a.prime};
    auto const        expo = span_exponents(ru);
    Rational const    base = ratio(static_cast<long>(cqt), static_cast<long>(c1 * c2));
    Combination       out;
    for (Subgroup const& jj : stable_subgroups(r, u)) {
      ElementSet image(G.order());
      for (Elem x : jj.elements()) {
        image.insert(eta[x]);
      }
      auto const it = stable_index.find(image.to_vector());
      if (it == stable_index.end() || mu[it->second] == 0) {
        continue;
      }
      std::size_t const cl    = centralizer_in(stable_p[it->second], s_arr).order();
      Rational const    sigma = Rational(static_cast<long>(cl) * static_cast<long>(mu[it->second]));
      Subgroup const    ju    = join(jj, u);
      for (unsigned e1 = 0; e1 < nt; ++e1) {
        for (unsigned e2 = 0; e2 < n; ++e2) {
          unsigned long long const big = static_cast<unsigned long long>(e1) * (m / nt) +
                                         static_cast<unsigned long long>(e2) * j * (m / n);
          unsigned const e = static_cast<unsigned>(big % m);
          if ((static_cast<unsigned long long>(e) * nu) % m != 0) {
            continue;
          }
          unsigned const        ep = static_cast<unsigned>((static_cast<unsigned long long>(e) * nu) / m);
          std::vector<unsigned> lambda;
          for (Elem y : ju.elements()) {
            lambda.push_back((ep * static_cast<unsigned>(expo[y])) % nu);
          }
          CycloNum const coeff = CycloNum(base * sigma) * CycloNum::root_of_unity(nt, -static_cast<long long>(e1)) *
                                 CycloNum::root_of_unity(n, -static_cast<long long>(e2));
          add_term(out, MonomialSymbol::make(ju, std::move(lambda), nu, a.prime), coeff);
        }
      }
    }
    result.product = TElement::from_terms(table_h, std::move(out));
    return result;
  }

  std::size_t LabelRegistry::intern(Pair const& reduced) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (pairs_isomorphic(labels_[i], reduced)) {
        return i;
      }
    }
    labels_.push_back(reduced);
    return labels_.size() - 1;
  }

  std::size_t LabelRegistry::label_of(Pair const& a) {
    return intern(reduce_pair(a));
  }

  std::vector<std::size_t> subfunctor_eval(Pair const& a, GroupPtr const& h) {
    Pair const               target = reduce_pair(a);
    auto const               table  = pair_table(h, a.prime);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < table->size(); ++i) {
      if (is_pprime_quotient(target, table->pairs()[i])) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::vector<Block> functor_decomposition(GroupPtr const& h, unsigned prime, LabelRegistry& registry) {
    auto const                         table = pair_table(h, prime);
    std::vector<Block>                 blocks;
    std::map<std::size_t, std::size_t> where;
    for (std::size_t i = 0; i < table->size(); ++i) {
      std::size_t const label = registry.label_of(table->pairs()[i]);
      auto [it, fresh]        = where.emplace(label, blocks.size());
      if (fresh) {
        blocks.push_back(Block{label, {}});
      }
      blocks[it->second].pairs.push_back(i);
    }
    return blocks;
  }

  std::size_t simple_dim(Pair const& label, GroupPtr const& h) {
    auto const  table = pair_table(h, label.prime);
    std::size_t n     = 0;
    for (auto const& b : table->pairs()) {
      n += pairs_isomorphic(reduce_pair(b), label) ? 1 : 0;
    }
    return n;
  }

  std::size_t s11_dim(GroupPtr const& h, unsigned prime) {
    std::size_t n = 0;
    for (auto const& cls : conjugacy_classes(*h)) {
      n += is_pprime_element(*h, cls.front(), prime) ? 1 : 0;
    }
    return n;
  }

  LatticeReport lattice_check(std::vector<GroupPtr> const& universe, std::vector<Pair> const& labels,
                              unsigned prime) {
    LatticeReport     report;
    std::size_t const k = labels.size();

    // evaluation groups: the universe, then each label's own group
    std::vector<GroupPtr> groups = universe;
    std::vector<std::size_t> own(k);
    std::vector<std::size_t> own_index(k);
    for (std::size_t l = 0; l < k; ++l) {
      own[l] = groups.size();
      groups.push_back(labels[l].group);
      own_index[l] = pair_table(labels[l].group, prime)->locate(labels[l]).index;
    }
    // eval[l][g] = membership bits over the pair classes of groups[g]
    std::vector<std::vector<std::vector<bool>>> eval(k, std::vector<std::vector<bool>>(groups.size()));
    for (std::size_t l = 0; l < k; ++l) {
      for (std::size_t g = 0; g < groups.size(); ++g) {
        eval[l][g].assign(pair_table(groups[g], prime)->size(), false);
        for (std::size_t i : subfunctor_eval(labels[l], groups[g])) {
          eval[l][g][i] = true;
        }
      }
    }

    std::vector<std::vector<std::size_t>> sets;
    if (k <= 12) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<std::size_t> a;
        for (std::size_t l = 0; l < k; ++l) {
          if ((mask >> l) & 1u) {
            a.push_back(l);
          }
        }
        sets.push_back(std::move(a));
      }
    } else {
      sets.push_back({});
      for (std::size_t a = 0; a < k; ++a) {
        sets.push_back({a});
        for (std::size_t b = a + 1; b < k; ++b) {
          sets.push_back({a, b});
        }
      }
    }

    auto render = [&](std::vector<std::size_t> const& a) {
      std::string s = "{";
      for (std::size_t i = 0; i < a.size(); ++i) {
        s += (i ? "," : "") + std::to_string(a[i]);
      }
      return s + "}";
    };

    std::map<std::vector<std::vector<bool>>, std::vector<std::size_t>> seen;
    for (auto const& a : sets) {
      ++report.label_sets;
      std::vector<std::vector<bool>> spans(groups.size());
      for (std::size_t g = 0; g < groups.size(); ++g) {
        spans[g].assign(eval.empty() ? pair_table(groups[g], prime)->size() : eval[0][g].size(), false);
        for (std::size_t l : a) {
          for (std::size_t i = 0; i < spans[g].size(); ++i) {
            if (eval[l][g][i]) {
              spans[g][i] = true;
            }
          }
        }
      }
      if (a.empty()) {
        ++report.checks;
        for (auto const& s : spans) {
          for (bool bit : s) {
            if (bit) {
              report.failures.push_back("empty label set has a nonzero span");
            }
          }
        }
      }
      ++report.checks;
      auto [it, fresh] = seen.emplace(spans, a);
      if (!fresh) {
        report.failures.push_back("label sets " + render(it->second) + " and " + render(a) + " have equal spans");
      }
      // labels below the sum, read off at each label's own group
      std::vector<std::size_t> theta;
      for (std::size_t l = 0; l < k; ++l) {
        if (spans[own[l]][own_index[l]]) {
          theta.push_back(l);
          ++report.checks;
          bool single = false;
          for (std::size_t b : a) {
            single = single || eval[b][own[l]][own_index[l]];
          }
          if (!single) {
            report.failures.push_back("label " + std::to_string(l) + " lies below the sum " + render(a) +
                                      " but below no summand");
          }
        }
      }
      ++report.checks;
      if (theta != a) {
        report.failures.push_back("labels below the sum " + render(a) + " are " + render(theta));
      }
    }

    for (std::size_t g = 0; g < universe.size(); ++g) {
      ++report.checks;
      auto const  table = pair_table(universe[g], prime);
      std::size_t covered = 0;
      for (std::size_t i = 0; i < table->size(); ++i) {
        bool hit = false;
        for (std::size_t l = 0; l < k && !hit; ++l) {
          hit = eval[l][g][i];
        }
        covered += hit ? 1 : 0;
      }
      if (covered != table->size()) {
        report.failures.push_back("labels span " + std::to_string(covered) + " of " +
                                  std::to_string(table->size()) + " pair classes of " + universe[g]->name());
      }
    }
    return report;
  }

  EssentialReport essential_report(GroupPtr const& g, unsigned prime) {
    if (g->order() > 64) {
      throw too_large("essential algebra needs |G| <= 64, got " + std::to_string(g->order()));
    }
    EssentialReport report{g, prime, false, std::nullopt, 0, 0};
    for (auto const& a : enumerate_pairs(g, prime)) {
      if (span(a).order() == g->order() && is_ddelta(a)) {
        report.nonzero   = true;
        report.witness   = a;
        report.n         = g->elem_order(a.s);
        report.dimension = euler_phi(report.n) * outer_automorphism_order(g);
        break;
      }
    }
    return report;
  }

}  // namespace ppf
