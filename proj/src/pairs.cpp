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

#include "ppf/pairs.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "ppf/error.hpp"
#include "ppf/isomorphism.hpp"

namespace ppf {

  namespace {

    std::string render_ids(std::vector<Elem> const& ids) {
      std::ostringstream out;
      out << "[";
      for (std::size_t i = 0; i < ids.size(); ++i) {
        out << (i ? "," : "") << ids[i];
      }
      out << "]";
      return out.str();
    }

    std::vector<Elem> conjugates_in(Subgroup const& within, Elem x) {
      auto const&    g = *within.parent();
      std::set<Elem> out;
      for (Elem n : within.elements()) {
        out.insert(g.conj(n, x));
      }
      return {out.begin(), out.end()};
    }

  }  // namespace

  Pair Pair::make(Subgroup p, Elem s, unsigned prime) {
    auto const& g = *p.parent();
    if (!is_prime(prime)) {
      throw structure_error(std::to_string(prime) + " is not prime");
    }
    if (!is_power_of(p.order(), prime)) {
      throw structure_error("subgroup of order " + std::to_string(p.order()) +
                            " is not a " + std::to_string(prime) + "-group");
    }
    if (s >= g.order() || !is_pprime_element(g, s, prime)) {
      throw structure_error("element " + std::to_string(s) + " is not a " +
                            std::to_string(prime) + "'-element");
    }
    for (Elem x : p.elements()) {
      if (!p.contains(g.conj(s, x))) {
        throw structure_error("element " + std::to_string(s) + " does not normalize P");
      }
    }
    GroupPtr parent = p.parent();
    return Pair{std::move(parent), std::move(p), s, prime};
  }

  std::string Pair::to_string() const {
    return "(P=" + render_ids(p.elements()) + ", s=" + std::to_string(s) + ")";
  }

  Subgroup span(Pair const& a) {
    return join(a.p, a.s);
  }

  SubgroupGroup span_group(Pair const& a) {
    return as_group(span(a), "<Ps> in " + a.group->name());
  }

  Pair localize(Pair const& a) {
    auto sg = span_group(a);
    return Pair{sg.group, sg.pull_back(a.p), sg.local(a.s), a.prime};
  }

  Subgroup core_centralizer(Pair const& a) {
    auto const& g = *a.group;
    ElementSet  mask(g.order());
    Elem        x = 0;
    do {
      bool central = true;
      for (Elem y : a.p.elements()) {
        if (g.mul(x, y) != g.mul(y, x)) {
          central = false;
          break;
        }
      }
      if (central) {
        mask.insert(x);
      }
      x = g.mul(x, a.s);
    } while (x != 0);
    return Subgroup::closed(a.group, std::move(mask));
  }

  PairTable::PairTable(GroupPtr g, unsigned prime) : group_(std::move(g)), prime_(prime) {
    auto const& G = *group_;
    if (!is_prime(prime)) {
      throw structure_error(std::to_string(prime) + " is not prime");
    }
    if (G.order() > max_subgroup_order) {
      throw too_large("pair enumeration needs |G| <= " + std::to_string(max_subgroup_order) +
                      ", got " + std::to_string(G.order()));
    }
    for (Elem x = 0; x < G.order(); ++x) {
      if (is_pprime_element(G, x, prime)) {
        modulus_ = std::lcm(modulus_, G.elem_order(x));
      }
    }

    auto sylow = as_group(sylow_subgroup(group_, prime));
    struct Orbit {
      Subgroup                               rep;
      std::vector<std::pair<Subgroup, Elem>> members;  // Y = g X g^-1 from a seed X
      Elem                                   rep_conj = 0;
    };
    std::vector<Orbit>                                       orbits;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
    for (auto const& local : all_subgroups(sylow.group)) {
      Subgroup x = sylow.push_forward(local);
      if (seen.contains(x.mask())) {
        continue;
      }
      Orbit o;
      for (Elem c = 0; c < G.order(); ++c) {
        Subgroup y = ppf::conjugate(x, c);
        if (seen.emplace(y.mask(), orbits.size()).second) {
          o.members.emplace_back(std::move(y), c);
        }
      }
      auto best = std::min_element(o.members.begin(), o.members.end(),
                                   [](auto const& l, auto const& r) { return l.first < r.first; });
      o.rep      = best->first;
      o.rep_conj = best->second;
      orbits.push_back(std::move(o));
    }
    std::sort(orbits.begin(), orbits.end(), [](Orbit const& l, Orbit const& r) { return l.rep < r.rep; });

    for (std::size_t k = 0; k < orbits.size(); ++k) {
      auto const& o = orbits[k];
      Elem const  back = G.inv(o.rep_conj);
      for (auto const& [y, c] : o.members) {
        // y = c X c^-1 and rep = r X r^-1, so y = (c r^-1) rep (c r^-1)^-1
        subgroup_index_.emplace(y.mask(), Hit{k, G.mul(c, back)});
      }
      p_reps_.push_back(o.rep);
      Subgroup n = normalizer(o.rep);
      std::vector<std::pair<std::ptrdiff_t, Elem>> cls(G.order(), {-1, 0});
      for (Elem x : n.elements()) {
        if (cls[x].first >= 0 || !is_pprime_element(G, x, prime)) {
          continue;
        }
        auto const idx = static_cast<std::ptrdiff_t>(pairs_.size());
        for (Elem c : n.elements()) {
          Elem const y = G.conj(c, x);
          if (cls[y].first < 0) {
            cls[y] = {idx, c};
          }
        }
        pairs_.push_back(Pair{group_, o.rep, x, prime});
        pair_p_class_.push_back(k);
      }
      normalizers_.push_back(std::move(n));
      s_class_.push_back(std::move(cls));
    }
  }

  std::pair<std::size_t, Elem> PairTable::locate_subgroup(Subgroup const& p) const {
    auto it = subgroup_index_.find(p.mask());
    if (it == subgroup_index_.end()) {
      throw structure_error("subgroup of order " + std::to_string(p.order()) + " is not a " +
                            std::to_string(prime_) + "-subgroup of " + group_->name());
    }
    return {it->second.p_class, it->second.conjugator};
  }

  std::optional<PairTable::Location> PairTable::locate(Subgroup const& p, Elem s) const {
    auto it = subgroup_index_.find(p.mask());
    if (it == subgroup_index_.end()) {
      return std::nullopt;
    }
    auto const& G  = *group_;
    Elem const  g  = it->second.conjugator;
    Elem const  s0 = G.conj(G.inv(g), s);
    auto const& e  = s_class_[it->second.p_class][s0];
    if (e.first < 0) {
      return std::nullopt;
    }
    return Location{static_cast<std::size_t>(e.first), G.mul(g, e.second)};
  }

  PairTable::Location PairTable::locate(Pair const& a) const {
    auto loc = locate(a.p, a.s);
    if (!loc) {
      throw structure_error("not a pair of " + group_->name() + ": " + a.to_string());
    }
    return *loc;
  }

  std::size_t PairTable::stabilizer_order(std::size_t index) const {
    auto const& G = *group_;
    Elem const  s = pairs_[index].s;
    std::size_t n = 0;
    for (Elem x : normalizers_[pair_p_class_[index]].elements()) {
      n += G.mul(x, s) == G.mul(s, x) ? 1 : 0;
    }
    return n;
  }

  PairTablePtr pair_table(GroupPtr const& g, unsigned prime) {
    static std::mutex                                                lock;
    static std::map<std::pair<Group const*, unsigned>, PairTablePtr> cache;
    {
      std::lock_guard guard(lock);
      if (auto it = cache.find({g.get(), prime}); it != cache.end()) {
        return it->second;
      }
    }
    auto table = std::make_shared<PairTable const>(g, prime);
    std::lock_guard guard(lock);
    return cache.emplace(std::pair{g.get(), prime}, table).first->second;
  }

  std::vector<Pair> enumerate_pairs(GroupPtr const& g, unsigned prime) {
    return pair_table(g, prime)->pairs();
  }

  Pair conjugate(Pair const& a, Elem g) {
    return Pair{a.group, ppf::conjugate(a.p, g), a.group->conj(g, a.s), a.prime};
  }

  bool pairs_conjugate(Pair const& a, Pair const& b) {
    if (a.group != b.group || a.p.order() != b.p.order()) {
      return false;
    }
    auto const& G = *a.group;
    for (Elem g = 0; g < G.order(); ++g) {
      if (G.conj(g, a.s) == b.s && ppf::conjugate(a.p, g) == b.p) {
        return true;
      }
    }
    return false;
  }

  bool pairs_isomorphic(Pair const& a, Pair const& b) {
    if (a.prime != b.prime || a.p.order() != b.p.order() ||
        a.group->elem_order(a.s) != b.group->elem_order(b.s)) {
      return false;
    }
    auto sa = span_group(a);
    auto sb = span_group(b);
    if (sa.group->order() != sb.group->order()) {
      return false;
    }
    Subgroup const    whole_b = whole_group(sb.group);
    std::vector<Elem> images  = conjugates_in(whole_b, sb.local(b.s));
    IsomorphismSearch search(sa.group, sb.group, {IsomorphismSearch::Pin{sa.local(a.s), std::move(images)}});
    return search.next().has_value();
  }

  Pair reduce_pair(Pair const& a) {
    Pair const local = localize(a);
    Subgroup   n     = core_centralizer(local);
    Quotient   q     = quotient(n, "~" + a.group->name());
    return Pair{q.group, q.image(local.p), q.projection(local.s), a.prime};
  }

  bool is_ddelta(Pair const& a) {
    return core_centralizer(a).order() == 1;
  }

  bool is_pprime_quotient(Pair const& target, Pair const& source) {
    if (target.prime != source.prime || target.p.order() != source.p.order()) {
      return false;
    }
    auto              sg    = span_group(source);
    std::size_t const big   = sg.group->order();
    std::size_t const small = span(target).order();
    if (big % small != 0 || std::gcd(big / small, std::size_t{source.prime}) != 1) {
      return false;
    }
    Pair const local = Pair{sg.group, sg.pull_back(source.p), sg.local(source.s), source.prime};
    for (auto const& k : all_subgroups(sg.group)) {
      if (k.order() != big / small || !is_normal(k)) {
        continue;
      }
      Quotient q = quotient(k);
      if (pairs_isomorphic(target, Pair{q.group, q.image(local.p), q.projection(local.s), source.prime})) {
        return true;
      }
    }
    return false;
  }

  std::string DiagonalPair::to_string() const {
    std::ostringstream out;
    out << "(Q=[";
    bool first_elem = true;
    for (Elem x : pair.p.elements()) {
      out << (first_elem ? "" : ",") << "(" << product->left_of(x) << "," << product->right_of(x) << ")";
      first_elem = false;
    }
    out << "], t=(" << u() << "," << v() << "))";
    return out.str();
  }

  std::vector<DiagonalPair> enumerate_diagonal_pairs(GroupPtr const& h,
                                                     GroupPtr const& g,
                                                     unsigned        prime) {
    if (h->order() > max_diagonal_factor_order || g->order() > max_diagonal_factor_order) {
      throw too_large("diagonal pairs need factors of order <= " +
                      std::to_string(max_diagonal_factor_order));
    }
    auto const product = std::make_shared<DirectProduct const>(direct_product(h, g));
    auto const& H  = *h;
    auto const& G  = *g;
    auto const& HG = *product->group;
    auto const  th = pair_table(h, prime);
    auto const  tg = pair_table(g, prime);

    std::vector<DiagonalPair> out;
    for (std::size_t i = 0; i < th->p_subgroups().size(); ++i) {
      Subgroup const& p1 = th->p_subgroups()[i];
      Subgroup const& n1 = th->normalizer_of(i);
      for (std::size_t j = 0; j < tg->p_subgroups().size(); ++j) {
        Subgroup const& p2 = tg->p_subgroups()[j];
        Subgroup const& n2 = tg->normalizer_of(j);
        if (p1.order() != p2.order()) {
          continue;
        }
        auto a = as_group(p2);
        auto b = as_group(p1);
        std::set<std::vector<Elem>> fused;
        for (auto const& f : all_isomorphisms(a.group, b.group)) {
          // phi: G elem of P -> H elem of P', indexed through a full-size table
          std::vector<Elem> phi(G.order(), 0);
          std::vector<Elem> key;
          for (Elem x : p2.elements()) {
            phi[x] = b.embedding(f(a.local(x)));
            key.push_back(phi[x]);
          }
          if (fused.contains(key)) {
            continue;
          }
          for (Elem u : n1.elements()) {
            for (Elem v : n2.elements()) {
              std::vector<Elem> other;
              Elem const        vi = G.inv(v);
              for (Elem x : p2.elements()) {
                other.push_back(H.conj(u, phi[G.conj(vi, x)]));
              }
              fused.insert(std::move(other));
            }
          }

          ElementSet delta(HG.order());
          for (Elem x : p2.elements()) {
            delta.insert(product->make(phi[x], x));
          }
          ElementSet norm(HG.order());
          for (Elem u : n1.elements()) {
            for (Elem v : n2.elements()) {
              bool ok = true;
              for (Elem x : p2.elements()) {
                if (H.conj(u, phi[x]) != phi[G.conj(v, x)]) {
                  ok = false;
                  break;
                }
              }
              if (ok) {
                norm.insert(product->make(u, v));
              }
            }
          }
          Subgroup const    q = Subgroup::closed(product->group, std::move(delta));
          std::vector<Elem> nelems = norm.to_vector();
          std::vector<bool> done(HG.order(), false);
          std::vector<Elem> eta(H.order(), static_cast<Elem>(G.order()));
          for (Elem x : p2.elements()) {
            eta[phi[x]] = x;
          }
          for (Elem t : nelems) {
            if (done[t] || !is_pprime_element(HG, t, prime)) {
              continue;
            }
            for (Elem c : nelems) {
              done[HG.conj(c, t)] = true;
            }
            out.push_back(DiagonalPair{product, Pair{product->group, q, t, prime}, p1, p2, eta});
          }
        }
      }
    }
    return out;
  }

}  // namespace ppf
