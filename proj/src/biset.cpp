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

#include "ppf/biset.hpp"

#include <functional>

#include "ppf/error.hpp"

namespace ppf {

  namespace {

    void expect_group(TElement const& x, GroupPtr const& g, char const* what) {
      if (x.group().get() != g.get()) {
        throw structure_error(std::string(what) + ": element lives over " + x.group()->name() + ", expected " +
                              g->name());
      }
    }

    SpeciesVector indicator(PairTable const& t, std::size_t i, CycloNum const& value) {
      SpeciesVector v(t.size());
      v.at(i) = value;
      return v;
    }

    // exponents of a character given on a superset, in the order of s
    std::vector<unsigned> restrict_to(Subgroup const& s, std::vector<unsigned> const& full) {
      std::vector<unsigned> out;
      out.reserve(s.order());
      for (Elem x : s.elements()) {
        out.push_back(full[x]);
      }
      return out;
    }

  }  // namespace

  TElement op_res(SubgroupGroup const& k, TElement const& x) {
    GroupPtr const& g = k.embedding.target();
    expect_group(x, g, "restriction");
    auto const&    G     = *g;
    Subgroup const image = k.push_forward(whole_group(k.group));
    Combination    out;
    for (auto const& [sym, coeff] : x.terms()) {
      Subgroup const&   l = sym.subgroup();
      std::vector<bool> seen(G.order(), false);
      for (Elem d = 0; d < G.order(); ++d) {
        if (seen[d]) {
          continue;
        }
        for (Elem a : image.elements()) {
          for (Elem b : l.elements()) {
            seen[G.mul(G.mul(a, d), b)] = true;
          }
        }
        // K ∩ dLd^-1 with λ^d(y) = λ(d^-1 y d)
        Subgroup const        m = intersection(image, conjugate(l, d));
        Elem const            di = G.inv(d);
        std::vector<unsigned> full(G.order(), 0);
        for (Elem y : m.elements()) {
          full[y] = sym.exponent(G.conj(di, y));
        }
        Subgroup const local = k.pull_back(m);
        add_term(out, MonomialSymbol::make(local, restrict_to(m, full), sym.modulus(), x.prime()), coeff);
      }
    }
    return TElement::from_terms(pair_table(k.group, x.prime()), std::move(out));
  }

  TElement op_ind(SubgroupGroup const& k, TElement const& x) {
    expect_group(x, k.group, "induction");
    Combination out;
    for (auto const& [sym, coeff] : x.terms()) {
      add_term(out, MonomialSymbol::make(k.push_forward(sym.subgroup()), sym.exponents(), sym.modulus(), x.prime()),
               coeff);
    }
    return TElement::from_terms(pair_table(k.embedding.target(), x.prime()), std::move(out));
  }

  TElement op_inf(Quotient const& q, TElement const& x) {
    expect_group(x, q.group, "inflation");
    Combination out;
    for (auto const& [sym, coeff] : x.terms()) {
      Subgroup const        pre = q.preimage(sym.subgroup());
      std::vector<unsigned> lambda;
      for (Elem y : pre.elements()) {
        lambda.push_back(sym.exponent(q.projection(y)));
      }
      add_term(out, MonomialSymbol::make(pre, std::move(lambda), sym.modulus(), x.prime()), coeff);
    }
    return TElement::from_terms(pair_table(q.parent, x.prime()), std::move(out));
  }

  TElement op_def(Quotient const& q, TElement const& x) {
    expect_group(x, q.parent, "deflation");
    Combination out;
    for (auto const& [sym, coeff] : x.terms()) {
      Subgroup const& l       = sym.subgroup();
      bool            trivial = true;
      for (Elem y : l.elements()) {
        if (q.kernel.contains(y) && sym.exponent(y) != 0) {
          trivial = false;
          break;
        }
      }
      if (!trivial) {
        continue;
      }
      Subgroup const        img = q.image(l);
      std::vector<unsigned> full(q.group->order(), 0);
      for (Elem y : l.elements()) {
        full[q.projection(y)] = sym.exponent(y);
      }
      add_term(out, MonomialSymbol::make(img, restrict_to(img, full), sym.modulus(), x.prime()), coeff);
    }
    return TElement::from_terms(pair_table(q.group, x.prime()), std::move(out));
  }

  TElement op_iso(GroupMap const& f, TElement const& x) {
    expect_group(x, f.source(), "transport");
    if (!f.is_bijective()) {
      throw structure_error("transport needs a bijective map");
    }
    Combination out;
    for (auto const& [sym, coeff] : x.terms()) {
      Subgroup const        img = image(f, sym.subgroup());
      std::vector<unsigned> full(f.target()->order(), 0);
      for (Elem y : sym.subgroup().elements()) {
        full[f(y)] = sym.exponent(y);
      }
      add_term(out, MonomialSymbol::make(img, restrict_to(img, full), sym.modulus(), x.prime()), coeff);
    }
    return TElement::from_terms(pair_table(f.target(), x.prime()), std::move(out));
  }

  TElement predicted_res(SubgroupGroup const& k, unsigned prime, std::size_t g_index) {
    auto const    tg = pair_table(k.embedding.target(), prime);
    auto const    tk = pair_table(k.group, prime);
    SpeciesVector v(tk->size());
    for (std::size_t j = 0; j < tk->size(); ++j) {
      Pair const& b = tk->pairs()[j];
      auto const  loc = tg->locate(k.push_forward(b.p), k.embedding(b.s));
      v[j]            = CycloNum(loc && loc->index == g_index ? 1 : 0);
    }
    return TElement::from_species(tk, std::move(v));
  }

  TElement predicted_ind(SubgroupGroup const& k, unsigned prime, std::size_t k_index) {
    auto const  tg  = pair_table(k.embedding.target(), prime);
    auto const  tk  = pair_table(k.group, prime);
    Pair const& b   = tk->pairs().at(k_index);
    auto const  loc = tg->locate(k.push_forward(b.p), k.embedding(b.s));
    if (!loc) {
      throw structure_error("pushed pair is not a pair of the overgroup");
    }
    Rational const index = ratio(static_cast<long>(tg->stabilizer_order(loc->index)),
                                 static_cast<long>(tk->stabilizer_order(k_index)));
    return TElement::from_species(tg, indicator(*tg, loc->index, CycloNum(index)));
  }

  TElement predicted_inf(Quotient const& q, unsigned prime, std::size_t quotient_index) {
    auto const    tg = pair_table(q.parent, prime);
    auto const    tq = pair_table(q.group, prime);
    SpeciesVector v(tg->size());
    for (std::size_t j = 0; j < tg->size(); ++j) {
      Pair const& b   = tg->pairs()[j];
      auto const  loc = tq->locate(q.image(b.p), q.projection(b.s));
      v[j]            = CycloNum(loc && loc->index == quotient_index ? 1 : 0);
    }
    return TElement::from_species(tg, std::move(v));
  }

  TElement predicted_def(Quotient const& q, Pair const& a) {
    auto const tq  = pair_table(q.group, a.prime);
    auto const loc = tq->locate(q.image(a.p), q.projection(a.s));
    if (!loc) {
      throw structure_error("image of the pair is not a pair of the quotient");
    }
    return TElement::from_species(tq, indicator(*tq, loc->index, deflation_constant(a, q.kernel)));
  }

  CycloNum deflation_constant(Pair const& a, Subgroup const& n) {
    auto const& G = *a.group;
    if (span(a).order() != G.order()) {
      throw structure_error("deflation constant needs G = <Ps>");
    }
    Elem const        s_arr[] = {a.s};
    Subgroup const    cyc     = generate(a.group, s_arr);
    std::size_t const sn      = G.elem_order(a.s);
    std::size_t const ns      = intersection(n, cyc).order();
    std::size_t const cs      = centralizer(a.group, s_arr).order();

    auto const subs = stable_subgroups(a.p, a.s);
    auto const mu   = mobius_to(subs, subs.size() - 1);
    long long  sum  = 0;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (mu[i] == 0 || product(join(subs[i], a.s), n).order() != G.order()) {
        continue;
      }
      sum += static_cast<long long>(centralizer_in(subs[i], s_arr).order()) * mu[i];
    }
    return CycloNum(ratio(static_cast<long>(sn), static_cast<long>(ns * cs)) * static_cast<long>(sum));
  }

  namespace {

    bool vertices_diagonal(DirectProduct const& dp, std::size_t points,
                           std::function<Elem(Elem, Elem, Elem)> const& act, unsigned prime) {
      auto const& X = *dp.group;
      for (Elem x = 0; x < points; ++x) {
        ElementSet stab(X.order());
        for (Elem e = 0; e < X.order(); ++e) {
          if (act(dp.left_of(e), dp.right_of(e), x) == x) {
            stab.insert(e);
          }
        }
        auto const local  = as_group(Subgroup::closed(dp.group, std::move(stab)));
        auto const vertex = local.push_forward(sylow_subgroup(local.group, prime));
        if (!dp.is_twisted_diagonal(vertex)) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  bool deflation_is_diagonal(Quotient const& q, unsigned prime) {
    auto const  dp = direct_product(q.group, q.parent);
    auto const& Q  = *q.group;
    // (aN, b) · xN = a x b^-1 N
    return vertices_diagonal(
        dp, Q.order(),
        [&](Elem a, Elem b, Elem x) { return Q.mul(Q.mul(a, x), Q.inv(q.projection(b))); }, prime);
  }

  bool inflation_is_diagonal(Quotient const& q, unsigned prime) {
    auto const  dp = direct_product(q.parent, q.group);
    auto const& Q  = *q.group;
    // (b, aN) · xN = b x a^-1 N
    return vertices_diagonal(
        dp, Q.order(),
        [&](Elem b, Elem a, Elem x) { return Q.mul(Q.mul(q.projection(b), x), Q.inv(a)); }, prime);
  }

}  // namespace ppf
