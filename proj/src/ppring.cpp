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

#include "ppf/ppring.hpp"

#include <algorithm>
#include <numeric>

#include "ppf/error.hpp"

namespace ppf {

  MonomialSymbol::MonomialSymbol(Subgroup l, std::vector<unsigned> lambda, unsigned m)
      : l_(std::move(l)), lambda_(std::move(lambda)), m_(m) {
    unsigned g = m_;
    for (unsigned v : lambda_) {
      g = std::gcd(g, v % m_);
    }
    if (g == 0) {
      g = 1;
    }
    m_ /= g;
    for (auto& v : lambda_) {
      v = (v % (m_ * g)) / g;
    }
  }

  MonomialSymbol MonomialSymbol::make(Subgroup l, std::vector<unsigned> exponents, unsigned m, unsigned prime) {
    if (m == 0) {
      throw structure_error("character modulus must be positive");
    }
    if (exponents.size() != l.order()) {
      throw structure_error("character needs one exponent per element of L");
    }
    auto const& g     = *l.parent();
    auto const& elems = l.elements();
    if (exponents[0] % m != 0) {
      throw structure_error("character is not trivial at the identity");
    }
    if (elems.size() <= max_subgroup_order) {
      for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j < elems.size(); ++j) {
          Elem const xy = g.mul(elems[i], elems[j]);
          auto const k  = static_cast<std::size_t>(std::lower_bound(elems.begin(), elems.end(), xy) - elems.begin());
          if ((exponents[i] + exponents[j]) % m != exponents[k] % m) {
            throw structure_error("exponent map is not a homomorphism on L");
          }
        }
      }
    }
    MonomialSymbol s(std::move(l), std::move(exponents), m);
    if (std::gcd(s.m_, prime) != 1) {
      throw structure_error("character image has order divisible by " + std::to_string(prime));
    }
    return s;
  }

  MonomialSymbol MonomialSymbol::trivial(Subgroup l) {
    std::vector<unsigned> zeros(l.order(), 0);
    return MonomialSymbol(std::move(l), std::move(zeros), 1);
  }

  unsigned MonomialSymbol::exponent(Elem x) const {
    auto const& e  = l_.elements();
    auto        it = std::lower_bound(e.begin(), e.end(), x);
    if (it == e.end() || *it != x) {
      throw structure_error("element " + std::to_string(x) + " is not in L");
    }
    return lambda_[static_cast<std::size_t>(it - e.begin())];
  }

  void add_term(Combination& c, MonomialSymbol const& s, CycloNum const& coeff) {
    auto [it, inserted] = c.emplace(s, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) {
        c.erase(it);
      }
    } else if (coeff.is_zero()) {
      c.erase(it);
    }
  }

  CycloNum species_of_monomial(MonomialSymbol const& m, Subgroup const& p, Elem s) {
    auto const& G = *m.group();
    if (p.parent().get() != m.group().get() && p.parent()->flat_table() != G.flat_table()) {
      throw structure_error("pair and module live in different groups");
    }
    Subgroup const&        l = m.subgroup();
    std::vector<long long> counts(m.modulus(), 0);
    for (Elem x = 0; x < G.order(); ++x) {
      Elem const xi = G.inv(x);
      Elem const sx = G.conj(xi, s);
      if (!l.contains(sx)) {
        continue;
      }
      bool inside = true;
      for (Elem y : p.elements()) {
        if (!l.contains(G.conj(xi, y))) {
          inside = false;
          break;
        }
      }
      if (inside) {
        ++counts[m.exponent(sx)];
      }
    }
    auto const k = static_cast<long long>(l.order());
    for (auto& c : counts) {
      c /= k;
    }
    return CycloNum::from_exponent_counts(m.modulus(), counts).canonical();
  }

  CycloNum species_of_monomial(MonomialSymbol const& m, Pair const& a) {
    return species_of_monomial(m, a.p, a.s);
  }

  namespace {

    SpeciesVector species_of_terms(PairTable const& table, Combination const& terms) {
      SpeciesVector out(table.size());
      for (auto const& [sym, coeff] : terms) {
        for (std::size_t i = 0; i < table.size(); ++i) {
          CycloNum v = species_of_monomial(sym, table.pairs()[i]);
          if (!v.is_zero()) {
            out[i] += coeff * v;
          }
        }
      }
      for (auto& v : out) {
        v = v.canonical();
      }
      return out;
    }

    void check_same(TElement const& a, TElement const& b) {
      if (a.table().get() != b.table().get()) {
        throw structure_error("elements of different rings: " + a.group()->name() + " and " +
                              b.group()->name());
      }
    }

  }  // namespace

  TElement::TElement(PairTablePtr table) : table_(std::move(table)), terms_(Combination{}) {
    species_.assign(table_->size(), CycloNum());
  }

  TElement TElement::from_terms(PairTablePtr table, Combination terms) {
    TElement x(std::move(table));
    x.species_ = species_of_terms(*x.table_, terms);
    x.terms_   = std::move(terms);
    return x;
  }

  TElement TElement::from_species(PairTablePtr table, SpeciesVector species) {
    if (species.size() != table->size()) {
      throw structure_error("species vector of length " + std::to_string(species.size()) +
                            " for " + std::to_string(table->size()) + " pair classes");
    }
    TElement x(std::move(table));
    x.terms_.reset();
    for (auto& v : species) {
      v = v.canonical();
    }
    x.species_ = std::move(species);
    return x;
  }

  TElement TElement::symbol(PairTablePtr table, MonomialSymbol const& m) {
    Combination c;
    c.emplace(m, CycloNum(1));
    return from_terms(std::move(table), std::move(c));
  }

  TElement TElement::trivial(PairTablePtr table) {
    return symbol(table, MonomialSymbol::trivial(whole_group(table->group())));
  }

  Combination const& TElement::terms() const {
    if (!terms_) {
      throw error("element has no monomial expansion");
    }
    return *terms_;
  }

  TElement TElement::scaled(CycloNum const& c) const {
    TElement x = *this;
    for (auto& v : x.species_) {
      v = (v * c).canonical();
    }
    if (x.terms_) {
      if (c.is_zero()) {
        x.terms_->clear();
      }
      for (auto& [sym, coeff] : *x.terms_) {
        coeff *= c;
      }
    }
    return x;
  }

  TElement operator+(TElement const& a, TElement const& b) {
    check_same(a, b);
    TElement x = a;
    for (std::size_t i = 0; i < x.species_.size(); ++i) {
      x.species_[i] = (x.species_[i] + b.species_[i]).canonical();
    }
    if (a.terms_ && b.terms_) {
      for (auto const& [sym, coeff] : *b.terms_) {
        add_term(*x.terms_, sym, coeff);
      }
    } else {
      x.terms_.reset();
    }
    return x;
  }

  TElement operator-(TElement const& a, TElement const& b) {
    return a + b.scaled(CycloNum(-1));
  }

  TElement operator*(TElement const& a, TElement const& b) {
    check_same(a, b);
    SpeciesVector v(a.species_.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = a.species_[i] * b.species_[i];
    }
    return TElement::from_species(a.table_, std::move(v));
  }

  bool operator==(TElement const& a, TElement const& b) {
    return a.table_.get() == b.table_.get() && a.species_ == b.species_;
  }

  std::vector<long long> mobius_to(std::vector<Subgroup> const& poset, std::size_t top) {
    std::vector<long long>   mu(poset.size(), 0);
    std::vector<std::size_t> order(poset.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return poset[a].order() > poset[b].order(); });
    mu[top] = 1;
    for (std::size_t i : order) {
      if (i == top || !poset[i].is_subgroup_of(poset[top])) {
        continue;
      }
      long long sum = 0;
      for (std::size_t j = 0; j < poset.size(); ++j) {
        if (j != i && poset[j].order() > poset[i].order() && poset[i].is_subgroup_of(poset[j]) &&
            poset[j].is_subgroup_of(poset[top])) {
          sum += mu[j];
        }
      }
      mu[i] = -sum;
    }
    return mu;
  }

  std::vector<Subgroup> stable_subgroups(Subgroup const& p, Elem s) {
    auto                  local = as_group(p);
    std::vector<Subgroup> out;
    for (auto const& l : all_subgroups(local.group)) {
      Subgroup x = local.push_forward(l);
      if (ppf::conjugate(x, s) == x) {
        out.push_back(std::move(x));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Subgroup> span_subgroups(Pair const& a) {
    auto                  local = span_group(a);
    std::vector<Subgroup> out;
    for (auto const& l : all_subgroups(local.group)) {
      out.push_back(local.push_forward(l));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<int> span_exponents(Pair const& a) {
    auto const&      G = *a.group;
    std::vector<int> out(G.order(), -1);
    unsigned const   n  = G.elem_order(a.s);
    Elem             si = 0;
    for (unsigned i = 0; i < n; ++i) {
      for (Elem y : a.p.elements()) {
        out[G.mul(y, si)] = static_cast<int>(i);
      }
      si = G.mul(si, a.s);
    }
    return out;
  }

  std::size_t quotient_centralizer_order(Pair const& a) {
    auto const& G     = *a.group;
    Elem const  s_inv = G.inv(a.s);
    std::size_t    count = 0;
    Subgroup const n     = normalizer(a.p);
    for (Elem g : n.elements()) {
      count += a.p.contains(G.mul(G.conj(g, a.s), s_inv)) ? 1 : 0;
    }
    return count / a.p.order();
  }

  std::size_t normalizer_centralizer_order(Pair const& a) {
    auto const& G     = *a.group;
    std::size_t    count = 0;
    Subgroup const n     = normalizer(a.p);
    for (Elem g : n.elements()) {
      count += G.mul(g, a.s) == G.mul(a.s, g) ? 1 : 0;
    }
    return count;
  }

  namespace {

    MonomialSymbol inflated_character(Subgroup const& l, std::vector<int> const& expo, unsigned e, unsigned n,
                                      unsigned prime) {
      std::vector<unsigned> lambda;
      lambda.reserve(l.order());
      for (Elem x : l.elements()) {
        lambda.push_back((e * static_cast<unsigned>(expo[x])) % n);
      }
      return MonomialSymbol::make(l, std::move(lambda), n, prime);
    }

  }  // namespace

  TElement idempotent_v1(Pair const& a) {
    auto const&    G  = *a.group;
    unsigned const n  = G.elem_order(a.s);
    auto const     x  = span(a);
    auto const     subs = span_subgroups(a);
    std::size_t    top  = 0;
    while (!(subs[top] == x)) {
      ++top;
    }
    auto const mu   = mobius_to(subs, top);
    auto const expo = span_exponents(a);
    Rational const base(1, static_cast<unsigned long>(a.p.order() * n * quotient_centralizer_order(a)));

    Combination c;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      Subgroup const& l = subs[i];
      if (mu[i] == 0 || a.p.order() * l.order() != x.order() * intersection(a.p, l).order()) {
        continue;
      }
      for (unsigned e = 0; e < n; ++e) {
        Rational const scalar = base * static_cast<long>(l.order()) * static_cast<long>(mu[i]);
        add_term(c, inflated_character(l, expo, e, n, a.prime),
                 CycloNum(scalar) * CycloNum::root_of_unity(n, -static_cast<long long>(e)));
      }
    }
    return TElement::from_terms(pair_table(a.group, a.prime), std::move(c));
  }

  TElement idempotent_v2(Pair const& a) {
    auto const&    G    = *a.group;
    unsigned const n    = G.elem_order(a.s);
    auto const     subs = stable_subgroups(a.p, a.s);
    auto const     mu   = mobius_to(subs, subs.size() - 1);
    auto const     expo = span_exponents(a);
    Rational const base(1, static_cast<unsigned long>(normalizer_centralizer_order(a)));

    Combination c;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (mu[i] == 0) {
        continue;
      }
      Subgroup const&   l       = subs[i];
      Subgroup const    ls      = join(l, a.s);
      Elem const        s_arr[] = {a.s};
      std::size_t const cl      = centralizer_in(l, s_arr).order();
      for (unsigned e = 0; e < n; ++e) {
        Rational const scalar = base * static_cast<long>(cl) * static_cast<long>(mu[i]);
        add_term(c, inflated_character(ls, expo, e, n, a.prime),
                 CycloNum(scalar) * CycloNum::root_of_unity(n, -static_cast<long long>(e)));
      }
    }
    return TElement::from_terms(pair_table(a.group, a.prime), std::move(c));
  }

  TElement idempotent(PairTablePtr const& table, std::size_t index) {
    return idempotent_v1(table->pairs().at(index));
  }

}  // namespace ppf
