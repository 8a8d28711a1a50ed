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

#include "oracles.hpp"

#include <numeric>
#include <optional>

#include "ppf/error.hpp"

namespace oracle {

  using namespace ppf;

  namespace {

    // Monomial basis of Ind_L^K k_λ: cosets numbered by least element.
    struct MonomialBasis {
      GroupPtr            group;
      MonomialSymbol      sym;
      std::vector<Elem>   rep;
      std::vector<std::size_t> coset_of;

      explicit MonomialBasis(MonomialSymbol const& s) : group(s.group()), sym(s) {
        auto const& K = *group;
        coset_of.assign(K.order(), K.order());
        for (Elem x = 0; x < K.order(); ++x) {
          if (coset_of[x] != K.order()) {
            continue;
          }
          for (Elem l : s.subgroup().elements()) {
            coset_of[K.mul(x, l)] = rep.size();
          }
          rep.push_back(x);
        }
      }

      std::size_t size() const {
        return rep.size();
      }

      // g e_c = ζ^w e_{c'}
      std::pair<std::size_t, unsigned> act(Elem g, std::size_t c) const {
        auto const&       K  = *group;
        Elem const        y  = K.mul(g, rep[c]);
        std::size_t const c2 = coset_of[y];
        Elem const        x  = K.mul(K.inv(rep[c2]), y);
        return {c2, sym.exponent(x)};
      }
    };

  }  // namespace

  Combination tensor_symbols(DirectProduct const& dp, MonomialSymbol const& m, MonomialSymbol const& n,
                             unsigned prime) {
    MonomialBasis const bm(m);
    MonomialBasis const bn(n);
    auto const&         H  = *dp.left;
    auto const&         G  = *dp.right;
    unsigned const      t  = std::lcm(m.modulus(), n.modulus());
    unsigned const      fm = t / m.modulus();
    unsigned const      fn = t / n.modulus();

    std::size_t const points = bm.size() * bn.size();
    auto              id     = [&](std::size_t c, std::size_t d) { return c * bn.size() + d; };
    // G-orbits with labels: e_p = ζ^label e_base in the coinvariants
    std::vector<std::size_t> orbit(points, points);
    std::vector<unsigned>    label(points, 0);
    std::vector<std::size_t> base;
    std::vector<bool>        alive;
    for (std::size_t p0 = 0; p0 < points; ++p0) {
      if (orbit[p0] != points) {
        continue;
      }
      std::size_t const o = base.size();
      base.push_back(p0);
      alive.push_back(true);
      orbit[p0] = o;
      std::vector<std::size_t> queue{p0};
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::size_t const p = queue[qi];
        std::size_t const c = p / bn.size();
        std::size_t const d = p % bn.size();
        for (Elem g = 0; g < G.order(); ++g) {
          auto [c2, wc] = bm.act(dp.make(0, g), c);
          auto [d2, wd] = bn.act(g, d);
          unsigned const    w  = (wc * fm + wd * fn) % t;
          std::size_t const q  = id(c2, d2);
          unsigned const    lq = (label[p] + t - w) % t;
          if (orbit[q] == points) {
            orbit[q] = o;
            label[q] = lq;
            queue.push_back(q);
          } else if (label[q] != lq) {
            alive[o] = false;
          }
        }
      }
    }

    // H permutes the surviving orbits monomially
    Combination       out;
    std::vector<bool> done(base.size(), false);
    for (std::size_t o = 0; o < base.size(); ++o) {
      if (!alive[o] || done[o]) {
        continue;
      }
      std::size_t const     b = base[o];
      ElementSet            stab(H.order());
      std::vector<unsigned> theta(H.order(), 0);
      for (Elem h = 0; h < H.order(); ++h) {
        auto [c2, wc]   = bm.act(dp.make(h, 0), b / bn.size());
        std::size_t const q = id(c2, b % bn.size());
        done[orbit[q]]      = true;
        if (orbit[q] == o) {
          stab.insert(h);
          theta[h] = (wc * fm + label[q]) % t;
        }
      }
      Subgroup const        s = Subgroup::closed(dp.left, std::move(stab));
      std::vector<unsigned> ex;
      for (Elem h : s.elements()) {
        ex.push_back(theta[h]);
      }
      add_term(out, MonomialSymbol::make(s, std::move(ex), t, prime), CycloNum(1));
    }
    return out;
  }

  TElement tensor(DirectProduct const& dp, TElement const& m, TElement const& n) {
    Combination out;
    for (auto const& [a, ca] : m.terms()) {
      for (auto const& [b, cb] : n.terms()) {
        CycloNum const c = ca * cb;
        for (auto const& [sym, k] : tensor_symbols(dp, a, b, m.prime())) {
          add_term(out, sym, c * k);
        }
      }
    }
    return TElement::from_terms(pair_table(dp.left, m.prime()), std::move(out));
  }

  std::vector<MonomialSymbol> sample_symbols(GroupPtr const& g, unsigned prime) {
    std::vector<MonomialSymbol> out;
    for (auto const& l : all_subgroups(g)) {
      out.push_back(MonomialSymbol::trivial(l));
      std::optional<Elem> gen;
      for (Elem x : l.elements()) {
        if (g->elem_order(x) == l.order()) {
          gen = x;
          break;
        }
      }
      std::size_t m = l.order();
      while (m % prime == 0) {
        m /= prime;
      }
      if (!gen || m == 1) {
        continue;
      }
      std::vector<unsigned> power(g->order(), 0);
      Elem                  y = 0;
      for (unsigned i = 0; i < l.order(); ++i) {
        power[y] = i;
        y        = g->mul(y, *gen);
      }
      for (unsigned e = 1; e < m; ++e) {
        std::vector<unsigned> ex;
        for (Elem x : l.elements()) {
          ex.push_back(static_cast<unsigned>((std::size_t{e} * power[x]) % m));
        }
        out.push_back(MonomialSymbol::make(l, std::move(ex), static_cast<unsigned>(m), prime));
      }
    }
    return out;
  }

  namespace {

    struct Field {
      unsigned k;
      unsigned poly;  // includes x^k
      unsigned size;

      unsigned mul(unsigned a, unsigned b) const {
        unsigned r = 0;
        while (b != 0) {
          if (b & 1u) {
            r ^= a;
          }
          b >>= 1;
          a <<= 1;
          if (a & size) {
            a ^= poly;
          }
        }
        return r;
      }

      unsigned pow(unsigned a, unsigned long long e) const {
        unsigned r = 1;
        while (e != 0) {
          if (e & 1u) {
            r = mul(r, a);
          }
          a = mul(a, a);
          e >>= 1;
        }
        return r;
      }

      unsigned inv(unsigned a) const {
        return pow(a, size - 2);
      }
    };

    bool irreducible(unsigned poly, unsigned k) {
      // no factor of degree 1..k/2
      for (unsigned d = 1; 2 * d <= k; ++d) {
        for (unsigned f = (1u << d); f < (2u << d); ++f) {
          // polynomial remainder of poly by f over GF(2)
          unsigned r = poly;
          for (int bit = static_cast<int>(k); bit >= static_cast<int>(d); --bit) {
            if (r & (1u << bit)) {
              r ^= f << (bit - static_cast<int>(d));
            }
          }
          if (r == 0) {
            return false;
          }
        }
      }
      return true;
    }

    Field make_field(unsigned k) {
      for (unsigned low = 1; low < (1u << k); low += 2) {
        unsigned const poly = (1u << k) | low;
        if (irreducible(poly, k)) {
          return Field{k, poly, 1u << k};
        }
      }
      throw error("no irreducible polynomial found");
    }

    using Vec    = std::vector<unsigned>;
    using Matrix = std::vector<Vec>;

    // Row-reduces the rows in place; returns the rank.
    std::size_t reduce_rows(Field const& f, Matrix& rows, std::vector<std::size_t>* pivots = nullptr) {
      std::size_t r = 0;
      if (rows.empty()) {
        return 0;
      }
      std::size_t const cols = rows[0].size();
      for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) {
          ++p;
        }
        if (p == rows.size()) {
          continue;
        }
        std::swap(rows[p], rows[r]);
        unsigned const inv = f.inv(rows[r][c]);
        for (auto& x : rows[r]) {
          x = f.mul(x, inv);
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (i != r && rows[i][c] != 0) {
            unsigned const factor = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j) {
              rows[i][j] ^= f.mul(factor, rows[r][j]);
            }
          }
        }
        if (pivots) {
          pivots->push_back(c);
        }
        ++r;
      }
      rows.resize(r);
      return r;
    }

    // Basis of the null space of the linear map given by its rows (equations).
    Matrix kernel(Field const& f, Matrix equations, std::size_t n) {
      std::vector<std::size_t> piv;
      reduce_rows(f, equations, &piv);
      std::vector<bool> is_pivot(n, false);
      for (std::size_t c : piv) {
        is_pivot[c] = true;
      }
      Matrix basis;
      for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) {
          continue;
        }
        Vec v(n, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) {
          v[piv[i]] = equations[i][free];  // char 2: -x = x
        }
        basis.push_back(std::move(v));
      }
      return basis;
    }

    // Matrix of g on the monomial basis: column c is g e_c.
    Matrix action(Field const& f, MonomialBasis const& b, Elem g, unsigned root) {
      std::size_t const n = b.size();
      Matrix            a(n, Vec(n, 0));
      for (std::size_t c = 0; c < n; ++c) {
        auto [c2, e] = b.act(g, c);
        a[c2][c]     = f.pow(root, e);
      }
      return a;
    }

    Vec apply(Field const& f, Matrix const& a, Vec const& v) {
      Vec out(a.size(), 0);
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
          if (a[i][j] != 0 && v[j] != 0) {
            out[i] ^= f.mul(a[i][j], v[j]);
          }
        }
      }
      return out;
    }

    Matrix fixed_points(Field const& f, MonomialBasis const& b, Subgroup const& q, unsigned root) {
      std::size_t const n = b.size();
      Matrix            eq;
      for (Elem g : q.elements()) {
        Matrix a = action(f, b, g, root);
        for (std::size_t i = 0; i < n; ++i) {
          a[i][i] ^= 1;
          eq.push_back(a[i]);
        }
      }
      return kernel(f, std::move(eq), n);
    }

  }  // namespace

  CycloNum brauer_species_char2(MonomialSymbol const& m, Subgroup const& p, Elem s) {
    auto const&    G  = *m.group();
    unsigned const so = G.elem_order(s);
    unsigned const mm = std::lcm(m.modulus(), so);
    if (mm % 2 == 0) {
      throw error("characteristic-2 oracle needs odd orders");
    }
    unsigned k = 1;
    while (((1u << k) - 1) % mm != 0) {
      ++k;
    }
    Field const f = make_field(k);
    unsigned    alpha = 0;
    for (unsigned a = 2; a < f.size && alpha == 0; ++a) {
      bool primitive = true;
      for (unsigned d = 1; d < f.size - 1 && primitive; ++d) {
        if ((f.size - 1) % d == 0 && f.pow(a, d) == 1) {
          primitive = false;
        }
      }
      if (primitive) {
        alpha = a;
      }
    }
    if (f.size == 2) {
      alpha = 1;
    }
    // β of order mm, and λ-values ζ_m ↦ β^{mm/m}
    unsigned const beta = f.pow(alpha, (f.size - 1) / mm);
    unsigned const root = f.pow(beta, mm / m.modulus());

    MonomialBasis const b(m);
    std::size_t const   n  = b.size();
    Matrix const        mp = fixed_points(f, b, p, root);

    // relative traces from the proper subgroups of P
    Matrix traces;
    auto   local = as_group(p);
    for (auto const& lq : all_subgroups(local.group)) {
      if (lq.order() == p.order()) {
        continue;
      }
      Subgroup const q = local.push_forward(lq);
      std::vector<Elem> reps;
      ElementSet        seen(G.order());
      for (Elem x : p.elements()) {
        if (seen.contains(x)) {
          continue;
        }
        reps.push_back(x);
        for (Elem y : q.elements()) {
          seen.insert(G.mul(x, y));
        }
      }
      for (auto const& v : fixed_points(f, b, q, root)) {
        Vec tr(n, 0);
        for (Elem x : reps) {
          Vec const w = apply(f, action(f, b, x, root), v);
          for (std::size_t i = 0; i < n; ++i) {
            tr[i] ^= w[i];
          }
        }
        traces.push_back(std::move(tr));
      }
    }
    reduce_rows(f, traces);
    std::size_t const r = traces.size();

    // complement of the trace space inside M^P
    Matrix basis = traces;
    Matrix complement;
    for (auto const& v : mp) {
      Matrix trial = basis;
      trial.push_back(v);
      if (reduce_rows(f, trial) > basis.size()) {
        basis.push_back(v);
        complement.push_back(v);
      }
    }
    std::size_t const d = complement.size();
    std::vector<long long> counts(mm, 0);
    if (d == 0) {
      return CycloNum::from_exponent_counts(mm, counts);
    }

    // s on the quotient: solve basis * x = s v, keep complement coordinates
    Matrix const sa = action(f, b, s, root);
    Matrix       quot(d, Vec(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
      Vec const target = apply(f, sa, complement[i]);
      // augmented system: columns = basis vectors, last = target
      Matrix aug(n, Vec(basis.size() + 1, 0));
      for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t col = 0; col < basis.size(); ++col) {
          aug[row][col] = basis[col][row];
        }
        aug[row][basis.size()] = target[row];
      }
      std::vector<std::size_t> piv;
      reduce_rows(f, aug, &piv);
      Vec x(basis.size(), 0);
      for (std::size_t t = 0; t < piv.size(); ++t) {
        if (piv[t] < basis.size()) {
          x[piv[t]] = aug[t][basis.size()];
        }
      }
      for (std::size_t j = 0; j < d; ++j) {
        quot[j][i] = x[r + j];
      }
    }

    // eigenvalue multiplicities of an operator of odd order
    std::size_t total = 0;
    for (unsigned e = 0; e < mm; ++e) {
      unsigned const ev = f.pow(beta, e);
      Matrix         a  = quot;
      for (std::size_t i = 0; i < d; ++i) {
        a[i][i] ^= ev;
      }
      std::size_t const mult = kernel(f, a, d).size();
      counts[e]              = static_cast<long long>(mult);
      total += mult;
    }
    if (total != d) {
      throw error("operator is not diagonalizable over the chosen field");
    }
    return CycloNum::from_exponent_counts(mm, counts).canonical();
  }

}  // namespace oracle
