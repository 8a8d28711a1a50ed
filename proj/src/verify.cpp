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

#include "ppf/verify.hpp"

#include <algorithm>
#include <numeric>

#include "ppf/biset.hpp"
#include "ppf/catalog.hpp"
#include "ppf/error.hpp"
#include "ppf/functor.hpp"
#include "ppf/isomorphism.hpp"
#include "ppf/pairs.hpp"
#include "ppf/ppring.hpp"

namespace ppf {

  namespace {

    std::string render(SpeciesVector const& v) {
      std::string out = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + v[i].to_string();
      }
      return out + "]";
    }

    class Recorder {
     public:
      explicit Recorder(std::string suite) {
        report_.suite = std::move(suite);
      }

      // Records a failure unless ok; returns ok.
      bool check(bool ok, std::string check, Group const& g, unsigned prime, std::string pair, std::string lhs,
                 std::string rhs) {
        ++report_.checks;
        if (!ok) {
          report_.failures.push_back(Failure{report_.suite, std::move(check), g.name(), prime, std::move(pair),
                                             std::move(lhs), std::move(rhs)});
        }
        return ok;
      }

      template <class T>
      bool equal(T const& lhs, T const& rhs, std::string what, Group const& g, unsigned prime, std::string pair) {
        bool const ok = lhs == rhs;
        if constexpr (std::is_same_v<T, TElement>) {
          return check(ok, std::move(what), g, prime, std::move(pair), ok ? "" : render(lhs.species()),
                       ok ? "" : render(rhs.species()));
        } else if constexpr (std::is_same_v<T, CycloNum>) {
          return check(ok, std::move(what), g, prime, std::move(pair), lhs.to_string(), rhs.to_string());
        } else {
          return check(ok, std::move(what), g, prime, std::move(pair), std::to_string(lhs), std::to_string(rhs));
        }
      }

      SuiteReport take() {
        return std::move(report_);
      }

     private:
      SuiteReport report_;
    };

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

    bool coprime(std::size_t n, unsigned p) {
      return std::gcd(n, std::size_t{p}) == 1;
    }

    using Suite = void (*)(std::vector<GroupPtr> const&, Recorder&);

    void idempotents_suite(std::vector<GroupPtr> const& universe, Recorder& rec) {
      for (auto const& g : universe) {
        for (unsigned p : verification_primes(*g)) {
          auto const table = pair_table(g, p);
          TElement   sum(table);
          for (std::size_t i = 0; i < table->size(); ++i) {
            Pair const&    a  = table->pairs()[i];
            TElement const v1 = idempotent_v1(a);
            SpeciesVector  delta(table->size(), CycloNum(0));
            delta[i] = CycloNum(1);
            rec.equal(v1, TElement::from_species(table, delta), "species of F_{P,s} is the indicator", *g, p,
                      a.to_string());
            rec.equal(v1, idempotent_v2(a), "two idempotent formulas agree", *g, p, a.to_string());
            sum = sum + v1;
          }
          rec.equal(sum, TElement::trivial(table), "idempotents sum to [k]", *g, p, "");
        }
      }
    }

    void biset_suite(std::vector<GroupPtr> const& universe, Recorder& rec) {
      for (auto const& g : universe) {
        for (unsigned p : verification_primes(*g)) {
          auto const tg = pair_table(g, p);
          for (auto const& k : subgroup_class_reps(g)) {
            auto const kg = as_group(k, "K");
            auto const tk = pair_table(kg.group, p);
            for (std::size_t i = 0; i < tg->size(); ++i) {
              rec.equal(op_res(kg, idempotent(tg, i)), predicted_res(kg, p, i),
                        "Res to a subgroup of order " + std::to_string(k.order()), *g, p, tg->pairs()[i].to_string());
            }
            for (std::size_t j = 0; j < tk->size(); ++j) {
              rec.equal(op_ind(kg, idempotent(tk, j)), predicted_ind(kg, p, j),
                        "Ind from a subgroup of order " + std::to_string(k.order()), *g, p, tk->pairs()[j].to_string());
            }
          }
          for (auto const& n : normal_subgroups(g)) {
            auto const        q    = quotient(n);
            auto const        tq   = pair_table(q.group, p);
            std::string const kern = " (kernel of order " + std::to_string(n.order()) + ")";
            for (std::size_t j = 0; j < tq->size(); ++j) {
              rec.equal(op_inf(q, idempotent(tq, j)), predicted_inf(q, p, j), "Inf" + kern, *g, p,
                        tq->pairs()[j].to_string());
            }
            for (std::size_t i = 0; i < tg->size(); ++i) {
              Pair const& a = tg->pairs()[i];
              if (span(a).order() != g->order()) {
                continue;
              }
              rec.equal(op_def(q, idempotent(tg, i)), predicted_def(q, a), "Def" + kern, *g, p, a.to_string());
              if (coprime(n.order(), p)) {
                rec.equal(deflation_constant(a, n), CycloNum(ratio(1, static_cast<long>(n.order()))),
                          "deflation constant is 1/|N|" + kern, *g, p, a.to_string());
              }
            }
          }
        }
      }
    }

    void functor_suite(std::vector<GroupPtr> const& universe, Recorder& rec) {
      std::vector<GroupPtr> by_order = universe;
      std::stable_sort(by_order.begin(), by_order.end(),
                       [](GroupPtr const& a, GroupPtr const& b) { return a->order() < b->order(); });
      std::vector<unsigned> primes{2, 3};
      for (auto const& g : universe) {
        for (unsigned p : verification_primes(*g)) {
          if (std::find(primes.begin(), primes.end(), p) == primes.end()) {
            primes.push_back(p);
          }
        }
      }
      for (unsigned p : primes) {
        LabelRegistry reg;
        for (auto const& g : by_order) {
          auto const table  = pair_table(g, p);
          auto const blocks = functor_decomposition(g, p, reg);
          std::size_t total = 0;
          for (auto const& b : blocks) {
            total += b.pairs.size();
            Pair const& label = reg.labels()[b.label];
            rec.check(is_ddelta(label), "labels are D-delta pairs", *g, p, label.to_string(), "", "");
            rec.check(span(label).order() <= g->order(), "a label needs a group of the order of its span", *g, p,
                      label.to_string(), std::to_string(span(label).order()), std::to_string(g->order()));
          }
          rec.equal(total, table->size(), "block sizes sum to the number of pair classes", *g, p, "");
          rec.equal(simple_dim(Pair::make(trivial_subgroup(g), 0, p), g), s11_dim(g, p),
                    "dim S_1 equals the number of p'-classes", *g, p, "(1,1)");

          for (auto const& a : table->pairs()) {
            Pair const r = reduce_pair(a);
            rec.check(is_ddelta(r), "reduction is D-delta", *g, p, a.to_string(), r.to_string(), "");
            rec.check(pairs_isomorphic(reduce_pair(r), r), "reduction is idempotent", *g, p, a.to_string(),
                      reduce_pair(r).to_string(), r.to_string());
            rec.check(is_pprime_quotient(r, a), "reduction is a p'-quotient", *g, p, a.to_string(), r.to_string(),
                      "");
          }
          for (auto const& n : normal_subgroups(g)) {
            if (n.order() == 1 || !coprime(n.order(), p)) {
              continue;
            }
            Quotient const q = quotient(n);
            for (auto const& a : table->pairs()) {
              Pair const b = Pair::make(q.image(a.p), q.projection(a.s), p);
              rec.check(pairs_isomorphic(reduce_pair(a), reduce_pair(b)), "reduction is stable under G/N", *g, p,
                        a.to_string(), reduce_pair(a).to_string(), reduce_pair(b).to_string());
            }
          }
        }

        for (auto const& label : reg.labels()) {
          std::size_t iso = 0;
          for (auto const& q : pair_table(label.group, p)->pairs()) {
            iso += pairs_isomorphic(q, label) ? 1 : 0;
          }
          rec.equal(simple_dim(label, label.group), iso, "at the span of a label the block is its isomorphism class",
                    *label.group, p, label.to_string());
        }

        std::vector<GroupPtr> small;
        for (auto const& g : universe) {
          if (g->order() <= 12) {
            small.push_back(g);
          }
        }
        if (!small.empty()) {
          LabelRegistry lattice_labels;
          for (auto const& g : small) {
            functor_decomposition(g, p, lattice_labels);
          }
          auto const report = lattice_check(small, lattice_labels.labels(), p);
          rec.check(report.ok(), "subfunctor lattice", *small.back(), p, "",
                    report.ok() ? "" : report.failures.front(), "");
        }
      }

      // composition on G x G
      for (auto const& g : universe) {
        if (g->order() > 8) {
          continue;
        }
        for (unsigned p : verification_primes(*g)) {
          auto const table = pair_table(g, p);
          auto const dqs   = enumerate_diagonal_pairs(g, g, p);
          if (dqs.empty()) {
            continue;
          }
          auto const dp = dqs.front().product;
          ElementSet delta(dp->group->order());
          for (Elem x = 0; x < g->order(); ++x) {
            delta.insert(dp->make(x, x));
          }
          auto const bimodule = MonomialSymbol::trivial(Subgroup::closed(dp->group, std::move(delta)));
          for (auto const& a : table->pairs()) {
            if (span(a).order() != g->order()) {
              continue;
            }
            TElement identity(table);
            for (auto const& dq : dqs) {
              auto const res = compose_idempotents(dq, a);
              bool const spans = join(dp->project_right(dq.pair.p), dq.v()).order() == g->order();
              if (!spans) {
                rec.check(res.zero_by_support, "product vanishes when p_2(<Qt>) != G", *g, p,
                          dq.to_string() + " * " + a.to_string(), render(res.product.species()), "0");
              }
              for (std::size_t b = 0; b < table->size(); ++b) {
                if (res.product.species()[b].is_zero()) {
                  continue;
                }
                Pair const& target = table->pairs()[b];
                bool        conj   = false;
                for (Elem x = 0; x < g->order() && !conj; ++x) {
                  conj = conjugate(dq.first, x) == target.p;
                }
                rec.check(conj && g->elem_order(dq.u()) == g->elem_order(target.s), "composition support", *g, p,
                          dq.to_string() + " * " + a.to_string(), target.to_string(), "");
              }
              CycloNum const tau = species_of_monomial(bimodule, dq.pair);
              if (!tau.is_zero()) {
                identity = identity + res.product.scaled(tau);
              }
            }
            rec.equal(identity, idempotent_v1(a), "identity bimodule composes to F_{P,s}", *g, p, a.to_string());
          }
        }
      }
    }

    void essential_suite(std::vector<GroupPtr> const& universe, Recorder& rec) {
      for (auto const& g : universe) {
        if (g->order() > 64) {
          continue;
        }
        for (unsigned p : verification_primes(*g)) {
          auto const r      = essential_report(g, p);
          bool       exists = false;
          for (auto const& a : pair_table(g, p)->pairs()) {
            exists = exists || (span(a).order() == g->order() && is_ddelta(a));
          }
          rec.check(r.nonzero == exists, "nonzero iff a generating D-delta pair exists", *g, p,
                    r.witness ? r.witness->to_string() : "", r.nonzero ? "nonzero" : "zero",
                    exists ? "nonzero" : "zero");
          if (r.witness) {
            rec.equal(static_cast<std::size_t>(r.dimension),
                      static_cast<std::size_t>(euler_phi(r.n) * outer_automorphism_order(g)),
                      "dimension is phi(n) |Out(G)|", *g, p, r.witness->to_string());
          }
        }
      }
    }

    void cyclo_suite(std::vector<GroupPtr> const& universe, Recorder& rec) {
      std::vector<unsigned> moduli;
      for (auto const& g : universe) {
        for (unsigned p : verification_primes(*g)) {
          unsigned const m = pair_table(g, p)->modulus();
          if (std::find(moduli.begin(), moduli.end(), m) == moduli.end()) {
            moduli.push_back(m);
          }
        }
      }
      std::sort(moduli.begin(), moduli.end());
      auto const& host = *catalog::cyclic(1);
      for (unsigned m : moduli) {
        std::string const at = "m = " + std::to_string(m);
        rec.equal(cyclotomic_polynomial(m).size() - 1, static_cast<std::size_t>(euler_phi(m)), "deg Phi_m = phi(m)",
                  host, 0, at);
        rec.equal(CycloNum::root_of_unity(m, 1) * CycloNum::root_of_unity(m, m - 1), CycloNum(1),
                  "z * z^(m-1) = 1", host, 0, at);
        CycloNum total(0);
        for (unsigned e = 0; e < m; ++e) {
          total += CycloNum::root_of_unity(m, e);
        }
        rec.equal(total, CycloNum(m == 1 ? 1 : 0), "sum of all m-th roots", host, 0, at);
        CycloNum const x = CycloNum(ratio(1, 2)) + CycloNum::root_of_unity(m, 1) * CycloNum(3);
        if (!x.is_zero()) {
          rec.equal(x * x.inverse(), CycloNum(1), "x * x^-1 = 1", host, 0, at);
        }
        rec.equal(x.lifted(2 * m), x, "value is unchanged by lifting", host, 0, at);
        rec.equal(x.canonical(), x, "canonical form", host, 0, at);
      }
    }

    struct Entry {
      char const* name;
      Suite       run;
    };

    constexpr Entry suites[] = {
        {"idempotents", idempotents_suite}, {"biset", biset_suite},   {"functor", functor_suite},
        {"essential", essential_suite},     {"cyclo", cyclo_suite},
    };

  }  // namespace

  std::vector<unsigned> verification_primes(Group const& g) {
    std::vector<unsigned> out{2, 3};
    std::size_t           n = g.order();
    for (unsigned p = 2; p <= n; ++p) {
      if (n % p != 0) {
        continue;
      }
      while (n % p == 0) {
        n /= p;
      }
      if (p > 3) {
        out.push_back(p);
      }
    }
    return out;
  }

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names = [] {
      std::vector<std::string> out;
      for (auto const& e : suites) {
        out.emplace_back(e.name);
      }
      return out;
    }();
    return names;
  }

  std::vector<SuiteReport> run_verify(std::string_view suite, std::vector<GroupPtr> const& universe) {
    std::vector<SuiteReport> out;
    for (auto const& e : suites) {
      if (suite == "all" || suite == e.name) {
        Recorder rec(e.name);
        e.run(universe, rec);
        out.push_back(rec.take());
      }
    }
    if (out.empty()) {
      throw format_error("unknown suite '" + std::string(suite) +
                         "' (expected idempotents, biset, functor, essential, cyclo or all)");
    }
    return out;
  }

}  // namespace ppf
