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

#include "cli.hpp"

#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ppf/catalog.hpp"
#include "ppf/error.hpp"
#include "ppf/functor.hpp"
#include "ppf/io.hpp"
#include "ppf/pairs.hpp"
#include "ppf/ppring.hpp"
#include "ppf/records.hpp"
#include "ppf/verify.hpp"

namespace ppf::cli {

  namespace {

    using records::Json;

    struct Config {
      std::vector<std::string> groups;
      unsigned                 prime     = 2;
      std::string              format    = "pretty";
      std::size_t              max_order = 24;
      std::string              suite     = "all";
      std::optional<long long> pair;
      std::optional<long long> dpair;
    };

    class Output {
     public:
      Output(std::ostream& out, bool records) : out_(out), records_(records) {}

      bool records() const noexcept {
        return records_;
      }
      void record(Json const& j) {
        out_ << records::line(j) << '\n';
      }
      std::ostream& text() {
        return out_;
      }

     private:
      std::ostream& out_;
      bool          records_;
    };

    GroupPtr single_group(Config const& cfg) {
      if (cfg.groups.size() != 1) {
        throw format_error("expected exactly one --group, got " + std::to_string(cfg.groups.size()));
      }
      return load_group(cfg.groups.front());
    }

    std::size_t select(std::optional<long long> const& index, std::size_t count, char const* flag) {
      if (!index) {
        throw format_error(std::string("missing ") + flag);
      }
      if (*index < 0 || static_cast<std::size_t>(*index) >= count) {
        std::string valid = count == 0 ? "none" : "0.." + std::to_string(count - 1);
        throw format_error(std::string("invalid ") + flag + " " + std::to_string(*index) + ": valid indices are " +
                           valid);
      }
      return static_cast<std::size_t>(*index);
    }

    std::string render(SpeciesVector const& v) {
      std::string out = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + v[i].to_string();
      }
      return out + "]";
    }

    Json reduced_json(Pair const& r) {
      return Json{{"order", r.group->order()}, {"P", r.p.elements()}, {"s", r.s}};
    }

    int analyze(Config const& cfg, Output& out) {
      GroupPtr const g       = single_group(cfg);
      auto const     table   = pair_table(g, cfg.prime);
      auto const     classes = conjugacy_classes(*g);
      if (out.records()) {
        out.record(Json{{"type", "group"},
                        {"name", g->name()},
                        {"order", g->order()},
                        {"prime", cfg.prime},
                        {"classes", classes}});
      } else {
        out.text() << g->name() << ": order " << g->order() << ", " << classes.size() << " conjugacy classes, "
                   << table->size() << " pair classes at p = " << cfg.prime << "\n";
      }
      std::size_t ddelta = 0;
      for (std::size_t i = 0; i < table->size(); ++i) {
        Pair const& a   = table->pairs()[i];
        bool const  dd  = is_ddelta(a);
        Pair const  red = reduce_pair(a);
        ddelta += dd ? 1 : 0;
        if (out.records()) {
          out.record(Json{{"type", "pair"},
                          {"index", i},
                          {"pair", records::pair(a)},
                          {"ddelta", dd},
                          {"reduced", reduced_json(red)}});
        } else {
          out.text() << "  [" << i << "] " << a.to_string() << (dd ? "  D-delta" : "") << "  reduced: order "
                     << red.group->order() << " " << red.to_string() << "\n";
        }
      }
      if (!out.records()) {
        out.text() << ddelta << " of " << table->size() << " pair classes are D-delta\n";
      }
      return ok;
    }

    int idempotents(Config const& cfg, Output& out) {
      GroupPtr const g     = single_group(cfg);
      auto const     table = pair_table(g, cfg.prime);
      for (std::size_t i = 0; i < table->size(); ++i) {
        Pair const&    a = table->pairs()[i];
        TElement const f = idempotent_v1(a);
        if (out.records()) {
          out.record(Json{{"type", "idempotent"},
                          {"index", i},
                          {"pair", records::pair(a)},
                          {"terms", records::terms(f.terms())},
                          {"species", records::species(f.species())}});
          continue;
        }
        out.text() << "F[" << i << "] " << a.to_string() << " =\n";
        for (auto const& [sym, c] : f.terms()) {
          out.text() << "    (" << c.to_string() << ") Ind from L of order " << sym.subgroup().order()
                     << (sym.modulus() > 1 ? ", nontrivial character" : "") << "\n";
        }
        out.text() << "  species " << render(f.species()) << "\n";
      }
      return ok;
    }

    int decompose(Config const& cfg, Output& out) {
      GroupPtr const g     = single_group(cfg);
      auto const     table = pair_table(g, cfg.prime);
      LabelRegistry  reg;
      for (auto const& b : functor_decomposition(g, cfg.prime, reg)) {
        Pair const& label = reg.labels()[b.label];
        if (out.records()) {
          out.record(Json{{"type", "block"},
                          {"label", reduced_json(label)},
                          {"pairs", b.pairs},
                          {"size", b.pairs.size()}});
          continue;
        }
        out.text() << "label order " << label.group->order() << " " << label.to_string() << ": " << b.pairs.size()
                   << " {";
        for (std::size_t k = 0; k < b.pairs.size(); ++k) {
          out.text() << (k ? ", " : "") << b.pairs[k];
        }
        out.text() << "}\n";
      }
      return ok;
    }

    int simple_dims(Config const& cfg, Output& out) {
      GroupPtr const g = single_group(cfg);
      LabelRegistry  reg;
      for (auto const& b : functor_decomposition(g, cfg.prime, reg)) {
        Pair const&       label = reg.labels()[b.label];
        std::size_t const dim   = simple_dim(label, g);
        if (out.records()) {
          out.record(Json{{"type", "simple_dim"}, {"label", reduced_json(label)}, {"dim", dim}});
        } else {
          out.text() << "dim S(order " << label.group->order() << " " << label.to_string() << ")(" << g->name()
                     << ") = " << dim << "\n";
        }
      }
      std::size_t const s11 = s11_dim(g, cfg.prime);
      if (out.records()) {
        out.record(Json{{"type", "s11"}, {"dim", s11}});
      } else {
        out.text() << "p'-classes = " << s11 << "\n";
      }
      return ok;
    }

    int essential(Config const& cfg, Output& out) {
      GroupPtr const g = single_group(cfg);
      auto const     r = essential_report(g, cfg.prime);
      if (out.records()) {
        out.record(Json{{"type", "essential"},
                        {"group", g->name()},
                        {"prime", cfg.prime},
                        {"nonzero", r.nonzero},
                        {"witness", r.witness ? records::pair(*r.witness) : Json()},
                        {"n", r.n},
                        {"dimension", r.dimension}});
      } else if (r.nonzero) {
        out.text() << "E(" << g->name() << ") nonzero: witness " << r.witness->to_string() << ", n = " << r.n
                   << ", dimension = " << r.dimension << "\n";
      } else {
        out.text() << "E(" << g->name() << ") = 0\n";
      }
      return ok;
    }

    int compose(Config const& cfg, Output& out) {
      if (cfg.groups.empty() || cfg.groups.size() > 2) {
        throw format_error("compose takes --group H and optionally a second --group G");
      }
      GroupPtr const h      = load_group(cfg.groups.front());
      GroupPtr const g      = cfg.groups.size() == 2 ? load_group(cfg.groups.back()) : h;
      auto const     dqs    = enumerate_diagonal_pairs(h, g, cfg.prime);
      auto const     gtable = pair_table(g, cfg.prime);
      auto const&    dq     = dqs[select(cfg.dpair, dqs.size(), "--dpair")];
      auto const&    a      = gtable->pairs()[select(cfg.pair, gtable->size(), "--pair")];
      auto const     res    = compose_idempotents(dq, a);
      if (out.records()) {
        out.record(Json{{"type", "compose"},
                        {"dpair", dq.to_string()},
                        {"pair", records::pair(a)},
                        {"zero_by_support", res.zero_by_support},
                        {"conditions", res.conditions},
                        {"species", records::species(res.product.species())}});
        return ok;
      }
      out.text() << dq.to_string() << " * " << a.to_string() << "\n";
      if (res.zero_by_support) {
        out.text() << "product = 0 (support)";
        for (auto const& c : res.conditions) {
          out.text() << ": " << c;
        }
        out.text() << "\n";
        return ok;
      }
      out.text() << "normalized with g = " << res.conjugator << ", t = (u, s^" << res.j << ")\n";
      auto const htable = pair_table(h, cfg.prime);
      for (std::size_t b = 0; b < htable->size(); ++b) {
        out.text() << "  tau at [" << b << "] " << htable->pairs()[b].to_string() << " = "
                   << res.product.species()[b].to_string() << "\n";
      }
      return ok;
    }

    Json failure_json(Failure const& f) {
      return Json{{"type", "failure"}, {"suite", f.suite}, {"check", f.check}, {"group", f.group},
                  {"prime", f.prime},  {"pair", f.pair},   {"lhs", f.lhs},     {"rhs", f.rhs}};
    }

    void print_failure(Output& out, Failure const& f) {
      if (out.records()) {
        out.record(failure_json(f));
        return;
      }
      out.text() << "FAIL " << f.suite << ": " << f.check << " [group " << f.group << ", p = " << f.prime;
      if (!f.pair.empty()) {
        out.text() << ", pair " << f.pair;
      }
      out.text() << "]";
      if (!f.lhs.empty() || !f.rhs.empty()) {
        out.text() << " lhs = " << f.lhs << ", rhs = " << f.rhs;
      }
      out.text() << "\n";
    }

    int verify(Config const& cfg, Output& out) {
      std::vector<GroupPtr> universe;
      std::size_t           failed = 0;
      if (cfg.groups.empty()) {
        universe = catalog::default_groups(cfg.max_order);
      }
      for (auto const& source : cfg.groups) {
        try {
          universe.push_back(load_group(source));
        } catch (error const& e) {
          print_failure(out, Failure{"group-core", "group validation", source, 0, "", e.what(), ""});
          ++failed;
        }
      }
      for (auto const& r : run_verify(cfg.suite, universe)) {
        for (auto const& f : r.failures) {
          print_failure(out, f);
        }
        failed += r.failures.size();
        if (out.records()) {
          out.record(Json{{"type", "summary"}, {"suite", r.suite}, {"checks", r.checks}, {"failures", r.failures.size()}});
        } else {
          out.text() << r.suite << ": " << r.checks << " checks, " << r.failures.size() << " failures\n";
        }
      }
      return failed == 0 ? ok : failures_found;
    }

  }  // namespace

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Diagonal p-permutation functor workbench"};
    app.name("ppf");
    app.require_subcommand(1);
    Config cfg;

    auto common = [&](CLI::App* sub) {
      sub->add_option("--group", cfg.groups, "group file or catalog:NAME");
      sub->add_option("--prime", cfg.prime, "the prime p")->check(CLI::PositiveNumber);
      sub->add_option("--format", cfg.format, "pretty or records")->check(CLI::IsMember({"pretty", "records"}));
    };

    struct Command {
      char const* name;
      char const* help;
      int (*run)(Config const&, Output&);
    };
    Command const commands[] = {
        {"analyze", "classes, pairs, D-delta flags and reductions", analyze},
        {"idempotents", "primitive idempotents with their species", idempotents},
        {"decompose", "pair classes grouped by simple summand", decompose},
        {"simple-dims", "dimensions of the simple functors at the group", simple_dims},
        {"essential", "essential algebra invariants", essential},
        {"compose", "compose a diagonal-pair idempotent with F_{P,s}", compose},
        {"verify", "run the verification suites", verify},
    };
    std::vector<std::pair<CLI::App*, Command const*>> subs;
    for (auto const& c : commands) {
      CLI::App* sub = app.add_subcommand(c.name, c.help);
      common(sub);
      subs.emplace_back(sub, &c);
    }
    CLI::App* compose_cmd = subs[5].first;
    compose_cmd->add_option("--pair", cfg.pair, "pair index in G");
    compose_cmd->add_option("--dpair", cfg.dpair, "diagonal pair index in H x G");
    CLI::App* verify_cmd = subs[6].first;
    verify_cmd->add_option("--suite", cfg.suite, "idempotents, biset, functor, essential, cyclo or all");
    verify_cmd->add_option("--max-order", cfg.max_order, "largest catalog group to include");

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? ok : bad_input;
    }

    try {
      if (!is_prime(cfg.prime)) {
        throw format_error("--prime " + std::to_string(cfg.prime) + " is not prime");
      }
      Output output(out, cfg.format == "records");
      for (auto const& [sub, cmd] : subs) {
        if (sub->parsed()) {
          return cmd->run(cfg, output);
        }
      }
      return bad_input;
    } catch (too_large const& e) {
      err << "ppf: too large: " << e.what() << "\n";
      return bound_exceeded;
    } catch (error const& e) {
      err << "ppf: " << e.what() << "\n";
      return bad_input;
    }
  }

}  // namespace ppf::cli
