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

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "ppf/catalog.hpp"
#include "ppf/error.hpp"
#include "ppf/io.hpp"
#include "ppf/records.hpp"

using namespace ppf;

namespace {

  struct Run {
    int                      code;
    std::string              out;
    std::string              err;
    std::vector<std::string> lines;
  };

  Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "ppf");
    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    int const          code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    Run                r{code, out.str(), err.str(), {}};
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line);) {
      r.lines.push_back(line);
    }
    return r;
  }

  std::string fixture(char const* name) {
    return std::string(PPF_FIXTURE_DIR) + "/" + name;
  }

  bool contains(std::string const& haystack, std::string const& needle) {
    return haystack.find(needle) != std::string::npos;
  }

}  // namespace

TEST_CASE("analyze S3 at p = 3") {
  auto const r = run({"analyze", "--group", "catalog:S3", "--prime", "3", "--format", "records"});
  REQUIRE(r.code == cli::ok);
  REQUIRE(r.lines.size() == 5);
  int ddelta = 0;
  for (std::size_t i = 1; i < r.lines.size(); ++i) {
    auto const j = records::parse_line(r.lines[i]);
    CHECK(j["type"] == "pair");
    ddelta += j["ddelta"].get<bool>() ? 1 : 0;
  }
  // (1,1), (C3,1) and (C3,τ); only (1,τ) has a nontrivial core
  CHECK(ddelta == 3);
}

TEST_CASE("analyze the trivial group") {
  auto const r = run({"analyze", "--group", "catalog:C1", "--format", "records"});
  REQUIRE(r.code == cli::ok);
  REQUIRE(r.lines.size() == 2);
  CHECK(records::parse_line(r.lines[1])["ddelta"] == true);
}

TEST_CASE("group files") {
  auto const s3 = load_group(fixture("s3_perm.json"));
  CHECK(s3->order() == 6);
  CHECK(load_group(fixture("c2_table.json"))->order() == 2);
  CHECK_THROWS_AS(load_group(fixture("corrupted_table.json")), structure_error);
  CHECK_THROWS_AS(load_group(fixture("missing.json")), format_error);
  CHECK_THROWS_AS(parse_group_file("{\"table\": [[0, -1]]}", "inline"), format_error);
  CHECK_THROWS_AS(parse_group_file("[1, 2]", "inline"), format_error);
  CHECK_THROWS_AS(parse_group_file("{\"perm_gens\": []}", "inline"), format_error);

  auto const cycle = run({"analyze", "--group", fixture("bad_cycle.json")});
  CHECK(cycle.code == cli::bad_input);
  CHECK(contains(cycle.err, "'x'"));
  auto const syntax = run({"analyze", "--group", fixture("bad_syntax.json")});
  CHECK(syntax.code == cli::bad_input);
  CHECK(contains(syntax.err, "line 3"));
}

TEST_CASE("records round-trip byte for byte") {
  std::vector<std::vector<std::string>> commands = {
      {"analyze", "--group", "catalog:S4", "--prime", "3"},
      {"idempotents", "--group", "catalog:C3:C4", "--prime", "2"},
      {"idempotents", "--group", "catalog:C7:C3", "--prime", "7"},
      {"decompose", "--group", "catalog:A4", "--prime", "2"},
      {"simple-dims", "--group", "catalog:D8", "--prime", "2"},
      {"essential", "--group", "catalog:S3", "--prime", "3"},
      {"compose", "--group", "catalog:S3", "--prime", "3", "--pair", "3", "--dpair", "2"},
      {"verify", "--suite", "cyclo", "--max-order", "8"},
  };
  std::size_t lines = 0;
  for (auto args : commands) {
    args.push_back("--format");
    args.push_back("records");
    auto const r = run(args);
    CAPTURE(args.front());
    REQUIRE(r.code == cli::ok);
    for (auto const& line : r.lines) {
      CHECK(records::line(records::parse_line(line)) == line);
      ++lines;
    }
  }
  CHECK(lines > 20);
}

TEST_CASE("cyclotomic records decode to the same value") {
  for (unsigned m : {1u, 3u, 4u, 12u, 21u}) {
    CycloNum const x = CycloNum(ratio(-3, 7)) + CycloNum::root_of_unity(m, 1) * CycloNum(ratio(5, 2));
    CHECK(records::to_cyclo(records::cyclo(x)) == x);
  }
  CHECK(records::to_rational(records::rational(ratio(6, -4))) == ratio(-3, 2));
  CHECK(records::rational(Rational(4)) == "4/1");
  CHECK_THROWS_AS(records::to_cyclo(records::Json{{"m", 5}, {"coeffs", {"1/1"}}}), format_error);
  CHECK_THROWS_AS(records::parse_line("{\"type\": "), format_error);
}

TEST_CASE("compose output") {
  auto const zero = run({"compose", "--group", "catalog:C2", "--pair", "1", "--dpair", "0"});
  CHECK(zero.code == cli::ok);
  CHECK(contains(zero.out, "product = 0 (support)"));

  auto const id = run({"compose", "--group", "catalog:C2", "--pair", "1", "--dpair", "1", "--format", "records"});
  REQUIRE(id.code == cli::ok);
  auto const species = records::parse_line(id.lines.at(0))["species"];
  CHECK(records::to_cyclo(species[1]) == CycloNum(ratio(1, 2)));

  auto const bad = run({"compose", "--group", "catalog:C2", "--pair", "7", "--dpair", "1"});
  CHECK(bad.code == cli::bad_input);
  CHECK(contains(bad.err, "valid indices are 0..1"));

  auto const narrow = run({"compose", "--group", "catalog:S3", "--prime", "3", "--pair", "0", "--dpair", "0"});
  CHECK(narrow.code == cli::bad_input);
}

TEST_CASE("verify exit status") {
  auto const idem = run({"verify", "--suite", "idempotents", "--max-order", "12"});
  CHECK(idem.code == cli::ok);
  auto const all = run({"verify", "--suite", "all", "--max-order", "6"});
  CHECK(all.code == cli::ok);

  auto const broken = run({"verify", "--group", fixture("corrupted_table.json"), "--format", "records"});
  CHECK(broken.code == cli::failures_found);
  std::size_t failures = 0;
  std::size_t reported = 0;
  for (auto const& line : broken.lines) {
    auto const j = records::parse_line(line);
    if (j["type"] == "failure") {
      ++failures;
      CHECK(contains(j["lhs"].get<std::string>(), "Latin-square"));
    } else {
      reported += j["failures"].get<std::size_t>();
    }
  }
  CHECK(failures == 1);
  CHECK(reported == 0);

  auto const mixed = run({"verify", "--suite", "idempotents", "--group", "catalog:S3", "--group",
                          fixture("corrupted_table.json")});
  CHECK(mixed.code == cli::failures_found);
  CHECK(contains(mixed.out, "FAIL group-core"));
}

TEST_CASE("usage errors") {
  CHECK(run({"verify", "--suite", "nonsense"}).code == cli::bad_input);
  CHECK(run({"analyze", "--group", "catalog:S3", "--prime", "4"}).code == cli::bad_input);
  CHECK(run({"analyze", "--group", "catalog:Nope"}).code == cli::bad_input);
  CHECK(run({"analyze"}).code == cli::bad_input);
  CHECK(run({"frobnicate"}).code == cli::bad_input);
  CHECK(run({"essential", "--group", "catalog:C2xC2xC2xC2xC2xC2xC2"}).code == cli::bound_exceeded);
  CHECK(run({"--help"}).code == cli::ok);
}
