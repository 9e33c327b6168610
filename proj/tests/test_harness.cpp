#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "bconv/corpus.hpp"
#include "bconv/serialize.hpp"
#include "bconv/suites.hpp"

using namespace bconv;

TEST_CASE("exhaustive corpora are canonical, deduplicated and ordered") {
  Algebra a1(1);
  auto corpus = exhaustive_corpus(a1, {1, 2});
  // every canonical sequence over {bottom, top} within the bounds
  std::set<EpSequence> seen(corpus.begin(), corpus.end());
  CHECK(seen.size() == corpus.size());
  for (const EpSequence& x : corpus) {
    CHECK(x.prefix().size() <= 1);
    CHECK(x.cycle().size() <= 2);
  }
  // canonical members are hit exactly once: the constant sequences come
  // first in witness order
  REQUIRE(corpus.size() >= 2);
  CHECK(corpus[0] == EpSequence(a1, {}, {0}));
  CHECK(corpus[1] == EpSequence(a1, {}, {1}));
  for (std::size_t i = 1; i < corpus.size(); ++i)
    CHECK(corpus[i - 1] < corpus[i]);

  Algebra a2(2);
  CHECK(exhaustive_corpus(a2, {0, 1}).size() == 4);  // the constants
}

TEST_CASE("seeded corpora are deterministic in the seed") {
  Algebra a3(3);
  auto one = seeded_corpus(a3, {2, 4}, 12345, 100);
  auto two = seeded_corpus(a3, {2, 4}, 12345, 100);
  auto other = seeded_corpus(a3, {2, 4}, 54321, 100);
  CHECK(one == two);
  CHECK(one != other);
}

TEST_CASE("json round trips") {
  Algebra a2(2);
  EpSequence x(a2, {3}, {1, 2});
  CHECK(sequence_from_json(to_json(x)) == x);

  OmegaSet a({0, 1}, {1, 0, 0});
  CHECK(omega_set_from_json(to_json(a)) == a);

  FiniteTopology t = generate_sequential_topology(Convergence::lambda_ls(), a2);
  CHECK(topology_from_json(to_json(t)) == t);

  // canonical output: parsing a noncanonical form emits the canonical one
  json redundant = {{"prefix", {1}}, {"cycle", {1, 1}}};
  CHECK(to_json(omega_set_from_json(redundant)) ==
        json({{"cycle", {1}}, {"prefix", json::array()}}));
}

TEST_CASE("sequence literals") {
  Algebra a2(2);
  CHECK(parse_sequence_literal("[3]|[1,2]", a2) == EpSequence(a2, {3}, {1, 2}));
  CHECK(parse_sequence_literal("[]|[0]", a2) == EpSequence(a2, {}, {0}));
  CHECK_THROWS_AS(parse_sequence_literal("1,2", a2), structural_error);
  CHECK_THROWS_AS(parse_sequence_literal("[]|[]", a2), structural_error);
  CHECK_THROWS_AS(parse_sequence_literal("[]|[9]", a2), structural_error);
}

TEST_CASE("convergence names parse, including nested ones") {
  Algebra a2(2);
  CHECK(parse_convergence("s", a2).name() == "s");
  CHECK(parse_convergence("l3", a2).name() == "l3");
  CHECK(parse_convergence("star:ls", a2).name() == "star:ls");
  CHECK(parse_convergence("meet:star:ls,star:li", a2).name() ==
        "meet:star:ls,star:li");
  CHECK(parse_convergence("bar:l4", a2).name() == "bar:l4");
  CHECK_THROWS_AS(parse_convergence("nope", a2), structural_error);
}

TEST_CASE("forcing reports carry the documented fields") {
  Algebra a2(2);
  json report = forcing_report_json(EpSequence(a2, {}, {1, 2}));
  CHECK(report.at("liminf") == 0);
  CHECK(report.at("limsup") == 3);
  CHECK(report.at("ax") == 0);
  CHECK(report.at("bx") == 3);
  CHECK(report.at("b") == json::array({0, 3, 3, 3, 3}));
  CHECK(report.at("traces").size() == 2);
}

TEST_CASE("dot export lists the specialization preorder") {
  Algebra a2(2);
  FiniteTopology t = generate_sequential_topology(Convergence::lambda_ls(), a2);
  std::string dot = dot_export(t);
  // four nodes; edges point from below to above since closures are up-sets
  CHECK(dot.find("\"0\";") != std::string::npos);
  CHECK(dot.find("\"3\";") != std::string::npos);
  CHECK(dot.find("\"3\" -> \"1\"") != std::string::npos);
  CHECK(dot.find("\"1\" -> \"3\"") == std::string::npos);
}

TEST_CASE("suite reports are deterministic and fail loudly") {
  SuiteConfig config;
  config.max_atoms = 2;
  config.samples = 50;
  config.selectors = 10;
  config.suites = {"axioms", "diagram"};
  SuiteReport first = run_suites(config);
  SuiteReport second = run_suites(config);
  CHECK(first.all_pass);
  CHECK(first.canonical_json().dump(2) == second.canonical_json().dump(2));
  // timing lives outside the canonical payload
  CHECK(first.full_json().contains("timing_ms"));
  CHECK_FALSE(first.canonical_json().contains("timing_ms"));
}

TEST_CASE("an empty report is still a valid payload") {
  SuiteReport empty;
  json canonical = SuiteReport{}.canonical_json();
  CHECK(canonical.at("suites").is_array());
  CHECK(canonical.at("suites").empty());
  CHECK(canonical.at("all_pass") == true);
  CHECK(json::parse(empty.full_json().dump(2)) == empty.full_json());
}

TEST_CASE("suite configuration is validated before any work") {
  SuiteConfig config;
  config.max_atoms = 9;
  CHECK_THROWS_AS(run_suites(config), usage_error);

  SuiteConfig unknown;
  unknown.suites = {"no-such-suite"};
  unknown.explicit_suites = true;
  CHECK_THROWS_AS(run_suites(unknown), usage_error);

  SuiteConfig over_cap;
  over_cap.suites = {"maximality"};
  over_cap.explicit_suites = true;
  over_cap.max_atoms = 3;
  over_cap.atoms_explicit = true;
  CHECK_THROWS_AS(run_suites(over_cap), usage_error);

  SuiteConfig zero_samples;
  zero_samples.samples = 0;
  CHECK_THROWS_AS(run_suites(zero_samples), usage_error);
}

TEST_CASE("the whole battery passes at two atoms") {
  SuiteConfig config;
  config.max_atoms = 2;
  config.samples = 100;
  config.selectors = 20;
  SuiteReport report = run_suites(config);
  for (const auto& suite : report.suites)
    for (const auto& check : suite.checks) {
      INFO(suite.name << " / " << check.name << " "
                      << check.details.dump());
      CHECK(check.pass);
    }
  CHECK(report.all_pass);
}
