#include <catch2/catch_amalgamated.hpp>

#include "bconv/corpus.hpp"
#include "bconv/forcing.hpp"

using namespace bconv;

namespace {
const Algebra a2(2);
constexpr word_t bot = 0, atom_a = 1, atom_b = 2, top = 3;
}  // namespace

TEST_CASE("atom traces") {
  EpSequence x(a2, {}, {atom_a, atom_b});
  CHECK(atom_trace(x, Element(a2, atom_a)) == OmegaSet({}, {1, 0}));
  CHECK(atom_trace(EpSequence(a2, {}, {top}), Element(a2, atom_b)) ==
        OmegaSet::all());
  CHECK(atom_trace(EpSequence(a2, {}, {bot}), Element(a2, atom_a)) ==
        OmegaSet::none());
  CHECK_THROWS_AS(atom_trace(x, Element(a2, top)), precondition_error);
}

TEST_CASE("boolean values of infinitude and cofinitude") {
  EpSequence x(a2, {}, {atom_a, atom_b});
  CHECK(boolean_value(x, NameStatement::infinite).word == top);
  CHECK(boolean_value(x, NameStatement::cofinite).word == bot);

  EpSequence y(a2, {}, {atom_a});
  CHECK(boolean_value(y, NameStatement::infinite).word == atom_a);
  CHECK(boolean_value(y, NameStatement::cofinite).word == atom_a);

  CHECK(boolean_value(EpSequence(a2, {}, {bot}), NameStatement::infinite).word ==
        bot);
}

TEST_CASE("boolean values equal the limits, exhaustively to three atoms") {
  for (int n = 1; n <= 3; ++n) {
    Algebra alg(n);
    for (const EpSequence& x : exhaustive_corpus(alg, default_bounds(alg))) {
      auto [inf, sup] = lim_inf_sup(x);
      REQUIRE(boolean_value(x, NameStatement::infinite) == sup);
      REQUIRE(boolean_value(x, NameStatement::cofinite) == inf);
    }
  }
}

TEST_CASE("the five truth values and their collapse") {
  auto b = b_values(EpSequence(a2, {}, {atom_a, atom_b}));
  CHECK(b[0].word == bot);
  CHECK(b[1].word == top);
  CHECK(b[2].word == top);
  CHECK(b[3].word == top);
  CHECK(b[4].word == top);

  auto c = b_values(EpSequence(a2, {}, {atom_a}));
  for (const auto& e : c) CHECK(e.word == atom_a);

  auto d = b_values(EpSequence(a2, {}, {top}));
  for (const auto& e : d) CHECK(e.word == top);
}

TEST_CASE("iterated limits collapse to liminf and limsup") {
  auto il = iterated_limits(EpSequence(a2, {}, {atom_a, atom_b}));
  CHECK(il.lower.word == bot);
  CHECK(il.upper.word == top);
  CHECK(il.upper_by_witnesses.word == top);

  auto c = iterated_limits(EpSequence(a2, {}, {atom_a}));
  CHECK(c.lower.word == atom_a);
  CHECK(c.upper.word == atom_a);

  // the prefix is invisible to the tail quantifiers
  auto d = iterated_limits(EpSequence(a2, {top}, {atom_b}));
  CHECK(d.lower.word == atom_b);
  CHECK(d.upper.word == atom_b);

  for (int n = 1; n <= 3; ++n) {
    Algebra alg(n);
    for (const EpSequence& x : exhaustive_corpus(alg, default_bounds(alg))) {
      IteratedLimits lim = iterated_limits(x);
      auto [inf, sup] = lim_inf_sup(x);
      REQUIRE(le(inf, lim.lower));
      REQUIRE(le(lim.lower, lim.upper));
      REQUIRE(le(lim.upper, sup));
      REQUIRE(lim.lower == inf);
      REQUIRE(lim.upper == sup);
      REQUIRE(lim.upper == lim.upper_by_witnesses);
    }
  }
}

TEST_CASE("intersection values: composition path and per-atom path") {
  EpSequence x(a2, {}, {atom_a, atom_b});
  CHECK(intersection_infinite_value(x, OmegaSet({}, {1, 0})).word == atom_a);
  CHECK(intersection_infinite_value(x, OmegaSet({0}, {1, 0})).word == atom_b);
  CHECK(intersection_infinite_value(EpSequence(a2, {}, {top}),
                                    OmegaSet({}, {1, 0, 0}))
            .word == top);
  CHECK_THROWS_AS(intersection_infinite_value(x, OmegaSet::none()),
                  precondition_error);

  for (int n = 2; n <= 3; ++n) {
    Algebra alg(n);
    auto pairs = seeded_sequence_set_pairs(alg, default_bounds(alg), 99, 500);
    for (const auto& [seq, set] : pairs)
      REQUIRE(intersection_infinite_value(seq, set) ==
              intersection_infinite_value_per_atom(seq, set));
  }
}

TEST_CASE("vanishing-limit equivalence") {
  auto samples = seeded_selectors(5, 10);

  auto all_zero = lemma_vanishing_equivalence(EpSequence(a2, {}, {bot}), samples);
  CHECK(all_zero.by_subsequences);
  CHECK(all_zero.by_index_sets);
  CHECK(all_zero.agree);

  auto two_atoms =
      lemma_vanishing_equivalence(EpSequence(a2, {}, {atom_a, atom_b}), samples);
  CHECK_FALSE(two_atoms.by_subsequences);
  CHECK_FALSE(two_atoms.by_index_sets);
  CHECK(two_atoms.agree);

  auto prefixed =
      lemma_vanishing_equivalence(EpSequence(a2, {atom_a}, {bot}), samples);
  CHECK(prefixed.by_subsequences);
  CHECK(prefixed.agree);

  Algebra a3(3);
  for (const EpSequence& x : exhaustive_corpus(a3, {1, 3}))
    REQUIRE(lemma_vanishing_equivalence(x, samples).agree);
}
