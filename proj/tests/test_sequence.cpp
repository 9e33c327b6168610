#include <catch2/catch_amalgamated.hpp>

#include "bconv/corpus.hpp"
#include "bconv/sequence.hpp"
#include "oracles.hpp"

using namespace bconv;

namespace {
const Algebra a2(2);
constexpr word_t bot = 0, atom_a = 1, atom_b = 2, top = 3;
}  // namespace

TEST_CASE("tail support") {
  CHECK(tail_support(EpSequence(a2, {}, {atom_a, atom_b})) ==
        ElementSet(a2, (mask_t(1) << atom_a) | (mask_t(1) << atom_b)));
  // prefix values occur finitely often
  CHECK(tail_support(EpSequence(a2, {top, bot}, {atom_a})) ==
        ElementSet(a2, mask_t(1) << atom_a));
  CHECK(tail_support(EpSequence(a2, {}, {atom_a, atom_b, atom_a})) ==
        ElementSet(a2, (mask_t(1) << atom_a) | (mask_t(1) << atom_b)));
}

TEST_CASE("liminf and limsup") {
  auto [inf1, sup1] = lim_inf_sup(EpSequence(a2, {}, {atom_a, atom_b}));
  CHECK(inf1.word == bot);
  CHECK(sup1.word == top);

  auto [inf2, sup2] = lim_inf_sup(EpSequence(a2, {}, {atom_a}));
  CHECK(inf2.word == atom_a);
  CHECK(sup2.word == atom_a);

  auto [inf3, sup3] = lim_inf_sup(EpSequence(a2, {top}, {bot}));
  CHECK(inf3.word == bot);
  CHECK(sup3.word == bot);
}

TEST_CASE("liminf/limsup agree with the truncation oracle exhaustively") {
  for (int n = 1; n <= 3; ++n) {
    Algebra alg(n);
    auto corpus = exhaustive_corpus(alg, {2, 3});
    for (const EpSequence& x : corpus) {
      auto [inf, sup] = lim_inf_sup(x);
      auto [oinf, osup] = oracles::truncation_lim_inf_sup(x);
      REQUIRE(inf.word == oinf);
      REQUIRE(sup.word == osup);
    }
  }
}

TEST_CASE("witness subsequences") {
  EpSequence x(a2, {}, {atom_a, atom_b});
  CHECK(witness_subsequence(x, ElementSet(a2, mask_t(1) << atom_a)) ==
        EpSequence(a2, {}, {atom_a}));
  CHECK(witness_subsequence(
            x, ElementSet(a2, (mask_t(1) << atom_a) | (mask_t(1) << atom_b))) ==
        x);

  EpSequence y(a2, {}, {atom_a, atom_b, top});
  ElementSet t(a2, (mask_t(1) << atom_b) | (mask_t(1) << top));
  CHECK(tail_support(witness_subsequence(y, t)) == t);

  CHECK_THROWS_AS(witness_subsequence(x, ElementSet::empty(a2)),
                  precondition_error);
  CHECK_THROWS_AS(witness_subsequence(x, ElementSet(a2, mask_t(1) << top)),
                  precondition_error);
}

TEST_CASE("limsup stability") {
  CHECK(is_limsup_stable(EpSequence(a2, {}, {atom_a})));
  CHECK_FALSE(is_limsup_stable(EpSequence(a2, {}, {atom_a, atom_b})));
  CHECK(is_limsup_stable(EpSequence(a2, {}, {top, top})));
}

TEST_CASE("composition examples") {
  EpSequence x(a2, {}, {atom_a, atom_b});
  CHECK(compose_with_enumeration(x, OmegaSet({}, {1, 0})) ==
        EpSequence(a2, {}, {atom_a}));

  EpSequence constant(a2, {}, {atom_a});
  CHECK(compose_with_enumeration(constant, OmegaSet({0, 1}, {0, 0, 1})) ==
        constant);

  EpSequence shifted(a2, {top}, {atom_a, atom_b});
  EpSequence composed = compose_with_enumeration(shifted, OmegaSet({0}, {1, 0}));
  auto direct = oracles::compose_terms_by_indexing(shifted, OmegaSet({0}, {1, 0}), 16);
  for (std::size_t k = 0; k < 16; ++k) REQUIRE(composed.term(k) == direct[k]);
  CHECK(tail_support(composed).size() == 1);

  CHECK_THROWS_AS(compose_with_enumeration(x, OmegaSet({1}, {0})),
                  precondition_error);
}

TEST_CASE("composing with the whole of omega is the identity") {
  auto corpus = exhaustive_corpus(a2, {2, 3});
  for (const EpSequence& x : corpus)
    REQUIRE(compose_with_enumeration(x, OmegaSet::all()) == x);
}

TEST_CASE("composition agrees with direct indexing on 500 seeded pairs") {
  for (int n = 2; n <= 3; ++n) {
    Algebra alg(n);
    auto pairs = seeded_sequence_set_pairs(alg, default_bounds(alg), 42, 500);
    for (const auto& [x, a] : pairs) {
      EpSequence composed = compose_with_enumeration(x, a);
      auto direct = oracles::compose_terms_by_indexing(x, a, 64);
      for (std::size_t k = 0; k < 64; ++k)
        REQUIRE(composed.term(k) == direct[k]);
    }
  }
}

TEST_CASE("subsequence tail supports are the nonempty subsets") {
  Algebra a3(3);
  auto pairs = seeded_sequence_set_pairs(a3, default_bounds(a3), 7, 500);
  for (const auto& [x, a] : pairs) {
    const mask_t sx = tail_support(x).members;
    const mask_t sy = tail_support(compose_with_enumeration(x, a)).members;
    REQUIRE(sy != 0);
    REQUIRE((sy & ~sx) == 0);
  }
  // and every nonempty subset is realized by the witness constructor
  auto corpus = exhaustive_corpus(a3, {1, 3});
  for (const EpSequence& x : corpus) {
    const mask_t s = tail_support(x).members;
    for (mask_t t = s; t != 0; t = (t - 1) & s)
      REQUIRE(tail_support(witness_subsequence(x, ElementSet(a3, t))).members ==
              t);
  }
}

TEST_CASE("limits are antitone under subsequences") {
  Algebra a3(3);
  auto corpus = exhaustive_corpus(a3, {1, 3});
  auto selectors = seeded_selectors(3, 10);
  for (const EpSequence& x : corpus) {
    auto [inf_x, sup_x] = lim_inf_sup(x);
    const mask_t s = tail_support(x).members;
    for (mask_t t = s; t != 0; t = (t - 1) & s) {
      auto [inf_y, sup_y] =
          lim_inf_sup(witness_subsequence(x, ElementSet(a3, t)));
      REQUIRE(le(inf_x, inf_y));
      REQUIRE(le(sup_y, sup_x));
    }
    for (const auto& sel : selectors) {
      auto [inf_y, sup_y] = lim_inf_sup(compose_with_enumeration(x, sel));
      REQUIRE(le(inf_x, inf_y));
      REQUIRE(le(sup_y, sup_x));
    }
  }
}

TEST_CASE("canonicalization is eager and minimal") {
  // the cycle period shrinks and the prefix is absorbed
  EpSequence x(a2, {atom_a}, {atom_b, atom_a, atom_b, atom_a});
  CHECK(x.prefix().empty());
  CHECK(x.cycle() == (std::vector<word_t>{atom_a, atom_b}));
  CHECK_THROWS_AS(EpSequence(a2, {}, {}), structural_error);
  CHECK_THROWS_AS(EpSequence(a2, {}, {7}), structural_error);
}
