#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bconv/omega_set.hpp"
#include "bconv/corpus.hpp"

using namespace bconv;

TEST_CASE("canonical forms") {
  // a cofinite set written redundantly collapses to the all-ones cycle
  OmegaSet a({1}, {1, 1});
  CHECK(a.prefix().empty());
  CHECK(a.cycle() == std::vector<std::uint8_t>{1});

  // period minimization
  OmegaSet b({}, {1, 0, 1, 0});
  CHECK(b.cycle() == (std::vector<std::uint8_t>{1, 0}));

  // the empty set
  OmegaSet c({0}, {0});
  CHECK(c.prefix().empty());
  CHECK(c.cycle() == std::vector<std::uint8_t>{0});

  CHECK_THROWS_AS(OmegaSet({}, {}), structural_error);
  CHECK_THROWS_AS(OmegaSet({2}, {1}), structural_error);
}

TEST_CASE("two representations of the same set canonicalize identically") {
  OmegaSet evens({}, {1, 0});
  OmegaSet evens2({1, 0, 1, 0}, {1, 0, 1, 0, 1, 0});
  CHECK(evens == evens2);
  for (std::size_t n = 0; n < 32; ++n) REQUIRE(evens.contains(n) == (n % 2 == 0));
}

TEST_CASE("classification") {
  CHECK(OmegaSet({}, {1, 0}).classify() == OmegaClass::infinite_coinfinite);
  CHECK(OmegaSet({0, 0, 0}, {1}).classify() == OmegaClass::cofinite);
  CHECK(OmegaSet({1, 1}, {0}).classify() == OmegaClass::finite);

  // classification is invariant under re-expressing the same set
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> bit(0, 1), len(1, 5);
  for (int i = 0; i < 200; ++i) {
    std::vector<std::uint8_t> prefix(static_cast<std::size_t>(len(rng)) - 1);
    std::vector<std::uint8_t> cycle(static_cast<std::size_t>(len(rng)));
    for (auto& x : prefix) x = static_cast<std::uint8_t>(bit(rng));
    for (auto& x : cycle) x = static_cast<std::uint8_t>(bit(rng));
    OmegaSet s(prefix, cycle);
    // duplicate the cycle and extend the prefix by one cycle block
    std::vector<std::uint8_t> prefix2 = prefix;
    prefix2.insert(prefix2.end(), cycle.begin(), cycle.end());
    std::vector<std::uint8_t> cycle2 = cycle;
    cycle2.insert(cycle2.end(), cycle.begin(), cycle.end());
    OmegaSet s2(prefix2, cycle2);
    REQUIRE(s == s2);
    REQUIRE(s.classify() == s2.classify());
  }
}

TEST_CASE("intersection agrees with pointwise membership") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> bit(0, 1), len(1, 6), plen(0, 4);
  for (int i = 0; i < 200; ++i) {
    auto make = [&]() {
      std::vector<std::uint8_t> prefix(static_cast<std::size_t>(plen(rng)));
      std::vector<std::uint8_t> cycle(static_cast<std::size_t>(len(rng)));
      for (auto& x : prefix) x = static_cast<std::uint8_t>(bit(rng));
      for (auto& x : cycle) x = static_cast<std::uint8_t>(bit(rng));
      return OmegaSet(prefix, cycle);
    };
    OmegaSet a = make(), b = make();
    OmegaSet both = omega_intersection(a, b);
    for (std::size_t n = 0; n < 64; ++n)
      REQUIRE(both.contains(n) == (a.contains(n) && b.contains(n)));
  }
}

TEST_CASE("nth member enumerates in increasing order") {
  OmegaSet odds({0}, {1, 0});
  CHECK(odds.nth_member(0) == 1);
  CHECK(odds.nth_member(3) == 7);
  CHECK_THROWS_AS(OmegaSet({}, {0}).nth_member(0), precondition_error);
}
