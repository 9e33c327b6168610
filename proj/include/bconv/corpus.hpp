#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "bconv/algebra.hpp"
#include "bconv/omega_set.hpp"
#include "bconv/sequence.hpp"

namespace bconv {

struct CorpusBounds {
  int prefix_bound = 1;
  int cycle_bound = 3;
};

/// Bounds that keep exhaustive suites fast while reaching every tail support
/// the carrier admits on the smallest algebras.
inline CorpusBounds default_bounds(const Algebra& algebra) {
  if (algebra.atoms() <= 2) return {2, 4};
  if (algebra.atoms() == 3) return {1, 3};
  return {1, 2};
}

/// Number of raw (prefix, cycle) shapes within the bounds, before
/// canonicalization; used to decide between exhaustive and sampled corpora.
inline std::uint64_t raw_corpus_count(const Algebra& algebra,
                                      const CorpusBounds& bounds) {
  const std::uint64_t base = static_cast<std::uint64_t>(algebra.carrier_size());
  std::uint64_t prefixes = 0, cycles = 0, power = 1;
  for (int p = 0; p <= bounds.prefix_bound; ++p) {
    prefixes += power;
    power *= base;
  }
  power = base;
  for (int c = 1; c <= bounds.cycle_bound; ++c) {
    cycles += power;
    power *= base;
  }
  return prefixes * cycles;
}

/// Every canonical sequence whose canonical form fits the bounds, in witness
/// order (total length, then prefix length, then contents), deduplicated.
inline std::vector<EpSequence> exhaustive_corpus(const Algebra& algebra,
                                                 const CorpusBounds& bounds) {
  std::set<EpSequence> seen;
  const word_t top = algebra.top_word();
  std::vector<word_t> tuple;
  for (int p = 0; p <= bounds.prefix_bound; ++p) {
    for (int c = 1; c <= bounds.cycle_bound; ++c) {
      tuple.assign(static_cast<std::size_t>(p + c), 0);
      for (;;) {
        std::vector<word_t> prefix(tuple.begin(), tuple.begin() + p);
        std::vector<word_t> cycle(tuple.begin() + p, tuple.end());
        seen.emplace(algebra, std::move(prefix), std::move(cycle));
        // odometer over the carrier alphabet
        std::size_t i = 0;
        while (i < tuple.size() && tuple[i] == top) tuple[i++] = 0;
        if (i == tuple.size()) break;
        ++tuple[i];
      }
    }
  }
  return {seen.begin(), seen.end()};
}

/// Seeded random corpus: cycle length uniform in 1..cycle_bound, prefix
/// length uniform in 0..prefix_bound, elements uniform over the carrier.
/// Deterministic in the seed.
inline std::vector<EpSequence> seeded_corpus(const Algebra& algebra,
                                             const CorpusBounds& bounds,
                                             std::uint64_t seed,
                                             std::size_t samples) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> prefix_len(0, bounds.prefix_bound);
  std::uniform_int_distribution<int> cycle_len(1, bounds.cycle_bound);
  std::uniform_int_distribution<word_t> element(0, algebra.top_word());
  std::vector<EpSequence> out;
  out.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    std::vector<word_t> prefix(static_cast<std::size_t>(prefix_len(rng)));
    std::vector<word_t> cycle(static_cast<std::size_t>(cycle_len(rng)));
    for (word_t& w : prefix) w = element(rng);
    for (word_t& w : cycle) w = element(rng);
    out.emplace_back(algebra, std::move(prefix), std::move(cycle));
  }
  return out;
}

/// Exhaustive when the raw shape count stays within a million, seeded random
/// otherwise.
inline std::vector<EpSequence> generate_corpus(const Algebra& algebra,
                                               const CorpusBounds& bounds,
                                               std::uint64_t seed,
                                               std::size_t samples) {
  if (raw_corpus_count(algebra, bounds) <= 1000000ull)
    return exhaustive_corpus(algebra, bounds);
  return seeded_corpus(algebra, bounds, seed, samples);
}

/// Seeded infinite index sets, used as explicit subsequence selectors.
inline std::vector<OmegaSet> seeded_selectors(std::uint64_t seed,
                                              std::size_t count,
                                              int max_prefix = 4,
                                              int max_cycle = 6) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> prefix_len(0, max_prefix);
  std::uniform_int_distribution<int> cycle_len(1, max_cycle);
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<OmegaSet> out;
  out.reserve(count);
  while (out.size() < count) {
    std::vector<std::uint8_t> prefix(static_cast<std::size_t>(prefix_len(rng)));
    std::vector<std::uint8_t> cycle(static_cast<std::size_t>(cycle_len(rng)));
    for (auto& b : prefix) b = static_cast<std::uint8_t>(bit(rng));
    for (auto& b : cycle) b = static_cast<std::uint8_t>(bit(rng));
    OmegaSet candidate(std::move(prefix), std::move(cycle));
    if (candidate.is_infinite()) out.push_back(std::move(candidate));
  }
  return out;
}

/// Seeded (sequence, infinite index set) pairs for dual-path checks.
inline std::vector<std::pair<EpSequence, OmegaSet>> seeded_sequence_set_pairs(
    const Algebra& algebra, const CorpusBounds& bounds, std::uint64_t seed,
    std::size_t count) {
  std::vector<EpSequence> xs = seeded_corpus(algebra, bounds, seed, count);
  std::vector<OmegaSet> as = seeded_selectors(seed ^ 0x9e3779b97f4a7c15ull, count);
  std::vector<std::pair<EpSequence, OmegaSet>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.emplace_back(xs[i], as[i]);
  return out;
}

}  // namespace bconv
