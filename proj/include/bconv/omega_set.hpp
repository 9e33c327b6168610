#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "bconv/algebra.hpp"

namespace bconv {

namespace detail {

/// Canonicalize an eventually periodic word given as prefix + nonempty cycle:
/// shrink the cycle to its minimal period, then absorb any trailing prefix
/// block that matches the aligned cycle content.  Two representations denote
/// the same infinite word iff their canonical forms are identical.
template <class T>
void canonicalize_eventually_periodic(std::vector<T>& prefix,
                                      std::vector<T>& cycle) {
  if (cycle.empty())
    throw structural_error("eventually periodic word needs a nonempty cycle");
  for (std::size_t p = 1; p <= cycle.size(); ++p) {
    if (cycle.size() % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < cycle.size() && periodic; ++i)
      periodic = (cycle[i] == cycle[i % p]);
    if (periodic) {
      cycle.resize(p);
      break;
    }
  }
  while (!prefix.empty() && prefix.back() == cycle.back()) {
    prefix.pop_back();
    std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
  }
}

}  // namespace detail

enum class OmegaClass { finite, cofinite, infinite_coinfinite };

/// An eventually periodic subset of the natural numbers, stored as prefix
/// bits plus nonempty cycle bits and kept canonical (minimal cycle period,
/// minimal prefix).  Membership of n reads the prefix if n < |prefix| and the
/// cycle at (n - |prefix|) mod |cycle| otherwise.
class OmegaSet {
 public:
  OmegaSet(std::vector<std::uint8_t> prefix, std::vector<std::uint8_t> cycle)
      : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
    for (auto b : prefix_)
      if (b > 1) throw structural_error("omega set bits must be 0 or 1");
    for (auto b : cycle_)
      if (b > 1) throw structural_error("omega set bits must be 0 or 1");
    detail::canonicalize_eventually_periodic(prefix_, cycle_);
  }

  /// The whole of omega.
  static OmegaSet all() { return OmegaSet({}, {1}); }
  /// The empty set.
  static OmegaSet none() { return OmegaSet({}, {0}); }
  /// { n : n >= start and n == start (mod step) }.
  static OmegaSet arithmetic(std::size_t start, std::size_t step) {
    if (step == 0) throw structural_error("arithmetic omega set needs step >= 1");
    std::vector<std::uint8_t> prefix(start, 0);
    std::vector<std::uint8_t> cycle(step, 0);
    cycle[0] = 1;
    return OmegaSet(std::move(prefix), std::move(cycle));
  }

  const std::vector<std::uint8_t>& prefix() const { return prefix_; }
  const std::vector<std::uint8_t>& cycle() const { return cycle_; }

  bool contains(std::size_t n) const {
    if (n < prefix_.size()) return prefix_[n] != 0;
    return cycle_[(n - prefix_.size()) % cycle_.size()] != 0;
  }

  OmegaClass classify() const {
    bool any = false, all = true;
    for (auto b : cycle_) {
      any = any || b;
      all = all && b;
    }
    if (!any) return OmegaClass::finite;
    if (all) return OmegaClass::cofinite;
    return OmegaClass::infinite_coinfinite;
  }

  bool is_infinite() const { return classify() != OmegaClass::finite; }

  /// Number of ones in one cycle period.
  int ones_per_cycle() const {
    return static_cast<int>(std::count(cycle_.begin(), cycle_.end(), 1));
  }

  /// k-th member (0-indexed) of the set in increasing order; this is the
  /// increasing enumeration f_A.  Requires an infinite set.
  std::size_t nth_member(std::size_t k) const {
    if (!is_infinite())
      throw precondition_error("nth_member requires an infinite omega set");
    std::size_t seen = 0;
    for (std::size_t n = 0;; ++n) {
      if (contains(n)) {
        if (seen == k) return n;
        ++seen;
      }
    }
  }

  friend bool operator==(const OmegaSet&, const OmegaSet&) = default;

 private:
  std::vector<std::uint8_t> prefix_;
  std::vector<std::uint8_t> cycle_;
};

/// Pointwise intersection of two eventually periodic sets (prefixes aligned
/// to the longer one, cycle of length lcm of the two periods).
inline OmegaSet omega_intersection(const OmegaSet& a, const OmegaSet& b) {
  const std::size_t p = std::max(a.prefix().size(), b.prefix().size());
  const std::size_t q = std::lcm(a.cycle().size(), b.cycle().size());
  std::vector<std::uint8_t> prefix(p), cycle(q);
  for (std::size_t n = 0; n < p; ++n)
    prefix[n] = a.contains(n) && b.contains(n);
  for (std::size_t i = 0; i < q; ++i)
    cycle[i] = a.contains(p + i) && b.contains(p + i);
  return OmegaSet(std::move(prefix), std::move(cycle));
}

}  // namespace bconv
