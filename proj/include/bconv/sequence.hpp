#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bconv/algebra.hpp"
#include "bconv/omega_set.hpp"

namespace bconv {

/// An eventually periodic sequence over an algebra: a finite prefix followed
/// by a nonempty cycle repeated forever.  Canonicalized eagerly on
/// construction (minimal cycle period, minimal prefix), so values occurring
/// only finitely often never leak into the cycle.
class EpSequence {
 public:
  EpSequence(Algebra algebra, std::vector<word_t> prefix,
             std::vector<word_t> cycle)
      : algebra_(algebra), prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
    for (word_t w : prefix_)
      if (w > algebra_.top_word())
        throw structural_error("sequence prefix word outside carrier");
    for (word_t w : cycle_)
      if (w > algebra_.top_word())
        throw structural_error("sequence cycle word outside carrier");
    detail::canonicalize_eventually_periodic(prefix_, cycle_);
  }

  static EpSequence constant(Algebra algebra, word_t value) {
    return EpSequence(algebra, {}, {value});
  }

  const Algebra& algebra() const { return algebra_; }
  const std::vector<word_t>& prefix() const { return prefix_; }
  const std::vector<word_t>& cycle() const { return cycle_; }

  word_t term(std::size_t n) const {
    if (n < prefix_.size()) return prefix_[n];
    return cycle_[(n - prefix_.size()) % cycle_.size()];
  }

  Element element_at(std::size_t n) const { return Element(algebra_, term(n)); }

  /// Set of all values the sequence ever takes (prefix and cycle).
  ElementSet range_set() const {
    mask_t m = 0;
    for (word_t w : prefix_) m |= mask_t(1) << w;
    for (word_t w : cycle_) m |= mask_t(1) << w;
    return ElementSet(algebra_, m);
  }

  friend bool operator==(const EpSequence&, const EpSequence&) = default;

  /// Order by total length, then prefix length, then contents; used to pick
  /// minimal witnesses out of a corpus.
  friend bool operator<(const EpSequence& a, const EpSequence& b) {
    auto la = a.prefix_.size() + a.cycle_.size();
    auto lb = b.prefix_.size() + b.cycle_.size();
    if (la != lb) return la < lb;
    if (a.prefix_.size() != b.prefix_.size())
      return a.prefix_.size() < b.prefix_.size();
    if (a.prefix_ != b.prefix_) return a.prefix_ < b.prefix_;
    if (a.cycle_ != b.cycle_) return a.cycle_ < b.cycle_;
    return a.algebra_.atoms() < b.algebra_.atoms();
  }

 private:
  Algebra algebra_;
  std::vector<word_t> prefix_;
  std::vector<word_t> cycle_;
};

/// The set of values occurring infinitely often, i.e. the distinct cycle
/// values of the canonical form.  Every limit notion evaluated here is a
/// function of this set alone.
inline ElementSet tail_support(const EpSequence& x) {
  mask_t m = 0;
  for (word_t w : x.cycle()) m |= mask_t(1) << w;
  return ElementSet(x.algebra(), m);
}

/// liminf and limsup of the sequence.  Beyond the prefix every tail contains
/// exactly the tail-support values, so liminf is their meet and limsup their
/// join; the truncation oracle in the test suite checks this against the
/// defining partial tails.
inline std::pair<Element, Element> lim_inf_sup(const EpSequence& x) {
  ElementSet support = tail_support(x);
  return {big_meet(support), big_join(support)};
}

inline Element lim_inf(const EpSequence& x) { return lim_inf_sup(x).first; }
inline Element lim_sup(const EpSequence& x) { return lim_inf_sup(x).second; }

/// An explicit subsequence of x whose tail support is exactly the requested
/// nonempty subset of tail_support(x): within the cycle region, keep exactly
/// the positions whose value lies in the target set.
inline EpSequence witness_subsequence(const EpSequence& x,
                                      const ElementSet& target) {
  detail::require_same_algebra(x.algebra(), target.algebra,
                               "witness_subsequence");
  if (target.empty_set())
    throw precondition_error("witness_subsequence target must be nonempty");
  if (!subset_of(target, tail_support(x)))
    throw precondition_error(
        "witness_subsequence target must be a subset of the tail support");
  std::vector<word_t> kept;
  for (word_t w : x.cycle())
    if (target.contains(w)) kept.push_back(w);
  return EpSequence(x.algebra(), {}, std::move(kept));
}

/// True iff every subsequence has the same limsup as x.  Computed two ways
/// and compared: over all nonempty subsets of the tail support, and via the
/// equivalent singleton-support criterion.
inline bool is_limsup_stable(const EpSequence& x) {
  const ElementSet support = tail_support(x);
  const word_t whole_join = big_join(support).word;
  bool by_subsets = true;
  const mask_t s = support.members;
  for (mask_t t = s; t != 0; t = (t - 1) & s) {
    word_t j = 0;
    for (word_t w = 0; w <= x.algebra().top_word(); ++w)
      if ((t >> w) & 1u) j |= w;
    if (j != whole_join) {
      by_subsets = false;
      break;
    }
  }
  const bool by_singleton = (support.size() == 1);
  if (by_subsets != by_singleton)
    throw std::logic_error("limsup stability criteria disagree");
  return by_subsets;
}

/// Dual notion: every subsequence has the same liminf.
inline bool is_liminf_stable(const EpSequence& x) {
  return tail_support(x).size() == 1;
}

/// The composition x o f_A, where f_A is the increasing enumeration of the
/// infinite set A.  Exact: beyond the joint prefixes, f_A advances by
/// |cycle(A)| positions every r steps (r = ones per A-cycle), so the composed
/// sequence is periodic with period r * |cycle(x)| / gcd(|cycle(A)|, |cycle(x)|);
/// the computation unrolls to that provable stabilization bound, asserts the
/// repetition, and re-canonicalizes.
inline EpSequence compose_with_enumeration(const EpSequence& x,
                                           const OmegaSet& a) {
  if (!a.is_infinite())
    throw precondition_error(
        "compose_with_enumeration requires an infinite index set");
  const std::size_t qa = a.cycle().size();
  const std::size_t qx = x.cycle().size();
  const std::size_t r = static_cast<std::size_t>(a.ones_per_cycle());
  const std::size_t period = r * (qx / std::gcd(qa, qx));

  // number of members of A below the point where both A and x are periodic
  const std::size_t settled = std::max(a.prefix().size(), x.prefix().size());
  std::size_t head = 0;
  for (std::size_t n = 0; n < settled; ++n)
    if (a.contains(n)) ++head;

  const std::size_t need = head + 2 * period;
  std::vector<word_t> terms;
  terms.reserve(need);
  for (std::size_t n = 0; terms.size() < need; ++n)
    if (a.contains(n)) terms.push_back(x.term(n));

  for (std::size_t i = 0; i < period; ++i)
    if (terms[head + i] != terms[head + period + i])
      throw std::logic_error("composition failed to stabilize at its bound");

  std::vector<word_t> prefix(terms.begin(),
                             terms.begin() + static_cast<std::ptrdiff_t>(head));
  std::vector<word_t> cycle(
      terms.begin() + static_cast<std::ptrdiff_t>(head),
      terms.begin() + static_cast<std::ptrdiff_t>(head + period));
  return EpSequence(x.algebra(), std::move(prefix), std::move(cycle));
}

}  // namespace bconv
