#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bconv/algebra.hpp"
#include "bconv/convergence.hpp"
#include "bconv/finite_topology.hpp"
#include "bconv/sequence.hpp"

namespace bconv {

/// One application of the sequential-closure operator: the union of the
/// limits of every sequence with values in A.  Sequences in A realize
/// exactly the nonempty subsets of A as tail supports, so the union runs
/// over explicit witness sequences for those subsets.
inline ElementSet sequential_closure_step(const Convergence& c,
                                          const ElementSet& a) {
  mask_t acc = 0;
  const mask_t m = a.members;
  for (mask_t t = m; t != 0; t = (t - 1) & m)
    acc |= eval_convergence(c, support_witness(a.algebra, t)).members;
  return ElementSet(a.algebra, acc);
}

/// Iterate the sequential closure until it is fixed; on a finite carrier the
/// transfinite iteration collapses after at most carrier-many steps.  Returns
/// the closure together with the number of applications performed.
struct ClosureResult {
  ElementSet closure;
  int iterations = 0;
};

inline ClosureResult closure_fixpoint(const Convergence& c,
                                      const ElementSet& a) {
  ElementSet current = a;
  int steps = 0;
  for (;;) {
    ElementSet next = sequential_closure_step(c, current);
    next = set_union(next, current);
    if (next == current) return {current, steps};
    current = next;
    ++steps;
    if (steps > a.algebra.carrier_size() + 1)
      throw std::logic_error("sequential closure failed to stabilize");
  }
}

namespace detail {

inline void require_topology_cap(const Algebra& algebra, const char* what) {
  if (algebra.atoms() > Algebra::topology_atoms)
    throw resource_limit_error(std::string(what) + " capped at " +
                               std::to_string(Algebra::topology_atoms) +
                               " atoms");
}

/// Closure operator on subset masks induced by a support map:
/// u(f) = union over nonempty t inside f of the tabulated limits.
inline std::vector<mask_t> closure_table(const SupportMap& map) {
  const mask_t carrier = map.algebra.carrier_mask();
  std::vector<mask_t> u(std::size_t(carrier) + 1, 0);
  for (mask_t f = carrier; f != 0; f = (f - 1) & carrier) {
    mask_t acc = 0;
    for (mask_t t = f; t != 0; t = (t - 1) & f) acc |= map.at(t);
    u[f] = acc;
  }
  return u;
}

}  // namespace detail

/// The maximal topology whose limit operator dominates the convergence.
/// Closed sets are found as the fixed points of the sequential closure; an
/// independent pass re-derives the open family from the direct definition
/// (an open set that meets the limits of a sequence eventually contains the
/// sequence) and the two must agree.
inline FiniteTopology generate_sequential_topology(const Convergence& c,
                                                   const Algebra& algebra) {
  detail::require_topology_cap(algebra, "topology generation");
  ensure_l1_l2(c, algebra);

  const mask_t carrier = algebra.carrier_mask();
  const SupportMap map = build_support_map(c, algebra);
  const std::vector<mask_t> u = detail::closure_table(map);

  std::vector<mask_t> closed;
  closed.push_back(0);
  for (mask_t f = carrier; f != 0; f = (f - 1) & carrier)
    if (u[f] == f) closed.push_back(f);

  // direct route: v[e] = union of the limit sets over supports containing e;
  // o is open iff no element outside o contributes limits inside o
  std::vector<mask_t> contributions(
      static_cast<std::size_t>(algebra.carrier_size()), 0);
  for (mask_t t = carrier; t != 0; t = (t - 1) & carrier)
    for (word_t e = 0; e <= algebra.top_word(); ++e)
      if ((t >> e) & 1u) contributions[e] |= map.at(t);
  std::vector<mask_t> opens_direct;
  for (mask_t o = 0; o <= carrier; ++o) {
    bool open = true;
    for (word_t e = 0; e <= algebra.top_word() && open; ++e)
      if (!((o >> e) & 1u) && (contributions[e] & o) != 0) open = false;
    if (open) opens_direct.push_back(o);
  }

  FiniteTopology by_fixpoints(algebra, std::move(closed));
  FiniteTopology by_direct =
      FiniteTopology::from_open_sets(algebra, opens_direct);
  if (!(by_fixpoints == by_direct))
    throw std::logic_error(
        "fixed-point and direct topology constructions disagree");
  return by_fixpoints;
}

/// A convergence is topological iff it coincides with the limit operator of
/// its generated topology.
struct ClassifierVerdict {
  bool holds = true;
  std::optional<EpSequence> witness;
};

inline ClassifierVerdict is_topological_convergence(
    const Convergence& c, const Algebra& algebra,
    const std::vector<EpSequence>& corpus) {
  FiniteTopology t = generate_sequential_topology(c, algebra);
  for (const EpSequence& x : corpus)
    if (!(eval_convergence(c, x) == lim_of_topology(t, x))) return {false, x};
  return {true, std::nullopt};
}

/// A convergence is weakly topological iff its diagonal closure coincides
/// with the limit operator of its generated topology.
inline ClassifierVerdict is_weakly_topological(
    const Convergence& c, const Algebra& algebra,
    const std::vector<EpSequence>& corpus) {
  FiniteTopology t = generate_sequential_topology(c, algebra);
  for (const EpSequence& x : corpus)
    if (!(star_convergence(c, x) == lim_of_topology(t, x))) return {false, x};
  return {true, std::nullopt};
}

enum class ClosedFamilyFlavor { limsup, liminf };

/// Characterization of the closed families of the limsup / liminf
/// topologies: the closed sets are exactly the upward (downward) closed
/// subsets that contain the infimum (supremum) of each of their monotone
/// chains.  The expected family is enumerated independently from the order
/// alone and compared for exact equality.
struct FamilyCheck {
  bool holds = true;
  std::size_t family_size = 0;
  std::optional<mask_t> witness;  // a set in exactly one of the two families
};

inline FamilyCheck check_closed_set_characterization(
    const FiniteTopology& t, ClosedFamilyFlavor flavor) {
  const Algebra algebra = t.algebra();
  const mask_t carrier = algebra.carrier_mask();
  const bool up = (flavor == ClosedFamilyFlavor::limsup);

  std::vector<mask_t> expected;
  for (mask_t f = 0; f <= carrier; ++f) {
    bool good = true;
    for (word_t a = 0; a <= algebra.top_word() && good; ++a) {
      if (!((f >> a) & 1u)) continue;
      for (word_t b = 0; b <= algebra.top_word() && good; ++b) {
        const bool related = up ? ((a & b) == a) : ((b & a) == b);
        if (related && !((f >> b) & 1u)) good = false;
      }
    }
    if (!good) continue;
    // chain condition: monotone sequences in f stabilize on a finite
    // carrier, so their limit is the meet (join) of a chain inside f
    if (algebra.carrier_size() <= 8) {
      for (mask_t ch = f; ch != 0 && good; ch = (ch - 1) & f) {
        word_t bound = up ? algebra.top_word() : 0;
        bool chain = true;
        std::vector<word_t> members;
        for (word_t w = 0; w <= algebra.top_word(); ++w)
          if ((ch >> w) & 1u) members.push_back(w);
        for (std::size_t i = 0; i + 1 < members.size() && chain; ++i)
          for (std::size_t j = i + 1; j < members.size() && chain; ++j) {
            word_t x = members[i], y = members[j];
            chain = ((x & y) == x) || ((x & y) == y);
          }
        if (!chain) continue;
        for (word_t w : members) bound = up ? (bound & w) : (bound | w);
        good = ((f >> bound) & 1u) != 0;
      }
    }
    if (good) expected.push_back(f);
  }

  FamilyCheck out;
  out.family_size = expected.size();
  const std::vector<mask_t>& actual = t.closed_sets();
  if (actual == expected) return out;
  out.holds = false;
  for (mask_t f : expected)
    if (!std::binary_search(actual.begin(), actual.end(), f)) {
      out.witness = f;
      return out;
    }
  for (mask_t f : actual)
    if (!std::binary_search(expected.begin(), expected.end(), f)) {
      out.witness = f;
      return out;
    }
  return out;
}

/// The complement map is a homeomorphism between the limsup and liminf
/// topologies: it must carry the closed family of one bijectively onto the
/// closed family of the other, in both directions.
inline bool dual_homeomorphism_check(const Algebra& algebra) {
  FiniteTopology ls =
      generate_sequential_topology(Convergence::lambda_ls(), algebra);
  FiniteTopology li =
      generate_sequential_topology(Convergence::lambda_li(), algebra);
  auto complement_family = [&](const std::vector<mask_t>& family) {
    std::vector<mask_t> out;
    out.reserve(family.size());
    for (mask_t f : family) {
      mask_t image = 0;
      for (word_t w = 0; w <= algebra.top_word(); ++w)
        if ((f >> w) & 1u) image |= mask_t(1) << (algebra.top_word() ^ w);
      out.push_back(image);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return complement_family(ls.closed_sets()) == li.closed_sets() &&
         complement_family(li.closed_sets()) == ls.closed_sets();
}

/// The stable-subsequence condition: every sequence has a subsequence all of
/// whose further subsequences share its limsup.  Reduced to tail supports:
/// every nonempty subset S of the carrier must contain a nonempty T whose
/// nonempty subsets all have the join of T.  Singleton supports always
/// qualify, which is why every finite algebra satisfies the condition; the
/// checker nevertheless searches in ascending subset order and records the
/// witness it finds.
struct StableSubsequenceReport {
  bool holds = true;
  std::optional<mask_t> failing_support;
  std::vector<std::pair<mask_t, mask_t>> sample_witnesses;  // (S, chosen T)
};

inline StableSubsequenceReport stable_subsequence_condition(
    const Algebra& algebra) {
  detail::require_topology_cap(algebra, "stable-subsequence scan");
  const mask_t carrier = algebra.carrier_mask();
  StableSubsequenceReport report;
  auto join_of = [&](mask_t set) {
    word_t j = 0;
    for (word_t w = 0; w <= algebra.top_word(); ++w)
      if ((set >> w) & 1u) j |= w;
    return j;
  };
  for (mask_t s = 1; s <= carrier; ++s) {
    std::optional<mask_t> chosen;
    for (mask_t t = s & (~s + 1); !chosen;) {  // ascending nonzero submasks
      const word_t jt = join_of(t);
      bool stable = true;
      for (mask_t u = t; u != 0 && stable; u = (u - 1) & t)
        stable = (join_of(u) == jt);
      if (stable) chosen = t;
      if (t == s) break;
      t = (t - s) & s;  // next submask of s in increasing order
    }
    if (!chosen) {
      report.holds = false;
      report.failing_support = s;
      return report;
    }
    if (report.sample_witnesses.size() < 4 || s == carrier)
      report.sample_witnesses.emplace_back(s, *chosen);
  }
  return report;
}

/// Every family of subsets of the carrier that contains the empty set and
/// the carrier and is closed under pairwise union and intersection; on a
/// carrier this small these are all the topologies.  Families are encoded as
/// bitsets over the power set of the carrier.
inline std::vector<std::uint32_t> enumerate_all_topologies(
    const Algebra& algebra) {
  if (algebra.atoms() > Algebra::brute_force_atoms)
    throw resource_limit_error("topology enumeration by brute force capped at " +
                               std::to_string(Algebra::brute_force_atoms) +
                               " atoms");
  const int subsets = 1 << algebra.carrier_size();  // at most 16
  const mask_t carrier = algebra.carrier_mask();
  std::vector<std::uint32_t> families;
  const std::uint64_t total = std::uint64_t(1) << subsets;
  for (std::uint64_t fam = 0; fam < total; ++fam) {
    if (!((fam >> 0) & 1u) || !((fam >> carrier) & 1u)) continue;
    bool ok = true;
    for (int i = 0; i < subsets && ok; ++i) {
      if (!((fam >> i) & 1u)) continue;
      for (int j = i + 1; j < subsets && ok; ++j) {
        if (!((fam >> j) & 1u)) continue;
        ok = ((fam >> (i | j)) & 1u) && ((fam >> (i & j)) & 1u);
      }
    }
    if (ok) families.push_back(static_cast<std::uint32_t>(fam));
  }
  return families;
}

namespace detail {

/// Opens of a finite space from a family of basic opens: the sets in which
/// every point has a basic neighborhood inside the set.
inline FiniteTopology topology_from_basis(const Algebra& algebra,
                                          const std::vector<mask_t>& basis) {
  const mask_t carrier = algebra.carrier_mask();
  std::vector<mask_t> opens;
  for (mask_t o = 0; o <= carrier; ++o) {
    bool open = true;
    for (word_t w = 0; w <= algebra.top_word() && open; ++w) {
      if (!((o >> w) & 1u)) continue;
      bool covered = false;
      for (mask_t b : basis)
        if (((b >> w) & 1u) && (b & ~o) == 0) {
          covered = true;
          break;
        }
      open = covered;
    }
    if (open) opens.push_back(o);
  }
  return FiniteTopology::from_open_sets(algebra, opens);
}

}  // namespace detail

/// Product of carrier-many copies of the two-point discrete space, carried
/// over to the power-set algebra: basic opens are the cylinders fixing a
/// disjoint pair of coordinate sets to 0 and 1.  Built from the product
/// subbasis alone, independently of any convergence.
inline FiniteTopology cantor_cube_topology(const Algebra& algebra) {
  detail::require_topology_cap(algebra, "cube construction");
  std::vector<mask_t> basis;
  const word_t top = algebra.top_word();
  for (word_t zeros = 0; zeros <= top; ++zeros)
    for (word_t ones = 0; ones <= top; ++ones) {
      if ((zeros & ones) != 0) continue;
      mask_t cyl = 0;
      for (word_t w = 0; w <= top; ++w)
        if ((w & zeros) == 0 && (w & ones) == ones) cyl |= mask_t(1) << w;
      basis.push_back(cyl);
    }
  return detail::topology_from_basis(algebra, basis);
}

/// Product of copies of the two-point space in which 0 is isolated and the
/// only neighborhood of 1 is the whole space: basic opens are the cylinders
/// forcing a coordinate set to 0, i.e. the principal down-sets.
inline FiniteTopology aleksandrov_cube_topology(const Algebra& algebra) {
  detail::require_topology_cap(algebra, "cube construction");
  std::vector<mask_t> basis;
  const word_t top = algebra.top_word();
  for (word_t zeros = 0; zeros <= top; ++zeros) {
    mask_t cyl = 0;
    for (word_t w = 0; w <= top; ++w)
      if ((w & zeros) == 0) cyl |= mask_t(1) << w;
    basis.push_back(cyl);
  }
  return detail::topology_from_basis(algebra, basis);
}

/// Brute-force maximality: over all topologies on the carrier, the generated
/// topology must contain every topology whose limit operator dominates the
/// convergence on the corpus, and must have that property itself.
struct MaximalityReport {
  bool holds = true;
  std::size_t topology_count = 0;
  std::size_t dominating_count = 0;
  std::optional<std::uint32_t> counterexample_family;
};

inline MaximalityReport maximality_brute_force(
    const Convergence& c, const Algebra& algebra,
    const std::vector<EpSequence>& corpus) {
  if (algebra.atoms() > Algebra::brute_force_atoms)
    throw resource_limit_error("maximality brute force capped at " +
                               std::to_string(Algebra::brute_force_atoms) +
                               " atoms");
  MaximalityReport report;
  const std::vector<std::uint32_t> families = enumerate_all_topologies(algebra);
  report.topology_count = families.size();

  FiniteTopology generated = generate_sequential_topology(c, algebra);

  std::vector<std::pair<mask_t, mask_t>> evaluated;  // (support, limits)
  evaluated.reserve(corpus.size());
  for (const EpSequence& x : corpus)
    evaluated.emplace_back(tail_support(x).members,
                           eval_convergence(c, x).members);

  for (std::uint32_t fam : families) {
    // minimal open neighborhood per element under this family of opens
    std::vector<mask_t> nbhd(static_cast<std::size_t>(algebra.carrier_size()));
    for (word_t e = 0; e <= algebra.top_word(); ++e) {
      mask_t acc = algebra.carrier_mask();
      for (int o = 0; o < (1 << algebra.carrier_size()); ++o)
        if (((fam >> o) & 1u) && ((static_cast<mask_t>(o) >> e) & 1u))
          acc &= static_cast<mask_t>(o);
      nbhd[e] = acc;
    }
    bool dominates = true;
    for (const auto& [support, limits] : evaluated) {
      mask_t lim = 0;
      for (word_t e = 0; e <= algebra.top_word(); ++e)
        if ((nbhd[e] & support) == support) lim |= mask_t(1) << e;
      if ((limits & lim) != limits) {
        dominates = false;
        break;
      }
    }
    if (!dominates) continue;
    ++report.dominating_count;
    for (int o = 0; o < (1 << algebra.carrier_size()); ++o)
      if (((fam >> o) & 1u) && !generated.is_open(static_cast<mask_t>(o))) {
        report.holds = false;
        report.counterexample_family = fam;
        return report;
      }
  }

  // the generated topology itself must dominate
  for (const auto& [support, limits] : evaluated) {
    mask_t lim = 0;
    for (word_t e = 0; e <= algebra.top_word(); ++e)
      if ((generated.minimal_open_neighborhood(e) & support) == support)
        lim |= mask_t(1) << e;
    if ((limits & lim) != limits) {
      report.holds = false;
      return report;
    }
  }
  return report;
}

}  // namespace bconv
