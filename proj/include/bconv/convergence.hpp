#pragma once

#include <cstddef>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bconv/algebra.hpp"
#include "bconv/finite_topology.hpp"
#include "bconv/forcing.hpp"
#include "bconv/sequence.hpp"

namespace bconv {

/// A convergence: a map from sequences to sets of candidate limits.  The
/// built-in ones:
///
///   lambda_s       {v} when liminf = limsup = v, empty otherwise
///   lambda_ls      the up-set of limsup
///   lambda_li      the down-set of liminf
///   lambda_index i {b_4} when b_i = b_4, empty otherwise (truth values of
///                  the associated name, see forcing.hpp)
///   star c         minimal extension of c satisfying the diagonal axiom
///                  (well defined when c satisfies the constant-sequence and
///                  subsequence axioms)
///   bar c          minimal extension of c monotone under subsequences
///   meet c1 c2     pointwise intersection
///   lim_of t       the limit operator of a stored finite topology
class Convergence {
 public:
  enum class Kind {
    lambda_s,
    lambda_ls,
    lambda_li,
    lambda_index,
    star,
    bar,
    meet,
    lim_of
  };

  static Convergence lambda_s() { return Convergence(Kind::lambda_s); }
  static Convergence lambda_ls() { return Convergence(Kind::lambda_ls); }
  static Convergence lambda_li() { return Convergence(Kind::lambda_li); }

  static Convergence lambda_index(int i) {
    if (i < 0 || i > 4)
      throw structural_error("lambda index must be in 0..4");
    Convergence c(Kind::lambda_index);
    c.index_ = i;
    return c;
  }

  static Convergence star(Convergence inner) {
    Convergence c(Kind::star);
    c.a_ = std::make_shared<Convergence>(std::move(inner));
    return c;
  }

  static Convergence bar(Convergence inner) {
    Convergence c(Kind::bar);
    c.a_ = std::make_shared<Convergence>(std::move(inner));
    return c;
  }

  static Convergence meet_of(Convergence left, Convergence right) {
    Convergence c(Kind::meet);
    c.a_ = std::make_shared<Convergence>(std::move(left));
    c.b_ = std::make_shared<Convergence>(std::move(right));
    return c;
  }

  static Convergence lim_of(FiniteTopology topology) {
    Convergence c(Kind::lim_of);
    c.topology_ = std::make_shared<FiniteTopology>(std::move(topology));
    return c;
  }

  Kind kind() const { return kind_; }
  int index() const { return index_; }
  const Convergence& inner() const { return *a_; }
  const Convergence& left() const { return *a_; }
  const Convergence& right() const { return *b_; }
  const FiniteTopology& topology() const { return *topology_; }

  /// Canonical name, also the CLI spelling: s, ls, li, l0..l4, star:<name>,
  /// bar:<name>, meet:<name>,<name>, lim:#<digest>.
  std::string name() const {
    switch (kind_) {
      case Kind::lambda_s: return "s";
      case Kind::lambda_ls: return "ls";
      case Kind::lambda_li: return "li";
      case Kind::lambda_index: return "l" + std::to_string(index_);
      case Kind::star: return "star:" + a_->name();
      case Kind::bar: return "bar:" + a_->name();
      case Kind::meet: return "meet:" + a_->name() + "," + b_->name();
      case Kind::lim_of: {
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&h](std::uint64_t v) {
          h ^= v;
          h *= 1099511628211ull;
        };
        mix(static_cast<std::uint64_t>(topology_->algebra().atoms()));
        for (mask_t c : topology_->closed_sets()) mix(c);
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(h));
        return std::string("lim:#") + buf;
      }
    }
    return "?";
  }

 private:
  explicit Convergence(Kind k) : kind_(k) {}

  Kind kind_;
  int index_ = 0;
  std::shared_ptr<const Convergence> a_, b_;
  std::shared_ptr<const FiniteTopology> topology_;
};

/// Limits of a sequence with respect to a stored topology: the elements
/// whose minimal open neighborhood contains the whole tail support.  Beyond
/// the prefix every term lies in the tail support and each tail-support
/// value recurs infinitely often, so this is exactly eventual containment in
/// every neighborhood.
inline ElementSet lim_of_topology(const FiniteTopology& t,
                                  const EpSequence& x) {
  detail::require_same_algebra(t.algebra(), x.algebra(), "lim_of_topology");
  const mask_t support = tail_support(x).members;
  mask_t limits = 0;
  for (word_t e = 0; e <= x.algebra().top_word(); ++e)
    if ((t.minimal_open_neighborhood(e) & support) == support)
      limits |= mask_t(1) << e;
  return ElementSet(x.algebra(), limits);
}

/// The canonical sequence with a given nonempty tail support: no prefix, one
/// cycle listing the member words in ascending order.
inline EpSequence support_witness(const Algebra& algebra, mask_t support) {
  if (support == 0)
    throw precondition_error("support witness needs a nonempty support");
  std::vector<word_t> cycle;
  for (word_t w = 0; w <= algebra.top_word(); ++w)
    if ((support >> w) & 1u) cycle.push_back(w);
  return EpSequence(algebra, {}, std::move(cycle));
}

/// A convergence tabulated as a function of the tail support; entry [m] is
/// the limit set of any sequence whose tail support has mask m.  Tables are
/// the workhorse of whole-carrier enumerations (sequential closures, topology
/// generation); their agreement with the per-sequence evaluators is itself a
/// verified property (tail-support determinism).
struct SupportMap {
  Algebra algebra;
  std::vector<mask_t> limits;  // indexed by support mask; [0] unused

  mask_t at(mask_t support) const { return limits[support]; }
};

inline ElementSet eval_convergence(const Convergence& c, const EpSequence& x);

namespace detail {

struct L1L2Verdict {
  bool l1 = true;
  bool l2 = true;
  word_t l1_element = 0;
  mask_t l2_big = 0, l2_small = 0;
};

inline L1L2Verdict l1_l2_on_map(const SupportMap& map) {
  L1L2Verdict v;
  const Algebra& alg = map.algebra;
  for (word_t e = 0; e <= alg.top_word() && v.l1; ++e) {
    if (!((map.at(mask_t(1) << e) >> e) & 1u)) {
      v.l1 = false;
      v.l1_element = e;
    }
  }
  const mask_t carrier = alg.carrier_mask();
  for (mask_t t = carrier; t != 0 && v.l2; t = (t - 1) & carrier) {
    const mask_t lt = map.at(t);
    for (mask_t u = t; u != 0; u = (u - 1) & t) {
      if ((lt & map.at(u)) != lt) {
        v.l2 = false;
        v.l2_big = t;
        v.l2_small = u;
        break;
      }
    }
  }
  return v;
}

}  // namespace detail

inline SupportMap build_support_map(const Convergence& c,
                                    const Algebra& algebra) {
  if (algebra.atoms() > Algebra::topology_atoms)
    throw resource_limit_error("support tables capped at " +
                               std::to_string(Algebra::topology_atoms) +
                               " atoms");
  const std::size_t entries = std::size_t(1) << algebra.carrier_size();
  SupportMap map{algebra, std::vector<mask_t>(entries, 0)};
  const mask_t carrier = algebra.carrier_mask();

  switch (c.kind()) {
    case Convergence::Kind::lambda_s:
    case Convergence::Kind::lambda_ls:
    case Convergence::Kind::lambda_li:
    case Convergence::Kind::lambda_index:
      for (mask_t m = carrier; m != 0; m = (m - 1) & carrier)
        map.limits[m] =
            eval_convergence(c, support_witness(algebra, m)).members;
      break;

    case Convergence::Kind::meet: {
      SupportMap l = build_support_map(c.left(), algebra);
      SupportMap r = build_support_map(c.right(), algebra);
      for (std::size_t m = 1; m < entries; ++m)
        map.limits[m] = l.limits[m] & r.limits[m];
      break;
    }

    case Convergence::Kind::lim_of: {
      const FiniteTopology& t = c.topology();
      detail::require_same_algebra(t.algebra(), algebra, "build_support_map");
      for (mask_t m = carrier; m != 0; m = (m - 1) & carrier) {
        mask_t limits = 0;
        for (word_t e = 0; e <= algebra.top_word(); ++e)
          if ((t.minimal_open_neighborhood(e) & m) == m)
            limits |= mask_t(1) << e;
        map.limits[m] = limits;
      }
      break;
    }

    case Convergence::Kind::bar: {
      SupportMap inner = build_support_map(c.inner(), algebra);
      map.limits = inner.limits;
      // union over supersets of the support
      for (int b = 0; b < algebra.carrier_size(); ++b)
        for (mask_t m = 0; m <= carrier; ++m)
          if (!((m >> b) & 1u)) map.limits[m] |= map.limits[m | (mask_t(1) << b)];
      map.limits[0] = 0;
      break;
    }

    case Convergence::Kind::star: {
      SupportMap inner = build_support_map(c.inner(), algebra);
      auto verdict = detail::l1_l2_on_map(inner);
      if (!verdict.l1 || !verdict.l2)
        throw precondition_error(
            "star requires a convergence satisfying the constant-sequence "
            "and subsequence axioms: " +
            c.inner().name() + " violates " + (verdict.l1 ? "(L2)" : "(L1)"));
      // h[u] = union of inner over nonempty subsets of u
      std::vector<mask_t> h = inner.limits;
      h[0] = 0;
      for (int b = 0; b < algebra.carrier_size(); ++b)
        for (mask_t m = 0; m <= carrier; ++m)
          if ((m >> b) & 1u) h[m] |= h[m ^ (mask_t(1) << b)];
      // star[t] = intersection of h over nonempty subsets of t; the empty
      // slot holds the neutral element for the transform
      map.limits = h;
      map.limits[0] = carrier;
      for (int b = 0; b < algebra.carrier_size(); ++b)
        for (mask_t m = 0; m <= carrier; ++m)
          if ((m >> b) & 1u)
            map.limits[m] &= map.limits[m ^ (mask_t(1) << b)];
      map.limits[0] = 0;
      break;
    }
  }
  return map;
}

/// Check, once per (convergence, algebra) pair, that a convergence satisfies
/// the constant-sequence axiom (L1) and subsequence monotonicity (L2); the
/// verdict is cached by canonical name.  Throws precondition_error otherwise.
inline void ensure_l1_l2(const Convergence& c, const Algebra& algebra) {
  static std::map<std::pair<std::string, int>, bool> cache;
  static std::mutex mutex;
  const std::pair<std::string, int> key{c.name(), algebra.atoms()};
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) {
      if (it->second) return;
      throw precondition_error("convergence " + c.name() +
                               " does not satisfy (L1) and (L2)");
    }
  }
  SupportMap map = build_support_map(c, algebra);
  auto verdict = detail::l1_l2_on_map(map);
  const bool ok = verdict.l1 && verdict.l2;
  {
    std::lock_guard lock(mutex);
    cache[key] = ok;
  }
  if (!ok)
    throw precondition_error("convergence " + c.name() +
                             " does not satisfy (L1) and (L2)");
}

namespace detail {

/// { a : every subsequence of x has a further subsequence converging to a },
/// by the subset reduction: intersection over nonempty T inside the tail
/// support of the union over nonempty U inside T of the limits along an
/// explicit witness subsequence with support U.
inline ElementSet diagonal_hypothesis_set(const Convergence& c,
                                          const EpSequence& x) {
  const Algebra alg = x.algebra();
  const mask_t s = tail_support(x).members;
  mask_t acc = alg.carrier_mask();
  for (mask_t t = s; t != 0; t = (t - 1) & s) {
    mask_t u_union = 0;
    for (mask_t u = t; u != 0; u = (u - 1) & t)
      u_union |=
          eval_convergence(c, witness_subsequence(x, ElementSet(alg, u)))
              .members;
    acc &= u_union;
  }
  return ElementSet(alg, acc);
}

}  // namespace detail

/// The minimal diagonal (L3) extension of a convergence satisfying (L1) and
/// (L2): intersection over subsequences of the union over further
/// subsequences of the inner limits.
inline ElementSet star_convergence(const Convergence& c, const EpSequence& x) {
  ensure_l1_l2(c, x.algebra());
  return detail::diagonal_hypothesis_set(c, x);
}

/// The minimal (L2)-monotone extension: union of the inner limits over all
/// sequences having x as a subsequence.  A supersequence can realize exactly
/// the tail supports extending that of x, so this is the union of the inner
/// limits over supports above tail_support(x).
inline ElementSet bar_convergence(const Convergence& c, const EpSequence& x) {
  const Algebra alg = x.algebra();
  const mask_t s = tail_support(x).members;
  const mask_t carrier = alg.carrier_mask();
  mask_t acc = 0;
  for (mask_t m = s;; m = (m + 1) | s) {
    acc |= eval_convergence(c, support_witness(alg, m)).members;
    if (m == carrier) break;
  }
  return ElementSet(alg, acc);
}

inline ElementSet eval_convergence(const Convergence& c, const EpSequence& x) {
  const Algebra alg = x.algebra();
  switch (c.kind()) {
    case Convergence::Kind::lambda_s: {
      auto [inf, sup] = lim_inf_sup(x);
      if (inf == sup) return ElementSet(alg, mask_t(1) << sup.word);
      return ElementSet::empty(alg);
    }
    case Convergence::Kind::lambda_ls: {
      Element sup = lim_sup(x);
      return up_closure(ElementSet(alg, mask_t(1) << sup.word));
    }
    case Convergence::Kind::lambda_li: {
      Element inf = lim_inf(x);
      return down_closure(ElementSet(alg, mask_t(1) << inf.word));
    }
    case Convergence::Kind::lambda_index: {
      auto b = b_values(x);
      if (b[static_cast<std::size_t>(c.index())] == b[4])
        return ElementSet(alg, mask_t(1) << b[4].word);
      return ElementSet::empty(alg);
    }
    case Convergence::Kind::meet:
      return set_intersection(eval_convergence(c.left(), x),
                              eval_convergence(c.right(), x));
    case Convergence::Kind::star:
      return star_convergence(c.inner(), x);
    case Convergence::Kind::bar:
      return bar_convergence(c.inner(), x);
    case Convergence::Kind::lim_of:
      return lim_of_topology(c.topology(), x);
  }
  throw std::logic_error("unreachable convergence kind");
}

/// Pointwise comparison over a corpus: c1 <= c2 iff the limits of c1 are
/// contained in those of c2 for every corpus sequence.
struct LeVerdict {
  bool holds = true;
  std::optional<EpSequence> witness;
};

inline LeVerdict convergence_le(const Convergence& c1, const Convergence& c2,
                                const std::vector<EpSequence>& corpus) {
  for (const EpSequence& x : corpus) {
    if (!subset_of(eval_convergence(c1, x), eval_convergence(c2, x)))
      return {false, x};
  }
  return {true, std::nullopt};
}

/// Axiom checks for a convergence over a corpus.
///
///  l1:        every element is a limit of its constant sequence;
///  l2:        limits persist to every subsequence, quantified through the
///             nonempty subsets of the tail support;
///  l3:        the diagonal hypothesis set is contained in the limits;
///  hausdorff: at most one limit per sequence.
///
/// Each failed verdict carries the first (minimal, when the corpus is
/// sorted) witness found.
struct AxiomCheck {
  bool holds = true;
  std::optional<EpSequence> witness_sequence;
  std::optional<word_t> witness_element;
};

struct AxiomReport {
  AxiomCheck l1, l2, l3, hausdorff;
};

inline AxiomReport check_axioms(const Convergence& c, const Algebra& algebra,
                                const std::vector<EpSequence>& corpus) {
  AxiomReport report;

  for (word_t a = 0; a <= algebra.top_word(); ++a) {
    EpSequence constant = EpSequence::constant(algebra, a);
    if (!eval_convergence(c, constant).contains(a)) {
      report.l1 = {false, constant, a};
      break;
    }
  }

  for (const EpSequence& x : corpus) {
    const ElementSet limits = eval_convergence(c, x);
    const mask_t s = tail_support(x).members;
    bool bad = false;
    for (mask_t t = s; t != 0 && !bad; t = (t - 1) & s) {
      ElementSet sub_limits =
          eval_convergence(c, witness_subsequence(x, ElementSet(algebra, t)));
      bad = !subset_of(limits, sub_limits);
    }
    if (bad) {
      report.l2 = {false, x, std::nullopt};
      break;
    }
  }

  for (const EpSequence& x : corpus) {
    const ElementSet hypothesis = detail::diagonal_hypothesis_set(c, x);
    const ElementSet limits = eval_convergence(c, x);
    if (!subset_of(hypothesis, limits)) {
      mask_t extra = hypothesis.members & ~limits.members;
      word_t e = 0;
      while (!((extra >> e) & 1u)) ++e;
      report.l3 = {false, x, e};
      break;
    }
  }

  for (const EpSequence& x : corpus) {
    if (eval_convergence(c, x).size() > 1) {
      report.hausdorff = {false, x, std::nullopt};
      break;
    }
  }

  return report;
}

}  // namespace bconv
