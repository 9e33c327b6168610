#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bconv/convergence.hpp"
#include "bconv/corpus.hpp"
#include "bconv/forcing.hpp"
#include "bconv/serialize.hpp"
#include "bconv/topology.hpp"

namespace bconv {

/// Invalid configuration detected before any work is done.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SuiteConfig {
  int max_atoms = 4;
  bool atoms_explicit = false;
  std::optional<int> prefix_bound;
  std::optional<int> cycle_bound;
  std::uint64_t seed = 0xb001ea5eedull;
  std::size_t samples = 500;
  std::size_t selectors = 100;
  std::vector<std::string> suites;  // empty selects the whole battery
  bool explicit_suites = false;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  json details = json::object();
};

struct SuiteOutcome {
  std::string name;
  std::vector<CheckResult> checks;
  double millis = 0.0;
};

struct SuiteReport {
  json config_echo;
  std::vector<SuiteOutcome> suites;
  bool all_pass = true;

  /// Deterministic payload: no timings, checks sorted by name.
  json canonical_json() const {
    json suites_json = json::array();
    for (const SuiteOutcome& s : suites) {
      json checks = json::array();
      for (const CheckResult& c : s.checks)
        checks.push_back(json{{"name", c.name},
                              {"pass", c.pass},
                              {"details", c.details}});
      suites_json.push_back(json{{"name", s.name}, {"checks", checks}});
    }
    return json{{"config", config_echo},
                {"suites", suites_json},
                {"all_pass", all_pass}};
  }

  json full_json() const {
    json out = canonical_json();
    json timing = json::object();
    for (const SuiteOutcome& s : suites) timing[s.name] = s.millis;
    out["timing_ms"] = timing;
    return out;
  }
};

namespace checks {

inline CorpusBounds bounds_for(const Algebra& algebra,
                               const SuiteConfig& config) {
  CorpusBounds b = default_bounds(algebra);
  if (config.prefix_bound) b.prefix_bound = *config.prefix_bound;
  if (config.cycle_bound) b.cycle_bound = *config.cycle_bound;
  return b;
}

inline std::vector<EpSequence> corpus_for(const Algebra& algebra,
                                          const SuiteConfig& config) {
  return generate_corpus(algebra, bounds_for(algebra, config), config.seed,
                         config.samples);
}

inline json witness_json(const EpSequence& x) { return to_json(x); }

inline CheckResult pointwise_equal(const std::string& name,
                                   const Convergence& c1, const Convergence& c2,
                                   const std::vector<EpSequence>& corpus) {
  CheckResult out{name};
  for (const EpSequence& x : corpus) {
    ElementSet a = eval_convergence(c1, x);
    ElementSet b = eval_convergence(c2, x);
    if (!(a == b)) {
      out.pass = false;
      out.details = json{{"witness", witness_json(x)},
                         {"left", to_json(a)},
                         {"right", to_json(b)}};
      return out;
    }
  }
  out.details["sequences"] = corpus.size();
  return out;
}

inline CheckResult pointwise_le(const std::string& name, const Convergence& c1,
                                const Convergence& c2,
                                const std::vector<EpSequence>& corpus) {
  CheckResult out{name};
  LeVerdict v = convergence_le(c1, c2, corpus);
  out.pass = v.holds;
  if (v.witness) out.details["witness"] = witness_json(*v.witness);
  return out;
}

// ---------------------------------------------------------------- axioms

inline void suite_axioms(const SuiteConfig& config, const Algebra& algebra,
                         std::vector<CheckResult>& out) {
  const auto corpus = corpus_for(algebra, config);
  struct Expected {
    Convergence c;
    bool l1, l2, l3, hausdorff;
  };
  const std::string n = "-n" + std::to_string(algebra.atoms());
  std::vector<Expected> table;
  table.push_back({Convergence::lambda_s(), true, true, true, true});
  table.push_back({Convergence::lambda_ls(), true, true, true, false});
  table.push_back({Convergence::lambda_li(), true, true, true, false});
  table.push_back({Convergence::lambda_index(0), true, true, true, true});
  for (int i = 1; i <= 4; ++i)
    table.push_back({Convergence::lambda_index(i), true, false, true, true});
  table.push_back(
      {Convergence::star(Convergence::lambda_s()), true, true, true, true});
  table.push_back(
      {Convergence::star(Convergence::lambda_ls()), true, true, true, false});

  for (const Expected& e : table) {
    CheckResult r{"axioms-" + e.c.name() + n};
    AxiomReport rep = check_axioms(e.c, algebra, corpus);
    const bool ok = rep.l1.holds == e.l1 && rep.l2.holds == e.l2 &&
                    rep.l3.holds == e.l3 && rep.hausdorff.holds == e.hausdorff;
    r.pass = ok;
    r.details = json{{"l1", rep.l1.holds},
                     {"l2", rep.l2.holds},
                     {"l3", rep.l3.holds},
                     {"hausdorff", rep.hausdorff.holds}};
    if (rep.hausdorff.witness_sequence)
      r.details["hausdorff_witness"] =
          witness_json(*rep.hausdorff.witness_sequence);
    if (rep.l2.witness_sequence)
      r.details["l2_witness"] = witness_json(*rep.l2.witness_sequence);
    out.push_back(std::move(r));
  }
}

// ---------------------------------------------------------------- diagram

inline void suite_diagram(const SuiteConfig& config, const Algebra& algebra,
                          std::vector<CheckResult>& out) {
  const auto corpus = corpus_for(algebra, config);
  const std::string n = "-n" + std::to_string(algebra.atoms());
  const Convergence s = Convergence::lambda_s();
  const Convergence ls = Convergence::lambda_ls();
  const Convergence li = Convergence::lambda_li();
  auto l = [](int i) { return Convergence::lambda_index(i); };

  out.push_back(pointwise_le("diagram-l0-below-l1" + n, l(0), l(1), corpus));
  {
    CheckResult strict{"diagram-l0-strictly-below-l1" + n};
    strict.pass = !convergence_le(l(1), l(0), corpus).holds;
    out.push_back(std::move(strict));
  }
  out.push_back(pointwise_equal("diagram-l1-equals-l2" + n, l(1), l(2), corpus));
  out.push_back(pointwise_equal("diagram-l2-equals-l3" + n, l(2), l(3), corpus));
  out.push_back(pointwise_equal("diagram-l3-equals-l4" + n, l(3), l(4), corpus));
  out.push_back(pointwise_equal("diagram-l0-equals-s" + n, l(0), s, corpus));
  for (int i = 1; i <= 4; ++i)
    out.push_back(pointwise_equal(
        "diagram-bar-l" + std::to_string(i) + "-equals-ls" + n,
        Convergence::bar(l(i)), ls, corpus));
  out.push_back(pointwise_le("diagram-s-below-ls" + n, s, ls, corpus));
  out.push_back(pointwise_le("diagram-s-below-li" + n, s, li, corpus));
  out.push_back(pointwise_le("diagram-ls-below-star-ls" + n, ls,
                             Convergence::star(ls), corpus));
  FiniteTopology o_ls = generate_sequential_topology(ls, algebra);
  out.push_back(pointwise_le("diagram-star-ls-below-lim" + n,
                             Convergence::star(ls),
                             Convergence::lim_of(o_ls), corpus));
}

// ------------------------------------------------------- meet identities

inline void suite_meet_identities(const SuiteConfig& config,
                                  const Algebra& algebra,
                                  std::vector<CheckResult>& out) {
  const auto corpus = corpus_for(algebra, config);
  const std::string n = "-n" + std::to_string(algebra.atoms());
  const Convergence s = Convergence::lambda_s();
  const Convergence ls = Convergence::lambda_ls();
  const Convergence li = Convergence::lambda_li();

  out.push_back(pointwise_equal("meet-ls-li-equals-s" + n,
                                Convergence::meet_of(ls, li), s, corpus));
  out.push_back(pointwise_equal(
      "meet-star-s-equals-meet-of-stars" + n, Convergence::star(s),
      Convergence::meet_of(Convergence::star(ls), Convergence::star(li)),
      corpus));

  FiniteTopology o_s = generate_sequential_topology(s, algebra);
  FiniteTopology o_ls = generate_sequential_topology(ls, algebra);
  FiniteTopology o_li = generate_sequential_topology(li, algebra);
  auto family_included = [](const FiniteTopology& a, const FiniteTopology& b) {
    for (mask_t o : a.open_sets())
      if (!b.is_open(o)) return false;
    return true;
  };
  CheckResult inc_ls{"meet-opens-ls-inside-s" + n};
  inc_ls.pass = family_included(o_ls, o_s);
  out.push_back(std::move(inc_ls));
  CheckResult inc_li{"meet-opens-li-inside-s" + n};
  inc_li.pass = family_included(o_li, o_s);
  out.push_back(std::move(inc_li));

  out.push_back(pointwise_le("meet-star-ls-below-lim-ls" + n,
                             Convergence::star(ls), Convergence::lim_of(o_ls),
                             corpus));
  out.push_back(pointwise_le("meet-star-li-below-lim-li" + n,
                             Convergence::star(li), Convergence::lim_of(o_li),
                             corpus));
}

// ------------------------------------------------------------ topological

inline void suite_topological(const SuiteConfig& config, const Algebra& algebra,
                              std::vector<CheckResult>& out) {
  const auto corpus = corpus_for(algebra, config);
  const std::string n = "-n" + std::to_string(algebra.atoms());
  const Convergence s = Convergence::lambda_s();
  const Convergence ls = Convergence::lambda_ls();
  const Convergence li = Convergence::lambda_li();

  for (const Convergence& c : {s, ls, li}) {
    CheckResult r{"topological-" + c.name() + n};
    auto v = is_topological_convergence(c, algebra, corpus);
    r.pass = v.holds;
    if (v.witness) r.details["witness"] = witness_json(*v.witness);
    out.push_back(std::move(r));
  }

  // regenerating from the limit operator of a generated topology gives the
  // topology back
  for (const Convergence& c : {s, ls, li}) {
    FiniteTopology t = generate_sequential_topology(c, algebra);
    FiniteTopology t2 =
        generate_sequential_topology(Convergence::lim_of(t), algebra);
    CheckResult r{"topological-lim-fixed-point-" + c.name() + n};
    r.pass = (t == t2);
    out.push_back(std::move(r));
  }

  // the diagonal closure generates the same topology
  for (const Convergence& c : {s, ls, li}) {
    FiniteTopology t = generate_sequential_topology(c, algebra);
    FiniteTopology t2 =
        generate_sequential_topology(Convergence::star(c), algebra);
    CheckResult r{"topological-star-same-topology-" + c.name() + n};
    r.pass = (t == t2);
    out.push_back(std::move(r));
  }

  // equal limit operators force equal families; the list contains both
  // equal and distinct pairs, so the implication is exercised non-vacuously
  {
    std::vector<std::pair<std::string, FiniteTopology>> tops;
    tops.emplace_back("s", generate_sequential_topology(s, algebra));
    tops.emplace_back("ls", generate_sequential_topology(ls, algebra));
    tops.emplace_back("li", generate_sequential_topology(li, algebra));
    tops.emplace_back("star-s",
                      generate_sequential_topology(Convergence::star(s), algebra));
    tops.emplace_back("meet",
                      generate_sequential_topology(
                          Convergence::meet_of(ls, li), algebra));
    CheckResult r{"topological-equal-lims-equal-families" + n};
    std::size_t equal_pairs = 0;
    for (std::size_t i = 0; i < tops.size() && r.pass; ++i)
      for (std::size_t j = i + 1; j < tops.size() && r.pass; ++j) {
        bool lims_equal = true;
        for (word_t e = 0; e <= algebra.top_word() && lims_equal; ++e)
          lims_equal = tops[i].second.minimal_open_neighborhood(e) ==
                       tops[j].second.minimal_open_neighborhood(e);
        if (lims_equal) {
          ++equal_pairs;
          r.pass = (tops[i].second == tops[j].second);
          if (!r.pass)
            r.details["witness_pair"] =
                json::array({tops[i].first, tops[j].first});
        }
      }
    r.details["equal_pairs"] = equal_pairs;
    if (equal_pairs == 0) r.pass = false;
    out.push_back(std::move(r));
  }

  // antitone: a finer topology has a smaller limit operator
  {
    CheckResult r{"topological-lim-antitone" + n};
    std::vector<FiniteTopology> tops{
        FiniteTopology::indiscrete(algebra),
        generate_sequential_topology(ls, algebra),
        generate_sequential_topology(li, algebra),
        generate_sequential_topology(s, algebra),
        FiniteTopology::discrete(algebra)};
    for (std::size_t i = 0; i < tops.size() && r.pass; ++i)
      for (std::size_t j = 0; j < tops.size() && r.pass; ++j) {
        if (i == j) continue;
        bool included = true;
        for (mask_t o : tops[i].open_sets())
          if (!tops[j].is_open(o)) {
            included = false;
            break;
          }
        if (!included) continue;
        LeVerdict v = convergence_le(Convergence::lim_of(tops[j]),
                                     Convergence::lim_of(tops[i]), corpus);
        r.pass = v.holds;
        if (v.witness) r.details["witness"] = witness_json(*v.witness);
      }
    out.push_back(std::move(r));
  }
}

// -------------------------------------------------------- closed families

inline void suite_closed_families(const SuiteConfig& config,
                                  const Algebra& algebra,
                                  std::vector<CheckResult>& out) {
  (void)config;
  const std::string n = "-n" + std::to_string(algebra.atoms());
  // independently known family sizes: the up-sets of the Boolean lattice
  // with 1, 2, 3 atoms
  static constexpr std::size_t expected_sizes[] = {0, 3, 6, 20};

  FiniteTopology o_ls =
      generate_sequential_topology(Convergence::lambda_ls(), algebra);
  FiniteTopology o_li =
      generate_sequential_topology(Convergence::lambda_li(), algebra);

  {
    CheckResult r{"closed-families-ls-are-up-sets" + n};
    FamilyCheck f =
        check_closed_set_characterization(o_ls, ClosedFamilyFlavor::limsup);
    r.pass = f.holds;
    r.details["family_size"] = f.family_size;
    if (algebra.atoms() <= 3)
      r.pass = r.pass && (f.family_size ==
                          expected_sizes[static_cast<std::size_t>(
                              algebra.atoms())]);
    if (f.witness) r.details["witness_set"] = *f.witness;
    out.push_back(std::move(r));
  }
  {
    CheckResult r{"closed-families-li-are-down-sets" + n};
    FamilyCheck f =
        check_closed_set_characterization(o_li, ClosedFamilyFlavor::liminf);
    r.pass = f.holds;
    r.details["family_size"] = f.family_size;
    if (algebra.atoms() <= 3)
      r.pass = r.pass && (f.family_size ==
                          expected_sizes[static_cast<std::size_t>(
                              algebra.atoms())]);
    if (f.witness) r.details["witness_set"] = *f.witness;
    out.push_back(std::move(r));
  }
  {
    CheckResult r{"closed-families-complement-homeomorphism" + n};
    r.pass = dual_homeomorphism_check(algebra);
    out.push_back(std::move(r));
  }
  if (algebra.atoms() == 2) {
    // negative control: drop one up-set and the checker must object
    std::vector<mask_t> family = o_ls.closed_sets();
    const mask_t dropped = 10;  // {top, first atom}
    std::erase(family, dropped);
    FiniteTopology perturbed(algebra, std::move(family));
    FamilyCheck f = check_closed_set_characterization(
        perturbed, ClosedFamilyFlavor::limsup);
    CheckResult r{"closed-families-perturbation-detected" + n};
    r.pass = !f.holds && f.witness && *f.witness == dropped;
    out.push_back(std::move(r));
  }
}

// ------------------------------------------------------------- maximality

inline void suite_maximality(const SuiteConfig& config, const Algebra& algebra,
                             std::vector<CheckResult>& out) {
  const auto corpus = corpus_for(algebra, config);
  const std::string n = "-n" + std::to_string(algebra.atoms());
  // counts computed by the enumeration oracle and frozen: families of
  // subsets of a 2- and 4-element carrier closed under union and
  // intersection containing the empty set and the carrier
  const std::size_t expected_count = (algebra.atoms() == 1) ? 4u : 355u;

  std::optional<std::size_t> first_count;
  for (const Convergence& c :
       {Convergence::lambda_s(), Convergence::lambda_ls(),
        Convergence::lambda_li()}) {
    CheckResult r{"maximality-" + c.name() + n};
    MaximalityReport rep = maximality_brute_force(c, algebra, corpus);
    r.pass = rep.holds && rep.topology_count == expected_count;
    r.details["topology_count"] = rep.topology_count;
    r.details["dominating_count"] = rep.dominating_count;
    if (!first_count) first_count = rep.topology_count;
    r.pass = r.pass && (*first_count == rep.topology_count);
    out.push_back(std::move(r));
  }

  CheckResult stable{"maximality-enumeration-stable" + n};
  stable.pass =
      enumerate_all_topologies(algebra) == enumerate_all_topologies(algebra);
  out.push_back(std::move(stable));
}

// ---------------------------------------------------- subsequence limits

inline void suite_subsequence_limits(const SuiteConfig& config,
                                     const Algebra& algebra,
                                     std::vector<CheckResult>& out) {
  const auto corpus = corpus_for(algebra, config);
  const std::string n = "-n" + std::to_string(algebra.atoms());
  CheckResult chain{"subsequence-limits-chain" + n};
  CheckResult lower{"subsequence-limits-lower-is-liminf" + n};
  CheckResult upper{"subsequence-limits-upper-is-limsup" + n};
  CheckResult displays{"subsequence-limits-displays-agree" + n};
  // the two iterated limits characterize limits in the sequential topology:
  // a is a limit iff lower = upper = a
  CheckResult characterize{"subsequence-limits-characterize-sequential" + n};
  FiniteTopology o_s =
      generate_sequential_topology(Convergence::lambda_s(), algebra);
  for (const EpSequence& x : corpus) {
    IteratedLimits il = iterated_limits(x);
    auto [inf, sup] = lim_inf_sup(x);
    if (characterize.pass) {
      ElementSet expected =
          (il.lower == il.upper)
              ? ElementSet(algebra, mask_t(1) << il.lower.word)
              : ElementSet::empty(algebra);
      if (!(lim_of_topology(o_s, x) == expected)) {
        characterize.pass = false;
        characterize.details["witness"] = witness_json(x);
      }
    }
    if (chain.pass &&
        !(le(inf, il.lower) && le(il.lower, il.upper) && le(il.upper, sup))) {
      chain.pass = false;
      chain.details["witness"] = witness_json(x);
    }
    if (lower.pass && !(il.lower == inf)) {
      lower.pass = false;
      lower.details["witness"] = witness_json(x);
    }
    if (upper.pass && !(il.upper == sup)) {
      upper.pass = false;
      upper.details["witness"] = witness_json(x);
    }
    if (displays.pass && !(il.upper == il.upper_by_witnesses)) {
      displays.pass = false;
      displays.details["witness"] = witness_json(x);
    }
  }
  chain.details["sequences"] = corpus.size();
  out.push_back(std::move(chain));
  out.push_back(std::move(lower));
  out.push_back(std::move(upper));
  out.push_back(std::move(displays));
  out.push_back(std::move(characterize));
}

// ------------------------------------------------------- boolean values

inline void suite_boolean_values(const SuiteConfig& config,
                                 const Algebra& algebra,
                                 std::vector<CheckResult>& out) {
  const auto corpus = corpus_for(algebra, config);
  const std::string n = "-n" + std::to_string(algebra.atoms());
  CheckResult inf_check{"boolean-values-infinite-is-limsup" + n};
  CheckResult cof_check{"boolean-values-cofinite-is-liminf" + n};
  CheckResult collapse{"boolean-values-middle-collapse" + n};
  CheckResult lambda_def{"boolean-values-lambda-index-definition" + n};
  for (const EpSequence& x : corpus) {
    auto [inf, sup] = lim_inf_sup(x);
    if (inf_check.pass &&
        !(boolean_value(x, NameStatement::infinite) == sup)) {
      inf_check.pass = false;
      inf_check.details["witness"] = witness_json(x);
    }
    if (cof_check.pass &&
        !(boolean_value(x, NameStatement::cofinite) == inf)) {
      cof_check.pass = false;
      cof_check.details["witness"] = witness_json(x);
    }
    auto b = b_values(x);
    if (collapse.pass &&
        !(b[0] == inf && b[1] == b[4] && b[2] == b[4] && b[3] == b[4] &&
          b[4] == sup)) {
      collapse.pass = false;
      collapse.details["witness"] = witness_json(x);
    }
    if (lambda_def.pass) {
      for (int i = 0; i <= 4; ++i) {
        ElementSet got =
            eval_convergence(Convergence::lambda_index(i), x);
        ElementSet want = (b[static_cast<std::size_t>(i)] == b[4])
                              ? ElementSet(algebra, mask_t(1) << b[4].word)
                              : ElementSet::empty(algebra);
        if (!(got == want)) {
          lambda_def.pass = false;
          lambda_def.details["witness"] = witness_json(x);
          lambda_def.details["index"] = i;
          break;
        }
      }
    }
  }
  out.push_back(std::move(inf_check));
  out.push_back(std::move(cof_check));
  out.push_back(std::move(collapse));
  out.push_back(std::move(lambda_def));
}

// --------------------------------------------------- trace intersections

inline void suite_trace_intersections(const SuiteConfig& config,
                                      const Algebra& algebra,
                                      std::vector<CheckResult>& out) {
  const std::string n = "-n" + std::to_string(algebra.atoms());
  {
    CheckResult r{"trace-intersections-dual-paths" + n};
    auto pairs = seeded_sequence_set_pairs(algebra, bounds_for(algebra, config),
                                           config.seed, config.samples);
    std::size_t checked = 0;
    for (const auto& [x, a] : pairs) {
      Element by_comp = intersection_infinite_value(x, a);
      Element by_atom = intersection_infinite_value_per_atom(x, a);
      ++checked;
      if (!(by_comp == by_atom)) {
        r.pass = false;
        r.details["witness"] = witness_json(x);
        r.details["index_set"] = to_json(a);
        break;
      }
    }
    r.details["pairs"] = checked;
    out.push_back(std::move(r));
  }
  {
    CheckResult r{"trace-intersections-vanishing-equivalence" + n};
    const auto corpus = corpus_for(algebra, config);
    const auto samples = seeded_selectors(config.seed, 10);
    std::size_t vanish = 0;
    for (const EpSequence& x : corpus) {
      VanishingEquivalence v = lemma_vanishing_equivalence(x, samples);
      if (!v.agree) {
        r.pass = false;
        r.details["witness"] = witness_json(x);
        break;
      }
      if (v.by_subsequences) ++vanish;
    }
    r.details["vanishing_sequences"] = vanish;
    out.push_back(std::move(r));
  }
}

// --------------------------------------------------------------- closures

inline void suite_closures(const SuiteConfig& config, const Algebra& algebra,
                           std::vector<CheckResult>& out) {
  const auto corpus = corpus_for(algebra, config);
  const std::string n = "-n" + std::to_string(algebra.atoms());
  const Convergence s = Convergence::lambda_s();
  const Convergence ls = Convergence::lambda_ls();
  const Convergence li = Convergence::lambda_li();

  {
    // closure of the range of a limsup-stable sequence
    CheckResult r{"closures-stable-range-formula" + n};
    std::size_t stable_count = 0;
    for (const EpSequence& x : corpus) {
      if (!is_limsup_stable(x)) continue;
      ++stable_count;
      ElementSet range = x.range_set();
      ElementSet closure = closure_fixpoint(ls, range).closure;
      ElementSet expected = set_union(
          up_closure(ElementSet(algebra, mask_t(1) << lim_sup(x).word)),
          up_closure(range));
      if (!(closure == expected)) {
        r.pass = false;
        r.details["witness"] = witness_json(x);
        break;
      }
    }
    r.details["stable_sequences"] = stable_count;
    out.push_back(std::move(r));
  }
  {
    CheckResult r{"closures-stable-range-formula-dual" + n};
    for (const EpSequence& x : corpus) {
      if (!is_liminf_stable(x)) continue;
      ElementSet range = x.range_set();
      ElementSet closure = closure_fixpoint(li, range).closure;
      ElementSet expected = set_union(
          down_closure(ElementSet(algebra, mask_t(1) << lim_inf(x).word)),
          down_closure(range));
      if (!(closure == expected)) {
        r.pass = false;
        r.details["witness"] = witness_json(x);
        break;
      }
    }
    out.push_back(std::move(r));
  }
  {
    // x -> x meet a is continuous for the limsup topology
    CheckResult r{"closures-meet-maps-continuous" + n};
    FiniteTopology t = generate_sequential_topology(ls, algebra);
    for (word_t a = 0; a <= algebra.top_word() && r.pass; ++a) {
      for (mask_t f : t.closed_sets()) {
        mask_t preimage = 0;
        for (word_t x = 0; x <= algebra.top_word(); ++x)
          if ((f >> (x & a)) & 1u) preimage |= mask_t(1) << x;
        if (!t.is_closed(preimage)) {
          r.pass = false;
          r.details["element"] = a;
          r.details["closed_set"] = f;
          break;
        }
      }
    }
    out.push_back(std::move(r));
  }
  {
    // dominated sequences have more limits in the limsup topology
    CheckResult r{"closures-dominated-limits" + n};
    FiniteTopology t = generate_sequential_topology(ls, algebra);
    std::mt19937_64 rng(config.seed ^ 0x5eeda111);
    std::uniform_int_distribution<word_t> element(0, algebra.top_word());
    std::size_t done = 0;
    for (const EpSequence& y : corpus) {
      if (done >= config.samples) break;
      std::vector<word_t> prefix = y.prefix(), cycle = y.cycle();
      for (word_t& w : prefix) w &= element(rng);
      for (word_t& w : cycle) w &= element(rng);
      EpSequence x(algebra, std::move(prefix), std::move(cycle));
      ++done;
      if (!subset_of(lim_of_topology(t, y), lim_of_topology(t, x))) {
        r.pass = false;
        r.details["witness_y"] = witness_json(y);
        r.details["witness_x"] = witness_json(x);
        break;
      }
    }
    r.details["pairs"] = done;
    out.push_back(std::move(r));
  }
  {
    // the iterated sequential closure is the closure operator of the
    // generated topology
    CheckResult r{"closures-fixpoint-matches-topology" + n};
    for (const Convergence& c : {s, ls, li}) {
      FiniteTopology t = generate_sequential_topology(c, algebra);
      SupportMap map = build_support_map(c, algebra);
      const std::vector<mask_t> u = detail::closure_table(map);
      const mask_t carrier = algebra.carrier_mask();
      for (mask_t a = 0; a <= carrier && r.pass; ++a) {
        mask_t cur = a;
        for (int it = 0; it <= algebra.carrier_size() + 1; ++it) {
          mask_t next = cur;
          for (mask_t tmask = cur; tmask != 0; tmask = (tmask - 1) & cur)
            next |= u[tmask];
          if (next == cur) break;
          cur = next;
        }
        if (cur != t.minimal_closed_superset(a)) {
          r.pass = false;
          r.details["convergence"] = c.name();
          r.details["set"] = a;
        }
      }
      if (!r.pass) break;
    }
    out.push_back(std::move(r));
  }
  {
    // definitional fixpoint on sampled sets agrees and stays within the
    // iteration bound
    CheckResult r{"closures-fixpoint-definitional-spots" + n};
    FiniteTopology t = generate_sequential_topology(ls, algebra);
    std::mt19937_64 rng(config.seed ^ 0x0ddba11);
    std::uniform_int_distribution<mask_t> subset(0, algebra.carrier_mask());
    for (int i = 0; i < 20 && r.pass; ++i) {
      ElementSet a(algebra, subset(rng));
      ClosureResult c = closure_fixpoint(ls, a);
      r.pass = (c.closure.members == t.minimal_closed_superset(a.members)) &&
               c.iterations <= algebra.carrier_size() + 1;
      if (!r.pass) r.details["set"] = a.members;
    }
    out.push_back(std::move(r));
  }
  {
    // diagonal closure stays below the limit operator of the generated
    // topology
    CheckResult r{"closures-star-below-lim" + n};
    for (const Convergence& c : {s, ls, li}) {
      FiniteTopology t = generate_sequential_topology(c, algebra);
      LeVerdict v = convergence_le(Convergence::star(c),
                                   Convergence::lim_of(t), corpus);
      if (!v.holds) {
        r.pass = false;
        r.details["convergence"] = c.name();
        if (v.witness) r.details["witness"] = witness_json(*v.witness);
        break;
      }
    }
    out.push_back(std::move(r));
  }
}

// -------------------------------------------------------------- stability

inline void suite_stability(const SuiteConfig& config, const Algebra& algebra,
                            std::vector<CheckResult>& out) {
  const std::string n = "-n" + std::to_string(algebra.atoms());
  {
    CheckResult r{"stability-condition-holds" + n};
    StableSubsequenceReport rep = stable_subsequence_condition(algebra);
    r.pass = rep.holds;
    json witnesses = json::array();
    for (auto [s_mask, t_mask] : rep.sample_witnesses)
      witnesses.push_back(json{{"support", s_mask}, {"witness", t_mask}});
    r.details["sample_witnesses"] = witnesses;
    // the found witnesses must be singletons realizing stable subsequences
    for (auto [s_mask, t_mask] : rep.sample_witnesses)
      if (std::popcount(t_mask) != 1) r.pass = false;
    out.push_back(std::move(r));
  }
  if (algebra.atoms() <= 3) {
    const auto corpus = corpus_for(algebra, config);
    for (const Convergence& c :
         {Convergence::lambda_s(), Convergence::lambda_ls(),
          Convergence::lambda_li()}) {
      CheckResult r{"stability-weakly-topological-" + c.name() + n};
      auto v = is_weakly_topological(c, algebra, corpus);
      r.pass = v.holds;
      if (v.witness) r.details["witness"] = witness_json(*v.witness);
      out.push_back(std::move(r));
    }
    CheckResult r{"stability-witnesses-are-stable" + n};
    for (const EpSequence& x : corpus) {
      const ElementSet support = tail_support(x);
      const word_t first = support.words().front();
      EpSequence y =
          witness_subsequence(x, ElementSet(algebra, mask_t(1) << first));
      if (!is_limsup_stable(y)) {
        r.pass = false;
        r.details["witness"] = witness_json(x);
        break;
      }
    }
    out.push_back(std::move(r));
  }
}

// -------------------------------------------------------------- reduction

inline void suite_reduction(const SuiteConfig& config, const Algebra& algebra,
                            std::vector<CheckResult>& out) {
  const auto corpus = corpus_for(algebra, config);
  const std::string n = "-n" + std::to_string(algebra.atoms());
  std::vector<Convergence> built_ins{
      Convergence::lambda_s(),  Convergence::lambda_ls(),
      Convergence::lambda_li(), Convergence::lambda_index(0),
      Convergence::lambda_index(1), Convergence::lambda_index(2),
      Convergence::lambda_index(3), Convergence::lambda_index(4)};
  std::vector<Convergence> composites{
      Convergence::star(Convergence::lambda_s()),
      Convergence::star(Convergence::lambda_ls()),
      Convergence::star(Convergence::lambda_li()),
      Convergence::meet_of(Convergence::lambda_ls(),
                           Convergence::lambda_li()),
      Convergence::bar(Convergence::lambda_index(4))};

  {
    CheckResult r{"reduction-tail-support-determinism" + n};
    std::vector<Convergence> all = built_ins;
    all.insert(all.end(), composites.begin(), composites.end());
    for (const Convergence& c : all) {
      SupportMap map = build_support_map(c, algebra);
      for (const EpSequence& x : corpus) {
        if (eval_convergence(c, x).members != map.at(tail_support(x).members)) {
          r.pass = false;
          r.details["convergence"] = c.name();
          r.details["witness"] = witness_json(x);
          break;
        }
      }
      if (!r.pass) break;
    }
    r.details["convergences"] = built_ins.size() + composites.size();
    out.push_back(std::move(r));
  }
  {
    CheckResult r{"reduction-witness-realizes-subsets" + n};
    for (const EpSequence& x : corpus) {
      const mask_t s = tail_support(x).members;
      for (mask_t t = s; t != 0; t = (t - 1) & s) {
        EpSequence y = witness_subsequence(x, ElementSet(algebra, t));
        if (tail_support(y).members != t) {
          r.pass = false;
          r.details["witness"] = witness_json(x);
          r.details["subset"] = t;
          break;
        }
      }
      if (!r.pass) break;
    }
    out.push_back(std::move(r));
  }
  {
    CheckResult r{"reduction-composition-shrinks-support" + n};
    auto pairs = seeded_sequence_set_pairs(algebra, bounds_for(algebra, config),
                                           config.seed ^ 0xc0117e, config.samples);
    for (const auto& [x, a] : pairs) {
      EpSequence y = compose_with_enumeration(x, a);
      const mask_t sy = tail_support(y).members;
      const mask_t sx = tail_support(x).members;
      if (sy == 0 || (sy & ~sx) != 0) {
        r.pass = false;
        r.details["witness"] = witness_json(x);
        r.details["index_set"] = to_json(a);
        break;
      }
    }
    r.details["pairs"] = config.samples;
    out.push_back(std::move(r));
  }
  {
    // antitone limits along both subsequence constructors
    CheckResult r{"reduction-antitone-limits" + n};
    auto selectors = seeded_selectors(config.seed ^ 0xfa11bac5, 20);
    for (const EpSequence& x : corpus) {
      auto [inf_x, sup_x] = lim_inf_sup(x);
      const mask_t s = tail_support(x).members;
      for (mask_t t = s; t != 0 && r.pass; t = (t - 1) & s) {
        EpSequence y = witness_subsequence(x, ElementSet(algebra, t));
        auto [inf_y, sup_y] = lim_inf_sup(y);
        if (!(le(inf_x, inf_y) && le(sup_y, sup_x))) {
          r.pass = false;
          r.details["witness"] = witness_json(x);
        }
      }
      for (std::size_t i = 0; i < 3 && r.pass; ++i) {
        EpSequence y = compose_with_enumeration(x, selectors[i]);
        auto [inf_y, sup_y] = lim_inf_sup(y);
        if (!(le(inf_x, inf_y) && le(sup_y, sup_x))) {
          r.pass = false;
          r.details["witness"] = witness_json(x);
        }
      }
      if (!r.pass) break;
    }
    out.push_back(std::move(r));
  }
  {
    CheckResult r{"reduction-selector-oracle" + n};
    auto selectors = seeded_selectors(config.seed, config.selectors);
    std::vector<std::pair<Convergence, SupportMap>> maps;
    for (const Convergence& c : built_ins)
      maps.emplace_back(c, build_support_map(c, algebra));
    std::size_t comparisons = 0;
    for (const EpSequence& x : corpus) {
      for (const OmegaSet& a : selectors) {
        EpSequence y = compose_with_enumeration(x, a);
        const mask_t sy = tail_support(y).members;
        for (const auto& [c, map] : maps) {
          ++comparisons;
          if (eval_convergence(c, y).members != map.at(sy)) {
            r.pass = false;
            r.details["convergence"] = c.name();
            r.details["witness"] = witness_json(x);
            r.details["selector"] = to_json(a);
            break;
          }
        }
        if (!r.pass) break;
      }
      if (!r.pass) break;
    }
    r.details["comparisons"] = comparisons;
    out.push_back(std::move(r));
  }
  {
    CheckResult r{"reduction-closure-step-routes-agree" + n};
    std::vector<Convergence> sample{
        Convergence::lambda_s(), Convergence::lambda_ls(),
        Convergence::lambda_li(),
        Convergence::meet_of(Convergence::lambda_ls(),
                             Convergence::lambda_li()),
        Convergence::star(Convergence::lambda_s())};
    for (const Convergence& c : sample) {
      SupportMap map = build_support_map(c, algebra);
      const std::vector<mask_t> u = detail::closure_table(map);
      const mask_t carrier = algebra.carrier_mask();
      for (mask_t a = 0; a <= carrier && r.pass; ++a) {
        ElementSet step = sequential_closure_step(c, ElementSet(algebra, a));
        if (step.members != u[a]) {
          r.pass = false;
          r.details["convergence"] = c.name();
          r.details["set"] = a;
        }
      }
      if (!r.pass) break;
    }
    out.push_back(std::move(r));
  }
}

// ------------------------------------------------------------------ cubes

inline void suite_cubes(const SuiteConfig& config, const Algebra& algebra,
                        std::vector<CheckResult>& out) {
  const auto corpus = corpus_for(algebra, config);
  const std::string n = "-n" + std::to_string(algebra.atoms());
  FiniteTopology cantor = cantor_cube_topology(algebra);
  FiniteTopology aleks = aleksandrov_cube_topology(algebra);
  FiniteTopology o_s =
      generate_sequential_topology(Convergence::lambda_s(), algebra);
  FiniteTopology o_ls =
      generate_sequential_topology(Convergence::lambda_ls(), algebra);

  {
    CheckResult r{"cubes-cantor-equals-sequential-s" + n};
    r.pass = (cantor == o_s);
    out.push_back(std::move(r));
  }
  {
    CheckResult r{"cubes-aleksandrov-equals-sequential-ls" + n};
    r.pass = (aleks == o_ls);
    out.push_back(std::move(r));
  }
  out.push_back(pointwise_equal("cubes-cantor-lim-is-s" + n,
                                Convergence::lim_of(cantor),
                                Convergence::lambda_s(), corpus));
  out.push_back(pointwise_equal("cubes-aleksandrov-lim-is-ls" + n,
                                Convergence::lim_of(aleks),
                                Convergence::lambda_ls(), corpus));
  {
    // the product-convergence criterion: limits in the Aleksandrov cube are
    // the upper bounds of the limsup
    CheckResult r{"cubes-aleksandrov-criterion" + n};
    for (const EpSequence& x : corpus) {
      ElementSet expected = up_closure(
          ElementSet(algebra, mask_t(1) << lim_sup(x).word));
      if (!(lim_of_topology(aleks, x) == expected)) {
        r.pass = false;
        r.details["witness"] = witness_json(x);
        break;
      }
    }
    out.push_back(std::move(r));
  }
  {
    CheckResult r{"cubes-s-topological-on-power-set" + n};
    auto v = is_topological_convergence(Convergence::lambda_s(), algebra,
                                        corpus);
    r.pass = v.holds;
    out.push_back(std::move(r));
  }
}

}  // namespace checks

struct SuiteDefinition {
  std::string name;
  int atom_cap;
  std::function<void(const SuiteConfig&, const Algebra&,
                     std::vector<CheckResult>&)>
      run;
};

inline const std::vector<SuiteDefinition>& suite_registry() {
  static const std::vector<SuiteDefinition> defs = {
      {"axioms", 3, checks::suite_axioms},
      {"boolean-values", 3, checks::suite_boolean_values},
      {"closed-families", 3, checks::suite_closed_families},
      {"closures", 3, checks::suite_closures},
      {"cube", 3, checks::suite_cubes},
      {"diagram", 3, checks::suite_diagram},
      {"maximality", 2, checks::suite_maximality},
      {"meet-identities", 3, checks::suite_meet_identities},
      {"reduction", 3, checks::suite_reduction},
      {"stability", 4, checks::suite_stability},
      {"subsequence-limits", 3, checks::suite_subsequence_limits},
      {"topological", 3, checks::suite_topological},
      {"trace-intersections", 3, checks::suite_trace_intersections},
  };
  return defs;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& d : suite_registry()) names.push_back(d.name);
  return names;
}

/// Run the selected suites (all of them when none are named) over algebras
/// with 1..max_atoms atoms, clamped per suite to its own cap.  Explicitly
/// requesting a suite together with an explicit atom count above its cap is
/// a configuration error.
inline SuiteReport run_suites(const SuiteConfig& config) {
  if (config.max_atoms < 1 || config.max_atoms > Algebra::topology_atoms)
    throw usage_error("max atoms must be in 1.." +
                      std::to_string(Algebra::topology_atoms));
  if (config.samples < 1) throw usage_error("samples must be at least 1");
  if (config.prefix_bound && *config.prefix_bound < 0)
    throw usage_error("prefix bound must be nonnegative");
  if (config.cycle_bound && *config.cycle_bound < 1)
    throw usage_error("cycle bound must be at least 1");

  std::vector<const SuiteDefinition*> selected;
  if (config.suites.empty()) {
    for (const auto& d : suite_registry()) selected.push_back(&d);
  } else {
    for (const std::string& name : config.suites) {
      const SuiteDefinition* found = nullptr;
      for (const auto& d : suite_registry())
        if (d.name == name) found = &d;
      if (!found) throw usage_error("unknown suite: " + name);
      if (config.explicit_suites && config.atoms_explicit &&
          config.max_atoms > found->atom_cap)
        throw usage_error("suite " + name + " is capped at " +
                          std::to_string(found->atom_cap) + " atoms");
      selected.push_back(found);
    }
  }

  SuiteReport report;
  report.config_echo =
      json{{"max_atoms", config.max_atoms},
           {"prefix_bound", config.prefix_bound
                                ? json(*config.prefix_bound)
                                : json(nullptr)},
           {"cycle_bound",
            config.cycle_bound ? json(*config.cycle_bound) : json(nullptr)},
           {"seed", config.seed},
           {"samples", config.samples},
           {"selectors", config.selectors}};
  json suite_list = json::array();
  for (const auto* d : selected) suite_list.push_back(d->name);
  report.config_echo["suites"] = suite_list;

  for (const auto* d : selected) {
    SuiteOutcome outcome{d->name, {}, 0.0};
    const auto start = std::chrono::steady_clock::now();
    const int atoms = std::min(config.max_atoms, d->atom_cap);
    for (int a = 1; a <= atoms; ++a)
      d->run(config, Algebra(a), outcome.checks);
    outcome.millis = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    std::sort(outcome.checks.begin(), outcome.checks.end(),
              [](const CheckResult& a, const CheckResult& b) {
                return a.name < b.name;
              });
    for (const CheckResult& c : outcome.checks)
      report.all_pass = report.all_pass && c.pass;
    report.suites.push_back(std::move(outcome));
  }
  std::sort(report.suites.begin(), report.suites.end(),
            [](const SuiteOutcome& a, const SuiteOutcome& b) {
              return a.name < b.name;
            });
  return report;
}

}  // namespace bconv
