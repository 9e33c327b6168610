#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bconv/algebra.hpp"

namespace bconv {

/// A topology on the carrier of a finite algebra, stored by its family of
/// closed sets (each a characteristic mask), kept sorted by mask word.
///
/// Every finite topology is Alexandrov, so each point has a minimal closed
/// set containing it (its point closure) and a minimal open neighborhood;
/// both tables are derived at construction, which makes the limit operator a
/// constant-time mask test per element.
class FiniteTopology {
 public:
  FiniteTopology(Algebra algebra, std::vector<mask_t> closed_sets)
      : algebra_(algebra), closed_(std::move(closed_sets)) {
    std::sort(closed_.begin(), closed_.end());
    closed_.erase(std::unique(closed_.begin(), closed_.end()), closed_.end());
    validate();
    build_tables();
  }

  static FiniteTopology from_open_sets(Algebra algebra,
                                       const std::vector<mask_t>& opens) {
    std::vector<mask_t> closed;
    closed.reserve(opens.size());
    for (mask_t o : opens) closed.push_back(algebra.carrier_mask() & ~o);
    return FiniteTopology(algebra, std::move(closed));
  }

  static FiniteTopology discrete(Algebra algebra) {
    std::vector<mask_t> closed;
    for (mask_t f = 0; f <= algebra.carrier_mask(); ++f) closed.push_back(f);
    return FiniteTopology(algebra, std::move(closed));
  }

  static FiniteTopology indiscrete(Algebra algebra) {
    return FiniteTopology(algebra, {0, algebra.carrier_mask()});
  }

  const Algebra& algebra() const { return algebra_; }
  const std::vector<mask_t>& closed_sets() const { return closed_; }

  std::vector<mask_t> open_sets() const {
    std::vector<mask_t> opens;
    opens.reserve(closed_.size());
    for (mask_t c : closed_) opens.push_back(algebra_.carrier_mask() & ~c);
    std::sort(opens.begin(), opens.end());
    return opens;
  }

  bool is_closed(mask_t f) const {
    return std::binary_search(closed_.begin(), closed_.end(), f);
  }
  bool is_open(mask_t o) const {
    return is_closed(algebra_.carrier_mask() & ~o);
  }

  /// Intersection of all closed supersets of the given set; lies in the
  /// family because the family is intersection-closed.
  mask_t minimal_closed_superset(mask_t a) const {
    mask_t acc = algebra_.carrier_mask();
    for (mask_t c : closed_)
      if ((a & c) == a) acc &= c;
    return acc;
  }

  mask_t point_closure(word_t element) const {
    return point_closure_[element];
  }

  /// Intersection of all open sets containing the element; itself open.
  mask_t minimal_open_neighborhood(word_t element) const {
    return min_nbhd_[element];
  }

  /// True iff the two topologies have identical closed families.
  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
    return a.algebra_ == b.algebra_ && a.closed_ == b.closed_;
  }

 private:
  void validate() const {
    const mask_t carrier = algebra_.carrier_mask();
    if (!std::binary_search(closed_.begin(), closed_.end(), mask_t(0)) ||
        !std::binary_search(closed_.begin(), closed_.end(), carrier))
      throw structural_error(
          "closed family must contain the empty set and the carrier");
    for (mask_t c : closed_)
      if ((c & ~carrier) != 0)
        throw structural_error("closed set outside the carrier");

    // Closure under union and intersection, checked through the point
    // closures: the family must consist of exactly the sets saturated under
    // e -> cl(e).  This is linear in 2^carrier instead of quadratic in the
    // family size.
    std::vector<mask_t> cl(static_cast<std::size_t>(algebra_.carrier_size()));
    for (word_t e = 0; e <= algebra_.top_word(); ++e) {
      mask_t acc = carrier;
      for (mask_t c : closed_)
        if ((c >> e) & 1u) acc &= c;
      cl[e] = acc;
    }
    std::size_t saturated_count = 0;
    for (mask_t f = 0; f <= carrier; ++f) {
      mask_t sat = 0;
      for (word_t e = 0; e <= algebra_.top_word(); ++e)
        if ((f >> e) & 1u) sat |= cl[e];
      if (sat == f) {
        ++saturated_count;
        if (!std::binary_search(closed_.begin(), closed_.end(), f))
          throw structural_error(
              "closed family is not closed under union/intersection");
      }
    }
    if (saturated_count != closed_.size())
      throw structural_error(
          "closed family is not closed under union/intersection");
  }

  void build_tables() {
    const mask_t carrier = algebra_.carrier_mask();
    point_closure_.resize(static_cast<std::size_t>(algebra_.carrier_size()));
    min_nbhd_.resize(static_cast<std::size_t>(algebra_.carrier_size()));
    for (word_t e = 0; e <= algebra_.top_word(); ++e) {
      mask_t closure = carrier;
      mask_t avoiding = 0;
      for (mask_t c : closed_) {
        if ((c >> e) & 1u)
          closure &= c;
        else
          avoiding |= c;
      }
      point_closure_[e] = closure;
      min_nbhd_[e] = carrier & ~avoiding;
    }
  }

  Algebra algebra_;
  std::vector<mask_t> closed_;
  std::vector<mask_t> point_closure_;
  std::vector<mask_t> min_nbhd_;
};

}  // namespace bconv
