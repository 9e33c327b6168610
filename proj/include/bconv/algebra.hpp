#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bconv {

/// An element of a finite atomic Boolean algebra, encoded as an atom-flag word.
using word_t = std::uint32_t;
/// A subset of the algebra carrier, encoded as a characteristic word
/// (bit e is set iff element e belongs to the subset).
using mask_t = std::uint32_t;

/// Values from different algebras were combined, or a raw value is malformed.
struct structural_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A stated precondition of an operation does not hold for the given input.
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The requested computation would exceed a hard enumeration cap.
/// Caps are hard errors, never silent truncation: a partially enumerated
/// topology or subset lattice is meaningless.
struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The finite atomic Boolean algebra P({0, ..., atoms-1}).
///
/// The carrier consists of the 2^atoms words 0 ... 2^atoms - 1; word 0 is the
/// bottom element and 2^atoms - 1 is the top.  Meet, join and complement are
/// bitwise operations on the words.  All values derived from an algebra carry
/// it along, and every binary operation checks that its operands agree.
class Algebra {
 public:
  /// Representation cap: carrier masks are 32-bit words.
  static constexpr int max_atoms = 5;
  /// Working cap for whole-carrier subset enumerations (support tables,
  /// sequential topologies, stable-subsequence scans): 2^(2^atoms) candidate
  /// sets stop being desk-computable beyond this.
  static constexpr int topology_atoms = 4;
  /// Cap for brute-force enumeration of all topologies on the carrier.
  static constexpr int brute_force_atoms = 2;

  explicit Algebra(int atoms) : atoms_(atoms) {
    if (atoms < 1 || atoms > max_atoms)
      throw structural_error("algebra atom count must be in 1.." +
                             std::to_string(max_atoms) + ", got " +
                             std::to_string(atoms));
  }

  int atoms() const { return atoms_; }
  int carrier_size() const { return 1 << atoms_; }
  word_t bottom_word() const { return 0; }
  word_t top_word() const { return static_cast<word_t>((1u << atoms_) - 1); }
  /// Characteristic word of the full carrier.
  mask_t carrier_mask() const {
    if (carrier_size() >= 32) return ~mask_t(0);
    return static_cast<mask_t>((mask_t(1) << carrier_size()) - 1);
  }

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  int atoms_;
};

/// A single element of an algebra; a value type identified by its word.
struct Element {
  Algebra algebra;
  word_t word;

  Element(Algebra a, word_t w) : algebra(a), word(w) {
    if (w > a.top_word())
      throw structural_error("element word " + std::to_string(w) +
                             " outside carrier of a " +
                             std::to_string(a.atoms()) + "-atom algebra");
  }

  bool is_atom() const { return std::popcount(word) == 1; }
  friend bool operator==(const Element&, const Element&) = default;
};

/// A subset of the carrier, stored as a characteristic word over elements.
struct ElementSet {
  Algebra algebra;
  mask_t members;

  ElementSet(Algebra a, mask_t m) : algebra(a), members(m) {
    if ((m & ~a.carrier_mask()) != 0)
      throw structural_error("element set contains words outside the carrier");
  }

  static ElementSet empty(Algebra a) { return ElementSet(a, 0); }
  static ElementSet whole(Algebra a) { return ElementSet(a, a.carrier_mask()); }

  bool contains(word_t w) const { return (members >> w) & 1u; }
  bool empty_set() const { return members == 0; }
  int size() const { return std::popcount(members); }

  /// Member words in ascending order.
  std::vector<word_t> words() const {
    std::vector<word_t> out;
    for (word_t w = 0; w <= algebra.top_word(); ++w)
      if (contains(w)) out.push_back(w);
    return out;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
};

namespace detail {
inline void require_same_algebra(const Algebra& a, const Algebra& b,
                                 const char* what) {
  if (!(a == b))
    throw structural_error(std::string("mixed-algebra operands in ") + what);
}
}  // namespace detail

// Lattice operations.  le(a, b) holds iff a AND b = a.

inline Element meet(const Element& a, const Element& b) {
  detail::require_same_algebra(a.algebra, b.algebra, "meet");
  return Element(a.algebra, a.word & b.word);
}

inline Element join(const Element& a, const Element& b) {
  detail::require_same_algebra(a.algebra, b.algebra, "join");
  return Element(a.algebra, a.word | b.word);
}

inline Element complement(const Element& a) {
  return Element(a.algebra, a.algebra.top_word() ^ a.word);
}

inline bool le(const Element& a, const Element& b) {
  detail::require_same_algebra(a.algebra, b.algebra, "le");
  return (a.word & b.word) == a.word;
}

/// Meet of a set of elements; the empty meet is the top element.
inline Element big_meet(const ElementSet& s) {
  word_t acc = s.algebra.top_word();
  for (word_t w = 0; w <= s.algebra.top_word(); ++w)
    if (s.contains(w)) acc &= w;
  return Element(s.algebra, acc);
}

/// Join of a set of elements; the empty join is the bottom element.
inline Element big_join(const ElementSet& s) {
  word_t acc = 0;
  for (word_t w = 0; w <= s.algebra.top_word(); ++w)
    if (s.contains(w)) acc |= w;
  return Element(s.algebra, acc);
}

/// The set of atoms lying below a.
inline ElementSet atoms_below(const Element& a) {
  mask_t m = 0;
  for (int i = 0; i < a.algebra.atoms(); ++i) {
    word_t atom = word_t(1) << i;
    if ((a.word & atom) == atom) m |= mask_t(1) << atom;
  }
  return ElementSet(a.algebra, m);
}

/// Upward closure { b : exists a in s with a <= b }.  A closure operator:
/// extensive, monotone and idempotent.
inline ElementSet up_closure(const ElementSet& s) {
  mask_t m = 0;
  const word_t top = s.algebra.top_word();
  for (word_t a = 0; a <= top; ++a) {
    if (!s.contains(a)) continue;
    // enumerate supersets of the atom-flag word a
    for (word_t b = a;; b = (b + 1) | a) {
      m |= mask_t(1) << b;
      if (b == top) break;
    }
  }
  return ElementSet(s.algebra, m);
}

/// Downward closure { b : exists a in s with b <= a }.
inline ElementSet down_closure(const ElementSet& s) {
  mask_t m = 0;
  const word_t top = s.algebra.top_word();
  for (word_t a = 0; a <= top; ++a) {
    if (!s.contains(a)) continue;
    // enumerate subsets of the atom-flag word a
    for (word_t b = a;; b = (b - 1) & a) {
      m |= mask_t(1) << b;
      if (b == 0) break;
    }
  }
  return ElementSet(s.algebra, m);
}

inline ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  detail::require_same_algebra(a.algebra, b.algebra, "set_union");
  return ElementSet(a.algebra, a.members | b.members);
}

inline ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  detail::require_same_algebra(a.algebra, b.algebra, "set_intersection");
  return ElementSet(a.algebra, a.members & b.members);
}

inline bool subset_of(const ElementSet& a, const ElementSet& b) {
  detail::require_same_algebra(a.algebra, b.algebra, "subset_of");
  return (a.members & b.members) == a.members;
}

}  // namespace bconv
