#ifndef DG_CANONICAL_HPP
#define DG_CANONICAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "dg/diagram.hpp"

namespace dg {

// Adjacent atoms a (applied first) and b commute iff the out-interval of a,
// [a.offset, a.offset + |out(a)|), and the in-interval of b,
// [b.offset, b.offset + |in(b)|), are disjoint in the intermediate word.
bool independent(const Presentation& p, const Atom& a, const Atom& b);

// Exchanges adjacent atoms (a then b) -> (b' then a'), adjusting offsets:
// when b lies left of a it keeps its offset and a shifts by delta(b); when b
// lies right it shifts back by delta(a) and a is unchanged. Returns nullopt
// when the supports overlap.
std::optional<std::pair<Atom, Atom>> swap_pair(const Presentation& p, Atom a,
                                               Atom b);

// swap_pair applied at position i of the atom list; same equivalence class.
std::optional<Diagram> swap_adjacent(const Presentation& p, const Diagram& d,
                                     std::size_t i);

// Moves atoms[k] to the front (resp. back) of the list by successive legal
// swaps, updating everything it passes. Returns false, leaving the list
// untouched, when some swap is blocked.
bool bubble_to_front(const Presentation& p, std::vector<Atom>& atoms,
                     std::size_t k);
bool bubble_to_back(const Presentation& p, std::vector<Atom>& atoms,
                    std::size_t k);

inline bool mirror_pair(const Atom& a, const Atom& b) {
  return a.rel == b.rel && a.offset == b.offset && a.orient != b.orient;
}

// Left-greedy canonical form of the interchange class: repeatedly emit the
// front-bubblable atom with the least key (offset, rel, orient F<B).
// Equal classes produce identical atom lists.
Diagram normal_form(const Presentation& p, const Diagram& d);

// Index pairs (i, j), i < j, where atom j can be brought next to atom i by
// legal swaps and the two are then mirror images at the same offset.
std::vector<std::pair<std::size_t, std::size_t>> find_dipoles(
    const Presentation& p, const Diagram& d);

bool is_reduced(const Presentation& p, const Diagram& d);

// Cancels dipoles until none remain, then takes the normal form. The result
// is unique for the equivalence class (Kilibarda).
Diagram reduce(const Presentation& p, const Diagram& d);

// Equality in the diagram group: same top and identical reduced normal
// forms. With strict_isotopy, compares normal forms without reduction.
bool equal_diagrams(const Presentation& p, const Diagram& d1,
                    const Diagram& d2, bool strict_isotopy = false);

}  // namespace dg

#endif  // DG_CANONICAL_HPP
