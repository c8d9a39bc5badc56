#ifndef DG_DIAGRAM_HPP
#define DG_DIAGRAM_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "dg/presentation.hpp"
#include "dg/word.hpp"

namespace dg {

class InvalidDiagram : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Orientation of a cell relative to its relation: F applies lhs -> rhs,
// B applies rhs -> lhs. F orders before B in the normal-form key.
enum class Orient : std::uint8_t { F = 0, B = 1 };

inline Orient flip(Orient o) { return o == Orient::F ? Orient::B : Orient::F; }
inline char orient_char(Orient o) { return o == Orient::F ? 'F' : 'B'; }

// One elementary cell application: replace the oriented input side of
// relation `rel` at `offset` by its output side.
struct Atom {
  std::int32_t offset;
  std::int32_t rel;
  Orient orient;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

// A diagram is a top word plus the derivation that carves its cells, taken
// modulo interchange of independent cells (see canonical.hpp).
struct Diagram {
  Word top;
  std::vector<Atom> atoms;
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

const Word& in_side(const Presentation& p, const Atom& a);
const Word& out_side(const Presentation& p, const Atom& a);

// |out| - |in|: how much the running word widens when the atom applies.
std::int32_t width_delta(const Presentation& p, const Atom& a);

bool applicable(const Presentation& p, const Word& w, const Atom& a);

// Throws InvalidDiagram when the atom does not apply.
Word apply_atom(const Presentation& p, const Word& w, const Atom& a);

Diagram make_trivial(Word w);

inline std::size_t cells(const Diagram& d) { return d.atoms.size(); }

// Replays the atoms from the top word; throws InvalidDiagram on a bad atom.
Word bottom(const Presentation& p, const Diagram& d);

bool is_valid(const Presentation& p, const Diagram& d);

// Vertical gluing: requires bottom(d1) == top(d2). No reduction happens here.
Diagram compose(const Presentation& p, const Diagram& d1, const Diagram& d2);

// Horizontal gluing: top(d1)·top(d2), d2's atoms shifted by |bottom(d1)|.
Diagram sum(const Presentation& p, const Diagram& d1, const Diagram& d2);

// Mirror image: atoms reversed with orientation flipped, offsets kept.
Diagram inverse(const Presentation& p, const Diagram& d);

// File format: one "top: <symbols>" line, then "atom: <F|B> <offset> <rel>"
// lines. Round-trip stable.
Diagram parse_diagram(const Presentation& p, const std::string& text);
std::string serialize(const Presentation& p, const Diagram& d);

std::string atoms_string(const Diagram& d);  // compact [B@0:r1 ...] debug form

}  // namespace dg

#endif  // DG_DIAGRAM_HPP
