#ifndef DG_GROUPOPS_HPP
#define DG_GROUPOPS_HPP

#include <optional>
#include <vector>

#include "dg/canonical.hpp"
#include "dg/diagram.hpp"
#include "dg/planar.hpp"
#include "dg/rewrite.hpp"

namespace dg {

// Raised when the cyclic-reduction loop can make no progress on a diagram
// whose square is still unreduced. Never ignored silently; instances on the
// test corpus are findings to investigate.
class StuckCyclicReduction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_spherical(const Presentation& p, const Diagram& d);

// reduce(g^-1 · d · g); requires top(g) == top(d). Result lives over
// bottom(g).
Diagram conjugate(const Presentation& p, const Diagram& d, const Diagram& g);

// Reduced n-fold product; inverse powers for n < 0; trivial for n = 0.
Diagram power(const Presentation& p, const Diagram& d, int n);

// reduce(d1^-1 · d2^-1 · d1 · d2); requires equal bases.
Diagram commutator(const Presentation& p, const Diagram& d1,
                   const Diagram& d2);

// Does d split as a sum at top offset s? Returns the offset of the cut on
// the bottom word when it does (the cut vertex survives the whole replay),
// nullopt when some cell's support straddles the evolving cut.
std::optional<std::int32_t> sum_cut(const Presentation& p, const Diagram& d,
                                    std::int32_t s);

// Splits d into the left and right summand at top offset s; pre: sum_cut.
std::pair<Diagram, Diagram> split_at(const Presentation& p, const Diagram& d,
                                     std::int32_t s);

struct ComponentDecomposition {
  std::vector<Diagram> parts;        // spherical, left to right
  std::vector<Word> bases;           // base word of each part
  std::vector<std::int32_t> split_vertices;  // realize() ids of interior cuts
};

// Splits a reduced spherical diagram at every surviving interior cut whose
// top and bottom positions agree, then merges adjacent trivial runs so no
// two neighbouring parts are both trivial.
ComponentDecomposition decompose_components(const Presentation& p,
                                            const Diagram& d);

struct CyclicReduction {
  Diagram conjugator;  // (w, v)-diagram Psi
  Diagram core;        // absolutely reduced (v, v)-diagram
};

// Writes a spherical diagram as Psi · core · Psi^-1 with the core's square
// reduced. Front/back mirror peeling is tried first; a blocked internal
// dipole is cancelled in place; a seam dipole of core·core that is neither
// is rotated into the core and cancelled on the next pass. Throws
// StuckCyclicReduction when none of that applies.
CyclicReduction absolutely_reduce(const Presentation& p, const Diagram& d);

// Number of nontrivial components of the absolutely reduced core; a
// conjugation invariant.
std::int32_t comp(const Presentation& p, const Diagram& d);

// Label of a positive path between two vertices, i.e. a representative of
// the monoid element mu(o', o''). Compare values with equal_mod_p.
std::optional<Word> mu(const PlanarGraph& g, std::int32_t o1, std::int32_t o2);

struct MuCheck {
  std::int32_t vertex;
  Word to_top_split;
  Word to_bottom_split;
  VerdictKind verdict;
  bool decisive;
};

struct Lemma1Report {
  bool is_sum = false;  // reduced form splits into spherical parts at offset
  bool pass = false;    // no decisive mu-inequality recorded
  std::int32_t top_split_vertex = -1;
  std::int32_t bottom_split_vertex = -1;
  std::vector<MuCheck> checks;  // sorted by vertex id
};

// Verifies the mu-equality that sums force: on a (uv,uv)-diagram equivalent
// to a sum of a (u,u)- and a (v,v)-diagram, with split_offset = |u|, every
// vertex seeing both split vertices must have mu to the top split and mu to
// the bottom split compare Equal or undecided; a decisive inequality fails.
Lemma1Report check_lemma1(const Presentation& p, const Diagram& d,
                          std::int32_t split_offset, Caps caps = {});

}  // namespace dg

#endif  // DG_GROUPOPS_HPP
