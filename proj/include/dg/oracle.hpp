#ifndef DG_ORACLE_HPP
#define DG_ORACLE_HPP

#include <set>
#include <stdexcept>
#include <vector>

#include "dg/diagram.hpp"

namespace dg {

// Brute-force ground truth for small instances. Deliberately built on raw
// orbit enumeration, never on reduce(), so it can catch bugs in the
// canonical machinery instead of inheriting them.

struct OrbitBounds {
  std::int32_t max_cells = 8;
  std::int64_t max_orbit = 1'000'000;
  std::int32_t max_word_len = 64;
};

class ExceededBounds : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every atom sequence reachable from d by legal adjacent swaps; a closed
// set. Throws ExceededBounds instead of truncating.
std::set<std::vector<Atom>> swap_orbit(const Presentation& p,
                                       const Diagram& d,
                                       const OrbitBounds& b);

// Orbit-minimal representatives (lexicographically least sequences) of every
// terminal diagram reachable by cancelling adjacent mirror pairs in any
// order, recursing through swap orbits. Kilibarda's theorem says the result
// is always a singleton; anything else is a bug in the swap or dipole rule.
std::set<std::vector<Atom>> all_reductions(const Presentation& p,
                                           const Diagram& d,
                                           const OrbitBounds& b);

// Smallest member of d's own swap orbit; the oracle's canonical label for an
// interchange class.
std::vector<Atom> orbit_min(const Presentation& p, const Diagram& d,
                            const OrbitBounds& b);

bool oracle_equal(const Presentation& p, const Diagram& d1, const Diagram& d2,
                  const OrbitBounds& b);

}  // namespace dg

#endif  // DG_ORACLE_HPP
