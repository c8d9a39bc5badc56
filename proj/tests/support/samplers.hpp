#ifndef DG_TESTS_SAMPLERS_HPP
#define DG_TESTS_SAMPLERS_HPP

#include <random>
#include <vector>

#include "dg/canonical.hpp"
#include "dg/diagram.hpp"
#include "dg/rewrite.hpp"

// Deterministic random-instance generators shared by the unit and acceptance
// suites. Everything is seeded explicitly; no global state.

namespace dgtest {

using Rng = std::mt19937_64;

inline std::vector<dg::Atom> applicable_atoms(const dg::Presentation& p,
                                              const dg::Word& w) {
  std::vector<dg::Atom> out;
  for (std::size_t off = 0; off <= w.size(); ++off) {
    for (std::size_t r = 0; r < p.relations().size(); ++r) {
      for (dg::Orient o : {dg::Orient::F, dg::Orient::B}) {
        dg::Atom a{static_cast<std::int32_t>(off),
                   static_cast<std::int32_t>(r), o};
        if (dg::applicable(p, w, a)) {
          out.push_back(a);
        }
      }
    }
  }
  return out;
}

// Random walk of up to `max_cells` applicable atoms from the given top word.
inline dg::Diagram random_diagram(const dg::Presentation& p, dg::Word top,
                                  int max_cells, Rng& rng) {
  dg::Diagram d{std::move(top), {}};
  dg::Word cur = d.top;
  for (int i = 0; i < max_cells; ++i) {
    auto atoms = applicable_atoms(p, cur);
    if (atoms.empty()) {
      break;
    }
    std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
    dg::Atom a = atoms[pick(rng)];
    d.atoms.push_back(a);
    cur = dg::apply_atom(p, cur, a);
  }
  return d;
}

// Spherical diagram over `base`: a random walk followed by an engine-found
// derivation back to the base word. Usually nontrivial after reduction
// because the return path differs from the walk.
inline dg::Diagram random_spherical(const dg::Presentation& p, dg::Word base,
                                    int walk, Rng& rng) {
  dg::Diagram d = random_diagram(p, base, walk, rng);
  dg::Word bot = dg::bottom(p, d);
  if (bot == d.top) {
    return d;
  }
  dg::Caps caps;
  caps.max_word_len = 32;
  dg::Verdict v = dg::equal_mod_p(p, bot, d.top, caps);
  if (v.kind == dg::VerdictKind::Equal) {
    for (const dg::Atom& a : v.derivation->steps) {
      d.atoms.push_back(a);
    }
    return d;
  }
  // Engine missed under caps: close up with the walk's own mirror.
  dg::Diagram back = dg::inverse(p, d);
  for (const dg::Atom& a : back.atoms) {
    d.atoms.push_back(a);
  }
  return d;
}

// Splices `count` cancelling cell pairs into random replay points; the
// equivalence class is unchanged.
inline dg::Diagram insert_mirror_pairs(const dg::Presentation& p,
                                       dg::Diagram d, int count, Rng& rng) {
  for (int n = 0; n < count; ++n) {
    std::uniform_int_distribution<std::size_t> where(0, d.atoms.size());
    std::size_t at = where(rng);
    dg::Word cur = d.top;
    for (std::size_t i = 0; i < at; ++i) {
      cur = dg::apply_atom(p, cur, d.atoms[i]);
    }
    auto atoms = applicable_atoms(p, cur);
    if (atoms.empty()) {
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
    dg::Atom a = atoms[pick(rng)];
    d.atoms.insert(d.atoms.begin() + static_cast<std::ptrdiff_t>(at),
                   {a, dg::Atom{a.offset, a.rel, dg::flip(a.orient)}});
  }
  return d;
}

// Random walk through the swap orbit.
inline dg::Diagram shuffle_orbit(const dg::Presentation& p, dg::Diagram d,
                                 int steps, Rng& rng) {
  for (int n = 0; n < steps && d.atoms.size() >= 2; ++n) {
    std::uniform_int_distribution<std::size_t> pick(0, d.atoms.size() - 2);
    std::size_t i = pick(rng);
    auto swapped = dg::swap_pair(p, d.atoms[i], d.atoms[i + 1]);
    if (swapped) {
      d.atoms[i] = swapped->first;
      d.atoms[i + 1] = swapped->second;
    }
  }
  return d;
}

inline dg::Presentation commutative_ab() {
  return dg::parse_presentation("letters: a b\nrule: a b = b a\n");
}

inline dg::Presentation free_ab() {
  return dg::parse_presentation("letters: a b\n");
}

}  // namespace dgtest

#endif  // DG_TESTS_SAMPLERS_HPP
