#include "dg/groupops.hpp"

#include <algorithm>

namespace dg {

bool is_spherical(const Presentation& p, const Diagram& d) {
  return is_valid(p, d) && bottom(p, d) == d.top;
}

Diagram conjugate(const Presentation& p, const Diagram& d, const Diagram& g) {
  if (g.top != d.top) {
    throw InvalidDiagram("conjugate: base mismatch (top(g) != top(d))");
  }
  return reduce(p, compose(p, compose(p, inverse(p, g), d), g));
}

Diagram power(const Presentation& p, const Diagram& d, int n) {
  if (n < 0) {
    return power(p, inverse(p, d), -n);
  }
  Diagram acc = make_trivial(d.top);
  for (int i = 0; i < n; ++i) {
    acc = reduce(p, compose(p, acc, d));
  }
  return acc;
}

Diagram commutator(const Presentation& p, const Diagram& d1,
                   const Diagram& d2) {
  if (d1.top != d2.top) {
    throw InvalidDiagram("commutator: base mismatch");
  }
  Diagram c = compose(p, inverse(p, d1), inverse(p, d2));
  c = compose(p, c, d1);
  c = compose(p, c, d2);
  return reduce(p, c);
}

std::optional<std::int32_t> sum_cut(const Presentation& p, const Diagram& d,
                                    std::int32_t s) {
  if (s < 0 || s > static_cast<std::int32_t>(d.top.size())) {
    return std::nullopt;
  }
  std::int32_t cut = s;
  for (const Atom& a : d.atoms) {
    const std::int32_t in_lo = a.offset;
    const std::int32_t in_hi =
        a.offset + static_cast<std::int32_t>(in_side(p, a).size());
    if (in_hi <= cut) {
      cut += width_delta(p, a);
    } else if (in_lo >= cut) {
      // right of the cut, nothing moves
    } else {
      return std::nullopt;
    }
  }
  return cut;
}

std::pair<Diagram, Diagram> split_at(const Presentation& p, const Diagram& d,
                                     std::int32_t s) {
  if (!sum_cut(p, d, s)) {
    throw InvalidDiagram("split_at: diagram does not split at offset " +
                         std::to_string(s));
  }
  Diagram left, right;
  left.top.assign(d.top.begin(), d.top.begin() + s);
  right.top.assign(d.top.begin() + s, d.top.end());
  std::int32_t cut = s;
  for (const Atom& a : d.atoms) {
    const std::int32_t in_hi =
        a.offset + static_cast<std::int32_t>(in_side(p, a).size());
    if (in_hi <= cut) {
      left.atoms.push_back(a);
      cut += width_delta(p, a);
    } else {
      right.atoms.push_back(Atom{a.offset - cut, a.rel, a.orient});
    }
  }
  return {std::move(left), std::move(right)};
}

ComponentDecomposition decompose_components(const Presentation& p,
                                            const Diagram& d) {
  if (!is_spherical(p, d)) {
    throw InvalidDiagram("decompose_components: diagram not spherical");
  }
  const std::int32_t n = static_cast<std::int32_t>(d.top.size());

  // Interior cuts preserved by the whole replay, landing where they started
  // (so the parts are spherical).
  std::vector<std::int32_t> cuts;
  for (std::int32_t s = 1; s < n; ++s) {
    auto end = sum_cut(p, d, s);
    if (end && *end == s) {
      cuts.push_back(s);
    }
  }

  std::vector<Diagram> parts;
  Diagram rest = d;
  std::int32_t consumed = 0;
  for (std::int32_t s : cuts) {
    auto [l, r] = split_at(p, rest, s - consumed);
    parts.push_back(std::move(l));
    rest = std::move(r);
    consumed = s;
  }
  parts.push_back(std::move(rest));

  // Merge runs of adjacent trivial parts into one trivial part.
  std::vector<Diagram> merged;
  std::vector<std::int32_t> kept_cuts;
  std::int32_t pos = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::int32_t width = static_cast<std::int32_t>(parts[i].top.size());
    if (!merged.empty() && merged.back().atoms.empty() &&
        parts[i].atoms.empty()) {
      merged.back().top.insert(merged.back().top.end(), parts[i].top.begin(),
                               parts[i].top.end());
      if (!kept_cuts.empty()) {
        kept_cuts.pop_back();
      }
    } else {
      merged.push_back(std::move(parts[i]));
    }
    pos += width;
    if (i + 1 < parts.size()) {
      kept_cuts.push_back(pos);
    }
  }

  ComponentDecomposition out;
  out.parts = std::move(merged);
  for (const Diagram& part : out.parts) {
    out.bases.push_back(part.top);
  }
  // In realize() numbering the top-path vertex at offset s has id s.
  out.split_vertices = std::move(kept_cuts);
  return out;
}

namespace {

Diagram one_cell(const Word& top, const Atom& a) {
  return Diagram{top, {a}};
}

// Front/back mirror peel: d == [a] · middle · [flip a], so one conjugating
// cell moves into Psi and the core shrinks by two cells.
bool try_peel(const Presentation& p, Diagram& d, Diagram& psi) {
  const std::size_t n = d.atoms.size();
  if (n < 2) {
    return false;
  }
  for (std::size_t jf = 0; jf < n; ++jf) {
    std::vector<Atom> fronted = d.atoms;
    if (!bubble_to_front(p, fronted, jf)) {
      continue;
    }
    const Atom a = fronted[0];
    for (std::size_t kb = 1; kb < n; ++kb) {
      std::vector<Atom> arranged = fronted;
      if (!bubble_to_back(p, arranged, kb)) {
        continue;
      }
      if (!mirror_pair(a, arranged.back())) {
        continue;
      }
      Diagram step = one_cell(d.top, a);
      Word new_base = bottom(p, step);
      psi = compose(p, psi, step);
      d.top = std::move(new_base);
      d.atoms.assign(arranged.begin() + 1, arranged.end() - 1);
      return true;
    }
  }
  return false;
}

// Cancels one internal dipole of d in place.
bool try_cancel(const Presentation& p, Diagram& d) {
  auto dipoles = find_dipoles(p, d);
  if (dipoles.empty()) {
    return false;
  }
  auto [i, j] = dipoles.front();
  std::vector<Atom> work = d.atoms;
  for (std::size_t t = j; t > i + 1; --t) {
    auto swapped = swap_pair(p, work[t - 1], work[t]);
    work[t - 1] = swapped->first;
    work[t] = swapped->second;
  }
  work.erase(work.begin() + static_cast<std::ptrdiff_t>(i),
             work.begin() + static_cast<std::ptrdiff_t>(i) + 2);
  d.atoms = std::move(work);
  return true;
}

// Rotates a front-bubblable atom to the back (conjugation by its one-cell
// diagram) when doing so creates an internal dipole; the next pass cancels
// it. This rescues seam dipoles of d·d that the direct peel cannot reach.
bool try_seam_shift(const Presentation& p, Diagram& d, Diagram& psi) {
  const std::size_t n = d.atoms.size();
  for (std::size_t jf = 0; jf < n; ++jf) {
    std::vector<Atom> fronted = d.atoms;
    if (!bubble_to_front(p, fronted, jf)) {
      continue;
    }
    const Atom a = fronted[0];
    Diagram step = one_cell(d.top, a);
    Diagram rotated;
    rotated.top = bottom(p, step);
    rotated.atoms.assign(fronted.begin() + 1, fronted.end());
    rotated.atoms.push_back(a);
    if (find_dipoles(p, rotated).empty()) {
      continue;
    }
    psi = compose(p, psi, step);
    d = std::move(rotated);
    return true;
  }
  return false;
}

}  // namespace

CyclicReduction absolutely_reduce(const Presentation& p, const Diagram& d0) {
  if (!is_spherical(p, d0)) {
    throw InvalidDiagram("absolutely_reduce: diagram not spherical");
  }
  Diagram psi = make_trivial(d0.top);
  Diagram d = normal_form(p, d0);

  for (;;) {
    const std::size_t n = d.atoms.size();
    Diagram square = compose(p, d, d);
    if (cells(reduce(p, square)) == 2 * n) {
      break;
    }
    if (try_peel(p, d, psi)) {
      continue;
    }
    if (try_cancel(p, d)) {
      continue;
    }
    if (try_seam_shift(p, d, psi)) {
      continue;
    }
    throw StuckCyclicReduction(
        "cyclic reduction stuck on " + atoms_string(d) +
        " (unreduced square, no peelable or cancellable pair)");
  }
  return CyclicReduction{normal_form(p, psi), normal_form(p, d)};
}

std::int32_t comp(const Presentation& p, const Diagram& d) {
  CyclicReduction cr = absolutely_reduce(p, d);
  ComponentDecomposition dec = decompose_components(p, cr.core);
  std::int32_t nontrivial = 0;
  for (const Diagram& part : dec.parts) {
    if (!part.atoms.empty()) {
      ++nontrivial;
    }
  }
  return nontrivial;
}

std::optional<Word> mu(const PlanarGraph& g, std::int32_t o1,
                       std::int32_t o2) {
  return path_label(g, o1, o2);
}

Lemma1Report check_lemma1(const Presentation& p, const Diagram& d,
                          std::int32_t split_offset, Caps caps) {
  Lemma1Report report;
  if (!is_spherical(p, d)) {
    throw InvalidDiagram("check_lemma1: diagram not spherical");
  }
  if (split_offset <= 0 ||
      split_offset >= static_cast<std::int32_t>(d.top.size())) {
    throw InvalidDiagram("check_lemma1: split offset not interior");
  }

  Diagram r = reduce(p, d);
  auto cut = sum_cut(p, r, split_offset);
  if (cut && *cut == split_offset) {
    auto [a, b] = split_at(p, r, split_offset);
    report.is_sum = equal_diagrams(p, d, sum(p, a, b));
  }
  if (!report.is_sum) {
    return report;  // NotASum
  }

  PlanarGraph g = realize(p, d);
  report.top_split_vertex = g.top_vertices[static_cast<std::size_t>(split_offset)];
  report.bottom_split_vertex =
      g.bottom_vertices[static_cast<std::size_t>(split_offset)];

  bool ok = true;
  for (std::int32_t v = 0; v < g.num_vertices; ++v) {
    auto l1 = path_label(g, v, report.top_split_vertex);
    auto l2 = path_label(g, v, report.bottom_split_vertex);
    if (!l1 || !l2) {
      continue;
    }
    Verdict verdict = equal_mod_p(p, *l1, *l2, caps);
    bool decisive =
        verdict.kind == VerdictKind::NoWitnessUnderCap && verdict.decisive;
    report.checks.push_back({v, *l1, *l2, verdict.kind, decisive});
    if (decisive) {
      ok = false;
    }
  }
  report.pass = ok;
  return report;
}

}  // namespace dg
