#include "dg/canonical.hpp"

namespace dg {

bool independent(const Presentation& p, const Atom& a, const Atom& b) {
  const std::int32_t a_lo = a.offset;
  const std::int32_t a_hi = a.offset + static_cast<std::int32_t>(out_side(p, a).size());
  const std::int32_t b_lo = b.offset;
  const std::int32_t b_hi = b.offset + static_cast<std::int32_t>(in_side(p, b).size());
  return b_hi <= a_lo || a_hi <= b_lo;
}

std::optional<std::pair<Atom, Atom>> swap_pair(const Presentation& p, Atom a,
                                               Atom b) {
  const std::int32_t a_hi =
      a.offset + static_cast<std::int32_t>(out_side(p, a).size());
  const std::int32_t b_hi =
      b.offset + static_cast<std::int32_t>(in_side(p, b).size());
  if (b_hi <= a.offset) {
    // b lies left of a.
    a.offset += width_delta(p, b);
    return std::make_pair(b, a);
  }
  if (b.offset >= a_hi) {
    // b lies right of a.
    b.offset -= width_delta(p, a);
    return std::make_pair(b, a);
  }
  return std::nullopt;
}

std::optional<Diagram> swap_adjacent(const Presentation& p, const Diagram& d,
                                     std::size_t i) {
  if (i + 1 >= d.atoms.size()) {
    throw InvalidDiagram("swap_adjacent: index out of range");
  }
  auto swapped = swap_pair(p, d.atoms[i], d.atoms[i + 1]);
  if (!swapped) {
    return std::nullopt;
  }
  Diagram out = d;
  out.atoms[i] = swapped->first;
  out.atoms[i + 1] = swapped->second;
  return out;
}

bool bubble_to_front(const Presentation& p, std::vector<Atom>& atoms,
                     std::size_t k) {
  std::vector<Atom> work = atoms;
  for (std::size_t i = k; i > 0; --i) {
    auto swapped = swap_pair(p, work[i - 1], work[i]);
    if (!swapped) {
      return false;
    }
    work[i - 1] = swapped->first;
    work[i] = swapped->second;
  }
  atoms = std::move(work);
  return true;
}

bool bubble_to_back(const Presentation& p, std::vector<Atom>& atoms,
                    std::size_t k) {
  std::vector<Atom> work = atoms;
  for (std::size_t i = k; i + 1 < work.size(); ++i) {
    auto swapped = swap_pair(p, work[i], work[i + 1]);
    if (!swapped) {
      return false;
    }
    work[i] = swapped->first;
    work[i + 1] = swapped->second;
  }
  atoms = std::move(work);
  return true;
}

Diagram normal_form(const Presentation& p, const Diagram& d) {
  if (!is_valid(p, d)) {
    throw InvalidDiagram("normal_form: diagram does not replay");
  }
  std::vector<Atom> rest = d.atoms;
  std::vector<Atom> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    bool have_best = false;
    std::vector<Atom> best;
    for (std::size_t k = 0; k < rest.size(); ++k) {
      std::vector<Atom> candidate = rest;
      if (!bubble_to_front(p, candidate, k)) {
        continue;
      }
      if (!have_best || candidate[0] < best[0]) {
        best = std::move(candidate);
        have_best = true;
      }
    }
    // k = 0 always bubbles, so a best candidate exists.
    out.push_back(best[0]);
    rest.assign(best.begin() + 1, best.end());
  }
  return Diagram{d.top, std::move(out)};
}

namespace {

// Tries to bring atom j back to position i+1; on success stores the bubbled
// list and reports whether (list[i], list[i+1]) is then a mirror pair.
bool dipole_at(const Presentation& p, const std::vector<Atom>& atoms,
               std::size_t i, std::size_t j, std::vector<Atom>* bubbled) {
  std::vector<Atom> work = atoms;
  for (std::size_t t = j; t > i + 1; --t) {
    auto swapped = swap_pair(p, work[t - 1], work[t]);
    if (!swapped) {
      return false;
    }
    work[t - 1] = swapped->first;
    work[t] = swapped->second;
  }
  if (!mirror_pair(work[i], work[i + 1])) {
    return false;
  }
  if (bubbled) {
    *bubbled = std::move(work);
  }
  return true;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> find_dipoles(
    const Presentation& p, const Diagram& d) {
  if (!is_valid(p, d)) {
    throw InvalidDiagram("find_dipoles: diagram does not replay");
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < d.atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < d.atoms.size(); ++j) {
      if (dipole_at(p, d.atoms, i, j, nullptr)) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

bool is_reduced(const Presentation& p, const Diagram& d) {
  for (std::size_t i = 0; i < d.atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < d.atoms.size(); ++j) {
      if (dipole_at(p, d.atoms, i, j, nullptr)) {
        return false;
      }
    }
  }
  return true;
}

Diagram reduce(const Presentation& p, const Diagram& d) {
  Diagram cur = normal_form(p, d);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; !changed && i < cur.atoms.size(); ++i) {
      for (std::size_t j = i + 1; !changed && j < cur.atoms.size(); ++j) {
        std::vector<Atom> bubbled;
        if (dipole_at(p, cur.atoms, i, j, &bubbled)) {
          bubbled.erase(bubbled.begin() + static_cast<std::ptrdiff_t>(i),
                        bubbled.begin() + static_cast<std::ptrdiff_t>(i) + 2);
          cur.atoms = std::move(bubbled);
          changed = true;
        }
      }
    }
  }
  return normal_form(p, cur);
}

bool equal_diagrams(const Presentation& p, const Diagram& d1,
                    const Diagram& d2, bool strict_isotopy) {
  if (d1.top != d2.top) {
    return false;
  }
  if (strict_isotopy) {
    return normal_form(p, d1) == normal_form(p, d2);
  }
  return reduce(p, d1) == reduce(p, d2);
}

}  // namespace dg
