#include "dg/oracle.hpp"

#include <deque>
#include <map>

#include "dg/canonical.hpp"

namespace dg {

namespace {

void check_input(const Presentation& p, const Diagram& d,
                 const OrbitBounds& b) {
  if (static_cast<std::int32_t>(cells(d)) > b.max_cells) {
    throw ExceededBounds("oracle: diagram exceeds max_cells");
  }
  Word w = d.top;
  if (static_cast<std::int32_t>(w.size()) > b.max_word_len) {
    throw ExceededBounds("oracle: word exceeds max_word_len");
  }
  for (const Atom& a : d.atoms) {
    w = apply_atom(p, w, a);
    if (static_cast<std::int32_t>(w.size()) > b.max_word_len) {
      throw ExceededBounds("oracle: word exceeds max_word_len");
    }
  }
}

std::set<std::vector<Atom>> orbit_of(const Presentation& p,
                                     const std::vector<Atom>& start,
                                     const OrbitBounds& b) {
  std::set<std::vector<Atom>> seen;
  std::deque<std::vector<Atom>> queue;
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    std::vector<Atom> cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      auto swapped = swap_pair(p, cur[i], cur[i + 1]);
      if (!swapped) {
        continue;
      }
      std::vector<Atom> next = cur;
      next[i] = swapped->first;
      next[i + 1] = swapped->second;
      if (seen.insert(next).second) {
        if (static_cast<std::int64_t>(seen.size()) > b.max_orbit) {
          throw ExceededBounds("oracle: swap orbit exceeds max_orbit");
        }
        queue.push_back(std::move(next));
      }
    }
  }
  return seen;
}

void collect_reductions(const Presentation& p, const std::vector<Atom>& seq,
                        const OrbitBounds& b,
                        std::map<std::vector<Atom>, std::set<std::vector<Atom>>>& memo,
                        std::set<std::vector<Atom>>& out) {
  std::set<std::vector<Atom>> orbit = orbit_of(p, seq, b);
  const std::vector<Atom>& key = *orbit.begin();
  auto hit = memo.find(key);
  if (hit != memo.end()) {
    out.insert(hit->second.begin(), hit->second.end());
    return;
  }
  std::set<std::vector<Atom>> local;
  bool cancelled = false;
  for (const std::vector<Atom>& member : orbit) {
    for (std::size_t i = 0; i + 1 < member.size(); ++i) {
      if (mirror_pair(member[i], member[i + 1])) {
        cancelled = true;
        std::vector<Atom> next = member;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i),
                   next.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        collect_reductions(p, next, b, memo, local);
      }
    }
  }
  if (!cancelled) {
    local.insert(key);
  }
  memo.emplace(key, local);
  out.insert(local.begin(), local.end());
}

}  // namespace

std::set<std::vector<Atom>> swap_orbit(const Presentation& p,
                                       const Diagram& d,
                                       const OrbitBounds& b) {
  if (!is_valid(p, d)) {
    throw InvalidDiagram("swap_orbit: diagram does not replay");
  }
  check_input(p, d, b);
  return orbit_of(p, d.atoms, b);
}

std::set<std::vector<Atom>> all_reductions(const Presentation& p,
                                           const Diagram& d,
                                           const OrbitBounds& b) {
  if (!is_valid(p, d)) {
    throw InvalidDiagram("all_reductions: diagram does not replay");
  }
  check_input(p, d, b);
  std::map<std::vector<Atom>, std::set<std::vector<Atom>>> memo;
  std::set<std::vector<Atom>> out;
  collect_reductions(p, d.atoms, b, memo, out);
  return out;
}

std::vector<Atom> orbit_min(const Presentation& p, const Diagram& d,
                            const OrbitBounds& b) {
  return *swap_orbit(p, d, b).begin();
}

bool oracle_equal(const Presentation& p, const Diagram& d1, const Diagram& d2,
                  const OrbitBounds& b) {
  if (d1.top != d2.top) {
    return false;
  }
  return all_reductions(p, d1, b) == all_reductions(p, d2, b);
}

}  // namespace dg
