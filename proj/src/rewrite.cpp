#include "dg/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace dg {

Word replay(const Presentation& p, const Derivation& d) {
  Word w = d.start;
  for (const Atom& a : d.steps) {
    w = apply_atom(p, w, a);
  }
  return w;
}

Diagram derivation_to_diagram(const Presentation& p, const Derivation& d) {
  Diagram out{d.start, d.steps};
  if (!is_valid(p, out)) {
    throw InvalidDiagram("derivation contains an inapplicable step");
  }
  return out;
}

namespace {

// All single-relation rewrites of w (both orientations, every offset), in
// (offset, relation, F-before-B) order for determinism.
std::vector<std::pair<Atom, Word>> neighbors(const Presentation& p,
                                             const Word& w) {
  std::vector<std::pair<Atom, Word>> out;
  for (std::size_t off = 0; off <= w.size(); ++off) {
    for (std::size_t r = 0; r < p.relations().size(); ++r) {
      for (Orient o : {Orient::F, Orient::B}) {
        Atom a{static_cast<std::int32_t>(off), static_cast<std::int32_t>(r),
               o};
        if (applicable(p, w, a)) {
          out.emplace_back(a, apply_atom(p, w, a));
        }
      }
    }
  }
  return out;
}

struct SideState {
  // word -> (parent word, atom applied to parent to reach it)
  std::map<Word, std::pair<Word, Atom>> parent;
  std::deque<Word> frontier;
  bool truncated = false;  // some expansion was rejected by max_word_len

  explicit SideState(const Word& origin) {
    parent.emplace(origin, std::make_pair(Word{}, Atom{0, 0, Orient::F}));
    frontier.push_back(origin);
  }
};

// Chain of atoms transforming the side's origin into w.
std::vector<Atom> chain_from_origin(const SideState& side, const Word& origin,
                                    const Word& w) {
  std::vector<Atom> steps;
  Word cur = w;
  while (cur != origin) {
    const auto& [par, atom] = side.parent.at(cur);
    steps.push_back(atom);
    cur = par;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

Derivation join_paths(const Presentation& p, const SideState& from_u,
                      const Word& u, const SideState& from_v, const Word& v,
                      const Word& meet) {
  Derivation d;
  d.start = u;
  d.steps = chain_from_origin(from_u, u, meet);
  // The v-side chain runs v -> meet; replay it backwards with flipped atoms.
  std::vector<Atom> back = chain_from_origin(from_v, v, meet);
  for (auto it = back.rbegin(); it != back.rend(); ++it) {
    d.steps.push_back(Atom{it->offset, it->rel, flip(it->orient)});
  }
  // Sanity: the derivation must replay u into v.
  if (replay(p, d) != v) {
    throw InvalidDiagram("internal error: reconstructed derivation broken");
  }
  return d;
}

}  // namespace

Verdict equal_mod_p(const Presentation& p, const Word& u, const Word& v,
                    Caps caps) {
  Verdict verdict;
  verdict.caps = caps;
  if (u == v) {
    verdict.kind = VerdictKind::Equal;
    verdict.derivation = Derivation{u, {}};
    return verdict;
  }

  SideState from_u(u);
  SideState from_v(v);
  std::int64_t budget = caps.node_budget;

  while (!from_u.frontier.empty() || !from_v.frontier.empty()) {
    // Expand the smaller live frontier; ties go to the u side.
    bool expand_u;
    if (from_u.frontier.empty()) {
      expand_u = false;
    } else if (from_v.frontier.empty()) {
      expand_u = true;
    } else {
      expand_u = from_u.frontier.size() <= from_v.frontier.size();
    }
    SideState& self = expand_u ? from_u : from_v;
    SideState& other = expand_u ? from_v : from_u;

    const std::size_t layer = self.frontier.size();
    for (std::size_t i = 0; i < layer; ++i) {
      Word w = std::move(self.frontier.front());
      self.frontier.pop_front();
      for (auto& [atom, next] : neighbors(p, w)) {
        if (--budget < 0) {
          verdict.kind = VerdictKind::Unknown;
          return verdict;
        }
        if (static_cast<std::int32_t>(next.size()) > caps.max_word_len) {
          self.truncated = true;
          continue;
        }
        if (self.parent.contains(next)) {
          continue;
        }
        self.parent.emplace(next, std::make_pair(w, atom));
        if (other.parent.contains(next)) {
          verdict.kind = VerdictKind::Equal;
          verdict.derivation = join_paths(p, from_u, u, from_v, v, next);
          return verdict;
        }
        self.frontier.push_back(next);
      }
    }
  }

  verdict.kind = VerdictKind::NoWitnessUnderCap;
  // A side whose whole equivalence class was enumerated without truncation
  // proves the words distinct.
  verdict.decisive = !from_u.truncated || !from_v.truncated;
  return verdict;
}

namespace {

bool rewrite_once(const std::vector<Relation>& rules, Word& w) {
  for (std::size_t off = 0; off < w.size(); ++off) {
    for (const Relation& rule : rules) {
      if (matches_at(w, rule.lhs, off)) {
        w = splice(w, off, rule.lhs.size(), rule.rhs);
        return true;
      }
    }
  }
  return false;
}

Word nf_under(const std::vector<Relation>& rules, Word w) {
  while (rewrite_once(rules, w)) {
  }
  return w;
}

// Critical pairs of two oriented rules: proper overlaps (a suffix of l1 is a
// prefix of l2) and containments (l2 a factor of l1).
void critical_pairs_of(const Relation& r1, const Relation& r2,
                       std::vector<std::pair<Word, Word>>& out) {
  const Word& l1 = r1.lhs;
  const Word& l2 = r2.lhs;
  for (std::size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
    // suffix of l1 of length k == prefix of l2 of length k
    if (std::equal(l1.end() - static_cast<std::ptrdiff_t>(k), l1.end(),
                   l2.begin())) {
      Word left = r1.rhs;  // r1 applied to l1 · l2[k..]
      left.insert(left.end(), l2.begin() + static_cast<std::ptrdiff_t>(k),
                  l2.end());
      Word right(l1.begin(), l1.end() - static_cast<std::ptrdiff_t>(k));
      right.insert(right.end(), r2.rhs.begin(), r2.rhs.end());
      out.emplace_back(std::move(left), std::move(right));
    }
  }
  if (l2.size() <= l1.size()) {
    for (std::size_t i = 0; i + l2.size() <= l1.size(); ++i) {
      if (l1 == l2 && i == 0) {
        continue;  // the rule superposed on itself at the same spot
      }
      if (matches_at(l1, l2, i)) {
        Word inner(l1.begin(), l1.begin() + static_cast<std::ptrdiff_t>(i));
        inner.insert(inner.end(), r2.rhs.begin(), r2.rhs.end());
        inner.insert(inner.end(),
                     l1.begin() + static_cast<std::ptrdiff_t>(i + l2.size()),
                     l1.end());
        out.emplace_back(r1.rhs, std::move(inner));
      }
    }
  }
}

}  // namespace

std::optional<CompletedSystem> kb_complete(const Presentation& p,
                                           KbBudget budget) {
  std::deque<std::pair<Word, Word>> queue;
  for (const Relation& r : p.relations()) {
    queue.emplace_back(r.lhs, r.rhs);
  }
  std::vector<Relation> rules;
  std::int64_t processed = 0;

  while (!queue.empty()) {
    if (++processed > budget.max_pairs) {
      return std::nullopt;
    }
    auto [a, b] = queue.front();
    queue.pop_front();
    Word na = nf_under(rules, std::move(a));
    Word nb = nf_under(rules, std::move(b));
    if (na == nb) {
      continue;
    }
    Relation rule = shortlex_less(na, nb) ? Relation{nb, na}
                                          : Relation{na, nb};

    // Interreduction: rules whose lhs the new rule rewrites go back into the
    // queue; reducible rhs sides are just normalized in place.
    std::vector<Relation> kept;
    std::vector<Relation> probe{rule};
    for (Relation& old : rules) {
      Word reduced_lhs = nf_under(probe, old.lhs);
      if (reduced_lhs != old.lhs) {
        queue.emplace_back(old.lhs, old.rhs);
      } else {
        kept.push_back(std::move(old));
      }
    }
    rules = std::move(kept);
    rules.push_back(rule);
    if (static_cast<std::int32_t>(rules.size()) > budget.max_rules) {
      return std::nullopt;
    }
    for (Relation& r : rules) {
      r.rhs = nf_under(rules, std::move(r.rhs));
    }

    std::vector<std::pair<Word, Word>> pairs;
    for (const Relation& other : rules) {
      critical_pairs_of(rule, other, pairs);
      if (!(other == rule)) {
        critical_pairs_of(other, rule, pairs);
      }
    }
    for (auto& pr : pairs) {
      queue.push_back(std::move(pr));
    }
  }

  CompletedSystem cs;
  cs.rules = std::move(rules);
  cs.confluent = true;
  return cs;
}

Word rewrite_normal_form(const CompletedSystem& cs, Word w) {
  return nf_under(cs.rules, std::move(w));
}

std::vector<std::pair<Word, Word>> unresolved_critical_pairs(
    const CompletedSystem& cs) {
  std::vector<std::pair<Word, Word>> all;
  for (const Relation& r1 : cs.rules) {
    for (const Relation& r2 : cs.rules) {
      critical_pairs_of(r1, r2, all);
    }
  }
  std::vector<std::pair<Word, Word>> bad;
  for (auto& [a, b] : all) {
    if (nf_under(cs.rules, a) != nf_under(cs.rules, b)) {
      bad.emplace_back(a, b);
    }
  }
  return bad;
}

namespace {

// Words over the alphabet in shortlex order, lengths 1..max_len.
std::vector<Word> enumerate_words(const Presentation& p,
                                  std::int32_t max_len) {
  std::vector<Word> out;
  const SymbolId n = static_cast<SymbolId>(p.alphabet().size());
  std::vector<Word> layer;
  layer.push_back({});
  for (std::int32_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (SymbolId s = 0; s < n; ++s) {
        Word e = w;
        e.push_back(s);
        next.push_back(std::move(e));
      }
    }
    for (const Word& w : next) {
      out.push_back(w);
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace

IdempotentSearchResult idempotent_search(const Presentation& p,
                                         std::int32_t max_len, Caps caps) {
  IdempotentSearchResult result;
  auto completed = kb_complete(p);
  for (const Word& e : enumerate_words(p, max_len)) {
    Word ee = e;
    ee.insert(ee.end(), e.begin(), e.end());
    if (completed && completed->confluent) {
      if (rewrite_normal_form(*completed, ee) !=
          rewrite_normal_form(*completed, e)) {
        continue;  // decisively not idempotent
      }
    }
    Verdict v = equal_mod_p(p, ee, e, caps);
    if (v.kind == VerdictKind::Equal) {
      result.found.push_back({e, *v.derivation});
      continue;
    }
    if (completed && completed->confluent) {
      // The confluent filter said equal, yet the bounded search produced no
      // certificate: a known idempotent goes unreported.
      result.complete = false;
      continue;
    }
    if (!(v.kind == VerdictKind::NoWitnessUnderCap && v.decisive)) {
      result.complete = false;
    }
  }
  return result;
}

}  // namespace dg
