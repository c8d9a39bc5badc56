#ifndef DG_REWRITE_HPP
#define DG_REWRITE_HPP

#include <optional>
#include <vector>

#include "dg/diagram.hpp"
#include "dg/presentation.hpp"

namespace dg {

struct Caps {
  std::int32_t max_word_len = 24;
  std::int64_t node_budget = 2'000'000;
};

// A replayable rewriting trace: each step applies one relation at an offset.
struct Derivation {
  Word start;
  std::vector<Atom> steps;
  friend bool operator==(const Derivation&, const Derivation&) = default;
};

Word replay(const Presentation& p, const Derivation& d);

// A derivation is exactly a diagram built cell by cell.
Diagram derivation_to_diagram(const Presentation& p, const Derivation& d);

enum class VerdictKind { Equal, NoWitnessUnderCap, Unknown };

// Tri-state word-problem answer. Equal always carries a derivation that
// replays u into v. NoWitnessUnderCap means the search space was exhausted
// under the caps; it asserts true inequality only when `decisive` is set
// (full equivalence class enumerated without cap truncation, or normal
// forms differ under a confluent completed system).
struct Verdict {
  VerdictKind kind;
  std::optional<Derivation> derivation;
  bool decisive = false;
  Caps caps;
};

Verdict equal_mod_p(const Presentation& p, const Word& u, const Word& v,
                    Caps caps = {});

// Shortlex-oriented rewriting rules; when `confluent`, normal-form equality
// decides the word problem.
struct CompletedSystem {
  std::vector<Relation> rules;  // lhs > rhs in shortlex
  bool confluent = false;
};

struct KbBudget {
  std::int32_t max_rules = 512;
  std::int64_t max_pairs = 200'000;
};

// Knuth-Bendix completion under the shortlex order induced by the alphabet
// order; critical pairs are processed FIFO. Returns nullopt on timeout.
std::optional<CompletedSystem> kb_complete(const Presentation& p,
                                           KbBudget budget = {});

Word rewrite_normal_form(const CompletedSystem& cs, Word w);

// All unresolved critical pairs of the rule set (empty iff confluent);
// exposed so tests can re-check confluence independently of the completion
// loop's own bookkeeping.
std::vector<std::pair<Word, Word>> unresolved_critical_pairs(
    const CompletedSystem& cs);

struct IdempotentHit {
  Word e;
  Derivation cert;  // replays e·e into e
};

struct IdempotentSearchResult {
  std::vector<IdempotentHit> found;  // shortlex order, shortest first
  bool complete = true;  // false when some candidate was undecided under caps
};

// Enumerates words up to max_len in shortlex order and keeps those provably
// idempotent. One completion is computed up front and reused as a decisive
// filter; certificates always come from the search engine.
IdempotentSearchResult idempotent_search(const Presentation& p,
                                         std::int32_t max_len, Caps caps = {});

}  // namespace dg

#endif  // DG_REWRITE_HPP
