#include <map>
#include <random>

#include "doctest.h"
#include "dg/canonical.hpp"
#include "dg/rewrite.hpp"
#include "support/samplers.hpp"

using namespace dg;

namespace {

Presentation dunce() {
  return parse_presentation("letters: x\nrule: x x = x\n");
}

Presentation q_pres() {
  return parse_presentation(
      "letters: x a b\nrule: x x = x\nrule: a x = a\nrule: x b = b\n");
}

}  // namespace

TEST_CASE("equal_mod_p on the dunce hat: all powers of x coincide") {
  Presentation p = dunce();
  Verdict v = equal_mod_p(p, {0}, {0, 0, 0});
  REQUIRE(v.kind == VerdictKind::Equal);
  CHECK(replay(p, *v.derivation) == Word{0, 0, 0});
  CHECK(v.derivation->start == Word{0});
}

TEST_CASE("equal_mod_p in a free semigroup is decisively negative") {
  Presentation p = dgtest::free_ab();
  Verdict v = equal_mod_p(p, {0}, {1});
  CHECK(v.kind == VerdictKind::NoWitnessUnderCap);
  CHECK(v.decisive);
}

TEST_CASE("equal_mod_p over Q decides xx = xxx") {
  Presentation q = q_pres();
  Verdict v = equal_mod_p(q, {0, 0}, {0, 0, 0});
  REQUIRE(v.kind == VerdictKind::Equal);
  CHECK(replay(q, *v.derivation) == Word{0, 0, 0});
}

TEST_CASE("empty words") {
  Presentation p = dunce();
  Verdict same = equal_mod_p(p, {}, {});
  CHECK(same.kind == VerdictKind::Equal);
  CHECK(same.derivation->steps.empty());
  Verdict diff = equal_mod_p(p, {}, {0});
  CHECK(diff.kind == VerdictKind::NoWitnessUnderCap);
  CHECK(diff.decisive);  // the empty word's class is just itself
}

TEST_CASE("derivation_to_diagram") {
  Presentation p = dunce();
  SUBCASE("empty derivation gives the trivial diagram") {
    Diagram d = derivation_to_diagram(p, Derivation{{0}, {}});
    CHECK(d == make_trivial(Word{0}));
  }
  SUBCASE("single step gives a one-cell diagram") {
    Diagram d =
        derivation_to_diagram(p, Derivation{{0, 0}, {{0, 0, Orient::F}}});
    CHECK(cells(d) == 1);
    CHECK(bottom(p, d) == Word{0});
  }
  SUBCASE("equality certificates yield valid diagrams") {
    Verdict v = equal_mod_p(p, {0}, {0, 0, 0});
    Diagram d = derivation_to_diagram(p, *v.derivation);
    CHECK(d.top == Word{0});
    CHECK(bottom(p, d) == Word{0, 0, 0});
    CHECK(is_reduced(p, reduce(p, d)));
  }
  SUBCASE("inapplicable step throws") {
    CHECK_THROWS_AS(
        derivation_to_diagram(p, Derivation{{0}, {{0, 0, Orient::F}}}),
        InvalidDiagram);
  }
}

TEST_CASE("kb_complete on the dunce hat") {
  auto cs = kb_complete(dunce());
  REQUIRE(cs.has_value());
  CHECK(cs->confluent);
  REQUIRE(cs->rules.size() == 1);
  CHECK(cs->rules[0] == Relation{{0, 0}, {0}});
  CHECK(unresolved_critical_pairs(*cs).empty());
}

TEST_CASE("kb_complete on a free presentation") {
  auto cs = kb_complete(dgtest::free_ab());
  REQUIRE(cs.has_value());
  CHECK(cs->confluent);
  CHECK(cs->rules.empty());
}

TEST_CASE("kb_complete on Q keeps the three oriented rules") {
  Presentation q = q_pres();
  auto cs = kb_complete(q);
  REQUIRE(cs.has_value());
  CHECK(cs->confluent);
  auto has_rule = [&](const Relation& r) {
    for (const Relation& rule : cs->rules) {
      if (rule == r) {
        return true;
      }
    }
    return false;
  };
  CHECK(has_rule(Relation{{0, 0}, {0}}));
  CHECK(has_rule(Relation{{1, 0}, {1}}));
  CHECK(has_rule(Relation{{0, 2}, {2}}));
  CHECK(unresolved_critical_pairs(*cs).empty());
}

TEST_CASE("idempotent_search examples") {
  SUBCASE("dunce hat finds x first") {
    auto r = idempotent_search(dunce(), 2);
    REQUIRE(!r.found.empty());
    CHECK(r.found[0].e == Word{0});
    CHECK(replay(dunce(), r.found[0].cert) == Word{0});
  }
  SUBCASE("free semigroup has none, completely") {
    auto r = idempotent_search(dgtest::free_ab(), 4);
    CHECK(r.found.empty());
    CHECK(r.complete);
  }
  SUBCASE("Q contains x at length 1") {
    auto r = idempotent_search(q_pres(), 1);
    REQUIRE(r.found.size() == 1);
    CHECK(r.found[0].e == Word{0});
  }
}

TEST_CASE("soundness: every Equal verdict replays") {
  dgtest::Rng rng(11);
  for (const Presentation& p : {dunce(), q_pres()}) {
    for (int trial = 0; trial < 50; ++trial) {
      Word base = {0};
      if (p.alphabet().size() > 1) {
        base = {1, 0, 2};  // a x b
      }
      Diagram walk = dgtest::random_diagram(p, base, 4, rng);
      Word u = walk.top;
      Word v = bottom(p, walk);
      Verdict verdict = equal_mod_p(p, u, v);
      REQUIRE(verdict.kind == VerdictKind::Equal);
      CHECK(verdict.derivation->start == u);
      CHECK(replay(p, *verdict.derivation) == v);
    }
  }
}

TEST_CASE("symmetry of verdicts") {
  dgtest::Rng rng(12);
  Presentation q = q_pres();
  for (int trial = 0; trial < 30; ++trial) {
    Diagram walk = dgtest::random_diagram(q, {1, 0, 2}, 3, rng);
    Word u = walk.top;
    Word v = bottom(q, walk);
    CHECK(equal_mod_p(q, u, v).kind == VerdictKind::Equal);
    CHECK(equal_mod_p(q, v, u).kind == VerdictKind::Equal);
  }
  CHECK(equal_mod_p(q, {1}, {2}).kind ==
        equal_mod_p(q, {2}, {1}).kind);
}

TEST_CASE("congruence: Equal(u,v) implies Equal(aub, avb)") {
  dgtest::Rng rng(13);
  Presentation p = dunce();
  for (int trial = 0; trial < 20; ++trial) {
    Diagram walk = dgtest::random_diagram(p, {0, 0}, 3, rng);
    Word u = walk.top;
    Word v = bottom(p, walk);
    Word au = {0};
    Word av = {0};
    au.insert(au.end(), u.begin(), u.end());
    av.insert(av.end(), v.begin(), v.end());
    au.push_back(0);
    av.push_back(0);
    CHECK(equal_mod_p(p, au, av).kind == VerdictKind::Equal);
  }
}

TEST_CASE("completion agrees with search on all short words") {
  // A tight word-length cap keeps the enumerated classes small; it cannot
  // hide an equality at these lengths because the oriented rules never
  // lengthen a word on the way to its normal form.
  Caps caps;
  caps.max_word_len = 8;
  for (const Presentation& p : {dunce(), q_pres()}) {
    auto cs = kb_complete(p);
    REQUIRE(cs.has_value());
    REQUIRE(cs->confluent);

    std::vector<Word> words;
    std::vector<Word> layer{{}};
    for (int len = 1; len <= 5; ++len) {
      std::vector<Word> next;
      for (const Word& w : layer) {
        for (SymbolId s = 0; s < static_cast<SymbolId>(p.alphabet().size());
             ++s) {
          Word e = w;
          e.push_back(s);
          next.push_back(e);
          words.push_back(std::move(e));
        }
      }
      layer = std::move(next);
    }

    // Group words by completed-system normal form, then check the engine
    // agrees: same class iff Equal.
    std::map<Word, std::vector<Word>> classes;
    for (const Word& w : words) {
      classes[rewrite_normal_form(*cs, w)].push_back(w);
    }
    for (const auto& [nf, members] : classes) {
      for (const Word& w : members) {
        Verdict v = equal_mod_p(p, w, nf, caps);
        CHECK(v.kind == VerdictKind::Equal);
      }
    }
    // Distinct normal forms must never compare Equal (sampled pairs).
    std::vector<Word> nfs;
    for (const auto& [nf, members] : classes) {
      nfs.push_back(nf);
    }
    for (std::size_t i = 0; i < nfs.size(); ++i) {
      for (std::size_t j = i + 1; j < nfs.size() && j < i + 4; ++j) {
        CHECK(equal_mod_p(p, nfs[i], nfs[j], caps).kind != VerdictKind::Equal);
      }
    }
  }
}
