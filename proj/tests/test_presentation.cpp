#include <random>

#include "doctest.h"
#include "dg/presentation.hpp"
#include "dg/rewrite.hpp"

using namespace dg;

namespace {

Presentation dunce() {
  return parse_presentation("letters: x\nrule: x x = x\n");
}

}  // namespace

TEST_CASE("parse dunce hat") {
  Presentation p = dunce();
  REQUIRE(p.alphabet().size() == 1);
  REQUIRE(p.relations().size() == 1);
  CHECK(p.relations()[0].lhs == Word{0, 0});
  CHECK(p.relations()[0].rhs == Word{0});
  CHECK(validate(p).empty());
}

TEST_CASE("parse free presentation and comments") {
  Presentation p = parse_presentation("# free semigroup\nletters: a b\n");
  CHECK(p.alphabet().size() == 2);
  CHECK(p.relations().empty());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_presentation("letters: x\nrule: = x\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("letters: x\nrule: x y = x\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_presentation("letters: x x\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("rule: x = x\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("letters: x\nletters: y\n"), ParseError);
}

TEST_CASE("word parsing") {
  Presentation p = dunce();
  CHECK(p.parse_word("%").empty());
  CHECK(p.parse_word("x x") == Word{0, 0});
  // Single-character run fallback.
  CHECK(p.parse_word("xxx") == Word{0, 0, 0});
  CHECK_THROWS_AS(p.parse_word("y"), ParseError);
  CHECK(p.display_word({}) == "%");
  CHECK(p.word_string({0, 0}) == "x x");
}

TEST_CASE("validate reports programmatic violations") {
  Presentation bad({"x", "x"}, {Relation{{0, 5}, {}}});
  auto violations = validate(bad);
  bool dup = false, unknown = false, empty = false;
  for (const auto& v : violations) {
    dup |= v.kind == ViolationKind::DuplicateSymbol;
    unknown |= v.kind == ViolationKind::UnknownSymbol;
    empty |= v.kind == ViolationKind::EmptySide;
  }
  CHECK(dup);
  CHECK(unknown);
  CHECK(empty);
}

TEST_CASE("q_transform of the dunce hat") {
  Presentation q = q_transform(dunce());
  CHECK(q.alphabet() == std::vector<std::string>{"x", "a", "b"});
  REQUIRE(q.relations().size() == 3);
  CHECK(q.relations()[0] == Relation{{0, 0}, {0}});  // x x = x
  CHECK(q.relations()[1] == Relation{{1, 0}, {1}});  // a x = a
  CHECK(q.relations()[2] == Relation{{0, 2}, {2}});  // x b = b
}

TEST_CASE("q_transform of a one-letter free presentation") {
  Presentation q = q_transform(parse_presentation("letters: c\n"));
  CHECK(q.alphabet() == std::vector<std::string>{"c", "a", "b"});
  REQUIRE(q.relations().size() == 2);
  CHECK(q.relations()[0] == Relation{{1, 0}, {1}});  // a c = a
  CHECK(q.relations()[1] == Relation{{0, 2}, {2}});  // c b = b
}

TEST_CASE("q_transform adds 2|alphabet| relations, two symbols, in order") {
  Presentation p = parse_presentation("letters: x y\nrule: x y = y\n");
  Presentation q = q_transform(p);
  CHECK(q.alphabet().size() == 4);
  REQUIRE(q.relations().size() == 5);
  CHECK(q.word_string(q.relations()[1].lhs) == "a x");
  CHECK(q.word_string(q.relations()[2].lhs) == "a y");
  CHECK(q.word_string(q.relations()[3].lhs) == "x b");
  CHECK(q.word_string(q.relations()[4].lhs) == "y b");
}

TEST_CASE("q_transform auto-suffixes taken names") {
  Presentation p = parse_presentation("letters: a\n");
  Presentation q = q_transform(p);
  CHECK(q.alphabet() == std::vector<std::string>{"a", "a1", "b1"});
}

TEST_CASE("serialization round-trip is the identity") {
  std::mt19937_64 rng(7);
  const std::vector<std::string> pool{"x", "y", "zz", "s1"};
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<std::size_t> nsym(1, pool.size());
    std::vector<std::string> alphabet(pool.begin(),
                                      pool.begin() + static_cast<std::ptrdiff_t>(nsym(rng)));
    std::uniform_int_distribution<int> nrel(0, 3);
    std::uniform_int_distribution<std::size_t> len(1, 3);
    std::uniform_int_distribution<std::size_t> sym(0, alphabet.size() - 1);
    std::vector<Relation> rels;
    for (int r = nrel(rng); r > 0; --r) {
      Word lhs, rhs;
      for (std::size_t i = len(rng); i > 0; --i) {
        lhs.push_back(static_cast<SymbolId>(sym(rng)));
      }
      for (std::size_t i = len(rng); i > 0; --i) {
        rhs.push_back(static_cast<SymbolId>(sym(rng)));
      }
      rels.push_back({lhs, rhs});
    }
    Presentation p(alphabet, rels);
    Presentation q = parse_presentation(serialize(p));
    CHECK(q.alphabet() == p.alphabet());
    CHECK(q.relations() == p.relations());
    CHECK(serialize(q) == serialize(p));
  }
}

TEST_CASE("idempotents of a Q-presentation are words over the original "
          "alphabet") {
  Presentation q = q_transform(dunce());
  auto result = idempotent_search(q, 3);
  CHECK(!result.found.empty());
  for (const auto& hit : result.found) {
    for (SymbolId s : hit.e) {
      CHECK(q.symbol_name(s) == "x");
    }
  }

  Presentation q_free = q_transform(parse_presentation("letters: c\n"));
  auto none = idempotent_search(q_free, 3);
  CHECK(none.found.empty());
}
