#include <random>

#include "doctest.h"
#include "dg/canonical.hpp"
#include "dg/oracle.hpp"
#include "support/samplers.hpp"

using namespace dg;

namespace {

Presentation dunce() {
  return parse_presentation("letters: x\nrule: x x = x\n");
}

Diagram x0_diagram() {
  return Diagram{{0},
                 {{0, 0, Orient::B}, {0, 0, Orient::B}, {1, 0, Orient::F},
                  {0, 0, Orient::F}}};
}

}  // namespace

TEST_CASE("swap_orbit") {
  Presentation p = dunce();
  OrbitBounds b;
  SUBCASE("trivial diagram has a one-element orbit") {
    auto orbit = swap_orbit(p, make_trivial({0}), b);
    CHECK(orbit == std::set<std::vector<Atom>>{{}});
  }
  SUBCASE("one independent pair gives exactly two arrangements") {
    Diagram d{{0, 0}, {{0, 0, Orient::B}, {2, 0, Orient::B}}};
    auto orbit = swap_orbit(p, d, b);
    CHECK(orbit.size() == 2);
    CHECK(orbit.contains(d.atoms));
    CHECK(orbit.contains(std::vector<Atom>{{1, 0, Orient::B},
                                           {0, 0, Orient::B}}));
  }
  SUBCASE("every orbit member of x0 shares one normal form") {
    Diagram x0 = x0_diagram();
    Diagram nf = normal_form(p, x0);
    for (const auto& atoms : swap_orbit(p, x0, b)) {
      CHECK(normal_form(p, Diagram{x0.top, atoms}) == nf);
    }
  }
  SUBCASE("cell bound is enforced") {
    OrbitBounds tight;
    tight.max_cells = 2;
    CHECK_THROWS_AS(swap_orbit(p, x0_diagram(), tight), ExceededBounds);
  }
}

TEST_CASE("all_reductions") {
  Presentation p = dunce();
  OrbitBounds b;
  SUBCASE("a dipole reduces to the trivial diagram in every order") {
    Diagram d{{0}, {{0, 0, Orient::B}, {0, 0, Orient::F}}};
    auto terminals = all_reductions(p, d, b);
    CHECK(terminals == std::set<std::vector<Atom>>{{}});
  }
  SUBCASE("x0 times its inverse cancels to the identity along every path") {
    Diagram d = compose(p, x0_diagram(), inverse(p, x0_diagram()));
    auto terminals = all_reductions(p, d, b);
    CHECK(terminals == std::set<std::vector<Atom>>{{}});
  }
  SUBCASE("random diagrams always have a unique terminal") {
    dgtest::Rng rng(41);
    for (int t = 0; t < 40; ++t) {
      Diagram d = dgtest::random_diagram(p, {0}, 6, rng);
      auto terminals = all_reductions(p, d, b);
      REQUIRE(terminals.size() == 1);
      CHECK(*terminals.begin() == orbit_min(p, reduce(p, d), b));
    }
  }
}

TEST_CASE("oracle_equal") {
  Presentation p = dunce();
  OrbitBounds b;
  Diagram x0 = x0_diagram();
  CHECK(oracle_equal(p, x0, x0, b));
  CHECK(oracle_equal(p, Diagram{{0}, {{0, 0, Orient::B}, {0, 0, Orient::F}}},
                     make_trivial({0}), b));
  SUBCASE("agrees with equal_diagrams on random pairs") {
    dgtest::Rng rng(42);
    for (int t = 0; t < 50; ++t) {
      Diagram d1 = dgtest::random_diagram(p, {0}, 4, rng);
      Diagram d2;
      if (t % 2 == 0) {
        d2 = dgtest::insert_mirror_pairs(
            p, dgtest::shuffle_orbit(p, d1, 4, rng), 1, rng);
      } else {
        d2 = dgtest::random_diagram(p, {0}, 4, rng);
      }
      if (bottom(p, d1) != bottom(p, d2)) {
        continue;
      }
      CHECK(oracle_equal(p, d1, d2, b) == equal_diagrams(p, d1, d2));
    }
  }
}
