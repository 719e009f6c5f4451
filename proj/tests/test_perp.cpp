#include <doctest.h>

#include <vector>

#include "smindy/perp.hpp"

using namespace smindy;

namespace {

const DimVector kS1{1, 0}, kS2{0, 1}, kP1{1, 1};

HomEngine a2_engine() { return HomEngine(parse_quiver("vertices 2; arrows 1->2")); }
HomEngine a3_engine() { return HomEngine(parse_quiver("vertices 3; arrows 1->2, 2->3")); }

}  // namespace

TEST_CASE("perp: right perpendicular of the A3 middle simple is type A2") {
  HomEngine e = a3_engine();
  Collection seed = Collection::of({{DimVector{0, 1, 0}, 0}});

  std::vector<DimVector> expected{{0, 1, 1}, {1, 0, 0}, {1, 1, 1}};
  CHECK(perp_indecomposables(e, seed) == expected);

  PerpCategory perp = perp_category(e, seed);
  CHECK(perp.indecomposables == expected);
  CHECK(perp.simples == std::vector<DimVector>{{0, 1, 1}, {1, 0, 0}});
  CHECK(perp.quiver.type_name == "A2");
  CHECK(perp.quiver.n == 2);
  // The surviving extension Ext^1((1,0,0), (0,1,1)) = 1 realizes the arrow
  // from vertex 1 to vertex 0 in the simples ordering.
  CHECK(perp.quiver.arrow_count(1, 0) == 1);
  CHECK(perp.quiver.arrow_count(0, 1) == 0);
}

TEST_CASE("perp: D4 central simple leaves three decoupled lines") {
  HomEngine e(parse_quiver("vertices 4; arrows 1->2, 3->2, 4->2"));
  PerpCategory perp = perp_category(e, Collection::of({{DimVector{0, 1, 0, 0}, 0}}));
  CHECK(perp.quiver.type_name == "A1+A1+A1");
  std::vector<DimVector> outer{{0, 0, 0, 1}, {0, 0, 1, 0}, {1, 0, 0, 0}};
  CHECK(perp.indecomposables == outer);
  CHECK(perp.simples == outer);
  CHECK(perp.quiver.arrows.empty());
}

TEST_CASE("perp: wide closure via double perpendicular") {
  HomEngine e = a2_engine();
  CHECK(wide_simples(e, {kP1}) == std::vector<DimVector>{kP1});
  CHECK(wide_simples(e, {kS1, kS2}) == std::vector<DimVector>{kS2, kS1});
  CHECK(wide_simples(e, {kS1, kP1}) == std::vector<DimVector>{kS2, kS1});  // full rank
  CHECK_THROWS_AS(wide_simples(e, {DimVector{2, 2}}), InvalidInput);
}

TEST_CASE("perp: exceptional simples selection is unique or loud") {
  HomEngine e = a2_engine();
  // Two hom-orthogonal singletons inside {S1, S2}: no unique rank-1 system.
  CHECK_THROWS_AS(exceptional_simples(e, {kS1, kS2}, 1), InternalError);
  CHECK_THROWS_AS(exceptional_simples(e, {kS1}, 0), InternalError);
  CHECK(exceptional_simples(e, {}, 0).empty());
  CHECK(exceptional_simples(e, {kS2, kS1}, 2) == std::vector<DimVector>{kS2, kS1});
}

TEST_CASE("perp: complete seed reduces to the empty category") {
  HomEngine e = a2_engine();
  PerpCategory perp = perp_category(e, Collection::of({{kS1, 0}, {kS2, 0}}));
  CHECK(perp.indecomposables.empty());
  CHECK(perp.simples.empty());
  CHECK(perp.quiver.n == 0);

  VerificationReport rep = verify_reduction(e, Collection::of({{kS1, 0}, {kS2, 0}}), 1);
  CHECK(rep.pass);
  CHECK(rep.counts.at("ambient_smc") == 1);
  CHECK(rep.counts.at("perp_smc") == 1);  // the empty collection
}

TEST_CASE("perp: reduction counts on A2") {
  HomEngine e = a2_engine();

  VerificationReport rep = verify_reduction(e, Collection::of({{kS1, 0}}), 1);
  CHECK(rep.pass);
  CHECK(rep.counts.at("ambient_smc") == 2);
  CHECK(rep.counts.at("perp_smc") == 2);
  CHECK(rep.counts.at("perp_rank") == 1);
  CHECK(rep.counts.at("degenerate") == 1);

  SUBCASE("socle seed: everything transports verbatim") {
    VerificationReport r2 = verify_reduction(e, Collection::of({{kS2, 0}}), 1);
    CHECK(r2.pass);
    CHECK(r2.counts.at("ambient_smc") == 2);
    CHECK(r2.counts.at("degenerate") == 2);
  }

  SUBCASE("wider window") {
    VerificationReport r3 = verify_reduction(e, Collection::of({{kS1, 0}}), 2);
    CHECK(r3.pass);
    CHECK(r3.counts.at("ambient_smc") == 3);
    CHECK(r3.counts.at("perp_smc") == 3);
  }

  SUBCASE("seed may sit at a positive degree") {
    VerificationReport r4 = verify_reduction(e, Collection::of({{kS1, 1}}), 1);
    CHECK(r4.pass);
    CHECK(r4.counts.at("ambient_smc") == r4.counts.at("perp_smc"));
  }
}

TEST_CASE("perp: reduction counts on A3") {
  HomEngine e = a3_engine();
  VerificationReport rep = verify_reduction(e, Collection::of({{DimVector{0, 1, 0}, 0}}), 1);
  CHECK(rep.pass);
  CHECK(rep.counts.at("ambient_smc") == 5);
  CHECK(rep.counts.at("perp_smc") == 5);
  CHECK(rep.counts.at("perp_rank") == 2);
}

TEST_CASE("perp: reduction input validation") {
  HomEngine e = a2_engine();
  CHECK_THROWS_AS(verify_reduction(e, Collection::of({{kS1, 0}}), -1), InvalidInput);
  CHECK_THROWS_AS(verify_reduction(e, Collection{}, 1), InvalidInput);
  CHECK_THROWS_AS(verify_reduction(e, Collection::of({{kS1, 2}}), 1), InvalidInput);
  CHECK_THROWS_AS(verify_reduction(e, Collection::of({{kS2, 0}, {kP1, 0}}), 1),
                  InvalidInput);  // seed not orthogonal
  CHECK_THROWS_AS(perp_indecomposables(e, Collection::of({{DimVector{3, 1}, 0}})),
                  InvalidInput);
}
