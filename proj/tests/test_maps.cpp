#include <doctest.h>

#include <algorithm>

#include "smindy/maps.hpp"

using namespace smindy;

namespace {

const DimVector kS1{1, 0}, kS2{0, 1}, kP1{1, 1};

struct A2Setup {
  HomEngine engine{parse_quiver("vertices 2; arrows 1->2")};
  OrbitCategory cat{engine, 1};
  WeylGroup W{engine.quiver()};
};

}  // namespace

TEST_CASE("maps: theta keeps the degrees below w") {
  Collection c = Collection::of({{kS1, 0}, {kS2, 1}, {kP1, 2}});
  CHECK(theta(c, 2) == Collection::of({{kS1, 0}, {kS2, 1}}));
  CHECK(theta(c, 1) == Collection::of({{kS1, 0}}));
  CHECK(theta(Collection::of({{kP1, 3}}), 2) == Collection{});
}

TEST_CASE("maps: w-sincerity") {
  HomEngine e(parse_quiver("vertices 2; arrows 1->2"));
  CHECK(is_w_sincere(e, Collection::of({{kS1, 0}, {kS2, 0}}), 1));
  CHECK(is_w_sincere(e, Collection::of({{kP1, 0}}), 1));  // one fat root suffices
  CHECK(is_w_sincere(e, Collection::of({{kS1, 0}, {kS2, 1}}), 2));
  CHECK_FALSE(is_w_sincere(e, Collection::of({{kS1, 0}}), 1));          // vertex 1 missing
  CHECK_FALSE(is_w_sincere(e, Collection::of({{kS1, 0}, {kS2, 1}}), 1));  // degree over
  CHECK_FALSE(is_w_sincere(e, Collection{}, 1));
}

TEST_CASE("maps: pi is the identity on fundamental-domain collections") {
  A2Setup s;
  Collection smc = Collection::of({{kS2, 1}, {kP1, 0}});
  CHECK(pi_map(s.cat, smc) == smc);
  CHECK_THROWS_AS(pi_map(s.cat, Collection::of({{kS1, 1}, {kS2, 0}})), InvalidInput);
}

TEST_CASE("maps: phi on the A2 tuples at w = 1") {
  A2Setup s;
  std::size_t e = s.W.identity_id();
  std::size_t c = s.W.coxeter_element();
  std::size_t t1 = s.W.reflection_of_root(kS2);
  std::size_t t2 = s.W.reflection_of_root(kP1);

  // Part i sits in degree w+1-i: the identity part contributes nothing, the
  // Coxeter part contributes the wide simples of the whole category.
  CHECK(phi(s.engine, s.W, NCTuple{{e, c}}, 1) == Collection::of({{kS1, 0}, {kS2, 0}}));
  CHECK(phi(s.engine, s.W, NCTuple{{t1, t2}}, 1) == Collection::of({{kS2, 1}, {kP1, 0}}));

  SUBCASE("non-positive tuples leave the fundamental domain") {
    Collection img = phi(s.engine, s.W, NCTuple{{c, e}}, 1);
    CHECK(img == Collection::of({{kS1, 1}, {kS2, 1}}));
    bool inside = true;
    for (const DerivedObject& x : img.objects) inside = inside && s.cat.in_domain(x);
    CHECK_FALSE(inside);
  }

  SUBCASE("phi is independent of the T-reduced expression choice") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 17ull}) {
      CHECK(phi(s.engine, s.W, NCTuple{{t1, t2}}, 1, seed) ==
            phi(s.engine, s.W, NCTuple{{t1, t2}}, 1));
      CHECK(phi(s.engine, s.W, NCTuple{{e, c}}, 1, seed) ==
            phi(s.engine, s.W, NCTuple{{e, c}}, 1));
    }
  }

  SUBCASE("every positive tuple maps onto an enumerated SMC") {
    auto smcs = enumerate_smc_in_fd(s.cat);
    for (const NCTuple& t : filter_positive(s.W, enumerate_nc(s.W, 1))) {
      Collection img = phi(s.engine, s.W, t, 1);
      CHECK(std::binary_search(smcs.begin(), smcs.end(), img));
    }
  }
}

TEST_CASE("maps: theorem A report on small grids") {
  for (const char* desc : {"vertices 2; arrows 1->2", "vertices 3; arrows 1->2, 2->3"}) {
    HomEngine e(parse_quiver(desc));
    for (int w = 1; w <= 2; ++w) {
      OrbitCategory cat(e, w);
      VerificationReport rep = verify_theorem_a(cat);
      CAPTURE(desc);
      CAPTURE(w);
      CHECK(rep.pass);
      CHECK(rep.counts.at("smc_fd") == rep.counts.at("sms"));
      CHECK(rep.theorem == "A");
      CHECK_FALSE(rep.witness.has_value());
    }
  }
  HomEngine a2(parse_quiver("vertices 2; arrows 1->2"));
  OrbitCategory cat(a2, 1);
  CHECK(verify_theorem_a(cat).counts.at("smc_fd") == 2);
}

TEST_CASE("maps: theorem B report on A2") {
  A2Setup s;
  VerificationReport rep = verify_theorem_b(s.engine, s.cat, s.W);
  CHECK(rep.pass);
  CHECK(rep.counts.at("nc") == 5);
  CHECK(rep.counts.at("nc_positive") == 2);
  CHECK(rep.counts.at("smc_fd") == 2);
  CHECK(rep.quiver == "A2");
  CHECK(rep.w == 1);

  SUBCASE("randomized expression choices do not disturb the verdict") {
    EnumOptions opts;
    opts.seed = 12345;
    CHECK(verify_theorem_b(s.engine, s.cat, s.W, opts).pass);
  }
}

TEST_CASE("maps: theta report on A2 and A3") {
  for (const char* desc : {"vertices 2; arrows 1->2", "vertices 3; arrows 1->2, 2->3"}) {
    HomEngine e(parse_quiver(desc));
    for (int w = 1; w <= 2; ++w) {
      OrbitCategory cat(e, w);
      VerificationReport rep = verify_theta(cat);
      CAPTURE(desc);
      CAPTURE(w);
      CHECK(rep.pass);
      CHECK(rep.counts.at("smc_fd") == rep.counts.at("targets"));
    }
  }
}
