#include <catch2/catch_amalgamated.hpp>

#include <np3/constructions.hpp>
#include <np3/core.hpp>
#include <np3/error.hpp>
#include <np3/surfaces.hpp>

using namespace np3;

namespace {

Surface2 tetrahedron_boundary() {
  return Surface2::from_rows(
      {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}});
}

Surface2 octahedron() {
  return Surface2::from_rows({{"1", "2", "5"}, {"2", "3", "5"}, {"3", "4", "5"},
                              {"1", "4", "5"}, {"1", "2", "6"}, {"2", "3", "6"},
                              {"3", "4", "6"}, {"1", "4", "6"}});
}

}  // namespace

TEST_CASE("closed-surface detection") {
  REQUIRE(is_closed_surface(tetrahedron_boundary()));
  REQUIRE(is_closed_surface(octahedron()));
  REQUIRE(is_closed_surface(rp2_6()));
  REQUIRE(is_closed_surface(torus_7()));

  SECTION("a single triangle has boundary") {
    REQUIRE_FALSE(is_closed_surface(Surface2::from_rows({{"1", "2", "3"}})));
  }
  SECTION("two tetrahedron boundaries pinched at a vertex fail the link test") {
    // Every edge lies in two triangles, yet the link of the shared vertex is
    // two disjoint cycles.
    const Surface2 pinched = Surface2::from_rows(
        {{"p", "2", "3"}, {"p", "2", "4"}, {"p", "3", "4"}, {"2", "3", "4"},
         {"p", "6", "7"}, {"p", "6", "8"}, {"p", "7", "8"}, {"6", "7", "8"}});
    REQUIRE_FALSE(is_closed_surface(pinched));
  }
  SECTION("a disconnected union is not a closed surface") {
    const Surface2 two = Surface2::from_rows(
        {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"},
         {"5", "6", "7"}, {"5", "6", "8"}, {"5", "7", "8"}, {"6", "7", "8"}});
    REQUIRE_FALSE(is_closed_surface(two));
  }
}

TEST_CASE("surface classification by Euler characteristic and orientability") {
  SECTION("spheres") {
    for (const Surface2& L : {tetrahedron_boundary(), octahedron()}) {
      const SurfaceClass c = classify_surface(L);
      REQUIRE(c.chi == 2);
      REQUIRE(c.orientable);
      REQUIRE(c.genus_h == 0);
      REQUIRE(c.is_sphere());
    }
  }
  SECTION("projective plane") {
    const SurfaceClass c = classify_surface(rp2_6());
    REQUIRE(c.chi == 1);
    REQUIRE_FALSE(c.orientable);
    REQUIRE(c.crosscaps_m == 1);
    REQUIRE_FALSE(c.is_sphere());
  }
  SECTION("torus") {
    const SurfaceClass c = classify_surface(torus_7());
    REQUIRE(c.chi == 0);
    REQUIRE(c.orientable);
    REQUIRE(c.genus_h == 1);
  }
  SECTION("classification is independent of the propagation seed") {
    for (const Surface2& L : {tetrahedron_boundary(), octahedron(), rp2_6(), torus_7()})
      REQUIRE(classify_surface(L, false) == classify_surface(L, true));
  }
  SECTION("non-closed input is rejected") {
    REQUIRE_THROWS_AS(classify_surface(Surface2::from_rows({{"1", "2", "3"}})), Error);
  }
}

TEST_CASE("euler characteristic is V - E + F") {
  REQUIRE(euler_characteristic(tetrahedron_boundary()) == 2);
  REQUIRE(euler_characteristic(rp2_6()) == 1);
  REQUIRE(euler_characteristic(torus_7()) == 0);
}
