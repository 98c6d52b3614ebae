#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include <np3/constructions.hpp>
#include <np3/core.hpp>
#include <np3/error.hpp>
#include <np3/invariants.hpp>
#include <np3/isomorphism.hpp>
#include <np3/normality.hpp>

#include "support/builders.hpp"
#include "support/fixtures.hpp"

using namespace np3;

namespace {

Complex3 pinched_spheres() {
  std::vector<std::vector<std::string>> rows;
  const std::vector<std::string> a = {"a2", "a3", "a4", "a5"};
  const std::vector<std::string> b = {"b2", "b3", "b4", "b5"};
  for (const auto& side : {a, b}) {
    std::vector<std::string> all = side;
    all.push_back("p");
    for (size_t skip = 0; skip < all.size(); ++skip) {
      std::vector<std::string> row;
      for (size_t i = 0; i < all.size(); ++i)
        if (i != skip) row.push_back(all[i]);
      rows.push_back(row);
    }
  }
  return Complex3::from_rows(rows);
}

// Connected sum of the canonical 7-vertex complex with the 4-simplex
// boundary: the smallest example with exactly two projective-plane
// singularities and mu0 strictly between 30/7 and 9/2.
Complex3 two_rp2_example() {
  const Complex3 A = ovs_rp2_7();
  const Complex3 B = boundary_4_simplex();
  const Face fa = A.face_of_labels({"1", "2", "4", "u"});
  const Face fb = B.face_of_labels({"1", "2", "3", "4"});
  std::vector<std::pair<VertexId, VertexId>> pairing;
  for (size_t i = 0; i < 4; ++i) pairing.emplace_back(fa[i], fb[i]);
  return connected_sum(A, fa, B, fb, pairing);
}

std::vector<Complex3> registry() {
  return {boundary_4_simplex(),   ovs_rp2_7(),
          stacked_sphere(9),      suspension(rp2_6()),
          suspension(torus_7()),  two_rp2_example(),
          testsupport::klein_fold_result()};
}

}  // namespace

TEST_CASE("mu0 and the g-values take their frozen values") {
  const Complex3 b4s = boundary_4_simplex();
  REQUIRE(mu0(b4s) == Rational::of(3, 1));
  const auto [g2a, g3a] = g2_g3(f_vector(b4s));
  REQUIRE(g2a == 0);
  REQUIRE(g3a == 0);

  const Complex3 ovs = ovs_rp2_7();
  REQUIRE(mu0(ovs) == Rational::of(30, 7));
  const auto [g2b, g3b] = g2_g3(f_vector(ovs));
  REQUIRE(g2b == 3);
  REQUIRE(g3b == -1);

  REQUIRE(mu0(suspension(torus_7())) == Rational::of(24, 5));
  REQUIRE(mu0(two_rp2_example()) == Rational::of(108, 25));
}

TEST_CASE("the link-sum route and the face-count route to mu0 agree") {
  for (const Complex3& K : registry()) {
    REQUIRE(mu0_via_links(K) == mu0(K));
  }
}

TEST_CASE("singularity profiles are as constructed") {
  SECTION("spheres have none") {
    REQUIRE(singularity_profile(boundary_4_simplex()).empty());
    REQUIRE(singularity_profile(stacked_sphere(11)).empty());
  }
  SECTION("the canonical complex has two projective-plane vertices") {
    const auto prof = singularity_profile(ovs_rp2_7());
    REQUIRE(prof.size() == 2);
    for (const auto& s : prof) {
      REQUIRE_FALSE(s.orientable);
      REQUIRE(s.genus_or_crosscaps == 1);
      REQUIRE(s.chi == 1);
    }
    REQUIRE(prof[0].label == "u");
    REQUIRE(prof[1].label == "v");
  }
  SECTION("a suspension of the torus has two torus vertices") {
    const auto prof = singularity_profile(suspension(torus_7()));
    REQUIRE(prof.size() == 2);
    for (const auto& s : prof) {
      REQUIRE(s.orientable);
      REQUIRE(s.genus_or_crosscaps == 1);
      REQUIRE(s.chi == 0);
    }
  }
  SECTION("the folded sphere has one Klein-bottle vertex") {
    const auto prof = singularity_profile(testsupport::klein_fold_result());
    REQUIRE(prof.size() == 1);
    REQUIRE_FALSE(prof[0].orientable);
    REQUIRE(prof[0].genus_or_crosscaps == 2);
    REQUIRE(prof[0].chi == 0);
  }
}

TEST_CASE("the vertex-link lower bound on g2 holds across the registry") {
  for (const Complex3& K : registry()) {
    REQUIRE(check_g2_lower_bound(K));
  }
}

TEST_CASE("ensure_normal distinguishes boundary from pinch points") {
  const Complex3 tet = Complex3::from_rows({{"1", "2", "3", "4"}});
  try {
    ensure_normal(tet);
    FAIL("expected an error");
  } catch (const Error& e) {
    REQUIRE(e.code() == Errc::HasBoundary);
  }
  try {
    ensure_normal(pinched_spheres());
    FAIL("expected an error");
  } catch (const Error& e) {
    REQUIRE(e.code() == Errc::NotNormal);
  }
  REQUIRE_NOTHROW(ensure_normal(boundary_4_simplex()));
}

TEST_CASE("classification of manifolds and the corollary refinement") {
  SECTION("small stacked spheres fall below the threshold") {
    for (const Complex3& K : {boundary_4_simplex(), stacked_sphere(19)}) {
      const TheoremVerdict v = theorem_classify(K);
      REQUIRE(v.case_tag == CaseTag::NonSingularManifold);
      REQUIRE(v.sphere_by_corollary);
      REQUIRE_THAT(v.narrative,
                   Catch::Matchers::ContainsSubstring("triangulated 3-sphere"));
    }
  }
  SECTION("at and above the threshold the refinement is withheld") {
    REQUIRE(mu0(stacked_sphere(20)) == Rational::of(30, 7));
    for (int n : {20, 21, 35}) {
      const TheoremVerdict v = theorem_classify(stacked_sphere(n));
      REQUIRE(v.case_tag == CaseTag::NonSingularManifold);
      REQUIRE_FALSE(v.sphere_by_corollary);
    }
  }
}

TEST_CASE("classification of singular complexes") {
  SECTION("the canonical complex is the equality case") {
    const TheoremVerdict v = theorem_classify(ovs_rp2_7());
    REQUIRE(v.case_tag == CaseTag::EqualityCase_i);
    REQUIRE_FALSE(v.sphere_by_corollary);
    REQUIRE(is_canonical_equality_case(ovs_rp2_7()));
  }
  SECTION("two projective planes in the middle window") {
    const Complex3 K = two_rp2_example();
    REQUIRE(mu0(K) == Rational::of(108, 25));
    const auto [g2, g3] = g2_g3(f_vector(K));
    REQUIRE(g2 == 3);
    const TheoremVerdict v = theorem_classify(K);
    REQUIRE(v.case_tag == CaseTag::Case_d);
    REQUIRE_THAT(v.narrative, Catch::Matchers::ContainsSubstring("edge folding"));
    REQUIRE_FALSE(is_canonical_equality_case(K));
  }
  SECTION("a Klein-bottle link at mu0 = 9/2") {
    const Complex3 K = testsupport::klein_fold_result();
    REQUIRE(mu0(K) == Rational::of(9, 2));
    const TheoremVerdict v = theorem_classify(K);
    REQUIRE(v.case_tag == CaseTag::Case_c);
    REQUIRE_THAT(v.narrative, Catch::Matchers::ContainsSubstring("vertex folding"));
  }
  SECTION("above nine halves only the general bounds apply") {
    const TheoremVerdict v = theorem_classify(suspension(torus_7()));
    REQUIRE(v.case_tag == CaseTag::AboveNineHalves);
  }
  SECTION("a found fold lands in one of the chi = 0 cases") {
    // Seed 226 is the first 11-vertex stacked sphere in a 1..300 sweep that
    // admits a vertex folding at all.
    const auto hit =
        testsupport::find_vertex_fold(testsupport::random_stacked_sphere(11, 226));
    REQUIRE(hit.has_value());
    const TheoremVerdict v = theorem_classify(hit->result);
    REQUIRE((v.case_tag == CaseTag::Case_a || v.case_tag == CaseTag::Case_c));
  }
}

TEST_CASE("analyze reports all identities and bounds as holding") {
  for (const Complex3& K : registry()) {
    const AnalysisReport r = analyze(K);
    REQUIRE(r.normality.ok());
    REQUIRE(r.details.has_value());
    REQUIRE(r.details->identities.size() == 4);
    for (const auto& [name, holds] : r.details->identities) {
      INFO(name);
      REQUIRE(holds);
    }
    REQUIRE_FALSE(r.details->bounds.empty());
    for (const auto& [name, holds] : r.details->bounds) {
      INFO(name);
      REQUIRE(holds);
    }
  }
}

TEST_CASE("analyze on a non-normal complex still reports counts") {
  const Complex3 tet = Complex3::from_rows({{"1", "2", "3", "4"}});
  const AnalysisReport r = analyze(tet);
  REQUIRE_FALSE(r.normality.ok());
  REQUIRE_FALSE(r.details.has_value());
  REQUIRE(r.f == FVector{4, 6, 4, 1});
  REQUIRE(r.mu0_value == Rational::of(2, 1));
}

TEST_CASE("the genus family takes its frozen values") {
  const KmRecord r3 = km_formula(3);
  REQUIRE(r3.surface_V == 10);
  REQUIRE(r3.surface_E == 42);
  REQUIRE(r3.surface_F == 28);
  REQUIRE(r3.suspension_f == FVector{12, 62, 112, 56});
  REQUIRE(r3.mu0_value == Rational::of(168, 31));

  const KmRecord r4 = km_formula(4);
  REQUIRE(r4.surface_V == 11);
  REQUIRE(r4.mu0_value == Rational::of(408, 73));

  REQUIRE(km_formula(5).surface_V == 12);
  REQUIRE(km_formula(6).surface_V == 12);  // discriminant is a perfect square
  REQUIRE(km_formula(7).surface_V == 13);

  const KmRecord big = km_formula(1000000);
  REQUIRE(big.surface_V == 3468);
  REQUIRE(big.mu0_value == Rational::of(48083184, 6017334));
  REQUIRE(big.mu0_value < Rational::of(8, 1));
  // mu0 >= 7.99 without floating point: 100 * num >= 799 * den.
  REQUIRE(100 * big.mu0_value.num >= 799 * big.mu0_value.den);

  for (std::int64_t m : {2LL, 1LL, 0LL, -1LL}) {
    try {
      km_formula(m);
      FAIL("expected an error");
    } catch (const Error& e) {
      REQUIRE(e.code() == Errc::GenusTooSmall);
    }
  }
}

TEST_CASE("f-vector statistics and neighborliness flags") {
  const FVectorStats a = stats_from_fvector({11, 55, 154, 77});
  REQUIRE(a.mu0_value == Rational::of(42, 5));
  REQUIRE(a.two_neighborly);
  REQUIRE_FALSE(a.three_neighborly);
  REQUIRE(a.g2 == 21);

  const FVectorStats b = stats_from_fvector({17, 136, 544, 272});
  REQUIRE(b.mu0_value == Rational::of(12, 1));
  REQUIRE(b.two_neighborly);
  REQUIRE_FALSE(b.three_neighborly);

  const FVectorStats c = stats_from_fvector({19, 171, 684, 342});
  REQUIRE(c.mu0_value == Rational::of(12, 1));
  REQUIRE(c.two_neighborly);
  REQUIRE_FALSE(c.three_neighborly);

  const FVectorStats d = stats_from_fvector({17, 136, 680, 340});
  REQUIRE(d.two_neighborly);
  REQUIRE(d.three_neighborly);
  REQUIRE(d.mu0_value == Rational::of(15, 1));
  REQUIRE(d.mu0_value == Rational::integer(d.f.V - 2));

  REQUIRE_THROWS_AS(stats_from_fvector({0, 0, 0, 0}), Error);
}
