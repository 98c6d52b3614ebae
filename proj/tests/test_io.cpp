#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <variant>

#include <np3/constructions.hpp>
#include <np3/core.hpp>
#include <np3/error.hpp>
#include <np3/invariants.hpp>
#include <np3/io.hpp>

using namespace np3;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::MessageMatches;

TEST_CASE("parse errors carry the source name and line number") {
  SECTION("mixed facet widths") {
    REQUIRE_THROWS_MATCHES(parse_facet_text("1 2 3 4\n1 2 3\n"), Error,
                           MessageMatches(ContainsSubstring("<text>:2:")));
  }
  SECTION("too many labels on a line") {
    REQUIRE_THROWS_MATCHES(parse_facet_text("1 2 3 4 5\n"), Error,
                           MessageMatches(ContainsSubstring("<text>:1:") &&
                                          ContainsSubstring("got 5")));
  }
  SECTION("repeated label within a facet") {
    REQUIRE_THROWS_MATCHES(parse_facet_text("1 2 3\n4 4 5\n"), Error,
                           MessageMatches(ContainsSubstring("<text>:2:") &&
                                          ContainsSubstring("repeated vertex label '4'")));
  }
  SECTION("nothing but comments and blanks") {
    try {
      parse_facet_text("# heading\n\n   \n");
      FAIL("expected an error");
    } catch (const Error& e) {
      REQUIRE(e.code() == Errc::Empty);
    }
  }
  SECTION("missing file") {
    REQUIRE_THROWS_MATCHES(parse_facet_file("/nonexistent/np3-no-such-file"), Error,
                           MessageMatches(ContainsSubstring("cannot open")));
  }
}

TEST_CASE("comments and blank lines are skipped") {
  const AnyComplex K = parse_facet_text("# four facets follow\n\n1 2 3 4\n1 2 3 5\n"
                                        "1 2 4 5 # trailing note\n1 3 4 5\n2 3 4 5\n");
  REQUIRE(std::holds_alternative<Complex3>(K));
  REQUIRE(f_vector(std::get<Complex3>(K)) == FVector{5, 10, 10, 5});
}

TEST_CASE("dump and parse round-trip every generator") {
  const auto check3 = [](const Complex3& K) {
    const AnyComplex back = parse_facet_text(dump_facets(AnyComplex{K}));
    REQUIRE(std::holds_alternative<Complex3>(back));
    REQUIRE(std::get<Complex3>(back).rows() == K.rows());
  };
  check3(boundary_4_simplex());
  check3(ovs_rp2_7());
  check3(stacked_sphere(8));

  const Surface2 L = rp2_6();
  const AnyComplex back = parse_facet_text(dump_facets(AnyComplex{L}));
  REQUIRE(std::holds_alternative<Surface2>(back));
  REQUIRE(std::get<Surface2>(back).rows() == L.rows());
}

TEST_CASE("the text report carries the exact rational and the verdict") {
  const Complex3 K = ovs_rp2_7();
  const std::string text = render_text(K, analyze(K));
  REQUIRE_THAT(text, ContainsSubstring("f-vector: V=7 E=21 F=30 T=15"));
  REQUIRE_THAT(text, ContainsSubstring("mu0 = 30/7"));
  REQUIRE_THAT(text, ContainsSubstring("g2 = 3"));
  REQUIRE_THAT(text, ContainsSubstring("g3 = -1"));
  REQUIRE_THAT(text, ContainsSubstring("singular vertices: 2"));
  REQUIRE_THAT(text, ContainsSubstring("EqualityCase_i"));
}

TEST_CASE("the corollary refinement is appended to the manifold verdict") {
  const Complex3 K = boundary_4_simplex();
  const std::string text = render_text(K, analyze(K));
  REQUIRE_THAT(text,
               ContainsSubstring("verdict: NonSingularManifold + SphereByCorollary"));
}

TEST_CASE("the JSON report uses exact integers for the rational") {
  const Complex3 K = boundary_4_simplex();
  const auto j = render_json(K, analyze(K));
  REQUIRE(j["f_vector"]["V"] == 5);
  REQUIRE(j["f_vector"]["T"] == 5);
  REQUIRE(j["mu0"]["num"] == 3);
  REQUIRE(j["mu0"]["den"] == 1);
  REQUIRE(j["g2"] == 0);
  REQUIRE(j["g3"] == 0);
  REQUIRE(j["normality"]["verdict"] == "NormalClosedPseudomanifold");
  REQUIRE(j["normality"]["violations"].empty());
  REQUIRE(j["verdict"]["case_tag"] == "NonSingularManifold + SphereByCorollary");
  REQUIRE(j["singular_vertices"].empty());
}

TEST_CASE("JSON on a singular complex lists the singular vertices") {
  const Complex3 K = ovs_rp2_7();
  const auto j = render_json(K, analyze(K));
  REQUIRE(j["mu0"]["num"] == 30);
  REQUIRE(j["mu0"]["den"] == 7);
  REQUIRE(j["singular_vertices"].size() == 2);
  REQUIRE(j["singular_vertices"][0]["label"] == "u");
  REQUIRE(j["singular_vertices"][0]["orientable"] == false);
  REQUIRE(j["singular_vertices"][0]["genus_or_crosscaps"] == 1);
  REQUIRE(j["verdict"]["case_tag"] == "EqualityCase_i");
  for (const auto& entry : j["identities"]) REQUIRE(entry["holds"] == true);
  for (const auto& entry : j["bounds"]) REQUIRE(entry["holds"] == true);
}

TEST_CASE("analysis on a non-normal complex omits the detail sections") {
  const Complex3 tet = Complex3::from_rows({{"1", "2", "3", "4"}});
  const AnalysisReport r = analyze(tet);
  const auto j = render_json(tet, r);
  REQUIRE(j["normality"]["verdict"] == "HasBoundary");
  REQUIRE(j["normality"]["violations"].size() == 4);
  REQUIRE_FALSE(j.contains("verdict"));
  REQUIRE_FALSE(j.contains("identities"));
  const std::string text = render_text(tet, r);
  REQUIRE_THAT(text, ContainsSubstring("normality: HasBoundary"));
  REQUIRE_THAT(text, ContainsSubstring("lies in 1 facet(s), expected 2"));
}

TEST_CASE("reports are byte-identical across independent builds") {
  const Surface2 L = rp2_6();
  const Complex3 a = one_vertex_suspension(L, L.labels().require_vertex("6"));
  const Complex3 b = ovs_rp2_7();
  // Not label-identical constructions in general, but both normalize through
  // sorted rows; their dumps and reports must agree byte for byte when the
  // label sets coincide.
  REQUIRE(dump_facets(AnyComplex{a}) == dump_facets(AnyComplex{b}));
  REQUIRE(render_text(a, analyze(a)) == render_text(b, analyze(b)));
  REQUIRE(render_json(a, analyze(a)).dump(2) == render_json(b, analyze(b)).dump(2));
}
