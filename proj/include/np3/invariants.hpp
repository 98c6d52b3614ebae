// Numerical invariants of normal 3-pseudomanifolds (average edge order mu0,
// the lower-bound quantities g2 and g3, singularity profiles), the structure
// classifier, the genus-parameterized suspension family, and the f-vector
// statistics helper.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "np3/constructions.hpp"
#include "np3/core.hpp"
#include "np3/error.hpp"
#include "np3/isomorphism.hpp"
#include "np3/normality.hpp"
#include "np3/rational.hpp"
#include "np3/surfaces.hpp"

namespace np3 {

// Throws unless K is a normal closed pseudomanifold: HasBoundary when a
// triangle lies in fewer than two facets, NotNormal otherwise.
inline void ensure_normal(const Complex3& K) {
  const NormalityReport r = is_normal_pseudomanifold(K);
  if (r.ok()) return;
  if (r.verdict == NormalityVerdict::HasBoundary)
    fail(Errc::HasBoundary, "complex has boundary triangles");
  fail(Errc::NotNormal, std::string("complex is not a normal closed pseudomanifold (") +
                            to_string(r.verdict) + ")");
}

// Average edge order: 3F/E as an exact rational.
inline Rational mu0(const Complex3& K) {
  ensure_normal(K);
  const FVector f = f_vector(K);
  return Rational::of(3 * f.F, f.E);
}

// g2 = E - 4V + 10 and g3 = F - 3E + 6V - 10, from the f-vector alone.
inline std::pair<std::int64_t, std::int64_t> g2_g3(const FVector& f) {
  return {f.E - 4 * f.V + 10, f.F - 3 * f.E + 6 * f.V - 10};
}

// One singular vertex: label, surface type of its link, Euler characteristic.
struct SingularVertex {
  std::string label;
  bool orientable = false;
  std::int64_t genus_or_crosscaps = 0;  // genus when orientable, crosscaps otherwise
  std::int64_t chi = 0;
};

// All vertices whose link is a closed surface other than the sphere, sorted
// by label. Requires a normal closed pseudomanifold.
inline std::vector<SingularVertex> singularity_profile(const Complex3& K) {
  ensure_normal(K);
  std::vector<SingularVertex> out;
  for (const auto& [v, c] : singular_vertices(K))
    out.push_back(
        {K.labels().name(v), c.orientable, c.orientable ? c.genus_h : c.crosscaps_m, c.chi});
  return out;
}

// Second route to the average edge order, through the vertex links:
// mu0 = 6 - 3 * (sum over vertices of chi(link)) / E.
inline Rational mu0_via_links(const Complex3& K) {
  ensure_normal(K);
  std::int64_t sum_chi = 0;
  for (VertexId v : K.vertices()) sum_chi += euler_characteristic(vertex_link(K, v));
  const FVector f = f_vector(K);
  return Rational::of(6 * f.E - 3 * sum_chi, f.E);
}

// g2(K) >= E(lk v) - 4 V(lk v) + 10 for every vertex v.
inline bool check_g2_lower_bound(const Complex3& K) {
  ensure_normal(K);
  const auto [g2, g3] = g2_g3(f_vector(K));
  (void)g3;
  for (VertexId v : K.vertices()) {
    const Surface2 link = vertex_link(K, v);
    const auto [lv, le, lf] = surface_counts(link);
    (void)lf;
    if (g2 < le - 4 * lv + 10) return false;
  }
  return true;
}

// The complex attaining the minimum average edge order among singular
// complexes: is K isomorphic to the 7-vertex one-vertex suspension of the
// 6-vertex projective plane?
inline bool is_canonical_equality_case(const Complex3& K) {
  if (!is_normal_pseudomanifold(K).ok()) return false;
  return are_isomorphic(K, ovs_rp2_7()).has_value();
}

// ---------------------------------------------------------------------------
// Structure classifier
// ---------------------------------------------------------------------------

enum class CaseTag {
  NonSingularManifold,  // no singular vertices: a closed 3-manifold
  SphereByCorollary,    // never assigned directly; rendered via the flag below
  EqualityCase_i,       // mu0 == 30/7, the canonical 7-vertex complex
  Case_a,               // one singular vertex, torus link
  Case_c,               // one singular vertex, Klein-bottle link
  Case_d,               // two singular vertices, projective-plane links
  AboveNineHalves,      // singular with mu0 > 9/2
};

inline std::string to_string(CaseTag t) {
  switch (t) {
    case CaseTag::NonSingularManifold: return "NonSingularManifold";
    case CaseTag::SphereByCorollary: return "SphereByCorollary";
    case CaseTag::EqualityCase_i: return "EqualityCase_i";
    case CaseTag::Case_a: return "Case_a";
    case CaseTag::Case_c: return "Case_c";
    case CaseTag::Case_d: return "Case_d";
    case CaseTag::AboveNineHalves: return "AboveNineHalves";
  }
  return "?";
}

struct TheoremVerdict {
  CaseTag case_tag = CaseTag::NonSingularManifold;
  bool sphere_by_corollary = false;
  std::string narrative;
};

// case_tag rendered for reports; the corollary refinement is appended to the
// manifold tag rather than replacing it.
inline std::string case_tag_string(const TheoremVerdict& v) {
  std::string s = to_string(v.case_tag);
  if (v.sphere_by_corollary) s += " + " + to_string(CaseTag::SphereByCorollary);
  return s;
}

namespace detail {

// Surface-strength lower bound: g2(K) >= E(lk v) - 3 V(lk v) + 6 for every
// vertex. Stronger than the public check; a failure means an internal bug,
// so it raises BoundViolated.
inline void assert_surface_strength_bound(const Complex3& K, std::int64_t g2) {
  for (VertexId v : K.vertices()) {
    const auto [lv, le, lf] = surface_counts(vertex_link(K, v));
    (void)lf;
    require(g2 >= le - 3 * lv + 6, Errc::BoundViolated,
            "g2 fell below the link surface bound at vertex " + K.labels().name(v));
  }
}

}  // namespace detail

// Classify a normal closed pseudomanifold against the structure results for
// small average edge order. Guaranteed facts are asserted and raise
// BoundViolated when violated, since a violation can only mean a defect in
// this library, not a legal input.
inline TheoremVerdict theorem_classify(const Complex3& K) {
  ensure_normal(K);
  const FVector f = f_vector(K);
  const Rational mu = Rational::of(3 * f.F, f.E);
  const auto [g2, g3] = g2_g3(f);
  (void)g3;
  const std::vector<SingularVertex> profile = singularity_profile(K);
  const auto n = static_cast<std::int64_t>(profile.size());

  require(mu < Rational::of(6 + n, 1), Errc::BoundViolated,
          "mu0 must stay below 6 + (number of singular vertices)");
  detail::assert_surface_strength_bound(K, g2);

  TheoremVerdict out;
  if (n == 0) {
    out.case_tag = CaseTag::NonSingularManifold;
    out.sphere_by_corollary = mu < Rational::of(30, 7);
    out.narrative = "Every vertex link is a 2-sphere, so the complex is a closed 3-manifold.";
    if (out.sphere_by_corollary)
      out.narrative += " Since mu0 < 30/7, it is a triangulated 3-sphere.";
    return out;
  }

  require(mu >= Rational::of(30, 7), Errc::BoundViolated,
          "a singular normal pseudomanifold must have mu0 >= 30/7");

  if (mu == Rational::of(30, 7)) {
    require(is_canonical_equality_case(K), Errc::BoundViolated,
            "mu0 == 30/7 is attained only by the canonical 7-vertex complex");
    out.case_tag = CaseTag::EqualityCase_i;
    out.narrative =
        "mu0 attains its minimum 30/7 over singular complexes; the complex is "
        "isomorphic to the one-vertex suspension of the 6-vertex projective plane, "
        "with two projective-plane singularities.";
    return out;
  }

  if (mu <= Rational::of(9, 2)) {
    const bool torus_link = n == 1 && profile[0].orientable && profile[0].genus_or_crosscaps == 1;
    const bool klein_link =
        n == 1 && !profile[0].orientable && profile[0].genus_or_crosscaps == 2;
    const bool two_rp2 = n == 2 && !profile[0].orientable && !profile[1].orientable &&
                         profile[0].genus_or_crosscaps == 1 && profile[1].genus_or_crosscaps == 1;
    if (torus_link || klein_link) {
      require(g2 == 6, Errc::BoundViolated,
              "a single torus or Klein-bottle singularity under mu0 <= 9/2 forces g2 == 6");
      out.case_tag = torus_link ? CaseTag::Case_a : CaseTag::Case_c;
      out.narrative = std::string("One singular vertex whose link is a ") +
                      (torus_link ? "torus" : "Klein bottle") +
                      "; the complex arises from boundary complexes of 4-simplices by "
                      "connected sums, bistellar 1-moves, edge contractions, edge "
                      "expansions, and one vertex folding, and its underlying space is a "
                      "handlebody with its boundary coned off (g2 = 6).";
      return out;
    }
    if (two_rp2) {
      require(g2 >= 3 && g2 <= 6, Errc::BoundViolated,
              "two projective-plane singularities under mu0 <= 9/2 force 3 <= g2 <= 6");
      out.case_tag = CaseTag::Case_d;
      out.narrative =
          "Two singular vertices with projective-plane links; the complex arises from "
          "boundary complexes of 4-simplices by connected sums, bistellar 1-moves, edge "
          "contractions, edge expansions, and one edge folding, and its underlying "
          "space is a suspension of the real projective plane.";
      return out;
    }
    fail(Errc::BoundViolated,
         "singularity profile is outside the proven case list for mu0 <= 9/2");
  }

  out.case_tag = CaseTag::AboveNineHalves;
  out.narrative =
      "Singular with mu0 > 9/2; only the general bounds apply (mu0 < 6 + n and the "
      "link lower bounds on g2).";
  return out;
}

// ---------------------------------------------------------------------------
// Full analysis report
// ---------------------------------------------------------------------------

struct AnalysisDetails {
  std::vector<SingularVertex> singular;
  std::vector<std::pair<std::string, bool>> identities;
  std::vector<std::pair<std::string, bool>> bounds;
  TheoremVerdict verdict;
};

struct AnalysisReport {
  FVector f;
  Rational mu0_value = Rational::integer(0);
  std::int64_t g2 = 0;
  std::int64_t g3 = 0;
  NormalityReport normality;
  std::optional<AnalysisDetails> details;  // present exactly when normality holds
};

inline AnalysisReport analyze(const Complex3& K) {
  AnalysisReport out;
  out.f = f_vector(K);
  out.mu0_value = Rational::of(3 * out.f.F, out.f.E);
  std::tie(out.g2, out.g3) = g2_g3(out.f);
  out.normality = is_normal_pseudomanifold(K);
  if (!out.normality.ok()) return out;

  AnalysisDetails d;
  d.singular = singularity_profile(K);
  const auto n = static_cast<std::int64_t>(d.singular.size());

  std::int64_t sum_chi = 0;
  for (VertexId v : K.vertices()) sum_chi += euler_characteristic(vertex_link(K, v));
  d.identities.emplace_back("g2 + g3 == F - 2E + 2V",
                            out.g2 + out.g3 == out.f.F - 2 * out.f.E + 2 * out.f.V);
  d.identities.emplace_back("g2 + g3 == sum over vertices of (2 - chi(link))",
                            out.g2 + out.g3 == 2 * out.f.V - sum_chi);
  d.identities.emplace_back(
      "mu0 == 6 - 3 * sum_chi(link) / E",
      out.mu0_value == Rational::of(6 * out.f.E - 3 * sum_chi, out.f.E));
  d.identities.emplace_back("sum over vertices of chi(link) is even", sum_chi % 2 == 0);

  if (n > 0)
    d.bounds.emplace_back("mu0 >= 30/7 (singular case)",
                          out.mu0_value >= Rational::of(30, 7));
  d.bounds.emplace_back("mu0 < 6 + n", out.mu0_value < Rational::of(6 + n, 1));
  d.bounds.emplace_back("g2(K) >= g2(lk v) for all v", check_g2_lower_bound(K));

  d.verdict = theorem_classify(K);
  out.details = std::move(d);
  return out;
}

// ---------------------------------------------------------------------------
// Genus-parameterized suspension family
// ---------------------------------------------------------------------------

// For each genus m >= 3: the vertex-minimal orientable genus-m surface has
// V = ceil((7 + sqrt(1 + 48 m)) / 2) vertices, E = 3V + 6m - 6 edges and
// F = 2V + 4m - 4 triangles; its suspension is a normal pseudomanifold with
// two singular vertices whose average edge order approaches 8 from below.
struct KmRecord {
  std::int64_t m = 0;
  std::int64_t surface_V = 0, surface_E = 0, surface_F = 0;
  FVector suspension_f;
  Rational mu0_value = Rational::integer(0);
};

inline KmRecord km_formula(std::int64_t m) {
  require(m >= 3, Errc::GenusTooSmall, "the suspension family starts at genus 3");
  const std::int64_t disc = 1 + 48 * m;
  // Smallest V with 2V - 7 >= 0 and (2V - 7)^2 >= disc, i.e. the ceiling of
  // (7 + sqrt(disc)) / 2 computed in exact integer arithmetic (the floating
  // seed is corrected to the true integer square root).
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(disc)));
  while (s > 0 && s * s > disc) --s;
  while ((s + 1) * (s + 1) <= disc) ++s;  // s = floor(sqrt(disc))
  std::int64_t V = (7 + s) / 2;
  while (2 * V - 7 < 0 || (2 * V - 7) * (2 * V - 7) < disc) ++V;

  KmRecord r;
  r.m = m;
  r.surface_V = V;
  r.surface_E = 3 * V + 6 * m - 6;
  r.surface_F = 2 * V + 4 * m - 4;
  r.suspension_f = {V + 2, 2 * V + r.surface_E, 2 * r.surface_E + r.surface_F,
                    2 * r.surface_F};
  r.mu0_value = Rational::of(3 * r.suspension_f.F, r.suspension_f.E);
  require(r.mu0_value < Rational::integer(8), Errc::BoundViolated,
          "suspension family must stay below mu0 = 8");
  return r;
}

// ---------------------------------------------------------------------------
// f-vector statistics
// ---------------------------------------------------------------------------

struct FVectorStats {
  FVector f;
  Rational mu0_value = Rational::integer(0);
  std::int64_t g2 = 0, g3 = 0;
  bool two_neighborly = false, three_neighborly = false;
};

inline FVectorStats stats_from_fvector(const FVector& f) {
  require(f.V > 0 && f.E > 0 && f.F >= 0 && f.T >= 0, Errc::BadParam,
          "f-vector entries must be positive counts");
  FVectorStats s;
  s.f = f;
  s.mu0_value = Rational::of(3 * f.F, f.E);
  std::tie(s.g2, s.g3) = g2_g3(f);
  s.two_neighborly = f.E == f.V * (f.V - 1) / 2;
  s.three_neighborly = s.two_neighborly && f.F == f.V * (f.V - 1) * (f.V - 2) / 6;
  if (s.three_neighborly)
    require(s.mu0_value == Rational::integer(f.V - 2), Errc::ValidationFailed,
            "a 3-neighborly f-vector must have mu0 == V - 2");
  return s;
}

}  // namespace np3
