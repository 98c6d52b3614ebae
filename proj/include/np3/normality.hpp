// Normal-pseudomanifold verification: purity (by construction), ridge
// degrees, global connectivity, vertex-link and edge-link connectivity, and
// identification of singular vertices.
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "np3/core.hpp"
#include "np3/error.hpp"
#include "np3/surfaces.hpp"

namespace np3 {

enum class NormalityVerdict {
  NormalClosedPseudomanifold,
  HasBoundary,
  NotNormal,
  NotPure,
  Disconnected,
};

inline const char* to_string(NormalityVerdict v) {
  switch (v) {
    case NormalityVerdict::NormalClosedPseudomanifold: return "NormalClosedPseudomanifold";
    case NormalityVerdict::HasBoundary: return "HasBoundary";
    case NormalityVerdict::NotNormal: return "NotNormal";
    case NormalityVerdict::NotPure: return "NotPure";
    case NormalityVerdict::Disconnected: return "Disconnected";
  }
  return "?";
}

struct NormalityReport {
  bool is_pure = true;  // guaranteed by the facet-based representation
  std::vector<std::pair<Face, int>> ridge_violations;  // triangle -> count != 2
  std::vector<VertexId> vertex_link_disconnected;
  std::vector<Face> edge_link_disconnected;
  bool connected = false;
  NormalityVerdict verdict = NormalityVerdict::NotNormal;

  bool ok() const { return verdict == NormalityVerdict::NormalClosedPseudomanifold; }
};

// Number of facets containing each triangle, in sorted triangle order.
inline std::map<Face, int> ridge_degrees(const Complex3& K) {
  std::map<Face, int> degrees;
  for (const Face& t : skeleton(K, 2)) degrees[t] = 0;
  for (const Face& facet : K.facets()) {
    const int n = static_cast<int>(facet.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != 3) continue;
      Face t;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) t.push_back(facet[static_cast<size_t>(i)]);
      degrees[t]++;
    }
  }
  return degrees;
}

// Checks, in order of precedence for the verdict: boundary ridges (degree 1),
// over-used ridges (degree >= 3), global connectivity, then vertex-link and
// edge-link connectivity. All violations are collected regardless of which
// one decides the verdict.
inline NormalityReport is_normal_pseudomanifold(const Complex3& K) {
  NormalityReport report;

  bool boundary = false, overused = false;
  for (const auto& [tri, count] : ridge_degrees(K)) {
    if (count != 2) {
      report.ridge_violations.emplace_back(tri, count);
      if (count < 2) boundary = true;
      else overused = true;
    }
  }

  report.connected = is_connected(K);

  for (VertexId v : K.vertices())
    if (!is_connected(vertex_link(K, v))) report.vertex_link_disconnected.push_back(v);
  for (const Face& e : skeleton(K, 1))
    if (!is_connected(edge_link(K, e[0], e[1]))) report.edge_link_disconnected.push_back(e);

  if (boundary) report.verdict = NormalityVerdict::HasBoundary;
  else if (overused) report.verdict = NormalityVerdict::NotNormal;
  else if (!report.connected) report.verdict = NormalityVerdict::Disconnected;
  else if (!report.vertex_link_disconnected.empty() || !report.edge_link_disconnected.empty())
    report.verdict = NormalityVerdict::NotNormal;
  else
    report.verdict = NormalityVerdict::NormalClosedPseudomanifold;
  return report;
}

// Vertices whose links are closed surfaces other than the sphere, with their
// classifications, ordered by vertex label.
inline std::vector<std::pair<VertexId, SurfaceClass>> singular_vertices(const Complex3& K) {
  require(is_normal_pseudomanifold(K).ok(), Errc::NotNormal,
          "singular vertices are defined only for normal closed pseudomanifolds");
  std::vector<std::pair<VertexId, SurfaceClass>> out;
  for (VertexId v : K.vertices()) {
    const SurfaceClass c = classify_surface(vertex_link(K, v));
    if (!c.is_sphere()) out.emplace_back(v, c);
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return K.labels().name(a.first) < K.labels().name(b.first);
  });
  return out;
}

}  // namespace np3
