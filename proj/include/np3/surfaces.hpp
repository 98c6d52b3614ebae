// Closed-surface checking and classification by Euler characteristic plus
// orientability.
//
// Orientability is decided by seed-and-propagate: orient one triangle, walk
// the dual graph (triangles adjacent across shared edges), and require the
// two triangles at each edge to induce opposite directions on it. A conflict
// on any edge means non-orientable. Together with chi this pins the surface
// down completely: orientable chi = 2-2h, non-orientable chi = 2-m.
#pragma once

#include <cstdint>
#include <map>
#include <queue>
#include <vector>

#include "np3/core.hpp"
#include "np3/error.hpp"

namespace np3 {

struct SurfaceClass {
  std::int64_t chi = 0;
  bool orientable = false;
  std::int64_t genus_h = 0;      // meaningful when orientable
  std::int64_t crosscaps_m = 0;  // meaningful when non-orientable

  bool is_sphere() const { return orientable && chi == 2; }
  friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

inline std::int64_t euler_characteristic(const Surface2& L) {
  const auto [v, e, f] = surface_counts(L);
  return v - e + f;
}

// Every edge in exactly two triangles, every vertex link a single cycle,
// and the whole thing connected.
inline bool is_closed_surface(const Surface2& L) {
  std::map<Face, int> edge_count;
  for (const Face& t : L.facets())
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        edge_count[Face{t[static_cast<size_t>(i)], t[static_cast<size_t>(j)]}]++;
  for (const auto& [edge, count] : edge_count)
    if (count != 2) return false;

  for (VertexId v : L.vertices()) {
    const Graph1 lk = vertex_link(L, v);
    // Single cycle: connected with every vertex of degree 2.
    std::map<VertexId, int> degree;
    for (const Face& e : lk.facets())
      for (VertexId x : e) degree[x]++;
    for (const auto& [x, d] : degree)
      if (d != 2) return false;
    if (!is_connected(lk)) return false;
  }
  return is_connected(L);
}

namespace detail {

// Direction induced on edge {x,y} (x<y) by the triangle with sorted vertices
// (a,b,c): the positive orientation (a,b,c) walks a->b->c->a. Returns true
// when the walk traverses x->y.
inline bool edge_direction(const Face& tri, bool flipped, const Face& edge) {
  const VertexId a = tri[0], b = tri[1], c = tri[2];
  const VertexId x = edge[0], y = edge[1];
  bool forward;  // direction under the positive orientation
  if (x == a && y == b) forward = true;        // a->b
  else if (x == b && y == c) forward = true;   // b->c
  else forward = false;                        // edge {a,c}: walk goes c->a
  return flipped ? !forward : forward;
}

}  // namespace detail

inline SurfaceClass classify_surface(const Surface2& L, bool flip_seed = false) {
  require(is_closed_surface(L), Errc::NotClosedSurface,
          "classification requires a closed connected surface");

  const auto& tris = L.facets();
  std::map<Face, std::vector<std::size_t>> edge_tris;
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const Face& t = tris[i];
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        edge_tris[Face{t[static_cast<size_t>(a)], t[static_cast<size_t>(b)]}].push_back(i);
  }

  std::vector<int> flip(tris.size(), -1);  // -1 = unassigned, else 0/1
  flip[0] = flip_seed ? 1 : 0;
  std::queue<std::size_t> work;
  work.push(0);
  bool orientable = true;
  while (!work.empty() && orientable) {
    const std::size_t i = work.front();
    work.pop();
    const Face& t = tris[i];
    for (int a = 0; a < 3 && orientable; ++a)
      for (int b = a + 1; b < 3 && orientable; ++b) {
        const Face edge{t[static_cast<size_t>(a)], t[static_cast<size_t>(b)]};
        for (std::size_t j : edge_tris[edge]) {
          if (j == i) continue;
          // Consistent orientation: the neighbor must traverse the shared
          // edge in the opposite direction.
          const bool dir_i = detail::edge_direction(tris[i], flip[i] == 1, edge);
          const int needed = detail::edge_direction(tris[j], false, edge) == dir_i ? 1 : 0;
          if (flip[j] == -1) {
            flip[j] = needed;
            work.push(j);
          } else if (flip[j] != needed) {
            orientable = false;
            break;
          }
        }
      }
  }

  SurfaceClass out;
  out.chi = euler_characteristic(L);
  out.orientable = orientable;
  if (orientable) {
    require(out.chi % 2 == 0, Errc::ValidationFailed,
            "orientable surface with odd Euler characteristic");
    out.genus_h = (2 - out.chi) / 2;
    require(out.genus_h >= 0, Errc::ValidationFailed, "negative genus");
  } else {
    out.crosscaps_m = 2 - out.chi;
    require(out.crosscaps_m >= 1, Errc::ValidationFailed, "non-orientable surface with chi > 1");
  }
  return out;
}

}  // namespace np3
