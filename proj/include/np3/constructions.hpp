// Generators for the built-in complexes and the construction operations:
// suspension, one-vertex suspension, connected sum, bistellar moves, edge
// contraction/expansion, vertex folding, edge folding.
//
// Every operation returns a brand-new complex and enforces its face-count
// delta law on every invocation; operations that promise a normal
// pseudomanifold post-validate the result and reject with ValidationFailed
// instead of returning a broken complex. Folding admissibility is decided
// entirely by post-validation: build the identified complex, then check
// simpliciality, the deltas, the link Euler-characteristic drops, and
// normality.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "np3/core.hpp"
#include "np3/error.hpp"
#include "np3/normality.hpp"
#include "np3/surfaces.hpp"

namespace np3 {

inline std::string fresh_label(const LabelTable& table, const std::string& stem) {
  if (!table.contains(stem)) return stem;
  for (long i = 0;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (!table.contains(candidate)) return candidate;
  }
}

namespace detail {

inline Complex3 complex_from_label_rows(std::vector<std::vector<std::string>> rows) {
  for (auto& r : rows) std::sort(r.begin(), r.end());
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return Complex3::from_rows(rows);
}

inline void expect_deltas(const FVector& before, const FVector& after, std::int64_t dV,
                          std::int64_t dE, std::int64_t dF, std::int64_t dT, const char* op) {
  require(after.V - before.V == dV && after.E - before.E == dE && after.F - before.F == dF &&
              after.T - before.T == dT,
          Errc::ValidationFailed,
          std::string(op) + ": face-count deltas violated (got dV=" +
              std::to_string(after.V - before.V) + " dE=" + std::to_string(after.E - before.E) +
              " dF=" + std::to_string(after.F - before.F) +
              " dT=" + std::to_string(after.T - before.T) + ")");
}

inline void expect_normal(const Complex3& K, const char* op) {
  const NormalityReport r = is_normal_pseudomanifold(K);
  require(r.ok(), Errc::ValidationFailed,
          std::string(op) + ": result is not a normal closed pseudomanifold (" +
              to_string(r.verdict) + ")");
}

// Every nonempty subset of every listed face.
inline std::set<Face> all_subfaces(const std::vector<Face>& maximal) {
  std::set<Face> out;
  for (const Face& f : maximal) {
    const int n = static_cast<int>(f.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Face g;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) g.push_back(f[static_cast<size_t>(i)]);
      out.insert(std::move(g));
    }
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

// All ten 4-subsets of five vertices: the minimal triangulated 3-sphere.
inline Complex3 boundary_4_simplex() {
  std::vector<std::vector<std::string>> rows;
  const std::vector<std::string> v{"1", "2", "3", "4", "5"};
  for (int a = 0; a < 5; ++a) {
    std::vector<std::string> row;
    for (int i = 0; i < 5; ++i)
      if (i != a) row.push_back(v[static_cast<size_t>(i)]);
    rows.push_back(std::move(row));
  }
  return Complex3::from_rows(rows);
}

// The 6-vertex triangulation of the real projective plane.
inline Surface2 rp2_6() {
  return Surface2::from_rows({{"1", "2", "4"},
                              {"1", "3", "4"},
                              {"1", "2", "5"},
                              {"1", "3", "6"},
                              {"1", "5", "6"},
                              {"2", "4", "6"},
                              {"2", "3", "5"},
                              {"2", "3", "6"},
                              {"3", "4", "5"},
                              {"4", "5", "6"}});
}

// The 7-vertex torus: orbits of {1,2,4} and {1,2,6} under i -> i+1 (mod 7).
// The stored list is treated as untrusted and re-verified on every call.
inline Surface2 torus_7() {
  const Surface2 L = Surface2::from_rows(
      {{"1", "2", "4"}, {"2", "3", "5"}, {"3", "4", "6"}, {"4", "5", "7"},
       {"1", "5", "6"}, {"2", "6", "7"}, {"1", "3", "7"},
       {"1", "2", "6"}, {"2", "3", "7"}, {"1", "3", "4"}, {"2", "4", "5"},
       {"3", "5", "6"}, {"4", "6", "7"}, {"1", "5", "7"}});
  const SurfaceClass c = classify_surface(L);
  require(c.orientable && c.chi == 0, Errc::ValidationFailed,
          "embedded 7-vertex torus list failed verification");
  return L;
}

// The 7-vertex one-vertex suspension of the 6-vertex projective plane, with
// apex edge uv replacing vertex 6 of the base surface.
inline Complex3 ovs_rp2_7() {
  return detail::complex_from_label_rows(
      {{"1", "2", "4", "u"}, {"1", "3", "4", "u"}, {"1", "2", "5", "u"},
       {"1", "2", "4", "v"}, {"1", "3", "4", "v"}, {"1", "2", "5", "v"},
       {"1", "3", "u", "v"}, {"1", "5", "u", "v"}, {"2", "4", "u", "v"},
       {"2", "3", "5", "u"}, {"2", "3", "5", "v"}, {"2", "3", "u", "v"},
       {"3", "4", "5", "u"}, {"3", "4", "5", "v"}, {"4", "5", "u", "v"}});
}

// Stellar subdivision of one facet: replace abcd with w * boundary(abcd).
inline Complex3 bistellar_0_move(const Complex3& K, const Face& facet,
                                 const std::string& fresh_stem = "a") {
  require(K.has_facet(facet), Errc::NotAFacet, "1-4 move: argument is not a facet");
  const bool input_normal = is_normal_pseudomanifold(K).ok();
  const std::string w = fresh_label(K.labels(), fresh_stem);

  std::vector<std::vector<std::string>> rows;
  for (const Face& f : K.facets())
    if (f != facet) rows.push_back(K.labels_of(f));
  for (int skip = 0; skip < 4; ++skip) {
    std::vector<std::string> row{w};
    for (int i = 0; i < 4; ++i)
      if (i != skip) row.push_back(K.labels().name(facet[static_cast<size_t>(i)]));
    rows.push_back(std::move(row));
  }
  Complex3 result = detail::complex_from_label_rows(std::move(rows));
  detail::expect_deltas(f_vector(K), f_vector(result), 1, 4, 6, 3, "1-4 move");
  if (input_normal) detail::expect_normal(result, "1-4 move");
  return result;
}

// Stacked 3-sphere on n vertices: boundary of the 4-simplex followed by
// n-5 stellar subdivisions, each splitting the lexicographically first facet.
// Deterministic; new vertices are labeled "6", "7", ...
inline Complex3 stacked_sphere(long n) {
  require(n >= 5, Errc::BadParam, "a stacked sphere needs at least 5 vertices");
  Complex3 K = boundary_4_simplex();
  for (long next = 6; next <= n; ++next)
    K = bistellar_0_move(K, K.face_of_labels(K.rows().front()), std::to_string(next));
  return K;
}

inline std::variant<Complex3, Surface2> generate(const std::string& name,
                                                 std::optional<long> n = std::nullopt) {
  if (name == "stacked") {
    require(n.has_value(), Errc::BadParam, "generator 'stacked' requires --n");
    return stacked_sphere(*n);
  }
  require(!n.has_value(), Errc::BadParam, "--n only applies to the 'stacked' generator");
  if (name == "boundary4simplex") return boundary_4_simplex();
  if (name == "rp2-6") return rp2_6();
  if (name == "torus-7") return torus_7();
  if (name == "ovs-rp2-7") return ovs_rp2_7();
  fail(Errc::UnknownName, "unknown generator '" + name + "'");
}

// ---------------------------------------------------------------------------
// Suspensions
// ---------------------------------------------------------------------------

// Join of the surface with two fresh apexes.
inline Complex3 suspension(const Surface2& L) {
  require(is_closed_surface(L), Errc::NotClosedSurface,
          "suspension requires a closed connected surface");
  LabelTable scratch = L.labels();
  const std::string u = fresh_label(scratch, "u");
  scratch.intern(u);
  const std::string v = fresh_label(scratch, "v");

  std::vector<std::vector<std::string>> rows;
  for (const auto& t : L.rows()) {
    auto ru = t;
    ru.push_back(u);
    auto rv = t;
    rv.push_back(v);
    rows.push_back(std::move(ru));
    rows.push_back(std::move(rv));
  }
  Complex3 K = detail::complex_from_label_rows(std::move(rows));

  const auto [lv, le, lf] = surface_counts(L);
  const FVector f = f_vector(K);
  require(f.V == lv + 2 && f.E == 2 * lv + le && f.F == 2 * le + lf && f.T == 2 * lf,
          Errc::ValidationFailed, "suspension: f-vector law violated");
  detail::expect_normal(K, "suspension");
  return K;
}

// Suspension that reuses vertex w of the surface: the apex edge uv replaces
// w, with facets uv * lk(w), u * (L minus star of w), v * (L minus star of w).
inline Complex3 one_vertex_suspension(const Surface2& L, VertexId w) {
  require(is_closed_surface(L), Errc::NotClosedSurface,
          "one-vertex suspension requires a closed connected surface");
  require(L.has_face(Face{w}), Errc::NotAVertex, "one-vertex suspension: no such vertex");
  LabelTable scratch = L.labels();
  const std::string u = fresh_label(scratch, "u");
  scratch.intern(u);
  const std::string v = fresh_label(scratch, "v");
  const std::string w_name = L.labels().name(w);

  std::vector<std::vector<std::string>> rows;
  const std::vector<Face> lk_w = link_faces(L, Face{w});
  for (const Face& e : lk_w) {
    auto row = L.labels_of(e);
    row.push_back(u);
    row.push_back(v);
    rows.push_back(std::move(row));
  }
  std::size_t away_from_w = 0;
  for (const auto& t : L.rows()) {
    if (std::find(t.begin(), t.end(), w_name) != t.end()) continue;
    ++away_from_w;
    auto ru = t;
    ru.push_back(u);
    auto rv = t;
    rv.push_back(v);
    rows.push_back(std::move(ru));
    rows.push_back(std::move(rv));
  }
  Complex3 K = detail::complex_from_label_rows(std::move(rows));

  const auto [lv, le, lf] = surface_counts(L);
  const auto deg_w = static_cast<std::int64_t>(lk_w.size());
  const FVector f = f_vector(K);
  require(f.V == lv + 1 && f.T == deg_w + 2 * (lf - deg_w), Errc::ValidationFailed,
          "one-vertex suspension: f-vector law violated");
  require(static_cast<std::int64_t>(away_from_w) == lf - deg_w, Errc::ValidationFailed,
          "one-vertex suspension: star size inconsistent");
  detail::expect_normal(K, "one-vertex suspension");
  return K;
}

// ---------------------------------------------------------------------------
// Connected sum
// ---------------------------------------------------------------------------

// Remove facet1 from K1 and facet2 from K2, then glue along the removed
// boundaries by the given vertex pairing (facet1 vertex -> facet2 vertex).
// K2's remaining vertices keep their labels when free, otherwise get fresh
// ones. Self-gluing is not supported: the two complexes are distinct values.
inline Complex3 connected_sum(const Complex3& K1, const Face& facet1, const Complex3& K2,
                              const Face& facet2,
                              const std::vector<std::pair<VertexId, VertexId>>& pairing) {
  require(K1.has_facet(facet1), Errc::NotAFacet, "connected sum: facet1 is not a facet of K1");
  require(K2.has_facet(facet2), Errc::NotAFacet, "connected sum: facet2 is not a facet of K2");
  require(pairing.size() == 4, Errc::BadPairing, "connected sum: pairing must have 4 entries");
  Face firsts, seconds;
  for (const auto& [a, b] : pairing) {
    firsts.push_back(a);
    seconds.push_back(b);
  }
  std::sort(firsts.begin(), firsts.end());
  std::sort(seconds.begin(), seconds.end());
  require(firsts == facet1 && seconds == facet2, Errc::BadPairing,
          "connected sum: pairing must biject facet1 onto facet2");

  // Map every K2 vertex to a label in the result.
  LabelTable scratch = K1.labels();
  std::map<VertexId, std::string> k2_name;
  for (const auto& [a, b] : pairing) k2_name[b] = K1.labels().name(a);
  std::vector<std::pair<std::string, VertexId>> carried;  // sorted by K2 label
  for (VertexId x : K2.vertices())
    if (!k2_name.count(x)) carried.emplace_back(K2.labels().name(x), x);
  std::sort(carried.begin(), carried.end());
  for (const auto& [name, x] : carried) {
    const std::string assigned = fresh_label(scratch, name);
    scratch.intern(assigned);
    k2_name[x] = assigned;
  }

  std::vector<std::vector<std::string>> rows;
  for (const Face& f : K1.facets())
    if (f != facet1) rows.push_back(K1.labels_of(f));
  for (const Face& f : K2.facets()) {
    if (f == facet2) continue;
    std::vector<std::string> row;
    for (VertexId x : f) row.push_back(k2_name.at(x));
    rows.push_back(std::move(row));
  }
  Complex3 K = detail::complex_from_label_rows(std::move(rows));

  const FVector f1 = f_vector(K1), f2 = f_vector(K2), f = f_vector(K);
  require(f.V == f1.V + f2.V - 4 && f.E == f1.E + f2.E - 6 && f.F == f1.F + f2.F - 4 &&
              f.T == f1.T + f2.T - 2,
          Errc::ValidationFailed, "connected sum: face-count deltas violated");
  detail::expect_normal(K, "connected sum");
  return K;
}

// ---------------------------------------------------------------------------
// Bistellar 1-move (2-3 move)
// ---------------------------------------------------------------------------

// Replace the two facets abc*d and abc*e sharing the triangle abc with the
// three facets de*ab, de*bc, de*ca. Requires the edge de to be absent.
inline Complex3 bistellar_1_move(const Complex3& K, const Face& triangle) {
  require(triangle.size() == 3 && K.has_face(triangle), Errc::NotAFace,
          "2-3 move: argument is not a triangle of the complex");
  const bool input_normal = is_normal_pseudomanifold(K).ok();

  std::vector<Face> around;
  for (const Face& f : K.facets())
    if (face_subset(triangle, f)) around.push_back(f);
  require(around.size() == 2, Errc::NotInterior,
          "2-3 move: triangle lies in " + std::to_string(around.size()) +
              " facets, need exactly 2");
  Face d_face, e_face;
  std::set_difference(around[0].begin(), around[0].end(), triangle.begin(), triangle.end(),
                      std::back_inserter(d_face));
  std::set_difference(around[1].begin(), around[1].end(), triangle.begin(), triangle.end(),
                      std::back_inserter(e_face));
  const VertexId d = d_face[0], e = e_face[0];
  require(!K.has_face(make_face(Face{d, e})), Errc::EdgeExists,
          "2-3 move: the opposite vertices are already joined by an edge");

  std::vector<std::vector<std::string>> rows;
  for (const Face& f : K.facets())
    if (f != around[0] && f != around[1]) rows.push_back(K.labels_of(f));
  for (int skip = 0; skip < 3; ++skip) {
    std::vector<std::string> row{K.labels().name(d), K.labels().name(e)};
    for (int i = 0; i < 3; ++i)
      if (i != skip) row.push_back(K.labels().name(triangle[static_cast<size_t>(i)]));
    rows.push_back(std::move(row));
  }
  Complex3 result = detail::complex_from_label_rows(std::move(rows));
  detail::expect_deltas(f_vector(K), f_vector(result), 0, 1, 2, 1, "2-3 move");
  if (input_normal) detail::expect_normal(result, "2-3 move");
  return result;
}

// ---------------------------------------------------------------------------
// Edge contraction / expansion
// ---------------------------------------------------------------------------

// Merge v into u. Requires the link condition lk(u) ∩ lk(v) = lk(uv); the
// result is post-validated as a normal pseudomanifold.
inline Complex3 edge_contraction(const Complex3& K, VertexId u, VertexId v) {
  const Face uv = make_face(Face{u, v});
  require(K.has_face(uv), Errc::NotAFace, "contraction: uv is not an edge of the complex");

  const auto faces_u = detail::all_subfaces(link_faces(K, Face{u}));
  const auto faces_v = detail::all_subfaces(link_faces(K, Face{v}));
  const auto faces_uv = detail::all_subfaces(link_faces(K, uv));
  for (const Face& f : faces_u)
    if (faces_v.count(f))
      require(faces_uv.count(f) != 0, Errc::LinkConditionFailed,
              "contraction: lk(u) and lk(v) share a face outside lk(uv)");

  const std::string u_name = K.labels().name(u);
  const std::string v_name = K.labels().name(v);
  std::vector<std::vector<std::string>> rows;
  for (const Face& f : K.facets()) {
    if (face_contains(f, u) && face_contains(f, v)) continue;
    auto row = K.labels_of(f);
    for (auto& name : row)
      if (name == v_name) name = u_name;
    rows.push_back(std::move(row));
  }
  Complex3 result = detail::complex_from_label_rows(std::move(rows));

  std::set<VertexId> lk_uv_vertices;
  for (const Face& e : link_faces(K, uv)) lk_uv_vertices.insert(e.begin(), e.end());
  const auto k = static_cast<std::int64_t>(lk_uv_vertices.size());
  detail::expect_deltas(f_vector(K), f_vector(result), -1, -(k + 1), -2 * k, -k, "contraction");
  detail::expect_normal(result, "contraction");
  return result;
}

// Inverse of contraction: split u along a cycle in lk(u). The cycle must
// separate the link triangles into exactly two components; the component
// containing the lexicographically smallest triangle stays with u, the other
// moves to a fresh vertex v, and uv * e is added for every cycle edge e.
inline Complex3 edge_expansion(const Complex3& K, VertexId u,
                               const std::vector<VertexId>& cycle) {
  require(K.has_face(Face{u}), Errc::NotAVertex, "expansion: no such vertex");
  require(cycle.size() >= 3, Errc::BadParam, "expansion: cycle needs at least 3 vertices");
  {
    Face sorted_cycle(cycle);
    std::sort(sorted_cycle.begin(), sorted_cycle.end());
    require(std::adjacent_find(sorted_cycle.begin(), sorted_cycle.end()) == sorted_cycle.end(),
            Errc::BadParam, "expansion: cycle vertices must be distinct");
  }
  const bool input_normal = is_normal_pseudomanifold(K).ok();

  const std::vector<Face> link_tris = link_faces(K, Face{u});
  std::set<Face> cycle_edges;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Face e = make_face(Face{cycle[i], cycle[(i + 1) % cycle.size()]});
    cycle_edges.insert(e);
  }
  const auto link_edge_set = detail::all_subfaces(link_tris);
  for (const Face& e : cycle_edges)
    require(link_edge_set.count(e) != 0, Errc::BadPartition,
            "expansion: cycle is not a cycle in lk(u)");

  // Components of the link triangles, adjacent across shared non-cycle edges.
  std::map<Face, std::vector<std::size_t>> edge_tris;
  for (std::size_t i = 0; i < link_tris.size(); ++i) {
    const Face& t = link_tris[i];
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        edge_tris[Face{t[static_cast<size_t>(a)], t[static_cast<size_t>(b)]}].push_back(i);
  }
  std::vector<int> component(link_tris.size(), -1);
  int components = 0;
  for (std::size_t seed = 0; seed < link_tris.size(); ++seed) {
    if (component[seed] != -1) continue;
    const int id = components++;
    std::vector<std::size_t> stack{seed};
    component[seed] = id;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      const Face& t = link_tris[i];
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
          const Face e{t[static_cast<size_t>(a)], t[static_cast<size_t>(b)]};
          if (cycle_edges.count(e)) continue;
          for (std::size_t j : edge_tris[e])
            if (component[j] == -1) {
              component[j] = id;
              stack.push_back(j);
            }
        }
    }
  }
  require(components == 2, Errc::BadPartition,
          "expansion: cycle separates lk(u) into " + std::to_string(components) +
              " components, need exactly 2");

  // Deterministic side assignment by smallest label row.
  std::size_t smallest = 0;
  {
    std::vector<std::vector<std::string>> tri_rows;
    for (const Face& t : link_tris) {
      auto row = K.labels_of(t);
      std::sort(row.begin(), row.end());
      tri_rows.push_back(std::move(row));
    }
    for (std::size_t i = 1; i < tri_rows.size(); ++i)
      if (tri_rows[i] < tri_rows[smallest]) smallest = i;
  }
  const int u_side = component[smallest];

  const std::string u_name = K.labels().name(u);
  const std::string v_name = fresh_label(K.labels(), "v");
  std::vector<std::vector<std::string>> rows;
  for (const Face& f : K.facets())
    if (!face_contains(f, u)) rows.push_back(K.labels_of(f));
  for (std::size_t i = 0; i < link_tris.size(); ++i) {
    auto row = K.labels_of(link_tris[i]);
    row.push_back(component[i] == u_side ? u_name : v_name);
    rows.push_back(std::move(row));
  }
  for (const Face& e : cycle_edges) {
    auto row = K.labels_of(e);
    row.push_back(u_name);
    row.push_back(v_name);
    rows.push_back(std::move(row));
  }
  Complex3 result = detail::complex_from_label_rows(std::move(rows));

  const auto k = static_cast<std::int64_t>(cycle.size());
  detail::expect_deltas(f_vector(K), f_vector(result), 1, k + 1, 2 * k, k, "expansion");
  if (input_normal) detail::expect_normal(result, "expansion");
  return result;
}

// ---------------------------------------------------------------------------
// Foldings
// ---------------------------------------------------------------------------

// Identification data for a folding: two facets meeting exactly in the apex
// (a vertex for vertex folding, an edge for edge folding) and a pairing of
// their remaining vertices. The facet_a side keeps its labels.
struct FoldSpec {
  Face apex;
  Face facet_a;
  Face facet_b;
  std::vector<std::pair<VertexId, VertexId>> pairing;  // (facet_a vertex, facet_b vertex)
};

namespace detail {

inline Complex3 fold(const Complex3& K, const FoldSpec& spec, const char* op) {
  require(K.has_facet(spec.facet_a) && K.has_facet(spec.facet_b), Errc::NotAFacet,
          std::string(op) + ": facet_a/facet_b must be facets of the complex");
  Face shared;
  std::set_intersection(spec.facet_a.begin(), spec.facet_a.end(), spec.facet_b.begin(),
                        spec.facet_b.end(), std::back_inserter(shared));
  require(shared == spec.apex, Errc::BadIntersection,
          std::string(op) + ": the facets must intersect exactly in the apex");

  Face rest_a, rest_b;
  std::set_difference(spec.facet_a.begin(), spec.facet_a.end(), spec.apex.begin(),
                      spec.apex.end(), std::back_inserter(rest_a));
  std::set_difference(spec.facet_b.begin(), spec.facet_b.end(), spec.apex.begin(),
                      spec.apex.end(), std::back_inserter(rest_b));
  Face firsts, seconds;
  for (const auto& [a, b] : spec.pairing) {
    firsts.push_back(a);
    seconds.push_back(b);
  }
  std::sort(firsts.begin(), firsts.end());
  std::sort(seconds.begin(), seconds.end());
  require(firsts == rest_a && seconds == rest_b, Errc::BadPairing,
          std::string(op) + ": pairing must biject the non-apex vertices of the facets");

  std::map<VertexId, std::string> rename;
  for (const auto& [a, b] : spec.pairing) rename[b] = K.labels().name(a);

  std::vector<std::vector<std::string>> rows;
  for (const Face& f : K.facets()) {
    if (f == spec.facet_a || f == spec.facet_b) continue;
    std::set<std::string> mapped;
    for (VertexId x : f) {
      auto it = rename.find(x);
      mapped.insert(it == rename.end() ? K.labels().name(x) : it->second);
    }
    require(mapped.size() == 4, Errc::ValidationFailed,
            std::string(op) + ": identification degenerates a facet");
    rows.emplace_back(mapped.begin(), mapped.end());
  }
  {
    auto sorted_rows = rows;
    std::sort(sorted_rows.begin(), sorted_rows.end());
    require(std::adjacent_find(sorted_rows.begin(), sorted_rows.end()) == sorted_rows.end(),
            Errc::ValidationFailed, std::string(op) + ": identification collides two facets");
  }
  return complex_from_label_rows(std::move(rows));
}

inline std::int64_t link_chi_by_label(const Complex3& K, const std::string& name) {
  return euler_characteristic(vertex_link(K, K.labels().require_vertex(name)));
}

}  // namespace detail

// Identify two facets sharing exactly the apex vertex t. The link of t gains
// a handle or a crosscap pair: chi(lk t) drops by exactly 2.
inline Complex3 vertex_folding(const Complex3& K, const FoldSpec& spec) {
  require(spec.apex.size() == 1, Errc::BadParam, "vertex folding: apex must be one vertex");
  require(face_contains(spec.facet_a, spec.apex[0]) && face_contains(spec.facet_b, spec.apex[0]),
          Errc::BadIntersection, "vertex folding: apex must lie in both facets");
  Complex3 result = detail::fold(K, spec, "vertex folding");
  detail::expect_deltas(f_vector(K), f_vector(result), -3, -6, -4, -2, "vertex folding");
  const std::string t = K.labels().name(spec.apex[0]);
  require(detail::link_chi_by_label(result, t) == detail::link_chi_by_label(K, t) - 2,
          Errc::ValidationFailed,
          "vertex folding: chi(lk apex) must drop by exactly 2");
  detail::expect_normal(result, "vertex folding");
  return result;
}

// Identify two facets sharing exactly the apex edge uv. The links of u and v
// each lose 1 from chi (sphere links become projective planes); g2 rises by
// exactly 3 as a consequence of the deltas.
inline Complex3 edge_folding(const Complex3& K, const FoldSpec& spec) {
  require(spec.apex.size() == 2, Errc::BadParam, "edge folding: apex must be an edge");
  require(K.has_face(spec.apex), Errc::NotAFace, "edge folding: apex edge is absent");
  Complex3 result = detail::fold(K, spec, "edge folding");
  detail::expect_deltas(f_vector(K), f_vector(result), -2, -5, -4, -2, "edge folding");
  for (VertexId x : spec.apex) {
    const std::string name = K.labels().name(x);
    require(detail::link_chi_by_label(result, name) == detail::link_chi_by_label(K, name) - 1,
            Errc::ValidationFailed,
            "edge folding: chi(lk " + name + ") must drop by exactly 1");
  }
  detail::expect_normal(result, "edge folding");
  return result;
}

}  // namespace np3
