// Core representation: labeled pure simplicial complexes of dimension 1-3,
// face enumeration, links, stars, connectivity.
//
// Vertices are arbitrary non-whitespace string labels interned to dense
// integer ids; all combinatorics run on the ids. Complexes are immutable
// values: every operation elsewhere in the library builds a new complex.
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "np3/error.hpp"

namespace np3 {

using VertexId = std::int32_t;

// A face of any dimension: strictly increasing vertex ids.
using Face = std::vector<VertexId>;

inline Face make_face(Face v) {
  std::sort(v.begin(), v.end());
  require(std::adjacent_find(v.begin(), v.end()) == v.end(), Errc::DegenerateFacet,
          "face has a repeated vertex");
  return v;
}

inline bool face_contains(const Face& f, VertexId v) {
  return std::binary_search(f.begin(), f.end(), v);
}

inline bool face_subset(const Face& small, const Face& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Bijection between string labels and dense vertex ids, in interning order.
class LabelTable {
 public:
  VertexId intern(const std::string& label) {
    auto it = ids_.find(label);
    if (it != ids_.end()) return it->second;
    auto id = static_cast<VertexId>(names_.size());
    names_.push_back(label);
    ids_.emplace(label, id);
    return id;
  }

  std::optional<VertexId> find(const std::string& label) const {
    auto it = ids_.find(label);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  VertexId require_vertex(const std::string& label) const {
    auto id = find(label);
    require(id.has_value(), Errc::NotAVertex, "unknown vertex label '" + label + "'");
    return *id;
  }

  bool contains(const std::string& label) const { return ids_.count(label) != 0; }

  const std::string& name(VertexId id) const { return names_.at(static_cast<size_t>(id)); }

  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> ids_;
};

struct FVector {
  std::int64_t V = 0, E = 0, F = 0, T = 0;
  friend bool operator==(const FVector&, const FVector&) = default;
};

// A pure simplicial complex of dimension D given by its (D+1)-vertex facets.
// Lower-dimensional faces are implicit (downward closure by definition).
template <int D>
class PureComplex {
  static_assert(D >= 1 && D <= 3);

 public:
  static constexpr int kDimension = D;
  static constexpr int kFacetSize = D + 1;

  PureComplex(std::vector<Face> facets, LabelTable labels) : labels_(std::move(labels)) {
    require(!facets.empty(), Errc::Empty, "complex has no facets");
    for (Face& f : facets) {
      f = make_face(std::move(f));
      require(static_cast<int>(f.size()) == kFacetSize, Errc::MixedDimension,
              "facet has " + std::to_string(f.size()) + " vertices, expected " +
                  std::to_string(kFacetSize));
      for (VertexId v : f)
        require(v >= 0 && static_cast<std::size_t>(v) < labels_.size(), Errc::BadParam,
                "facet refers to vertex id with no label");
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    facets_ = std::move(facets);
  }

  // Build from label rows; labels are interned in row-scan order.
  static PureComplex from_rows(const std::vector<std::vector<std::string>>& rows) {
    require(!rows.empty(), Errc::Empty, "no facet rows");
    LabelTable labels;
    std::vector<Face> facets;
    facets.reserve(rows.size());
    for (const auto& row : rows) {
      require(static_cast<int>(row.size()) == kFacetSize, Errc::MixedDimension,
              "facet row has " + std::to_string(row.size()) + " labels, expected " +
                  std::to_string(kFacetSize));
      Face f;
      f.reserve(row.size());
      for (const auto& label : row) f.push_back(labels.intern(label));
      facets.push_back(std::move(f));  // ctor sorts and validates distinctness
    }
    return PureComplex(std::move(facets), std::move(labels));
  }

  int dimension() const { return D; }
  const std::vector<Face>& facets() const { return facets_; }
  const LabelTable& labels() const { return labels_; }

  bool has_facet(const Face& f) const {
    return std::binary_search(facets_.begin(), facets_.end(), f);
  }

  bool has_face(const Face& f) const {
    if (f.empty() || f.size() > static_cast<size_t>(kFacetSize)) return false;
    for (const Face& facet : facets_)
      if (face_subset(f, facet)) return true;
    return false;
  }

  // Used vertex ids, sorted. (The label table may in principle hold more
  // labels than appear in facets; counting always goes through this.)
  std::vector<VertexId> vertices() const {
    std::set<VertexId> used;
    for (const Face& f : facets_) used.insert(f.begin(), f.end());
    return {used.begin(), used.end()};
  }

  std::size_t vertex_count() const { return vertices().size(); }

  Face face_of_labels(const std::vector<std::string>& names) const {
    Face f;
    f.reserve(names.size());
    for (const auto& n : names) f.push_back(labels_.require_vertex(n));
    return make_face(std::move(f));
  }

  std::vector<std::string> labels_of(const Face& f) const {
    std::vector<std::string> out;
    out.reserve(f.size());
    for (VertexId v : f) out.push_back(labels_.name(v));
    return out;
  }

  // Facets as label rows: labels sorted within each row, rows sorted
  // lexicographically. The deterministic external form.
  std::vector<std::vector<std::string>> rows() const {
    std::vector<std::vector<std::string>> out;
    out.reserve(facets_.size());
    for (const Face& f : facets_) {
      auto row = labels_of(f);
      std::sort(row.begin(), row.end());
      out.push_back(std::move(row));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<Face> facets_;
  LabelTable labels_;
};

using Complex3 = PureComplex<3>;
using Surface2 = PureComplex<2>;
using Graph1 = PureComplex<1>;

// All k-faces (k+1 vertices each), deduplicated, in sorted order.
template <int D>
std::vector<Face> skeleton(const PureComplex<D>& K, int k) {
  require(k >= 0 && k <= D, Errc::BadDimension,
          "skeleton dimension " + std::to_string(k) + " out of range for a " +
              std::to_string(D) + "-complex");
  std::set<Face> faces;
  const int size = k + 1;
  for (const Face& facet : K.facets()) {
    // Enumerate (k+1)-subsets of the facet via bitmask (facet size <= 4).
    const int n = static_cast<int>(facet.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      Face f;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) f.push_back(facet[static_cast<size_t>(i)]);
      faces.insert(std::move(f));
    }
  }
  return {faces.begin(), faces.end()};
}

inline FVector f_vector(const Complex3& K) {
  FVector f;
  f.V = static_cast<std::int64_t>(skeleton(K, 0).size());
  f.E = static_cast<std::int64_t>(skeleton(K, 1).size());
  f.F = static_cast<std::int64_t>(skeleton(K, 2).size());
  f.T = static_cast<std::int64_t>(K.facets().size());
  return f;
}

// (V, E, F) of a 2-complex.
inline std::array<std::int64_t, 3> surface_counts(const Surface2& L) {
  return {static_cast<std::int64_t>(skeleton(L, 0).size()),
          static_cast<std::int64_t>(skeleton(L, 1).size()),
          static_cast<std::int64_t>(L.facets().size())};
}

// Maximal faces of the link of f: all (facet \ f) over facets containing f.
template <int D>
std::vector<Face> link_faces(const PureComplex<D>& K, const Face& f) {
  require(K.has_face(f), Errc::NotAFace, "link: argument is not a face of the complex");
  std::vector<Face> out;
  for (const Face& facet : K.facets()) {
    if (!face_subset(f, facet)) continue;
    Face rest;
    std::set_difference(facet.begin(), facet.end(), f.begin(), f.end(),
                        std::back_inserter(rest));
    if (!rest.empty()) out.push_back(std::move(rest));
  }
  return out;
}

namespace detail {

// Build a sub-complex from faces expressed in the parent's ids, carrying the
// parent's labels over to a fresh dense table.
template <int D, int E>
PureComplex<E> subcomplex_from_faces(const PureComplex<D>& parent,
                                     const std::vector<Face>& faces) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(faces.size());
  for (const Face& f : faces) {
    auto row = parent.labels_of(f);
    std::sort(row.begin(), row.end());
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return PureComplex<E>::from_rows(rows);
}

}  // namespace detail

inline Surface2 vertex_link(const Complex3& K, VertexId v) {
  return detail::subcomplex_from_faces<3, 2>(K, link_faces(K, Face{v}));
}

inline Graph1 vertex_link(const Surface2& L, VertexId v) {
  return detail::subcomplex_from_faces<2, 1>(L, link_faces(L, Face{v}));
}

inline Graph1 edge_link(const Complex3& K, VertexId u, VertexId v) {
  return detail::subcomplex_from_faces<3, 1>(K, link_faces(K, make_face(Face{u, v})));
}

// All facets containing f, as a complex over the same labels.
template <int D>
PureComplex<D> star(const PureComplex<D>& K, const Face& f) {
  require(K.has_face(f), Errc::NotAFace, "star: argument is not a face of the complex");
  std::vector<Face> facets;
  for (const Face& facet : K.facets())
    if (face_subset(f, facet)) facets.push_back(facet);
  return PureComplex<D>(std::move(facets), K.labels());
}

// Connectivity of the facet-adjacency graph via shared vertices.
template <int D>
bool is_connected(const PureComplex<D>& K) {
  const auto& facets = K.facets();
  if (facets.empty()) return true;
  std::vector<std::size_t> parent(facets.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

  std::unordered_map<VertexId, std::size_t> first_seen;
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (VertexId v : facets[i]) {
      auto [it, inserted] = first_seen.emplace(v, i);
      if (!inserted) unite(i, it->second);
    }
  const std::size_t root = find(0);
  for (std::size_t i = 1; i < facets.size(); ++i)
    if (find(i) != root) return false;
  return true;
}

using AnyComplex = std::variant<Complex3, Surface2>;

// Dimension-inferring constructor used by the file format: width-4 rows give
// a Complex3, width-3 rows a Surface2.
inline AnyComplex from_facets(const std::vector<std::vector<std::string>>& rows) {
  require(!rows.empty(), Errc::Empty, "no facet rows");
  const std::size_t width = rows.front().size();
  for (const auto& r : rows)
    require(r.size() == width, Errc::MixedDimension, "facet rows have differing widths");
  if (width == 4) return Complex3::from_rows(rows);
  if (width == 3) return Surface2::from_rows(rows);
  fail(Errc::BadDimension, "facet width must be 3 or 4, got " + std::to_string(width));
}

}  // namespace np3
