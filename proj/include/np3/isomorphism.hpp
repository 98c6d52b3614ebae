// Simplicial isomorphism testing: invariant pre-screen, then backtracking
// search over vertex bijections with a hard node budget.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "np3/core.hpp"
#include "np3/error.hpp"

namespace np3 {

// A vertex bijection witnessing an isomorphism, in label space.
struct VertexBijection {
  std::vector<std::pair<std::string, std::string>> pairs;
};

namespace detail {

// Per-vertex invariant: facet degree plus the face counts of the vertex link
// by dimension. Equal classes are necessary for any isomorphism to map one
// vertex to the other.
template <int D>
std::vector<std::int64_t> vertex_signature(const PureComplex<D>& K, VertexId v) {
  std::vector<std::int64_t> sig(static_cast<std::size_t>(D) + 1, 0);
  std::set<Face> link;
  for (const Face& f : K.facets()) {
    if (!face_contains(f, v)) continue;
    ++sig[0];
    Face rest;
    for (VertexId x : f)
      if (x != v) rest.push_back(x);
    const int n = static_cast<int>(rest.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Face g;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) g.push_back(rest[static_cast<size_t>(i)]);
      link.insert(std::move(g));
    }
  }
  for (const Face& g : link) ++sig[g.size()];
  return sig;
}

template <int D>
struct IsoView {
  std::vector<VertexId> verts;
  std::map<VertexId, int> index;
  std::vector<std::vector<bool>> adj;
  std::vector<std::vector<std::int64_t>> sig;
  std::set<std::vector<int>> facet_index_rows;
  std::vector<std::vector<std::vector<int>>> facets_at;  // per vertex index

  explicit IsoView(const PureComplex<D>& K) {
    verts = K.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
    adj.assign(verts.size(), std::vector<bool>(verts.size(), false));
    facets_at.assign(verts.size(), {});
    for (const Face& f : K.facets()) {
      std::vector<int> row;
      for (VertexId x : f) row.push_back(index.at(x));
      std::sort(row.begin(), row.end());
      facet_index_rows.insert(row);
      for (int i : row) facets_at[static_cast<size_t>(i)].push_back(row);
      for (std::size_t a = 0; a < f.size(); ++a)
        for (std::size_t b = a + 1; b < f.size(); ++b) {
          const int i = index.at(f[a]), j = index.at(f[b]);
          adj[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
          adj[static_cast<size_t>(j)][static_cast<size_t>(i)] = true;
        }
    }
    for (VertexId v : verts) sig.push_back(vertex_signature(K, v));
  }
};

}  // namespace detail

// Decide whether the two complexes are simplicially isomorphic. Returns a
// label-space vertex bijection when they are, std::nullopt when they are not,
// and throws Undecided if the search exceeds node_budget candidate trials.
template <int D>
std::optional<VertexBijection> are_isomorphic(const PureComplex<D>& K1, const PureComplex<D>& K2,
                                              std::int64_t node_budget = 10'000'000) {
  if (K1.facets().size() != K2.facets().size()) return std::nullopt;
  const detail::IsoView<D> a(K1), b(K2);
  const std::size_t n = a.verts.size();
  if (n != b.verts.size()) return std::nullopt;

  // Pre-screen: the multisets of vertex signatures must agree.
  {
    auto sa = a.sig, sb = b.sig;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  // Candidate classes and their rarity, for variable ordering.
  std::map<std::vector<std::int64_t>, int> class_size;
  for (const auto& s : b.sig) ++class_size[s];

  std::vector<int> match(n, -1);     // a-index -> b-index
  std::vector<bool> used(n, false);  // b-index taken
  std::int64_t nodes = 0;

  auto pick_next = [&]() -> int {
    int best = -1;
    std::int64_t best_assigned = -1, best_rarity = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (match[i] != -1) continue;
      std::int64_t assigned = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (match[j] != -1 && a.adj[i][j]) ++assigned;
      const std::int64_t rarity = class_size.at(a.sig[i]);
      if (best == -1 || assigned > best_assigned ||
          (assigned == best_assigned && rarity < best_rarity)) {
        best = static_cast<int>(i);
        best_assigned = assigned;
        best_rarity = rarity;
      }
    }
    return best;
  };

  auto consistent = [&](std::size_t i, std::size_t cand) {
    if (a.sig[i] != b.sig[cand]) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (match[j] == -1) continue;
      if (a.adj[i][j] != b.adj[cand][static_cast<size_t>(match[j])]) return false;
    }
    // Every facet of K1 at i that just became fully assigned must land on a
    // facet of K2; this both prunes and guarantees the final map is simplicial.
    for (const auto& row : a.facets_at[i]) {
      std::vector<int> mapped;
      bool complete = true;
      for (int j : row) {
        const int m = (j == static_cast<int>(i)) ? static_cast<int>(cand)
                                                 : match[static_cast<size_t>(j)];
        if (m == -1) {
          complete = false;
          break;
        }
        mapped.push_back(m);
      }
      if (!complete) continue;
      std::sort(mapped.begin(), mapped.end());
      if (!b.facet_index_rows.count(mapped)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const int i = pick_next();
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      if (++nodes > node_budget)
        fail(Errc::Undecided, "isomorphism search exceeded its node budget");
      if (!consistent(static_cast<size_t>(i), cand)) continue;
      match[static_cast<size_t>(i)] = static_cast<int>(cand);
      used[cand] = true;
      if (self(self, depth + 1)) return true;
      match[static_cast<size_t>(i)] = -1;
      used[cand] = false;
    }
    return false;
  };

  if (!search(search, 0)) return std::nullopt;

  // Re-validate the completed witness defensively.
  for (const auto& row : a.facet_index_rows) {
    std::vector<int> mapped;
    for (int i : row) mapped.push_back(match[static_cast<size_t>(i)]);
    std::sort(mapped.begin(), mapped.end());
    require(b.facet_index_rows.count(mapped) != 0, Errc::ValidationFailed,
            "isomorphism witness failed facet validation");
  }

  VertexBijection out;
  for (std::size_t i = 0; i < n; ++i)
    out.pairs.emplace_back(K1.labels().name(a.verts[i]),
                           K2.labels().name(b.verts[static_cast<size_t>(match[i])]));
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

}  // namespace np3
