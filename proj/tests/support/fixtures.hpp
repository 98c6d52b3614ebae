// Frozen test fixtures that are expensive or randomness-sensitive to find by
// search: a 12-vertex stacked sphere admitting a vertex folding whose result
// has a Klein-bottle vertex link. The folding itself is still fully
// re-validated by the library on every construction.
#pragma once

#include <np3/constructions.hpp>
#include <np3/core.hpp>

namespace testsupport {

// 12-vertex stacked 3-sphere (26 facets).
inline np3::Complex3 klein_fold_sphere() {
  return np3::Complex3::from_rows({
      {"0", "1", "2", "3"},   {"0", "1", "2", "8"},   {"0", "1", "3", "4"},
      {"0", "1", "4", "7"},   {"0", "1", "7", "10"},  {"0", "1", "8", "11"},
      {"0", "1", "10", "11"}, {"0", "2", "3", "5"},   {"0", "2", "4", "5"},
      {"0", "2", "4", "7"},   {"0", "2", "7", "8"},   {"0", "3", "4", "6"},
      {"0", "3", "5", "6"},   {"0", "4", "5", "9"},   {"0", "4", "6", "9"},
      {"0", "5", "6", "9"},   {"0", "7", "8", "10"},  {"0", "8", "10", "11"},
      {"1", "2", "3", "4"},   {"1", "2", "4", "7"},   {"1", "2", "7", "8"},
      {"1", "7", "8", "10"},  {"1", "8", "10", "11"}, {"2", "3", "4", "5"},
      {"3", "4", "5", "6"},   {"4", "5", "6", "9"},
  });
}

// Vertex folding of the sphere above whose result has one singular vertex
// with a Klein-bottle link: apex 0, facets {0,5,6,9} and {0,8,10,11},
// identifying 9<-8, 5<-10, 6<-11.
inline np3::FoldSpec klein_fold_spec(const np3::Complex3& K) {
  auto id = [&](const char* l) { return K.labels().require_vertex(l); };
  np3::FoldSpec spec;
  spec.apex = {id("0")};
  spec.facet_a = np3::make_face({id("0"), id("5"), id("6"), id("9")});
  spec.facet_b = np3::make_face({id("0"), id("8"), id("10"), id("11")});
  spec.pairing = {{id("9"), id("8")}, {id("5"), id("10")}, {id("6"), id("11")}};
  return spec;
}

inline np3::Complex3 klein_fold_result() {
  const np3::Complex3 sphere = klein_fold_sphere();
  return np3::vertex_folding(sphere, klein_fold_spec(sphere));
}

}  // namespace testsupport
