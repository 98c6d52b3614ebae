// Facet-list file format (whitespace-separated labels, one facet per line,
// '#' comments), deterministic facet dumps, and the text/JSON renderings of
// analysis reports.
#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "np3/core.hpp"
#include "np3/error.hpp"
#include "np3/invariants.hpp"
#include "np3/normality.hpp"
#include "np3/rational.hpp"

namespace np3 {

// Parse a facet list: one facet per line, vertex labels separated by blanks,
// '#' starts a comment, blank lines ignored. Every facet must have 3 labels
// (a surface) or 4 labels (a 3-complex), uniformly.
inline AnyComplex parse_facet_stream(std::istream& in, const std::string& display_name) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  long line_no = 0;
  std::size_t width = 0;
  auto where = [&](long n) { return display_name + ":" + std::to_string(n) + ": "; };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream toks(line);
    std::vector<std::string> row;
    for (std::string t; toks >> t;) row.push_back(t);
    if (row.empty()) continue;
    if (row.size() != 3 && row.size() != 4)
      fail(Errc::ParseError, where(line_no) + "expected 3 or 4 vertex labels, got " +
                                 std::to_string(row.size()));
    if (width == 0) width = row.size();
    if (row.size() != width)
      fail(Errc::MixedDimension, where(line_no) + "facet has " + std::to_string(row.size()) +
                                     " vertices but earlier facets have " + std::to_string(width));
    auto sorted = row;
    std::sort(sorted.begin(), sorted.end());
    if (const auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
      fail(Errc::DegenerateFacet, where(line_no) + "repeated vertex label '" + *dup + "'");
    rows.push_back(std::move(row));
  }
  require(!rows.empty(), Errc::Empty, display_name + ": no facets found");
  return from_facets(rows);
}

inline AnyComplex parse_facet_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), Errc::ParseError, "cannot open '" + path + "'");
  return parse_facet_stream(in, path);
}

inline AnyComplex parse_facet_text(const std::string& text) {
  std::istringstream in(text);
  return parse_facet_stream(in, "<text>");
}

// Deterministic external form: labels sorted within each facet, facets sorted
// lexicographically, one per line.
template <int D>
std::string dump_facets(const PureComplex<D>& K) {
  std::string out;
  for (const auto& row : K.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ' ';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

inline std::string dump_facets(const AnyComplex& K) {
  return std::holds_alternative<Complex3>(K) ? dump_facets(std::get<Complex3>(K))
                                             : dump_facets(std::get<Surface2>(K));
}

// ---------------------------------------------------------------------------
// Normality rendering
// ---------------------------------------------------------------------------

inline std::string face_label_string(const Complex3& K, const Face& f) {
  auto row = K.labels_of(f);
  std::sort(row.begin(), row.end());
  std::string out = "{";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ' ';
    out += row[i];
  }
  return out + "}";
}

inline std::vector<std::string> normality_violation_strings(const Complex3& K,
                                                            const NormalityReport& r) {
  std::vector<std::string> out;
  for (const auto& [tri, count] : r.ridge_violations)
    out.push_back("triangle " + face_label_string(K, tri) + " lies in " +
                  std::to_string(count) + " facet(s), expected 2");
  if (!r.connected) out.push_back("complex is not connected");
  for (VertexId v : r.vertex_link_disconnected)
    out.push_back("link of vertex " + K.labels().name(v) + " is disconnected");
  for (const Face& e : r.edge_link_disconnected)
    out.push_back("link of edge " + face_label_string(K, e) + " is disconnected");
  return out;
}

inline std::string render_normality_text(const Complex3& K, const NormalityReport& r) {
  std::string out = std::string("verdict: ") + to_string(r.verdict) + "\n";
  for (const auto& v : normality_violation_strings(K, r)) out += "  " + v + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Analysis report rendering
// ---------------------------------------------------------------------------

inline std::string render_text(const Complex3& K, const AnalysisReport& r) {
  std::string out;
  out += "f-vector: V=" + std::to_string(r.f.V) + " E=" + std::to_string(r.f.E) +
         " F=" + std::to_string(r.f.F) + " T=" + std::to_string(r.f.T) + "\n";
  out += "mu0 = " + r.mu0_value.fraction_string() + " (≈" + r.mu0_value.decimal_string() +
         ")\n";
  out += "g2 = " + std::to_string(r.g2) + "\n";
  out += "g3 = " + std::to_string(r.g3) + "\n";
  out += std::string("normality: ") + to_string(r.normality.verdict) + "\n";
  for (const auto& v : normality_violation_strings(K, r.normality)) out += "  " + v + "\n";
  if (!r.details) return out;
  const AnalysisDetails& d = *r.details;

  if (d.singular.empty()) {
    out += "singular vertices: none\n";
  } else {
    out += "singular vertices: " + std::to_string(d.singular.size()) + "\n";
    for (const auto& s : d.singular) {
      out += "  " + s.label + ": ";
      if (s.orientable)
        out += "orientable, genus = " + std::to_string(s.genus_or_crosscaps);
      else
        out += "non-orientable, crosscaps = " + std::to_string(s.genus_or_crosscaps);
      out += ", chi = " + std::to_string(s.chi) + "\n";
    }
  }
  out += "identities:\n";
  for (const auto& [name, holds] : d.identities)
    out += std::string("  ") + (holds ? "[ok] " : "[VIOLATED] ") + name + "\n";
  out += "bounds:\n";
  for (const auto& [name, holds] : d.bounds)
    out += std::string("  ") + (holds ? "[ok] " : "[VIOLATED] ") + name + "\n";
  out += "verdict: " + case_tag_string(d.verdict) + "\n";
  out += "  " + d.verdict.narrative + "\n";
  return out;
}

inline nlohmann::ordered_json render_json(const Complex3& K, const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["f_vector"] = {{"V", r.f.V}, {"E", r.f.E}, {"F", r.f.F}, {"T", r.f.T}};
  j["mu0"] = {{"num", r.mu0_value.num},
              {"den", r.mu0_value.den},
              {"decimal", r.mu0_value.decimal_string()}};
  j["g2"] = r.g2;
  j["g3"] = r.g3;
  j["normality"] = {{"verdict", to_string(r.normality.verdict)},
                    {"violations", normality_violation_strings(K, r.normality)}};
  if (!r.details) return j;
  const AnalysisDetails& d = *r.details;

  auto singular = nlohmann::ordered_json::array();
  for (const auto& s : d.singular)
    singular.push_back({{"label", s.label},
                        {"orientable", s.orientable},
                        {"genus_or_crosscaps", s.genus_or_crosscaps},
                        {"chi", s.chi}});
  j["singular_vertices"] = std::move(singular);

  auto identities = nlohmann::ordered_json::array();
  for (const auto& [name, holds] : d.identities)
    identities.push_back({{"name", name}, {"holds", holds}});
  j["identities"] = std::move(identities);

  auto bounds = nlohmann::ordered_json::array();
  for (const auto& [name, holds] : d.bounds)
    bounds.push_back({{"name", name}, {"holds", holds}});
  j["bounds"] = std::move(bounds);

  j["verdict"] = {{"case_tag", case_tag_string(d.verdict)},
                  {"narrative", d.verdict.narrative}};
  return j;
}

}  // namespace np3
