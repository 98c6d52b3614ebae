// Command-line surface for the np3 library: verification, analysis,
// generators, constructions, local moves, foldings, the genus-parameterized
// suspension family, isomorphism tests, and f-vector statistics.
//
// Exit codes: 0 on success, 1 when a mathematical violation is found or a
// construction is rejected, 2 on parse/usage errors.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <np3/np3.hpp>

namespace {

using namespace np3;

// FILE arguments accept a path, "-" for stdin, or a generator name.
AnyComplex load_input(const std::string& file) {
  if (file == "-") return parse_facet_stream(std::cin, "<stdin>");
  if (!std::filesystem::exists(file)) {
    for (const char* name : {"boundary4simplex", "rp2-6", "torus-7", "ovs-rp2-7"})
      if (file == name) return generate(file);
    fail(Errc::ParseError, "cannot open '" + file + "' (not a file or generator name)");
  }
  return parse_facet_file(file);
}

const Complex3& need_complex3(const AnyComplex& any) {
  require(std::holds_alternative<Complex3>(any), Errc::BadDimension,
          "this command needs a 3-complex (facets of 4 vertices)");
  return std::get<Complex3>(any);
}

const Surface2& need_surface(const AnyComplex& any) {
  require(std::holds_alternative<Surface2>(any), Errc::BadDimension,
          "this command needs a surface (facets of 3 vertices)");
  return std::get<Surface2>(any);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string piece;
  for (char c : text) {
    if (c == sep) {
      out.push_back(piece);
      piece.clear();
    } else {
      piece += c;
    }
  }
  out.push_back(piece);
  for (const auto& p : out)
    require(!p.empty(), Errc::BadParam, "empty entry in list '" + text + "'");
  return out;
}

template <int D>
Face face_of(const PureComplex<D>& K, const std::vector<std::string>& labels) {
  Face f;
  for (const auto& l : labels) f.push_back(K.labels().require_vertex(l));
  return make_face(std::move(f));
}

std::vector<std::pair<std::string, std::string>> parse_map(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& entry : split(text, ',')) {
    const auto eq = entry.find('=');
    require(eq != std::string::npos && eq > 0 && eq + 1 < entry.size(), Errc::BadParam,
            "map entries must look like a=b, got '" + entry + "'");
    out.emplace_back(entry.substr(0, eq), entry.substr(eq + 1));
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  require(static_cast<bool>(out), Errc::ParseError, "cannot write '" + out_path + "'");
  out << text;
}

// Shared result slot: subcommand callbacks run during parsing and record the
// process exit code here.
int exit_code = 0;

void add_output_option(CLI::App* cmd, std::string& out_path) {
  cmd->add_option("-o,--output", out_path, "write the facet list to this file");
}

FoldSpec fold_spec_from_flags(const Complex3& K, const Face& apex,
                              const std::vector<std::string>& facet_lists,
                              const std::string& map_text) {
  FoldSpec spec;
  spec.apex = apex;
  spec.facet_a = face_of(K, split(facet_lists[0], ','));
  spec.facet_b = face_of(K, split(facet_lists[1], ','));
  for (const auto& [a, b] : parse_map(map_text))
    spec.pairing.emplace_back(K.labels().require_vertex(a), K.labels().require_vertex(b));
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"normal 3-pseudomanifold toolkit"};
  app.require_subcommand(1);

  try {
    // ---- check ----------------------------------------------------------
    {
      auto* cmd = app.add_subcommand("check", "verify the normal-pseudomanifold conditions");
      auto file = std::make_shared<std::string>("-");
      cmd->add_option("file", *file, "facet list (path, '-', or generator name)");
      cmd->callback([file] {
        const AnyComplex any = load_input(*file);
        if (std::holds_alternative<Complex3>(any)) {
          const Complex3& K = std::get<Complex3>(any);
          const NormalityReport r = is_normal_pseudomanifold(K);
          std::cout << render_normality_text(K, r);
          exit_code = r.ok() ? 0 : 1;
        } else {
          const Surface2& L = std::get<Surface2>(any);
          if (is_closed_surface(L)) {
            const SurfaceClass c = classify_surface(L);
            std::cout << "verdict: ClosedSurface (chi = " << c.chi << ", "
                      << (c.orientable ? "orientable, genus = " + std::to_string(c.genus_h)
                                       : "non-orientable, crosscaps = " +
                                             std::to_string(c.crosscaps_m))
                      << ")\n";
            exit_code = 0;
          } else {
            std::cout << "verdict: NotClosedSurface\n";
            exit_code = 1;
          }
        }
      });
    }

    // ---- analyze --------------------------------------------------------
    {
      auto* cmd = app.add_subcommand("analyze", "full invariant and classification report");
      auto file = std::make_shared<std::string>("-");
      auto json = std::make_shared<bool>(false);
      cmd->add_option("file", *file, "facet list (path, '-', or generator name)");
      cmd->add_flag("--json", *json, "emit the report as JSON");
      cmd->callback([file, json] {
        const AnyComplex any = load_input(*file);
        const Complex3& K = need_complex3(any);
        const AnalysisReport r = analyze(K);
        if (*json)
          std::cout << render_json(K, r).dump(2) << "\n";
        else
          std::cout << render_text(K, r);
        exit_code = r.normality.ok() ? 0 : 1;
      });
    }

    // ---- gen ------------------------------------------------------------
    {
      auto* cmd = app.add_subcommand("gen", "emit a built-in complex as a facet list");
      auto name = std::make_shared<std::string>();
      auto n = std::make_shared<long>(0);
      auto out_path = std::make_shared<std::string>();
      cmd->add_option("name", *name,
                      "boundary4simplex | rp2-6 | torus-7 | ovs-rp2-7 | stacked")
          ->required();
      auto* n_opt = cmd->add_option("--n", *n, "vertex count for 'stacked'");
      add_output_option(cmd, *out_path);
      cmd->callback([name, n, n_opt, out_path] {
        const auto arg =
            n_opt->count() ? std::optional<long>(*n) : std::optional<long>(std::nullopt);
        emit(dump_facets(generate(*name, arg)), *out_path);
      });
    }

    // ---- construct ------------------------------------------------------
    {
      auto* cmd = app.add_subcommand("construct", "suspensions and connected sums");
      cmd->require_subcommand(1);

      auto* susp = cmd->add_subcommand("suspension", "suspension of a closed surface");
      auto susp_file = std::make_shared<std::string>("-");
      auto susp_out = std::make_shared<std::string>();
      susp->add_option("file", *susp_file, "surface facet list");
      add_output_option(susp, *susp_out);
      susp->callback([susp_file, susp_out] {
        emit(dump_facets(suspension(need_surface(load_input(*susp_file)))), *susp_out);
      });

      auto* ovs = cmd->add_subcommand("ovs", "one-vertex suspension of a closed surface");
      auto ovs_file = std::make_shared<std::string>("-");
      auto ovs_apex = std::make_shared<std::string>();
      auto ovs_out = std::make_shared<std::string>();
      ovs->add_option("file", *ovs_file, "surface facet list");
      ovs->add_option("--apex", *ovs_apex, "surface vertex reused in the apex edge")
          ->required();
      add_output_option(ovs, *ovs_out);
      ovs->callback([ovs_file, ovs_apex, ovs_out] {
        const AnyComplex any = load_input(*ovs_file);
        const Surface2& L = need_surface(any);
        emit(dump_facets(one_vertex_suspension(L, L.labels().require_vertex(*ovs_apex))),
             *ovs_out);
      });

      auto* csum = cmd->add_subcommand("csum", "connected sum along removed facets");
      auto f1 = std::make_shared<std::string>(), f2 = std::make_shared<std::string>();
      auto facet1 = std::make_shared<std::string>(), facet2 = std::make_shared<std::string>();
      auto map_text = std::make_shared<std::string>();
      auto csum_out = std::make_shared<std::string>();
      csum->add_option("file1", *f1, "first 3-complex")->required();
      csum->add_option("file2", *f2, "second 3-complex")->required();
      csum->add_option("--facet1", *facet1, "facet of the first complex, e.g. a,b,c,d")
          ->required();
      csum->add_option("--facet2", *facet2, "facet of the second complex")->required();
      csum->add_option("--map", *map_text, "vertex pairing, e.g. a=e,b=f,c=g,d=h")
          ->required();
      add_output_option(csum, *csum_out);
      csum->callback([f1, f2, facet1, facet2, map_text, csum_out] {
        const AnyComplex any1 = load_input(*f1), any2 = load_input(*f2);
        const Complex3& K1 = need_complex3(any1);
        const Complex3& K2 = need_complex3(any2);
        std::vector<std::pair<VertexId, VertexId>> pairing;
        for (const auto& [a, b] : parse_map(*map_text))
          pairing.emplace_back(K1.labels().require_vertex(a), K2.labels().require_vertex(b));
        emit(dump_facets(connected_sum(K1, face_of(K1, split(*facet1, ',')), K2,
                                       face_of(K2, split(*facet2, ',')), pairing)),
             *csum_out);
      });
    }

    // ---- move -----------------------------------------------------------
    {
      auto* cmd = app.add_subcommand("move", "bistellar moves");
      cmd->require_subcommand(1);

      auto* m23 = cmd->add_subcommand("23", "replace two facets over a triangle with three");
      auto m23_file = std::make_shared<std::string>("-");
      auto m23_tri = std::make_shared<std::string>();
      auto m23_out = std::make_shared<std::string>();
      m23->add_option("file", *m23_file, "3-complex facet list");
      m23->add_option("--triangle", *m23_tri, "triangle a,b,c")->required();
      add_output_option(m23, *m23_out);
      m23->callback([m23_file, m23_tri, m23_out] {
        const AnyComplex any = load_input(*m23_file);
        const Complex3& K = need_complex3(any);
        emit(dump_facets(bistellar_1_move(K, face_of(K, split(*m23_tri, ',')))), *m23_out);
      });

      auto* m14 = cmd->add_subcommand("14", "stellar subdivision of one facet");
      auto m14_file = std::make_shared<std::string>("-");
      auto m14_facet = std::make_shared<std::string>();
      auto m14_out = std::make_shared<std::string>();
      m14->add_option("file", *m14_file, "3-complex facet list");
      m14->add_option("--facet", *m14_facet, "facet a,b,c,d")->required();
      add_output_option(m14, *m14_out);
      m14->callback([m14_file, m14_facet, m14_out] {
        const AnyComplex any = load_input(*m14_file);
        const Complex3& K = need_complex3(any);
        emit(dump_facets(bistellar_0_move(K, face_of(K, split(*m14_facet, ',')))), *m14_out);
      });
    }

    // ---- contract / expand ----------------------------------------------
    {
      auto* cmd = app.add_subcommand("contract", "contract an edge satisfying the link condition");
      auto file = std::make_shared<std::string>("-");
      auto edge = std::make_shared<std::string>();
      auto out_path = std::make_shared<std::string>();
      cmd->add_option("file", *file, "3-complex facet list");
      cmd->add_option("--edge", *edge, "edge u,v (v is merged into u)")->required();
      add_output_option(cmd, *out_path);
      cmd->callback([file, edge, out_path] {
        const AnyComplex any = load_input(*file);
        const Complex3& K = need_complex3(any);
        const auto labels = split(*edge, ',');
        require(labels.size() == 2, Errc::BadParam, "--edge needs exactly two labels");
        emit(dump_facets(edge_contraction(K, K.labels().require_vertex(labels[0]),
                                          K.labels().require_vertex(labels[1]))),
             *out_path);
      });
    }
    {
      auto* cmd = app.add_subcommand("expand", "split a vertex along a separating link cycle");
      auto file = std::make_shared<std::string>("-");
      auto vertex = std::make_shared<std::string>();
      auto cycle = std::make_shared<std::string>();
      auto out_path = std::make_shared<std::string>();
      cmd->add_option("file", *file, "3-complex facet list");
      cmd->add_option("--vertex", *vertex, "vertex to split")->required();
      cmd->add_option("--cycle", *cycle, "cycle a,b,c,... in the vertex link")->required();
      add_output_option(cmd, *out_path);
      cmd->callback([file, vertex, cycle, out_path] {
        const AnyComplex any = load_input(*file);
        const Complex3& K = need_complex3(any);
        std::vector<VertexId> ids;
        for (const auto& l : split(*cycle, ',')) ids.push_back(K.labels().require_vertex(l));
        emit(dump_facets(edge_expansion(K, K.labels().require_vertex(*vertex), ids)),
             *out_path);
      });
    }

    // ---- fold -----------------------------------------------------------
    {
      auto* cmd = app.add_subcommand("fold", "identify two facets across an apex");
      cmd->require_subcommand(1);

      auto* fv = cmd->add_subcommand("vertex", "facets share exactly one vertex");
      auto fv_file = std::make_shared<std::string>("-");
      auto fv_apex = std::make_shared<std::string>();
      auto fv_facets = std::make_shared<std::vector<std::string>>();
      auto fv_map = std::make_shared<std::string>();
      auto fv_out = std::make_shared<std::string>();
      fv->add_option("file", *fv_file, "3-complex facet list");
      fv->add_option("--apex", *fv_apex, "the shared vertex")->required();
      fv->add_option("--facets", *fv_facets, "the two facets, e.g. t,a,b,c t,d,e,f")
          ->expected(2)
          ->required();
      fv->add_option("--map", *fv_map, "pairing of the non-apex vertices, e.g. a=d,b=e,c=f")
          ->required();
      add_output_option(fv, *fv_out);
      fv->callback([fv_file, fv_apex, fv_facets, fv_map, fv_out] {
        const AnyComplex any = load_input(*fv_file);
        const Complex3& K = need_complex3(any);
        const Face apex{K.labels().require_vertex(*fv_apex)};
        emit(dump_facets(vertex_folding(K, fold_spec_from_flags(K, apex, *fv_facets, *fv_map))),
             *fv_out);
      });

      auto* fe = cmd->add_subcommand("edge", "facets share exactly one edge");
      auto fe_file = std::make_shared<std::string>("-");
      auto fe_edge = std::make_shared<std::string>();
      auto fe_facets = std::make_shared<std::vector<std::string>>();
      auto fe_map = std::make_shared<std::string>();
      auto fe_out = std::make_shared<std::string>();
      fe->add_option("file", *fe_file, "3-complex facet list");
      fe->add_option("--edge", *fe_edge, "the shared edge u,v")->required();
      fe->add_option("--facets", *fe_facets, "the two facets, e.g. u,v,a,b u,v,c,d")
          ->expected(2)
          ->required();
      fe->add_option("--map", *fe_map, "pairing of the non-apex vertices, e.g. a=c,b=d")
          ->required();
      add_output_option(fe, *fe_out);
      fe->callback([fe_file, fe_edge, fe_facets, fe_map, fe_out] {
        const AnyComplex any = load_input(*fe_file);
        const Complex3& K = need_complex3(any);
        const auto labels = split(*fe_edge, ',');
        require(labels.size() == 2, Errc::BadParam, "--edge needs exactly two labels");
        const Face apex = make_face(Face{K.labels().require_vertex(labels[0]),
                                         K.labels().require_vertex(labels[1])});
        emit(dump_facets(edge_folding(K, fold_spec_from_flags(K, apex, *fe_facets, *fe_map))),
             *fe_out);
      });
    }

    // ---- km ---------------------------------------------------------------
    {
      auto* cmd = app.add_subcommand(
          "km", "minimal genus-m surface suspensions and their average edge order");
      auto genus = std::make_shared<std::int64_t>(0);
      auto sweep = std::make_shared<std::int64_t>(0);
      auto* genus_opt = cmd->add_option("--genus", *genus, "report one genus m >= 3");
      auto* sweep_opt =
          cmd->add_option("--sweep", *sweep, "check mu0 < 8 for every m in 3..MAX");
      cmd->callback([genus, sweep, genus_opt, sweep_opt] {
        require(genus_opt->count() || sweep_opt->count(), Errc::BadParam,
                "km needs --genus and/or --sweep");
        if (genus_opt->count()) {
          const KmRecord r = km_formula(*genus);
          std::cout << "genus m = " << r.m << "\n"
                    << "surface: V = " << r.surface_V << ", E = " << r.surface_E
                    << ", F = " << r.surface_F << "\n"
                    << "suspension f-vector: V=" << r.suspension_f.V
                    << " E=" << r.suspension_f.E << " F=" << r.suspension_f.F
                    << " T=" << r.suspension_f.T << "\n"
                    << "mu0 = " << r.mu0_value.fraction_string() << " (≈"
                    << r.mu0_value.decimal_string() << ")\n";
        }
        if (sweep_opt->count()) {
          require(*sweep >= 3, Errc::BadParam, "--sweep needs MAX >= 3");
          for (std::int64_t m = 3; m <= *sweep; ++m) {
            const KmRecord r = km_formula(m);  // throws BoundViolated if mu0 >= 8
            if (m == *sweep) {
              // mu0 >= 7.99 exactly: 100 * num >= 799 * den.
              const bool near_eight =
                  100 * r.mu0_value.num >= 799 * r.mu0_value.den;
              std::cout << "sweep m = 3.." << *sweep << ": mu0 < 8 for all m: yes\n"
                        << "at m = " << *sweep << ": mu0 = "
                        << r.mu0_value.fraction_string() << " (≈"
                        << r.mu0_value.decimal_string() << "), mu0 >= 7.99: "
                        << (near_eight ? "yes" : "no") << "\n";
            }
          }
        }
      });
    }

    // ---- iso --------------------------------------------------------------
    {
      auto* cmd = app.add_subcommand("iso", "decide simplicial isomorphism");
      auto f1 = std::make_shared<std::string>(), f2 = std::make_shared<std::string>();
      cmd->add_option("file1", *f1, "first complex")->required();
      cmd->add_option("file2", *f2, "second complex")->required();
      cmd->callback([f1, f2] {
        const AnyComplex a = load_input(*f1), b = load_input(*f2);
        if (a.index() != b.index()) {
          std::cout << "not isomorphic (different dimensions)\n";
          exit_code = 1;
          return;
        }
        const auto witness = std::holds_alternative<Complex3>(a)
                                 ? are_isomorphic(std::get<Complex3>(a), std::get<Complex3>(b))
                                 : are_isomorphic(std::get<Surface2>(a), std::get<Surface2>(b));
        if (!witness) {
          std::cout << "not isomorphic\n";
          exit_code = 1;
          return;
        }
        std::cout << "isomorphic\n";
        for (const auto& [x, y] : witness->pairs) std::cout << x << " -> " << y << "\n";
      });
    }

    // ---- stats ------------------------------------------------------------
    {
      auto* cmd = app.add_subcommand("stats", "invariants of a bare f-vector");
      auto fvec = std::make_shared<std::string>();
      cmd->add_option("--fvector", *fvec, "counts V,E,F,T")->required();
      cmd->callback([fvec] {
        const auto parts = split(*fvec, ',');
        require(parts.size() == 4, Errc::BadParam, "--fvector needs V,E,F,T");
        FVector f;
        try {
          f = {std::stoll(parts[0]), std::stoll(parts[1]), std::stoll(parts[2]),
               std::stoll(parts[3])};
        } catch (const std::exception&) {
          fail(Errc::BadParam, "--fvector entries must be integers");
        }
        const FVectorStats s = stats_from_fvector(f);
        std::cout << "f-vector: V=" << s.f.V << " E=" << s.f.E << " F=" << s.f.F
                  << " T=" << s.f.T << "\n"
                  << "mu0 = " << s.mu0_value.fraction_string() << " (≈"
                  << s.mu0_value.decimal_string() << ")\n"
                  << "g2 = " << s.g2 << "\n"
                  << "g3 = " << s.g3 << "\n"
                  << "2-neighborly: " << (s.two_neighborly ? "yes" : "no") << "\n"
                  << "3-neighborly: " << (s.three_neighborly ? "yes" : "no") << "\n";
        if (s.three_neighborly)
          std::cout << "mu0 == V - 2: yes\n";
      });
    }

    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_usage_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
