// Command-line front end: validation, exact solving, certificate checking,
// constructive map building, example generation, and the verification
// harness. All output is JSON on stdout unless --pretty asks for tables.
//
// Exit codes: 0 success, 1 check/verification failure, 2 input error,
// 3 budget exhausted.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "xindlab/json_io.hpp"
#include "xindlab/verify.hpp"

namespace {

using namespace xindlab;
using io::Json;

struct Output {
  std::string path;  // empty = stdout
  bool pretty = false;

  void emit(const Json& j) const {
    if (path.empty()) {
      std::cout << j.dump(2) << "\n";
    } else {
      io::save_file(path, j);
    }
  }
};

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Err::ParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Manifest {
  std::string command;
  std::map<std::string, std::string> inputs;  // path -> digest
  std::optional<std::uint64_t> seed;
  Budget budget;
  std::uint64_t nodes = 0;
  double wall_ms = 0.0;
  std::string output;  // empty = stdout

  Json to_json() const {
    Json in = Json::object();
    for (const auto& [path, digest] : inputs) in[path] = digest;
    Json j{{"command", command},
           {"inputs", in},
           {"outputs", output.empty() ? Json::array({"stdout"}) : Json::array({output})},
           {"budget", Json{{"max_nodes", budget.max_nodes},
                           {"max_seconds", budget.max_seconds},
                           {"jobs", budget.jobs}}},
           {"wall_ms", wall_ms},
           {"nodes", nodes}};
    if (seed)
      j["seed"] = *seed;
    else
      j["seed"] = nullptr;
    return j;
  }
};

Json load_input(Manifest& manifest, const std::string& path) {
  std::string bytes = read_file(path);
  char digest[32];
  std::snprintf(digest, sizeof digest, "fnv1a:%016llx",
                static_cast<unsigned long long>(fnv1a(bytes)));
  manifest.inputs[path] = digest;
  return io::parse_text(bytes);
}

// Poset and complex files are distinguished by their fields.
bool looks_like_complex(const Json& j) { return j.is_object() && j.contains("facets"); }

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case Err::BudgetExceeded: return 3;
    default: return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cross-index and simplicial-index workbench"};
  app.require_subcommand(1);

  Output out;
  Budget budget;
  if (const char* env = std::getenv("XINDLAB_BUDGET_SECONDS"))
    budget.max_seconds = std::atof(env);
  app.add_option("-o,--output", out.path, "write the result to a file instead of stdout");
  app.add_flag("--pretty", out.pretty, "human-readable tables instead of JSON");
  app.add_option("--max-nodes", budget.max_nodes, "search node budget per feasibility call");
  app.add_option("--max-seconds", budget.max_seconds, "wall-clock budget per feasibility call");
  app.add_option("--jobs", budget.jobs, "parallel branch exploration (node counts approximate)");

  // --- validate --------------------------------------------------------
  std::string validate_path;
  auto* cmd_validate = app.add_subcommand("validate", "check every axiom of a poset/complex file");
  cmd_validate->add_option("path", validate_path)->required();

  // --- xind / sind -----------------------------------------------------
  std::string solve_path;
  auto* cmd_xind = app.add_subcommand("xind", "exact cross-index with certificate");
  cmd_xind->add_option("path", solve_path)->required();
  auto* cmd_sind = app.add_subcommand("sind", "exact simplicial index with certificate");
  cmd_sind->add_option("path", solve_path)->required();

  // --- check -----------------------------------------------------------
  std::string check_obj, check_cert;
  auto* cmd_check = app.add_subcommand("check", "audit a certificate against its instance");
  cmd_check->add_option("path", check_obj)->required();
  cmd_check->add_option("certificate", check_cert)->required();

  // --- construct ---------------------------------------------------------
  auto* cmd_construct = app.add_subcommand("construct", "build certificates from given ones");
  cmd_construct->require_subcommand(1);
  std::string c_poset, c_poset2, c_cert, c_cert2, c_a, c_b, c_sign_a, c_sign_b;
  auto* ct_height = cmd_construct->add_subcommand("height", "value = longest chain below");
  ct_height->add_option("poset", c_poset)->required();
  auto* ct_join = cmd_construct->add_subcommand("join", "stack two certificates");
  ct_join->add_option("posetP", c_poset)->required();
  ct_join->add_option("posetQ", c_poset2)->required();
  ct_join->add_option("certP", c_cert)->required();
  ct_join->add_option("certQ", c_cert2)->required();
  auto* ct_down = cmd_construct->add_subcommand("downward-union",
                                                "glue along a downward-closed part");
  ct_down->add_option("poset", c_poset)->required();
  ct_down->add_option("--a", c_a, "ids of the downward-closed part")->required();
  ct_down->add_option("--b", c_b, "ids of the other part")->required();
  ct_down->add_option("certA", c_cert)->required();
  ct_down->add_option("certB", c_cert2)->required();
  auto* ct_u0 = cmd_construct->add_subcommand("union0", "union of two zero-index parts");
  ct_u0->add_option("poset", c_poset)->required();
  ct_u0->add_option("--a", c_a)->required();
  ct_u0->add_option("--b", c_b)->required();
  ct_u0->add_option("--sign-a", c_sign_a)->required();
  ct_u0->add_option("--sign-b", c_sign_b)->required();
  auto* ct_u0z2 = cmd_construct->add_subcommand("union0-z2",
                                                "order-2 union of two zero-index parts");
  ct_u0z2->add_option("poset", c_poset)->required();
  ct_u0z2->add_option("--a", c_a)->required();
  ct_u0z2->add_option("--b", c_b)->required();
  ct_u0z2->add_option("--sign-a", c_sign_a)->required();
  ct_u0z2->add_option("--sign-b", c_sign_b)->required();
  auto* ct_ug = cmd_construct->add_subcommand("union-general", "general union of certificates");
  ct_ug->add_option("poset", c_poset)->required();
  ct_ug->add_option("--a", c_a)->required();
  ct_ug->add_option("--b", c_b)->required();
  ct_ug->add_option("certA", c_cert)->required();
  ct_ug->add_option("certB", c_cert2)->required();
  auto* ct_md = cmd_construct->add_subcommand("move-down", "anchor every level from below");
  ct_md->add_option("poset", c_poset)->required();
  ct_md->add_option("cert", c_cert)->required();

  // --- gen ---------------------------------------------------------------
  auto* cmd_gen = app.add_subcommand("gen", "generators for the named examples");
  cmd_gen->require_subcommand(1);
  std::string g_group = "Z2", g_gstar, g_g1, g_g2, g_g3, g_graph, g_mode = "layered";
  std::string g_poset_path;
  int g_n = 0, g_m = 0, g_k = 1, g_orbits = 2, g_complete = 0;
  double g_density = 0.5;
  std::uint64_t g_seed = 1;
  auto* gn_qn = cmd_gen->add_subcommand("qn", "the poset Q_nG");
  gn_qn->add_option("--group", g_group);
  gn_qn->add_option("--n", g_n)->required();
  auto* gn_pg = cmd_gen->add_subcommand("pg", "the six-orbit height-2 example");
  gn_pg->add_option("--group", g_group);
  gn_pg->add_option("--gstar", g_gstar, "group label of the twist")->required();
  auto* gn_mu = cmd_gen->add_subcommand("mu", "the seven-orbit union example");
  gn_mu->add_option("--group", g_group);
  gn_mu->add_option("--g1", g_g1);
  gn_mu->add_option("--g2", g_g2);
  gn_mu->add_option("--g3", g_g3);
  auto* gn_sharp = cmd_gen->add_subcommand("sharp", "sharp family for the general bound");
  gn_sharp->add_option("--group", g_group);
  gn_sharp->add_option("--m", g_m)->required();
  gn_sharp->add_option("--n", g_n)->required();
  auto* gn_z2s = cmd_gen->add_subcommand("z2sharp", "split of Q_n attaining the order-2 bound");
  gn_z2s->add_option("--n", g_n)->required();
  gn_z2s->add_option("--m", g_m)->required();
  auto* gn_jp = cmd_gen->add_subcommand("joinpower", "iterated join of a poset file");
  gn_jp->add_option("poset", g_poset_path)->required();
  gn_jp->add_option("--k", g_k)->required();
  auto* gn_kxg = cmd_gen->add_subcommand("kxg", "the graph product K x G");
  gn_kxg->add_option("--group", g_group);
  gn_kxg->add_option("--graph", g_graph, "graph JSON file");
  gn_kxg->add_option("--complete", g_complete, "use the complete graph K_n");
  auto* gn_rand = cmd_gen->add_subcommand("random", "seeded random free G-poset");
  gn_rand->add_option("--group", g_group);
  gn_rand->add_option("--orbits", g_orbits);
  gn_rand->add_option("--density", g_density);
  gn_rand->add_option("--seed", g_seed);
  gn_rand->add_option("--mode", g_mode)->check(CLI::IsMember({"layered", "general"}));

  // --- transforms ----------------------------------------------------------
  std::string t_path;
  int t_r = 1;
  auto* cmd_sub = app.add_subcommand("subdivide", "r-fold barycentric subdivision");
  cmd_sub->add_option("path", t_path)->required();
  cmd_sub->add_option("--r", t_r);
  auto* cmd_orbit = app.add_subcommand("orbit", "orbit partition of a poset");
  cmd_orbit->add_option("path", t_path)->required();
  auto* cmd_face = app.add_subcommand("face", "face poset of a complex");
  cmd_face->add_option("path", t_path)->required();
  auto* cmd_oc = app.add_subcommand("ordercomplex", "order complex of a poset");
  cmd_oc->add_option("path", t_path)->required();

  // --- verify ----------------------------------------------------------------
  std::string v_suite = "all";
  bool v_list = false;
  auto* cmd_verify = app.add_subcommand("verify", "run the theorem verification suites");
  cmd_verify->add_option("suite", v_suite, "suite name, or 'all'");
  cmd_verify->add_flag("--list", v_list, "list available suites");

  // Global flags may appear after a subcommand.
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
    for (auto* sub : a->get_subcommands({})) {
      sub->fallthrough();
      allow_fallthrough(sub);
    }
  };
  allow_fallthrough(&app);

  CLI11_PARSE(app, argc, argv);

  Manifest manifest;
  manifest.budget = budget;
  manifest.output = out.path;
  for (int i = 0; i < argc; ++i) manifest.command += std::string(i ? " " : "") + argv[i];
  auto t0 = std::chrono::steady_clock::now();
  auto finish = [&](Json j, int code = 0) {
    manifest.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    j["manifest"] = manifest.to_json();
    out.emit(j);
    return code;
  };

  try {
    if (*cmd_validate) {
      Json j = load_input(manifest, validate_path);
      std::vector<Diagnostic> diags;
      if (looks_like_complex(j))
        diags = io::parse_complex(j).validate();
      else
        diags = io::parse_poset(j).validate();
      if (out.pretty) {
        for (const auto& d : diags)
          std::cout << d.axiom << ": " << d.witness << "\n";
        std::cout << (diags.empty() ? "valid" : "invalid") << "\n";
        return diags.empty() ? 0 : 1;
      }
      return finish(io::write_diagnostics(diags), diags.empty() ? 0 : 1);
    }

    if (*cmd_xind) {
      auto p = io::parse_poset(load_input(manifest, solve_path));
      if (!p.is_valid()) {
        out.emit(io::write_diagnostics(p.validate()));
        return 2;
      }
      auto report = xind_exact(p, budget);
      manifest.nodes = report.nodes;
      if (out.pretty)
        std::cout << "cross-index " << report.n << " (" << report.nodes << " nodes)\n";
      return finish(io::write_report(report, p.group()));
    }

    if (*cmd_sind) {
      auto k = io::parse_complex(load_input(manifest, solve_path));
      if (!k.is_valid()) {
        out.emit(io::write_diagnostics(k.validate()));
        return 2;
      }
      auto report = sind_exact(k, budget);
      manifest.nodes = report.nodes;
      if (out.pretty)
        std::cout << "simplicial index " << report.n << " (" << report.nodes << " nodes)\n";
      return finish(io::write_report(report, k.group()));
    }

    if (*cmd_check) {
      Json obj = load_input(manifest, check_obj);
      Json cert = load_input(manifest, check_cert);
      CheckResult result;
      if (looks_like_complex(obj)) {
        auto k = io::parse_complex(obj);
        result = check_sind(k, io::parse_sind_certificate(cert, k.group()));
      } else {
        auto p = io::parse_poset(obj);
        result = check_gmap(p, io::parse_gmap_certificate(cert, p.group()));
      }
      Json j{{"pass", result.ok},
             {"witness", result.ok ? Json(nullptr) : Json(result.witness)}};
      if (out.pretty)
        std::cout << (result.ok ? "pass" : "FAIL: " + result.witness) << "\n";
      return finish(j, result.ok ? 0 : 1);
    }

    if (*cmd_construct) {
      GMapCertificate built;
      if (*ct_height) {
        auto p = io::parse_poset(load_input(manifest, c_poset));
        built = height_map(p);
        return finish(io::write_certificate(built, p.group()));
      }
      if (*ct_join) {
        auto p = io::parse_poset(load_input(manifest, c_poset));
        auto q = io::parse_poset(load_input(manifest, c_poset2));
        auto cp = io::parse_gmap_certificate(load_input(manifest, c_cert), p.group());
        auto cq = io::parse_gmap_certificate(load_input(manifest, c_cert2), q.group());
        built = join_map(p, q, cp, cq);
        return finish(io::write_certificate(built, p.group()));
      }
      auto p = io::parse_poset(load_input(manifest, c_poset));
      auto ids_a = c_a.empty() ? std::vector<std::string>{}
                               : io::parse_subset(load_input(manifest, c_a));
      auto ids_b = c_b.empty() ? std::vector<std::string>{}
                               : io::parse_subset(load_input(manifest, c_b));
      if (*ct_down) {
        auto ca = io::parse_gmap_certificate(load_input(manifest, c_cert), p.group());
        auto cb = io::parse_gmap_certificate(load_input(manifest, c_cert2), p.group());
        built = downward_union_map(p, ids_a, ids_b, ca, cb);
      } else if (*ct_u0 || *ct_u0z2) {
        auto sa = io::parse_sign_map(load_input(manifest, c_sign_a), p.group());
        auto sb = io::parse_sign_map(load_input(manifest, c_sign_b), p.group());
        built = *ct_u0 ? union_map_index0(p, ids_a, ids_b, sa, sb)
                       : union_map_index0_z2(p, ids_a, ids_b, sa, sb);
      } else if (*ct_ug) {
        auto ca = io::parse_gmap_certificate(load_input(manifest, c_cert), p.group());
        auto cb = io::parse_gmap_certificate(load_input(manifest, c_cert2), p.group());
        built = union_map_general(p, ids_a, ids_b, ca, cb);
      } else if (*ct_md) {
        auto c = io::parse_gmap_certificate(load_input(manifest, c_cert), p.group());
        built = move_down(p, c);
      }
      return finish(io::write_certificate(built, p.group()));
    }

    if (*cmd_gen) {
      auto group = [&]() {
        auto g = FiniteGroup::by_name(g_group);
        if (!g) raise(Err::ParseError, "unknown group name '" + g_group + "'");
        return *g;
      };
      auto label_index = [&](const FiniteGroup& g, const std::string& label, int fallback) {
        if (label.empty()) return fallback;
        auto ix = g.index_of(label);
        if (!ix) raise(Err::ParseError, "unknown group label '" + label + "'");
        return *ix;
      };
      if (*gn_qn) {
        Json j = io::write_poset(gen_qn(group(), g_n));
        j["expected"] = Json{{"xind", Json{{"value", g_n}, {"basis", "verified"}}},
                             {"height", Json{{"value", g_n}, {"basis", "definition"}}}};
        return finish(j);
      }
      if (*gn_pg) {
        auto g = group();
        return finish(io::write_bundle(gen_pg(g, label_index(g, g_gstar, -1))));
      }
      if (*gn_mu) {
        auto g = group();
        int i1 = label_index(g, g_g1, 0), i2 = label_index(g, g_g2, 1),
            i3 = label_index(g, g_g3, 2);
        return finish(io::write_bundle(gen_mu_example(g, i1, i2, i3)));
      }
      if (*gn_sharp) return finish(io::write_bundle(gen_sharp_family(group(), g_m, g_n)));
      if (*gn_z2s) return finish(io::write_bundle(gen_z2_sharp(g_n, g_m)));
      if (*gn_jp) {
        auto p = io::parse_poset(load_input(manifest, g_poset_path));
        return finish(io::write_poset(gen_join_power(p, g_k)));
      }
      if (*gn_kxg) {
        io::GraphInput graph;
        if (g_complete > 0) {
          for (int i = 1; i <= g_complete; ++i) graph.vertices.push_back(std::to_string(i));
          for (int i = 0; i < g_complete; ++i)
            for (int j = i + 1; j < g_complete; ++j)
              graph.edges.push_back({graph.vertices[i], graph.vertices[j]});
        } else if (!g_graph.empty()) {
          graph = io::parse_graph(load_input(manifest, g_graph));
        } else {
          raise(Err::BadParameters, "kxg needs --graph or --complete");
        }
        Json j = io::write_complex(k_times_g(graph.vertices, graph.edges, group()));
        if (g_complete > 0) {
          // For a complete graph the chromatic number is the vertex count.
          j["expected"] =
              Json{{"sind", Json{{"value", g_complete - 1}, {"basis", "verified"}}}};
        }
        return finish(j);
      }
      if (*gn_rand) {
        manifest.seed = g_seed;
        auto mode = g_mode == "general" ? RandomMode::general : RandomMode::layered;
        return finish(
            io::write_poset(random_free_gposet(group(), g_orbits, g_density, g_seed, mode)));
      }
    }

    if (*cmd_sub) {
      auto k = io::parse_complex(load_input(manifest, t_path));
      return finish(io::write_complex(barycentric_subdivision(k, t_r)));
    }
    if (*cmd_orbit) {
      auto p = io::parse_poset(load_input(manifest, t_path));
      const auto& orb = p.orbits();
      Json orbits = Json::array();
      for (std::size_t o = 0; o < orb.orbits.size(); ++o) {
        Json members = Json::array();
        for (int x : orb.orbits[o]) members.push_back(p.id(x));
        orbits.push_back(Json{{"representative", p.id(orb.representative[o])},
                              {"elements", members}});
      }
      return finish(Json{{"orbits", orbits}});
    }
    if (*cmd_face) {
      auto k = io::parse_complex(load_input(manifest, t_path));
      return finish(io::write_poset(face_poset(k)));
    }
    if (*cmd_oc) {
      auto p = io::parse_poset(load_input(manifest, t_path));
      return finish(io::write_complex(order_complex(p)));
    }

    if (*cmd_verify) {
      const auto& suites = verify::suites();
      if (v_list) {
        Json rows = Json::array();
        for (const auto& s : suites)
          rows.push_back(
              Json{{"suite", s.name}, {"summary", s.summary}, {"extended", s.extended}});
        return finish(Json{{"suites", rows}});
      }
      bool all_pass = true;
      Json rows = Json::array();
      bool matched = false;
      for (const auto& s : suites) {
        if (v_suite != "all" && v_suite != s.name) continue;
        matched = true;
        auto result = verify::run_suite(s, budget);
        all_pass = all_pass && result.pass;
        Json checks = Json::array();
        for (const auto& row : result.rows)
          checks.push_back(
              Json{{"name", row.name}, {"pass", row.pass}, {"detail", row.detail}});
        rows.push_back(Json{{"suite", s.name},
                            {"pass", result.pass},
                            {"seconds", result.seconds},
                            {"checks", checks}});
        if (out.pretty) {
          std::printf("%s %-16s (%zu checks, %.2fs)\n", result.pass ? "PASS" : "FAIL",
                      s.name.c_str(), result.rows.size(), result.seconds);
          for (const auto& row : result.rows)
            if (!row.pass)
              std::printf("  failed: %s — %s\n", row.name.c_str(), row.detail.c_str());
        }
      }
      if (!matched) raise(Err::BadParameters, "no suite named '" + v_suite + "'");
      if (out.pretty) return all_pass ? 0 : 1;
      return finish(Json{{"pass", all_pass}, {"suites", rows}}, all_pass ? 0 : 1);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
