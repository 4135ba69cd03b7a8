// dslap: compute and verify doubly stochastic inverses of modified graph
// Laplacians (I + hL)^{-1}, run the theorem check suites, and simulate
// implicit-Euler heat diffusion.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dslap/analysis.hpp"
#include "dslap/dense.hpp"
#include "dslap/exact_linalg.hpp"
#include "dslap/graph.hpp"
#include "dslap/heat.hpp"
#include "dslap/io.hpp"
#include "dslap/path_fib.hpp"
#include "dslap/tree_solver.hpp"

namespace {

using namespace dslap;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

Graph load_graph(const std::string& path) { return parse_edge_list(read_file(path)); }

Graph family_from_args(const std::vector<std::string>& args) {
  if (args.empty()) throw std::runtime_error("missing family name");
  const std::string& name = args[0];
  auto arg_int = [&](size_t i) {
    if (i >= args.size()) throw std::runtime_error("family '" + name + "': missing parameter");
    return std::stoi(args[i]);
  };
  if (name == "path") return path_graph(arg_int(1));
  if (name == "star") return star_graph(arg_int(1));
  if (name == "complete") return complete_graph(arg_int(1));
  if (name == "broom") return broom_graph(arg_int(1), arg_int(2));
  if (name == "starlike") {
    std::vector<int> arms;
    for (size_t i = 1; i < args.size(); ++i) arms.push_back(std::stoi(args[i]));
    return starlike_graph(arms);
  }
  if (name == "randomtree") return random_tree(arg_int(1), static_cast<uint64_t>(std::stoull(args.at(2))));
  if (name == "t3") return t3_tree(arg_int(1));
  if (name == "cone")
    return cone(family_from_args({args.begin() + 1, args.end()}));
  throw std::runtime_error("unknown family: " + name);
}

int cmd_gen(const std::vector<std::string>& family_args, const std::string& out) {
  write_output(out, write_edge_list(family_from_args(family_args)));
  return kExitPass;
}

DSMatrix compute_matrix(const Graph& g, const std::string& h_str, bool exact,
                        const std::string& engine) {
  const bool tree = classify(g).is_tree;
  if (engine == "path") {
    if (!is_path(g)) throw std::runtime_error("engine 'path' requires a path graph");
    if (Rational::parse(h_str) != Rational(1))
      throw std::runtime_error("engine 'path' covers h = 1 only");
    DSMatrix b = compute_b_path_closed(g);
    return exact ? b : b.to_float();
  }
  if (engine == "tree" && !tree) throw std::runtime_error("engine 'tree' requires a tree");
  if (exact) {
    const Rational h = Rational::parse(h_str);
    if (engine == "tree" || (engine == "auto" && tree)) return compute_b_tree(g, h);
    return compute_b_exact_dense(g, h);
  }
  const double h = std::stod(h_str);
  if (engine == "tree" || (engine == "auto" && tree)) return compute_b_tree_float(g, h);
  return compute_b_dense(g, h);
}

int cmd_compute(const std::string& graph_file, const std::string& h_str, bool exact,
                const std::string& engine, const std::string& format, const std::string& out) {
  const Graph g = load_graph(graph_file);
  const DSMatrix b = compute_matrix(g, h_str, exact, engine);
  if (format == "csv")
    write_output(out, matrix_to_csv(b));
  else
    write_output(out, matrix_to_json(b).dump(2) + "\n");
  return kExitPass;
}

// Picks the most precise affordable inverse: exact tree solve for moderate
// trees, exact elimination for small graphs, float Cholesky otherwise.
DSMatrix matrix_for_checks(const Graph& g, const std::string& h_str) {
  if (classify(g).is_tree && g.vertex_count() <= 300)
    return compute_b_tree(g, Rational::parse(h_str));
  if (g.vertex_count() <= 48) return compute_b_exact_dense(g, Rational::parse(h_str));
  if (classify(g).is_tree) return compute_b_tree_float(g, std::stod(h_str));
  return compute_b_dense(g, std::stod(h_str));
}

int cmd_check(const std::string& graph_file, const std::string& h_str,
              const std::string& suite, const std::string& out) {
  const Graph g = load_graph(graph_file);
  const auto cls = classify(g);
  const DSMatrix b = matrix_for_checks(g, h_str);

  std::vector<CheckResult> results;
  auto want = [&](const std::string& name) { return suite == "all" || suite == name; };

  if (want("ds")) results.push_back(check_doubly_stochastic(b, 1e-10));
  if (want("pendant")) results.push_back(check_pendant_relation(g, b));
  if (want("tree-decay")) results.push_back(check_tree_decay(g, b));
  if (want("d-monotone")) {
    results.push_back(is_path(g) ? check_d_monotone(b)
                                 : CheckResult::skipped("d-monotone", "not a path"));
  }
  if (want("increasing-path")) results.push_back(check_increasing_paths(b, g));
  if (want("diag-dominance")) results.push_back(check_diag_dominance(b));
  if (want("diag-bound")) results.push_back(check_diag_lower_bound(g, b));
  if (want("multiplier-bounds")) {
    if (!cls.is_tree) {
      results.push_back(CheckResult::skipped("multiplier-bounds", "not a tree"));
    } else {
      CheckResult agg;
      agg.name = "multiplier-bounds";
      const Rational hx = Rational::parse(h_str);
      for (int i = 0; i < g.vertex_count(); ++i) {
        const auto m = multipliers(orient(g, i), g, hx);
        const auto r = multiplier_bounds_check(m, g);
        agg.comparisons += r.comparisons;
        for (const auto& w : r.witnesses) agg.fail("root " + std::to_string(i) + ": " + w);
      }
      results.push_back(std::move(agg));
    }
  }
  if (want("t3")) {
    if (!is_t3_tree(g)) {
      results.push_back(CheckResult::skipped("t3-bounds", "not a degree-3 tree"));
    } else {
      results.push_back(check_t3_bounds(g, compute_b_tree(g, Rational(1))));
    }
  }
  if (want("forest-oracle")) results.push_back(check_forest_oracle(g));
  if (want("omega")) results.push_back(bounds_report(g, b).result);
  if (want("spectral")) results.push_back(check_spectrum(g, std::stod(h_str)));
  if (want("rho-metric")) results.push_back(check_rho_metric(b));
  if (want("centrality")) {
    results.push_back(cls.is_connected
                          ? centrality_report(b).result
                          : CheckResult::skipped("centrality", "not connected"));
  }

  if (results.empty()) throw std::runtime_error("unknown suite: " + suite);

  nlohmann::json j = nlohmann::json::array();
  bool any_fail = false;
  for (const auto& r : results) {
    j.push_back(check_to_json(r));
    any_fail = any_fail || r.status == CheckStatus::Fail;
    std::string line = r.status == CheckStatus::Fail      ? "fail"
                       : r.status == CheckStatus::Skipped ? "skipped"
                                                          : "pass";
    std::cerr << r.name << ": " << line;
    if (r.status == CheckStatus::Skipped && !r.notes.empty()) std::cerr << " (" << r.notes[0] << ")";
    std::cerr << "\n";
  }
  write_output(out, j.dump(2) + "\n");
  return any_fail ? kExitCheckFailure : kExitPass;
}

std::vector<double> parse_u0(const std::string& spec, int n) {
  if (spec == "uniform") return std::vector<double>(n, 1.0);
  if (spec.rfind("delta:", 0) == 0) {
    const int k = std::stoi(spec.substr(6));
    if (k < 0 || k >= n) throw std::runtime_error("u0 delta index out of range");
    std::vector<double> u(n, 0.0);
    u[k] = 1.0;
    return u;
  }
  std::istringstream in(read_file(spec));
  std::vector<double> u;
  double v;
  while (in >> v) u.push_back(v);
  if (static_cast<int>(u.size()) != n)
    throw std::runtime_error("u0 file holds " + std::to_string(u.size()) + " values, need " +
                             std::to_string(n));
  return u;
}

int cmd_heat(const std::string& graph_file, const std::string& h_str, long steps,
             const std::string& u0_spec, long record_every, const std::string& engine_str,
             const std::string& out) {
  const Graph g = load_graph(graph_file);
  const double h = std::stod(h_str);
  HeatEngine engine = HeatEngine::Auto;
  if (engine_str == "dense") engine = HeatEngine::Dense;
  else if (engine_str == "tree") engine = HeatEngine::Tree;
  else if (engine_str != "auto") throw std::runtime_error("unknown engine: " + engine_str);
  const auto u0 = parse_u0(u0_spec, g.vertex_count());
  const HeatTrajectory traj = simulate(g, u0, h, steps, record_every, engine);
  if (out.empty() || out == "-") {
    std::cout << trajectory_to_csv(traj) << "\n" << summary_to_csv(traj);
  } else {
    write_output(out, trajectory_to_csv(traj));
    write_output(out + ".summary.csv", summary_to_csv(traj));
  }
  return kExitPass;
}

int cmd_centrality(const std::string& graph_file, const std::string& h_str,
                   const std::string& out) {
  const Graph g = load_graph(graph_file);
  if (!classify(g).is_connected) throw std::runtime_error("centrality requires a connected graph");
  const DSMatrix b = matrix_for_checks(g, h_str);
  const CentralityReport rep = centrality_report(b);
  write_output(out, centrality_to_json(rep).dump(2) + "\n");
  return rep.result.passed() ? kExitPass : kExitCheckFailure;
}

int cmd_bench(const std::vector<int>& sizes, const std::vector<std::string>& engines,
              const std::string& h_str, const std::string& out) {
  const double h = std::stod(h_str);
  using clock = std::chrono::steady_clock;
  auto ms_since = [](clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  };
  std::ostringstream csv;
  csv << "engine,n,per_column_ms,full_matrix_ms\n";
  for (const auto& engine : engines) {
    for (int n : sizes) {
      double per_col = -1.0, full = -1.0;
      if (engine == "tree") {
        const Graph t = random_tree(n, 12345);
        const int reps = 8;
        const auto t0 = clock::now();
        for (int r = 0; r < reps; ++r)
          solve_column_float(t, (r * 997) % n, h);
        per_col = ms_since(t0) / reps;
        if (n <= 4000) {
          const auto t1 = clock::now();
          compute_b_tree_float(t, h);
          full = ms_since(t1);
        }
      } else if (engine == "dense") {
        const Graph t = random_tree(n, 12345);
        if (n <= 2048) {
          const auto t0 = clock::now();
          const auto chol = cholesky_factor(modified_laplacian(t, h));
          std::vector<double> e(n, 0.0);
          e[0] = 1.0;
          chol.solve(e);
          per_col = ms_since(t0);
          const auto t1 = clock::now();
          compute_b_dense(t, h);
          full = ms_since(t1);
        }
      } else if (engine == "path") {
        const auto t0 = clock::now();
        path_last_column(n);
        per_col = ms_since(t0);
        if (n <= 64) {  // the full factor product is cubic in exact arithmetic
          const Graph p = path_graph(n);
          const auto t1 = clock::now();
          compute_b_path_closed(p);
          full = ms_since(t1);
        }
      } else {
        throw std::runtime_error("unknown engine: " + engine);
      }
      csv << engine << ',' << n << ',';
      if (per_col >= 0.0) csv << per_col;
      csv << ',';
      if (full >= 0.0) csv << full;
      csv << '\n';
    }
  }
  write_output(out, csv.str());
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"doubly stochastic inverses of modified graph Laplacians"};
  app.require_subcommand(1);
  // free the -h short flag for the step parameter
  app.set_help_flag("--help", "print help");
  auto sub_with_help = [&](const char* name, const char* desc) {
    auto* sub = app.add_subcommand(name, desc);
    sub->set_help_flag("--help", "print help");
    return sub;
  };

  // gen
  auto* gen = sub_with_help("gen", "generate a graph family as an edge list");
  std::vector<std::string> family_args;
  std::string gen_out;
  gen->add_option("family", family_args,
                  "family and parameters: path N | star N | complete N | broom K L | "
                  "starlike N1 N2 ... | randomtree N SEED | t3 DEPTH | cone <family...>")
      ->required()
      ->expected(-1);
  gen->add_option("-o,--out", gen_out, "output file (default stdout)");

  // compute
  auto* comp = sub_with_help("compute", "compute the inverse of I + hL");
  std::string comp_graph, comp_h = "1", comp_engine = "auto", comp_format = "json", comp_out;
  bool comp_exact = false;
  comp->add_option("graph", comp_graph, "edge-list file")->required();
  comp->add_option("--h", comp_h, "step parameter h > 0 (default 1)");
  comp->add_flag("--exact", comp_exact, "exact rational arithmetic");
  comp->add_option("--engine", comp_engine, "auto|dense|tree|path")
      ->check(CLI::IsMember({"auto", "dense", "tree", "path"}));
  comp->add_option("--format", comp_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  comp->add_option("-o,--out", comp_out, "output file (default stdout)");

  // check
  auto* chk = sub_with_help("check", "run verification suites");
  std::string chk_graph, chk_h = "1", chk_suite = "all", chk_out;
  chk->add_option("graph", chk_graph, "edge-list file")->required();
  chk->add_option("--h", chk_h, "step parameter (default 1)");
  chk->add_option("--suite", chk_suite,
                  "all|ds|pendant|tree-decay|d-monotone|increasing-path|diag-dominance|"
                  "diag-bound|multiplier-bounds|t3|forest-oracle|omega|spectral|rho-metric|"
                  "centrality");
  chk->add_option("-o,--out", chk_out, "JSON report file (default stdout)");

  // heat
  auto* heat = sub_with_help("heat", "implicit Euler heat diffusion");
  std::string heat_graph, heat_h = "1", heat_u0 = "uniform", heat_engine = "auto", heat_out;
  long heat_steps = 10, heat_record = 1;
  heat->add_option("graph", heat_graph, "edge-list file")->required();
  heat->add_option("--h", heat_h, "step size (default 1)");
  heat->add_option("--steps", heat_steps, "number of steps (default 10)");
  heat->add_option("--u0", heat_u0, "initial condition: uniform | delta:K | FILE");
  heat->add_option("--record-every", heat_record, "record stride (default 1)");
  heat->add_option("--engine", heat_engine, "auto|dense|tree");
  heat->add_option("-o,--out", heat_out,
                   "trajectory CSV file; summary goes to <out>.summary.csv (default stdout)");

  // centrality
  auto* cent = sub_with_help("centrality", "remoteness ranking and least remote vertices");
  std::string cent_graph, cent_h = "1", cent_out;
  cent->add_option("graph", cent_graph, "edge-list file")->required();
  cent->add_option("--h", cent_h, "step parameter (default 1)");
  cent->add_option("-o,--out", cent_out, "JSON report file (default stdout)");

  // bench
  auto* bench = sub_with_help("bench", "timing table per engine and size");
  std::vector<int> bench_sizes{250, 500, 1000};
  std::vector<std::string> bench_engines{"tree"};
  std::string bench_h = "1", bench_out;
  bench->add_option("--sizes", bench_sizes, "comma-separated sizes")->delimiter(',');
  bench->add_option("--engines", bench_engines, "comma-separated: tree,dense,path")
      ->delimiter(',');
  bench->add_option("--h", bench_h, "step parameter (default 1)");
  bench->add_option("-o,--out", bench_out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(family_args, gen_out);
    if (comp->parsed())
      return cmd_compute(comp_graph, comp_h, comp_exact, comp_engine, comp_format, comp_out);
    if (chk->parsed()) return cmd_check(chk_graph, chk_h, chk_suite, chk_out);
    if (heat->parsed())
      return cmd_heat(heat_graph, heat_h, heat_steps, heat_u0, heat_record, heat_engine, heat_out);
    if (cent->parsed()) return cmd_centrality(cent_graph, cent_h, cent_out);
    if (bench->parsed()) return cmd_bench(bench_sizes, bench_engines, bench_h, bench_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
