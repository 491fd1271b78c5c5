// ccm: command-line front end.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <thread>

#include <CLI11.hpp>

#include "ccm/bruteforce.hpp"
#include "ccm/graver.hpp"
#include "ccm/io.hpp"
#include "ccm/verify.hpp"

namespace {

using namespace ccm;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
    case ErrorKind::kInvalidDimension:
    case ErrorKind::kInvalidMatroid:
    case ErrorKind::kInvalidEdgeBound:
    case ErrorKind::kInvalidRank:
    case ErrorKind::kInvalidDemand:
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kDimensionMismatch:
    case ErrorKind::kInconsistentLineSums:
    case ErrorKind::kUnbalancedDemand:
    case ErrorKind::kMissingObjective:
    case ErrorKind::kZeroVector:
    case ErrorKind::kEmptySet:
    case ErrorKind::kEmptyDirectionSet:
      return 2;
    case ErrorKind::kInfeasible:
    case ErrorKind::kInfeasibleFlow:
    case ErrorKind::kEmptyMatroid:
    case ErrorKind::kUnbounded:
      return 3;
    case ErrorKind::kBudgetExceeded:
    case ErrorKind::kTooLargeForBruteforce:
      return 4;
    case ErrorKind::kOverflow:
      return 5;
  }
  return 5;
}

struct Globals {
  std::uint64_t seed = 1;
  int threads = 1;
  bool timing = false;
  std::string out;
};

void emit(const Globals& g, const Json& j) {
  const std::string text = canonical_dump(j);
  if (g.out.empty() || g.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) fail(ErrorKind::kInvalidArgument, "cannot write '" + g.out + "'");
  f << text;
}

int thread_count(int requested) {
  if (requested > 0) return requested;
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

Json json_text_or_file(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return parse_json(arg);
  return parse_json(read_file(arg));
}

InstanceFile load_instance(const std::string& path) { return instance_from_json(parse_json(read_file(path))); }

EnumerationBudget budget_from(const std::string& flag) {
  if (!flag.empty()) return parse_budget(flag);
  if (const char* env = std::getenv("CC_BUDGET"); env && *env) return parse_budget(env);
  return {};
}

Json big_to_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max()) return static_cast<std::int64_t>(v);
  return v.str();
}

struct ProjectFlags {
  std::string instance;
  std::optional<std::int64_t> edge_bound;
  std::string mode = "auto";
};

ProjectionConfig config_for(const Instance& inst, const ProjectFlags& f, const Globals& g) {
  ProjectionConfig cfg;
  cfg.W = inst.W;
  cfg.edge_bound = f.edge_bound ? Int(*f.edge_bound) : inst.edge_bound;
  cfg.mode = parse_direction_mode(f.mode);
  cfg.edge_generators = inst.edge_generators;
  cfg.threads = thread_count(g.threads);
  return cfg;
}

template <class F>
auto timed(F&& f, RunStats& stats, bool enabled) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  if (enabled)
    stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

int cmd_project(const ProjectFlags& f, const Globals& g) {
  const auto file = load_instance(f.instance);
  const auto cfg = config_for(file.instance, f, g);
  const auto oracle = make_oracle(file.instance);
  RunStats stats;
  const auto r = timed([&] { return project(*oracle, cfg); }, stats, g.timing);
  emit(g, projection_to_json(file.instance, cfg, r, stats));
  return 0;
}

int cmd_maximize(const ProjectFlags& f, const std::string& objective, const Globals& g) {
  const auto file = load_instance(f.instance);
  std::optional<ConvexObjective> obj = file.objective;
  if (!objective.empty()) obj = objective_from_json(json_text_or_file(objective), file.instance.W.rows());
  if (!obj) fail(ErrorKind::kMissingObjective, "give --objective or an \"objective\" field in the instance");
  const auto cfg = config_for(file.instance, f, g);
  const auto oracle = make_oracle(file.instance);
  RunStats stats;
  const auto m = timed([&] { return maximize(*oracle, cfg, *obj); }, stats, g.timing);
  emit(g, maximize_to_json(file.instance, cfg, *obj, m, stats));
  return 0;
}

Json zonotope_report(Index d, std::int64_t q, bool scan, bool details) {
  const auto E = direction_set(d, Int(q));
  const auto Z = zonotope_vertices(E);
  Json j;
  j["d"] = d;
  j["q"] = q;
  j["directions"] = E.size();
  j["count"] = Z.size();
  const BigInt bound = zonotope_vertex_bound(d, BigInt(E.size()));
  j["bound"] = big_to_json(bound);
  j["within_bound"] = BigInt(Z.size()) <= bound;
  j["scan"] = nullptr;
  if (scan) {
    try {
      j["scan"] = realizable_sign_patterns(E.dirs, 200'000);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kBudgetExceeded) throw;
    }
  }
  if (details) {
    std::vector<IntVec> vertices, witnesses;
    for (const auto& z : Z) {
      vertices.push_back(z.vertex);
      witnesses.push_back(z.witness.h);
    }
    j["vertices"] = to_json(vertices);
    j["witnesses"] = to_json(witnesses);
  }
  return j;
}

int cmd_graver(const std::string& path, std::size_t max_elements, std::int64_t max_norm, const Globals& g) {
  const Json j = parse_json(read_file(path));
  const IntMatrix A = j.is_object() ? matrix_from_json(j.contains("A") ? j["A"] : Json(), "A") : matrix_from_json(j, "A");
  const auto G = graver_basis(A, GraverOptions{max_elements, Int(max_norm)});
  Json out;
  out["A"] = to_json(A);
  out["count"] = G.size();
  out["l1_max"] = l1_max(G).value();
  out["elements"] = to_json(G.elements);
  emit(g, out);
  return 0;
}

int cmd_verify(const ProjectFlags& f, const std::string& budget, const Globals& g) {
  const auto file = load_instance(f.instance);
  const auto cfg = config_for(file.instance, f, g);
  const auto report = verify_against_bruteforce(file.instance, cfg, budget_from(budget));
  emit(g, verify_to_json(file.instance, report));
  return report.pass ? 0 : 1;
}

std::size_t project_count(const Instance& inst) {
  ProjectionConfig cfg;
  cfg.W = inst.W;
  cfg.edge_bound = inst.edge_bound;
  cfg.edge_generators = inst.edge_generators;
  return project(*make_oracle(inst), cfg).V.size();
}

int cmd_bounds_report(std::size_t trials, const std::string& budget, const Globals& g) {
  Json out;
  Json zono = Json::array();
  zono.push_back(zonotope_report(2, 1, true, false));
  zono.push_back(zonotope_report(3, 1, true, false));
  out["zonotopes"] = zono;

  struct Case {
    Index d, k, r;
    const char* formula;
    Index expected;
  };
  const std::vector<Case> cases = {
      {2, 2, 2, "2^d", 4},      {3, 2, 2, "2^d", 8},       {2, 1, 2, "d*2^(d-1)", 4}, {3, 1, 2, "d*2^(d-1)", 12},
      {4, 1, 2, "d*2^(d-1)", 32}, {2, 2, 3, "d*2^d", 8}, {3, 2, 3, "d*2^d", 24},
  };
  Json lower = Json::array();
  std::map<Index, Index> best_lower;
  for (const auto& c : cases) {
    const Index observed = static_cast<Index>(project_count(uniform_with_Wkd(c.d, c.k, c.r)));
    Json row;
    row["d"] = c.d;
    row["k"] = c.k;
    row["r"] = c.r;
    row["formula"] = c.formula;
    row["expected"] = c.expected;
    row["observed"] = observed;
    row["match"] = observed == c.expected;
    lower.push_back(row);
    best_lower[c.d] = std::max(best_lower[c.d], observed);
  }
  out["uniform_lower_bounds"] = lower;

  const auto z2 = zono[0]["count"].get<std::size_t>();
  const auto z3 = zono[1]["count"].get<std::size_t>();
  Json m2;
  m2["zonotope"] = z2;
  m2["octagon"] = project_count(octagon_example());
  m2["equal"] = m2["zonotope"] == m2["octagon"];
  out["m2"] = m2;
  Json m3;
  m3["lower"] = best_lower[3];
  m3["zonotope"] = z3;
  m3["upper"] = zono[1]["bound"];
  m3["consistent"] = static_cast<std::size_t>(best_lower[3]) <= z3 && z3 <= zono[1]["bound"].get<std::size_t>();
  out["m3"] = m3;

  Rng rng(g.seed);
  const auto enum_budget = budget_from(budget);
  std::size_t max_vertices = 0, mismatches = 0;
  std::map<std::size_t, std::size_t> histogram;
  for (std::size_t t = 0; t < trials; ++t) {
    const Instance inst = (t % 2 == 0) ? random_uniform_matroid(rng, 2 + static_cast<Index>(rng() % 7), 2, Int(0), Int(1))
                                       : random_graphic_matroid(rng, 3 + static_cast<Index>(rng() % 3),
                                                                3 + static_cast<Index>(rng() % 6), 2, Int(0), Int(1));
    ProjectionConfig cfg;
    cfg.W = inst.W;
    cfg.edge_bound = inst.edge_bound;
    cfg.threads = thread_count(g.threads);
    const auto V = project(*make_oracle(inst), cfg).V;
    if (V != project_vertices(enumerate_set(inst.set, enum_budget), inst.W)) ++mismatches;
    max_vertices = std::max(max_vertices, V.size());
    ++histogram[V.size()];
  }
  Json sweep;
  sweep["seed"] = g.seed;
  sweep["trials"] = trials;
  sweep["max_vertices"] = max_vertices;
  sweep["bound"] = z2;
  sweep["within_bound"] = max_vertices <= z2;
  sweep["bruteforce_mismatches"] = mismatches;
  Json hist;
  for (const auto& [k, v] : histogram) hist[std::to_string(k)] = v;
  sweep["vertex_counts"] = hist;
  out["matroid_sweep"] = sweep;
  emit(g, out);
  return 0;
}

struct GenFlags {
  std::string family;
  Index n = 8, k = 2, d = 2, r = 2, l = 2, m = 2, players = 2, items = 4, vertices = 4, arcs = 5, points = 10;
  std::int64_t wlo = -3, whi = 3;
};

int cmd_gen(const GenFlags& f, const Globals& g) {
  Rng rng(g.seed);
  Instance inst;
  if (f.family == "parabola-explicit") inst = parabola_explicit(f.n);
  else if (f.family == "parabola-binary") inst = parabola_binary(f.k);
  else if (f.family == "parabola-doubling") inst = parabola_doubling(f.k);
  else if (f.family == "uniform-wkd") inst = uniform_with_Wkd(f.d, f.k, f.r);
  else if (f.family == "octagon") inst = octagon_example();
  else if (f.family == "tables") inst = random_tables(rng, f.l, f.m, f.n, f.d, f.wlo, f.whi);
  else if (f.family == "partition") inst = random_partition(rng, f.players, f.items, f.d, f.wlo, f.whi);
  else if (f.family == "transshipment") inst = random_transshipment(rng, f.vertices, f.arcs, f.d, f.wlo, f.whi);
  else if (f.family == "random-binary") inst = random_binary(rng, f.n, f.points, f.d, f.wlo, f.whi);
  else if (f.family == "uniform-matroid") inst = random_uniform_matroid(rng, f.n, f.d, f.wlo, f.whi);
  else if (f.family == "graphic-matroid") inst = random_graphic_matroid(rng, f.vertices, f.arcs, f.d, f.wlo, f.whi);
  else fail(ErrorKind::kParse, "unknown family '" + f.family + "'");
  emit(g, instance_to_json(inst));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertices of conv(W S) and convex maximization over S from a linear oracle"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for oracle queries; 0 uses all cores")->capture_default_str();
  app.add_flag("--timing", g.timing, "Add wall_ms to result stats");
  app.add_option("-o,--output", g.out, "Write the JSON result here instead of stdout");

  ProjectFlags pf;
  auto add_project_flags = [&pf](CLI::App* sub) {
    sub->add_option("instance", pf.instance, "Instance file")->required();
    sub->add_option("--edge-bound", pf.edge_bound, "Override the instance's edge bound");
    sub->add_option("--mode", pf.mode, "Direction source: auto, generators, image or cube")->capture_default_str();
  };

  auto* project_cmd = app.add_subcommand("project", "Vertices of conv(W S)");
  add_project_flags(project_cmd);

  std::string objective;
  auto* maximize_cmd = app.add_subcommand("maximize", "Maximize a convex f(W x) over S");
  add_project_flags(maximize_cmd);
  maximize_cmd->add_option("--objective", objective, "Objective as JSON text or a file path");

  Index zd = 2;
  std::int64_t zq = 1;
  bool no_scan = false;
  auto* zono_cmd = app.add_subcommand("zonotope", "Vertices of the zonotope of {-q..q}^d directions");
  zono_cmd->add_option("--d", zd, "Dimension")->capture_default_str();
  zono_cmd->add_option("--q", zq, "Coordinate range")->capture_default_str();
  zono_cmd->add_flag("--no-scan", no_scan, "Skip the sign-pattern cross-check");

  std::string graver_path;
  std::size_t max_elements = 200000;
  std::int64_t max_norm = 1000;
  auto* graver_cmd = app.add_subcommand("graver", "Graver basis of a small integer matrix");
  graver_cmd->add_option("matrix", graver_path, "JSON file holding {\"A\": [[...]]} or a bare matrix")->required();
  graver_cmd->add_option("--max-elements", max_elements)->capture_default_str();
  graver_cmd->add_option("--max-norm", max_norm)->capture_default_str();

  std::string budget;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the projector against enumeration");
  add_project_flags(verify_cmd);
  verify_cmd->add_option("--budget", budget, "P or P,V: caps on points and box volume (else CC_BUDGET)");

  std::size_t trials = 60;
  auto* bounds_cmd = app.add_subcommand("bounds-report", "Zonotope counts, lower-bound families and a matroid sweep");
  bounds_cmd->add_option("--trials", trials, "Random matroids in the sweep")->capture_default_str();
  bounds_cmd->add_option("--budget", budget, "Enumeration budget for the sweep");

  GenFlags gf;
  auto* gen_cmd = app.add_subcommand("gen", "Write an instance file for a named family");
  gen_cmd->add_option("family", gf.family,
                      "parabola-explicit, parabola-binary, parabola-doubling, uniform-wkd, octagon, tables, partition, transshipment, "
                      "random-binary, uniform-matroid or graphic-matroid")
      ->required();
  gen_cmd->add_option("--n", gf.n, "Columns for parabola-explicit, table depth, or binary dimension");
  gen_cmd->add_option("--k", gf.k);
  gen_cmd->add_option("--d", gf.d, "Rows of W");
  gen_cmd->add_option("--r", gf.r, "Matroid rank for uniform-wkd");
  gen_cmd->add_option("--l", gf.l);
  gen_cmd->add_option("--m", gf.m);
  gen_cmd->add_option("--players", gf.players);
  gen_cmd->add_option("--items", gf.items);
  gen_cmd->add_option("--vertices", gf.vertices);
  gen_cmd->add_option("--arcs", gf.arcs, "Arcs, or edges for graphic-matroid");
  gen_cmd->add_option("--points", gf.points);
  gen_cmd->add_option("--wmin", gf.wlo, "Smallest entry of W");
  gen_cmd->add_option("--wmax", gf.whi, "Largest entry of W");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*project_cmd) return cmd_project(pf, g);
    if (*maximize_cmd) return cmd_maximize(pf, objective, g);
    if (*zono_cmd) {
      emit(g, zonotope_report(zd, zq, !no_scan, true));
      return 0;
    }
    if (*graver_cmd) return cmd_graver(graver_path, max_elements, max_norm, g);
    if (*verify_cmd) return cmd_verify(pf, budget, g);
    if (*bounds_cmd) return cmd_bounds_report(trials, budget, g);
    if (*gen_cmd) return cmd_gen(gf, g);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  }
  return 5;
}
