// Acceptance run: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "ccm/bruteforce.hpp"
#include "ccm/graver.hpp"
#include "ccm/io.hpp"

using namespace ccm;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<IntVec> vecs(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<IntVec> out;
  for (const auto& r : rows) {
    IntVec v(static_cast<Index>(r.size()));
    Index i = 0;
    for (auto x : r) v(i++) = x;
    out.push_back(v);
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

std::string show(const std::vector<IntVec>& vs) { return to_json(vs).dump(); }

struct Run {
  Index d;
  std::size_t directions, chambers;
};
std::vector<Run> g_runs;

ProjectionConfig config_of(const Instance& inst, Int e, int threads = 1) {
  ProjectionConfig cfg;
  cfg.W = inst.W;
  cfg.edge_bound = e;
  cfg.edge_generators = inst.edge_generators;
  cfg.threads = threads;
  return cfg;
}

ProjectionResult run(const Instance& inst, Int e, int threads = 1) {
  auto r = project(*make_oracle(inst), config_of(inst, e, threads));
  g_runs.push_back({inst.W.rows(), r.directions, r.chambers});
  return r;
}

ProjectionResult run(const Instance& inst) { return run(inst, inst.edge_bound); }

std::vector<IntVec> reference(const Instance& inst) { return project_vertices(enumerate_set(inst.set), inst.W); }

struct Outcome {
  std::string title;
  bool pass = false;
  std::string detail;
};
std::map<int, Outcome> g_outcomes;

void guarded(int id, const std::string& title, const std::function<std::pair<bool, std::string>()>& body) {
  try {
    const auto [pass, detail] = body();
    g_outcomes[id] = {title, pass, detail};
  } catch (const std::exception& e) {
    g_outcomes[id] = {title, false, std::string("threw ") + e.what()};
  }
}

const std::vector<IntVec>& octagon_U() {
  static const auto U = vecs({{1, 0}, {2, 0}, {3, 1}, {3, 2}, {2, 3}, {1, 3}, {0, 2}, {0, 1}});
  return U;
}

std::vector<Instance> g_random;

std::vector<Instance> random_suite(std::uint64_t seed) {
  Rng rng(seed);
  auto between = [&rng](Index lo, Index hi) { return lo + static_cast<Index>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  const Int wlo(-3), whi(3);
  std::vector<Instance> out;
  for (int t = 0; t < 40; ++t) {
    const Index n = between(3, 10);
    out.push_back(random_binary(rng, n, between(2, 24), between(1, 3), wlo, whi));
  }
  for (int t = 0; t < 30; ++t) out.push_back(random_uniform_matroid(rng, between(2, 10), between(1, 3), wlo, whi));
  for (int t = 0; t < 30; ++t)
    out.push_back(random_graphic_matroid(rng, between(2, 5), between(1, 10), between(1, 3), wlo, whi));
  for (int t = 0; t < 30; ++t)
    out.push_back(random_tables(rng, between(2, 3), between(2, 3), between(2, 3), between(1, 3), wlo, whi));
  for (int t = 0; t < 35; ++t)
    out.push_back(random_transshipment(rng, between(2, 6), between(1, 8), between(1, 3), wlo, whi));
  for (int t = 0; t < 35; ++t)
    out.push_back(random_partition(rng, between(1, 3), between(1, 6), between(1, 3), wlo, whi));
  return out;
}

}  // namespace

int main() {
  guarded(1, "octagon vertex set", [] {
    const auto inst = octagon_example();
    const auto t = Clock::now();
    const auto r = run(inst);
    const double s = seconds_since(t);
    const bool same = canonical_dump(to_json(r.V)) == canonical_dump(to_json(octagon_U()));
    return std::pair{same && s < 1.0, show(r.V) + ", " + std::to_string(s) + " s"};
  });

  guarded(2, "octagon witnesses via 8 greedy queries", [] {
    const auto inst = octagon_example();
    const auto H = vecs({{-2, -1}, {-2, 1}, {-1, -2}, {-1, 2}, {1, -2}, {1, 2}, {2, -1}, {2, 1}});
    const auto oracle = make_oracle(inst);
    std::set<IntVec, LexLess> hit;
    std::size_t queries = 0;
    bool ok = true;
    for (const auto& h : H) {
      const IntVec w = (h.transpose() * inst.W).transpose();
      const auto ans = oracle->optimize(w);
      ++queries;
      const IntVec v = inst.W * ans.x;
      // the matching vertex is the unique maximizer of h over U
      std::size_t best_count = 0;
      Int best = dot(h, octagon_U().front());
      for (const auto& u : octagon_U()) best = std::max(best, dot(h, u));
      for (const auto& u : octagon_U()) best_count += dot(h, u) == best;
      ok = ok && best_count == 1 && dot(h, v) == best;
      hit.insert(v);
    }
    ok = ok && hit.size() == 8 && std::vector<IntVec>(hit.begin(), hit.end()) == octagon_U();
    return std::pair{ok && queries == 8, std::to_string(queries) + " queries, " + std::to_string(hit.size()) +
                                             " distinct vertices"};
  });

  guarded(3, "Graver basis of (1 2 1)", [] {
    IntMatrix A(1, 3);
    A << Int(1), Int(2), Int(1);
    const auto G = graver_basis(A);
    const auto expected = vecs({{2, -1, 0}, {-2, 1, 0}, {0, 1, -2}, {0, -1, 2}, {1, 0, -1}, {-1, 0, 1}, {1, -1, 1}, {-1, 1, -1}});
    return std::pair{G.elements == expected && l1_max(G) == 3,
                     std::to_string(G.size()) + " elements, l1_max " + std::to_string(l1_max(G).value())};
  });

  guarded(4, "uniform matroid vertex counts", [] {
    struct Case {
      Index d, k, r, expected;
    };
    const std::vector<Case> cases = {{2, 2, 2, 4}, {3, 2, 2, 8}, {2, 1, 2, 4}, {3, 1, 2, 12},
                                     {4, 1, 2, 32}, {2, 2, 3, 8}, {3, 2, 3, 24}};
    bool ok = true;
    std::string detail;
    for (const auto& c : cases) {
      const auto t = Clock::now();
      const auto n = run(uniform_with_Wkd(c.d, c.k, c.r)).V.size();
      const double s = seconds_since(t);
      ok = ok && static_cast<Index>(n) == c.expected && s < 10.0;
      detail += "(" + std::to_string(c.d) + "," + std::to_string(c.k) + "," + std::to_string(c.r) + ")=" +
                std::to_string(n) + " ";
    }
    return std::pair{ok, detail + "each < 10 s"};
  });

  guarded(5, "exponential constructions", [] {
    auto parabola = [](std::int64_t count) {
      std::vector<IntVec> out;
      for (std::int64_t t = 0; t < count; ++t) out.push_back(IntVec{{Int(t), Int(t * t)}});
      return out;
    };
    struct Case {
      Instance inst;
      std::int64_t count;
    };
    const std::vector<Case> cases = {{parabola_explicit(8), 3}, {parabola_binary(2), 4}, {parabola_doubling(2), 4}, {parabola_binary(3), 8}};
    bool ok = true;
    std::string detail;
    for (const auto& c : cases) {
      const auto V = run(c.inst).V;
      ok = ok && V == parabola(c.count) && V == reference(c.inst);
      detail += c.inst.name + "=" + std::to_string(V.size()) + " ";
    }
    return std::pair{ok, detail + "cross-checked"};
  });

  guarded(7, "projector equals brute force on random instances", [] {
    const auto t = Clock::now();
    g_random = random_suite(20261016);
    std::size_t agree = 0;
    std::string first_bad;
    for (const auto& inst : g_random) {
      if (run(inst).V == reference(inst)) ++agree;
      else if (first_bad.empty()) first_bad = " first mismatch " + inst.name;
    }
    const double s = seconds_since(t);
    return std::pair{g_random.size() >= 200 && agree == g_random.size() && s < 300.0,
                     std::to_string(agree) + "/" + std::to_string(g_random.size()) + " in " + std::to_string(s) + " s" +
                         first_bad};
  });

  guarded(8, "edge complexity certificates", [] {
    Rng rng(8);
    std::size_t matroids = 0, binaries = 0, ilps = 0;
    bool ok = true;
    for (int t = 0; t < 12; ++t) {
      const auto inst = t % 2 == 0 ? random_uniform_matroid(rng, 4 + t / 2, 2, Int(0), Int(1))
                                   : random_graphic_matroid(rng, 4, 5, 2, Int(0), Int(1));
      const auto S = enumerate_set(inst.set);
      if (S.size() < 2) continue;
      ok = ok && edge_complexity_exact(S) == 2;
      ++matroids;
    }
    for (int t = 0; t < 20; ++t) {
      const Index n = 2 + t % 5;
      const auto inst = random_binary(rng, n, 2 + t, 1, Int(0), Int(1));
      ok = ok && edge_complexity_exact(enumerate_set(inst.set)) <= n;
      ++binaries;
    }
    std::vector<Instance> ilp_sets;
    for (int t = 0; t < 4; ++t) {
      ilp_sets.push_back(random_tables(rng, 2, 2, 2 + t % 2, 1, Int(0), Int(1)));
      ilp_sets.push_back(random_transshipment(rng, 3 + t % 2, 4, 1, Int(0), Int(1)));
      ilp_sets.push_back(random_partition(rng, 2, 3 + t % 2, 1, Int(0), Int(1)));
    }
    for (const auto& inst : ilp_sets) {
      const auto S = enumerate_set(inst.set);
      const auto G = graver_basis(ilp_form(inst.set).A);
      ok = ok && edge_complexity_exact(S) <= l1_max(G);
      ++ilps;
    }
    return std::pair{ok, std::to_string(matroids) + " matroid, " + std::to_string(binaries) + " 0/1, " +
                             std::to_string(ilps) + " ILP sets"};
  });

  guarded(9, "stability under larger edge bounds", [] {
    std::size_t stable = 0;
    for (const auto& inst : g_random) {
      const auto V = run(inst).V;
      if (run(inst, inst.edge_bound + 1).V == V && run(inst, inst.edge_bound + 5).V == V) ++stable;
    }
    return std::pair{!g_random.empty() && stable == g_random.size(),
                     std::to_string(stable) + "/" + std::to_string(g_random.size()) + " unchanged at e+1 and e+5"};
  });

  guarded(10, "determinism across thread counts", [] {
    const int N = 4;
    std::vector<Instance> all = {octagon_example()};
    all.insert(all.end(), g_random.begin(), g_random.end());
    std::size_t same = 0;
    for (const auto& inst : all) {
      const auto one = canonical_dump(projection_to_json(inst, config_of(inst, inst.edge_bound), run(inst, inst.edge_bound, 1)));
      const auto many =
          canonical_dump(projection_to_json(inst, config_of(inst, inst.edge_bound, N), run(inst, inst.edge_bound, N)));
      same += one == many;
    }
    return std::pair{same == all.size() && all.size() > 1,
                     std::to_string(same) + "/" + std::to_string(all.size()) + " byte-identical with 1 and " +
                         std::to_string(N) + " threads"};
  });

  guarded(6, "zonotope counts", [] {
    const auto z2 = zonotope_vertices(direction_set(2, Int(1))).size();
    const auto E3 = direction_set(3, Int(1));
    const auto z3 = zonotope_vertices(E3).size();
    const auto scan3 = realizable_sign_patterns(E3.dirs);
    bool bound_ok = true;
    for (Index d = 1; d <= 3; ++d)
      for (std::int64_t q = 1; q <= 2; ++q) {
        const auto E = direction_set(d, Int(q));
        bound_ok = bound_ok && BigInt(zonotope_vertices(E).size()) <= zonotope_vertex_bound(d, BigInt(E.size()));
      }
    for (const auto& r : g_runs)
      bound_ok = bound_ok && BigInt(r.chambers) <= zonotope_vertex_bound(r.d, BigInt(r.directions));
    return std::pair{z2 == 8 && z3 >= 24 && z3 <= 158 && z3 == scan3 && bound_ok,
                     "z(2)=" + std::to_string(z2) + ", z(3)=" + std::to_string(z3) + " scan " + std::to_string(scan3) +
                         ", bound 158, " + std::to_string(g_runs.size()) + " runs within bound"};
  });

  int failed = 0;
  for (const auto& [id, o] : g_outcomes) {
    std::printf("%s criterion %d: %s (%s)\n", o.pass ? "PASS" : "FAIL", id, o.title.c_str(), o.detail.c_str());
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
