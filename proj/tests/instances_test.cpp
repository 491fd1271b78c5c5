#include "ccm/instances.hpp"

#include <gtest/gtest.h>

#include <random>

#include "ccm/bruteforce.hpp"
#include "ccm/projector.hpp"

namespace ccm {
namespace {

std::vector<IntVec> vecs(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<IntVec> out;
  for (const auto& r : rows) out.push_back(make_vec(r));
  sort_unique(out);
  return out;
}

ProjectionResult run(const Instance& inst) {
  ProjectionConfig cfg;
  cfg.W = inst.W;
  cfg.edge_bound = inst.edge_bound;
  cfg.edge_generators = inst.edge_generators;
  return project(*make_oracle(inst), cfg);
}

TEST(ParabolaExplicit, SmallCases) {
  auto inst = parabola_explicit(8);
  EXPECT_EQ(std::get<ExplicitSpec>(inst.set).points.size(), 3U);
  EXPECT_EQ(*inst.expected_vertices, vecs({{0, 0}, {1, 1}, {2, 4}}));
  EXPECT_EQ(run(inst).V, *inst.expected_vertices);
  inst = parabola_explicit(2);
  EXPECT_EQ(run(inst).V, vecs({{0, 0}, {1, 1}}));
  inst = parabola_explicit(50);
  EXPECT_EQ(run(inst).V.size(), 6U);
  EXPECT_GT(6.0, std::sqrt(25.0));
}

TEST(ParabolaBinary, ShapeAndPoints) {
  auto inst = parabola_binary(2);
  const auto& s2 = std::get<IlpSpec>(inst.set);
  EXPECT_EQ(s2.A.rows(), 3);
  EXPECT_EQ(s2.n(), 6);
  EXPECT_EQ(enumerate_set(inst.set).size(), 4U);
  EXPECT_EQ(run(inst).V, vecs({{0, 0}, {1, 1}, {2, 4}, {3, 9}}));
  for (Index i = 0; i < s2.A.rows(); ++i)
    for (Index j = 0; j < s2.n(); ++j) EXPECT_LE(abs(s2.A(i, j)), 1);

  inst = parabola_binary(3);
  const auto& s3 = std::get<IlpSpec>(inst.set);
  EXPECT_EQ(s3.A.rows(), 9);
  EXPECT_EQ(s3.n(), 15);
  EXPECT_EQ(enumerate_set(inst.set).size(), 8U);
  EXPECT_EQ(run(inst).V, *inst.expected_vertices);
  EXPECT_EQ(inst.expected_vertices->size(), 8U);
}

TEST(ParabolaBinary, OracleMatchesEnumeration) {
  const auto inst = parabola_binary(2);
  const auto S = enumerate_set(inst.set);
  const auto ilp = make_oracle(inst);
  const auto ref = explicit_oracle(S);
  std::mt19937_64 rng(41);
  for (int t = 0; t < 50; ++t) {
    IntVec h(6);
    for (Index i = 0; i < 6; ++i) h(i) = static_cast<std::int64_t>(rng() % 11) - 5;
    const auto a = ilp->optimize(h);
    const auto b = ref->optimize(h);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.x, b.x);
  }
}

TEST(ParabolaDoubling, BinaryCriteriaAndCounts) {
  auto inst = parabola_doubling(2);
  for (Index i = 0; i < inst.W.rows(); ++i)
    for (Index j = 0; j < inst.W.cols(); ++j) EXPECT_TRUE(inst.W(i, j) == 0 || inst.W(i, j) == 1);
  EXPECT_EQ(run(inst).V, vecs({{0, 0}, {1, 1}, {2, 4}, {3, 9}}));
  EXPECT_EQ(enumerate_set(inst.set).size(), 4U);
  const auto& A2 = std::get<IlpSpec>(inst.set).A;
  for (Index i = 0; i < A2.rows(); ++i)
    for (Index j = 0; j < A2.cols(); ++j) EXPECT_TRUE(A2(i, j) >= -1 && A2(i, j) <= 2);

  inst = parabola_doubling(3);
  const Index n = std::get<IlpSpec>(inst.set).n();
  EXPECT_EQ(n, parabola_binary(3).W.cols() + (0 + 2 + 4) + (2 + 3 + 4));
  EXPECT_LT(n, 4 * 81);
  EXPECT_LT(std::get<IlpSpec>(inst.set).A.rows(), 4 * 81);
  EXPECT_EQ(run(inst).V, *inst.expected_vertices);
}

TEST(Wkd, MatrixLayout) {
  EXPECT_EQ(wkd_matrix(2, 2), make_matrix({{0, 0, 1, 1, 0, 0, 1, 1}, {0, 0, 0, 0, 1, 1, 1, 1}}));
  EXPECT_EQ(wkd_matrix(1, 1), make_matrix({{0, 1}}));
  try {
    uniform_with_Wkd(2, 1, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidRank);
  }
}

TEST(Wkd, ExpectedCounts) {
  struct Case {
    Index d, k, r;
    std::size_t count;
  };
  for (const Case& c : {Case{2, 2, 3, 8}, Case{3, 1, 2, 12}, Case{3, 2, 3, 24}, Case{2, 2, 2, 4}, Case{2, 1, 2, 4}}) {
    const auto inst = uniform_with_Wkd(c.d, c.k, c.r);
    ASSERT_TRUE(inst.expected_count);
    EXPECT_EQ(static_cast<std::size_t>(*inst.expected_count), c.count);
    EXPECT_EQ(run(inst).V.size(), c.count) << inst.name;
    EXPECT_EQ(inst.edge_bound, 2);
  }
}

TEST(Octagon, WitnessesAreUniqueMaximizers) {
  const auto inst = octagon_example();
  const auto& U = *inst.expected_vertices;
  ASSERT_EQ(U.size(), 8U);
  ASSERT_EQ(inst.witnesses.size(), 8U);
  for (std::size_t i = 0; i < U.size(); ++i)
    for (std::size_t j = 0; j < U.size(); ++j)
      if (i != j) EXPECT_GT(dot(inst.witnesses[i], U[i]), dot(inst.witnesses[i], U[j]));
  EXPECT_EQ(inst.edge_bound, 2);
  EXPECT_EQ(run(inst).V, U);
}

IntMatrix ones(Index r, Index c) { return IntMatrix::Ones(r, c); }

TEST(Tables, PermutationTables) {
  const auto inst = tables_3way(2, 2, 2, ones(2, 2), ones(2, 2), ones(2, 2), ones(1, 8));
  const auto S = enumerate_set(inst.set);
  EXPECT_EQ(S.size(), 2U);
  for (const auto& x : S) EXPECT_TRUE(is_member(inst.set, x));
  try {
    IntMatrix c = ones(2, 2);
    c(0, 0) = 2;
    tables_3way(2, 2, 2, ones(2, 2), ones(2, 2), c, ones(1, 8));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInconsistentLineSums);
  }
}

// Line sums of a random table are consistent by construction.
Instance random_table(std::mt19937_64& rng, Index l, Index m, Index n, Index d) {
  IntMatrix a = IntMatrix::Zero(m, n), b = IntMatrix::Zero(l, n), c = IntMatrix::Zero(l, m);
  for (Index i = 0; i < l; ++i)
    for (Index j = 0; j < m; ++j)
      for (Index k = 0; k < n; ++k) {
        const std::int64_t v = static_cast<std::int64_t>(rng() % 2);
        a(j, k) += v;
        b(i, k) += v;
        c(i, j) += v;
      }
  IntMatrix W(d, l * m * n);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < W.cols(); ++j) W(i, j) = static_cast<std::int64_t>(rng() % 4);
  return tables_3way(l, m, n, a, b, c, W);
}

TEST(Tables, OracleMatchesBruteForce) {
  std::mt19937_64 rng(42);
  const auto inst = random_table(rng, 3, 3, 2, 2);
  const auto S = enumerate_set(inst.set);
  ASSERT_FALSE(S.empty());
  const auto oracle = make_oracle(inst);
  for (int t = 0; t < 50; ++t) {
    IntVec w(18);
    for (Index i = 0; i < 18; ++i) w(i) = static_cast<std::int64_t>(rng() % 9) - 4;
    Int best = dot(w, S.front());
    for (const auto& x : S) best = std::max(best, dot(w, x));
    const auto ans = oracle->optimize(w);
    EXPECT_EQ(ans.value, best);
    EXPECT_TRUE(is_member(inst.set, ans.x));
  }
}

TEST(Partition, SmallCases) {
  auto inst = partition_instance(2, 2, make_vec({1, 1}), {IntMatrix::Ones(2, 2)});
  EXPECT_EQ(enumerate_set(inst.set), vecs({{1, 0, 0, 1}, {0, 1, 1, 0}}));
  inst = partition_instance(1, 3, make_vec({3}), {IntMatrix::Ones(1, 3)});
  EXPECT_EQ(enumerate_set(inst.set), vecs({{1, 1, 1}}));
  try {
    partition_instance(2, 3, make_vec({1, 1}), {IntMatrix::Ones(2, 3)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidDemand);
  }
}

TEST(Partition, ProjectorMatchesBruteForce) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 5; ++t) {
    IntVec b = IntVec::Zero(3);
    for (int j = 0; j < 5; ++j) b(static_cast<Index>(rng() % 3)) += 1;
    std::vector<IntMatrix> U(2, IntMatrix(3, 5));
    for (auto& M : U)
      for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < 5; ++j) M(i, j) = static_cast<std::int64_t>(rng() % 2);
    const auto inst = partition_instance(3, 5, b, U);
    EXPECT_EQ(run(inst).V, project_vertices(enumerate_set(inst.set), inst.W));
  }
}

TransshipmentSpec path() {
  TransshipmentSpec t;
  t.vertices = 3;
  t.arcs = {{0, 1}, {1, 2}};
  t.demand = make_vec({-1, 0, 1});
  t.lower = make_vec({0, 0});
  t.upper = make_vec({1, 1});
  return t;
}

TEST(Transshipment, PathAndBounds) {
  auto inst = transshipment_instance(path(), make_matrix({{1, 2}}));
  EXPECT_EQ(enumerate_set(inst.set), vecs({{1, 1}}));
  EXPECT_EQ(inst.edge_bound, 3);

  TransshipmentSpec five;
  five.vertices = 4;
  five.arcs = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
  five.demand = make_vec({-2, 0, 0, 2});
  five.lower = IntVec::Zero(5);
  five.upper = IntVec::Constant(5, 2);
  inst = transshipment_instance(five, IntMatrix::Ones(2, 5));
  EXPECT_EQ(inst.edge_bound, 6);

  auto bad = path();
  bad.demand = make_vec({-1, 0, 2});
  try {
    transshipment_instance(bad, make_matrix({{1, 2}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnbalancedDemand);
  }
}

TEST(Transshipment, DiamondMatchesIlp) {
  TransshipmentSpec t;
  t.vertices = 4;
  t.arcs = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 2}};
  t.demand = make_vec({-3, 0, 0, 3});
  t.lower = IntVec::Zero(5);
  t.upper = make_vec({2, 2, 2, 2, 1});
  const auto inst = transshipment_instance(t, IntMatrix::Ones(1, 5));
  const auto flow = make_oracle(inst);
  const auto ilp = bounded_ilp_oracle(to_ilp(t));
  std::mt19937_64 rng(44);
  for (int k = 0; k < 50; ++k) {
    IntVec w(5);
    for (Index i = 0; i < 5; ++i) w(i) = static_cast<std::int64_t>(rng() % 11) - 5;
    EXPECT_EQ(flow->optimize(w).value, ilp->optimize(w).value);
  }
}

TEST(Instances, KindNames) {
  EXPECT_EQ(kind_name(octagon_example().set), "uniform_matroid");
  EXPECT_EQ(kind_name(parabola_explicit(8).set), "explicit");
  EXPECT_EQ(kind_name(parabola_binary(2).set), "ilp");
  EXPECT_EQ(kind_name(PartitionSpec{}), "partition");
  EXPECT_EQ(kind_name(TablesSpec{}), "tables");
}

TEST(Random, FamiliesMatchBruteForce) {
  Rng rng(7);
  for (int t = 0; t < 3; ++t) {
    const std::vector<Instance> batch = {
        random_binary(rng, 6, 12, 2, Int(-3), Int(3)),
        random_uniform_matroid(rng, 6, 2, Int(-3), Int(3)),
        random_graphic_matroid(rng, 4, 6, 3, Int(-3), Int(3)),
        random_tables(rng, 2, 2, 3, 2, Int(-3), Int(3)),
        random_partition(rng, 3, 4, 2, Int(-3), Int(3)),
        random_transshipment(rng, 4, 5, 2, Int(-3), Int(3)),
    };
    for (const auto& inst : batch) {
      EXPECT_EQ(run(inst).V, project_vertices(enumerate_set(inst.set), inst.W)) << inst.name;
    }
  }
}

TEST(Random, SameSeedSameInstance) {
  Rng a(11), b(11);
  EXPECT_EQ(random_transshipment(a, 5, 6, 2, Int(0), Int(1)).W, random_transshipment(b, 5, 6, 2, Int(0), Int(1)).W);
}

}  // namespace
}  // namespace ccm
