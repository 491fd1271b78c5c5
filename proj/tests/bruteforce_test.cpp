#include "ccm/bruteforce.hpp"

#include <gtest/gtest.h>

#include <random>

#include "ccm/geometry.hpp"
#include "ccm/verify.hpp"

namespace ccm {
namespace {

std::vector<IntVec> vecs(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<IntVec> out;
  for (const auto& r : rows) out.push_back(make_vec(r));
  sort_unique(out);
  return out;
}

TEST(Budget, Parse) {
  EXPECT_EQ(parse_budget("500").max_points, 500U);
  const auto b = parse_budget(" 10 , 2000 ");
  EXPECT_EQ(b.max_points, 10U);
  EXPECT_EQ(b.max_box_volume, 2000U);
  EXPECT_THROW(parse_budget("ten"), Error);
  EXPECT_THROW(parse_budget("0"), Error);
}

TEST(Enumerate, Families) {
  EXPECT_EQ(enumerate_set(MatroidSpec::uniform(4, 2)).size(), 6U);
  EXPECT_EQ(enumerate_set(parabola_explicit(8).set).size(), 3U);
  // K4 has 16 spanning trees.
  const auto K4 = MatroidSpec::graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const auto trees = enumerate_set(K4);
  EXPECT_EQ(trees.size(), 16U);
  for (const auto& x : trees) EXPECT_TRUE(is_member(K4, x));
  const auto custom = MatroidSpec::custom(4, [](const std::vector<bool>& in) {
    return static_cast<int>(in[0]) + static_cast<int>(in[1]) <= 1 && static_cast<int>(in[2]) + static_cast<int>(in[3]) <= 1;
  });
  EXPECT_EQ(enumerate_set(custom).size(), 4U);
}

TEST(Enumerate, BudgetExceeded) {
  EnumerationBudget tiny;
  tiny.max_points = 5;
  try {
    enumerate_set(MatroidSpec::uniform(4, 2), tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBudgetExceeded);
  }
  tiny.max_points = 100;
  tiny.max_box_volume = 10;
  EXPECT_THROW(enumerate_set(parabola_binary(2).set, tiny), Error);
}

TEST(Enumerate, UnboundedIlp) {
  IlpSpec s;
  s.A = make_matrix({{1, -1}});
  s.b = make_vec({0});
  s.lower = {Int(0), Int(0)};
  s.upper = {std::nullopt, std::nullopt};
  try {
    enumerate_set(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnbounded);
  }
}

TEST(ProjectVertices, PaperSets) {
  const auto oct = octagon_example();
  EXPECT_EQ(project_vertices(enumerate_set(oct.set), oct.W), *oct.expected_vertices);
  EXPECT_EQ(project_vertices({make_vec({1, 2, 3})}, make_matrix({{1, 1, 1}})), vecs({{6}}));
  const auto t = parabola_binary(2);
  EXPECT_EQ(project_vertices(enumerate_set(t.set), t.W), vecs({{0, 0}, {1, 1}, {2, 4}, {3, 9}}));
}

TEST(ProjectVertices, AgreesWithGeometryHull) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    const Index d = 1 + trial % 3;
    std::vector<IntVec> pts;
    for (int k = 0; k < 3 + static_cast<int>(rng() % 15); ++k) {
      IntVec p(d);
      for (Index i = 0; i < d; ++i) p(i) = static_cast<std::int64_t>(rng() % 5) - 2;
      pts.push_back(p);
    }
    const IntMatrix I = IntMatrix::Identity(d, d);
    EXPECT_EQ(project_vertices(pts, I), hull_vertices(pts, d)) << "trial " << trial;
  }
}

TEST(ProjectVertices, CollinearAndDuplicates) {
  const auto V = project_vertices({make_vec({0, 0}), make_vec({2, 0}), make_vec({0, 2}), make_vec({1, 1}), make_vec({2, 0})},
                                  IntMatrix::Identity(2, 2));
  EXPECT_EQ(V, vecs({{0, 0}, {0, 2}, {2, 0}}));
}

TEST(EdgeComplexity, Basics) {
  EXPECT_EQ(edge_complexity_exact({make_vec({0, 0}), make_vec({3, 3})}), 2);
  EXPECT_EQ(edge_complexity_exact({make_vec({4, 1})}), 0);
  // Segment with an interior lattice point.
  EXPECT_EQ(edge_complexity_exact({make_vec({0, 0}), make_vec({1, 2}), make_vec({2, 4})}), 3);
  // Square plus center: edges are axis parallel.
  EXPECT_EQ(edge_complexity_exact(vecs({{0, 0}, {0, 2}, {2, 0}, {2, 2}, {1, 1}})), 1);
}

TEST(EdgeComplexity, MatroidsAreTwo) {
  for (auto [n, r] : {std::pair<Index, Index>{4, 2}, {5, 2}, {5, 3}, {6, 3}})
    EXPECT_EQ(edge_complexity_exact(enumerate_set(MatroidSpec::uniform(n, r))), 2);
  const auto K4 = MatroidSpec::graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(edge_complexity_exact(enumerate_set(K4)), 2);
}

TEST(EdgeComplexity, BinarySetsAtMostN) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = 3 + trial % 4;
    std::vector<IntVec> S;
    for (int k = 0; k < 2 + static_cast<int>(rng() % 10); ++k) {
      IntVec x(n);
      for (Index i = 0; i < n; ++i) x(i) = static_cast<std::int64_t>(rng() % 2);
      S.push_back(x);
    }
    const Int e = edge_complexity_exact(S);
    EXPECT_LE(e, Int(n));
    EXPECT_LE(e, pairwise_direction_bound(S));
  }
}

TEST(Verify, PassAndUndersizedBound) {
  const auto t = parabola_explicit(8);
  ProjectionConfig cfg;
  cfg.W = t.W;
  cfg.edge_bound = t.edge_bound;
  auto r = verify_against_bruteforce(t, cfg);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.bound_verified);
  EXPECT_EQ(r.projected, vecs({{0, 0}, {1, 1}, {2, 4}}));

  const auto oct = octagon_example();
  cfg.W = oct.W;
  cfg.edge_bound = 1;
  r = verify_against_bruteforce(oct, cfg);
  EXPECT_FALSE(r.bound_verified);
  EXPECT_EQ(*r.exact_edge_complexity, 2);
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.missing.empty());

  EnumerationBudget tiny;
  tiny.max_points = 10;
  try {
    verify_against_bruteforce(oct, cfg, tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kTooLargeForBruteforce);
  }
}

TEST(SignPatterns, MatchChamberCounts) {
  EXPECT_EQ(realizable_sign_patterns(direction_set(2, Int(1)).dirs), 8U);
  EXPECT_EQ(realizable_sign_patterns(direction_set(1, Int(5)).dirs), 2U);
  const auto E = direction_set(3, Int(1));
  const auto z3 = realizable_sign_patterns(E.dirs);
  EXPECT_EQ(z3, zonotope_vertices(E).size());
  EXPECT_GE(z3, 24U);
  EXPECT_LE(z3, 158U);
  EXPECT_THROW(realizable_sign_patterns(E.dirs, 10), Error);
}

}  // namespace
}  // namespace ccm
