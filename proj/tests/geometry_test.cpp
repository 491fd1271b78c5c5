#include "ccm/geometry.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace ccm {
namespace {

std::vector<IntVec> vecs(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<IntVec> out;
  for (const auto& r : rows) out.push_back(make_vec(r));
  return out;
}

// Independent oracle: distinct strict sign patterns of <e_i, h> over every
// integer h in the box ||h||_inf <= bound.
std::size_t scan_sign_patterns(const DirectionSet& E, std::int64_t bound) {
  const Index d = E.dim;
  std::set<std::vector<bool>> patterns;
  std::vector<std::int64_t> h(static_cast<std::size_t>(d), -bound);
  while (true) {
    std::vector<bool> pattern;
    bool strict = true;
    for (const auto& e : E.dirs) {
      std::int64_t s = 0;
      for (Index t = 0; t < d; ++t) s += e(t).value() * h[static_cast<std::size_t>(t)];
      if (s == 0) {
        strict = false;
        break;
      }
      pattern.push_back(s > 0);
    }
    if (strict) patterns.insert(pattern);
    Index i = d - 1;
    while (i >= 0 && h[static_cast<std::size_t>(i)] == bound) h[static_cast<std::size_t>(i--)] = -bound;
    if (i < 0) break;
    ++h[static_cast<std::size_t>(i)];
  }
  return patterns.size();
}

std::int64_t box_bound(const DirectionSet& E) {
  Int b = 0;
  for (const auto& e : E.dirs) b += inf_norm(e);
  return b.value();
}

void expect_valid_witnesses(const DirectionSet& E, const std::vector<ChamberWitness>& ws) {
  for (const auto& w : ws) {
    ASSERT_EQ(w.signs.size(), E.size());
    for (std::size_t i = 0; i < E.size(); ++i) {
      const Int s = dot(E.dirs[i], w.h);
      ASSERT_NE(s, 0);
      ASSERT_GT(s.value() * w.signs[i], 0) << "witness " << to_string(w.h);
    }
  }
}

TEST(Primitive, DividesByGcd) {
  EXPECT_EQ(primitive(make_vec({2, -4, 6})), make_vec({1, -2, 3}));
  EXPECT_EQ(primitive(make_vec({3, 5})), make_vec({3, 5}));
  EXPECT_EQ(canonical_direction(make_vec({0, -2, 4})), make_vec({0, 1, -2}));
}

TEST(Primitive, ZeroVectorFails) {
  try {
    primitive(make_vec({0, 0}));
    FAIL() << "expected ZeroVector";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kZeroVector);
  }
}

TEST(DirectionSet, PlaneRadiusOne) {
  const auto E = direction_set(2, 1);
  EXPECT_EQ(E.dirs, vecs({{0, 1}, {1, -1}, {1, 0}, {1, 1}}));
}

TEST(DirectionSet, Sizes) {
  EXPECT_EQ(direction_set(3, 1).size(), 13U);
  const auto E = direction_set(2, 2);
  EXPECT_EQ(E.dirs, vecs({{0, 1}, {1, -2}, {1, -1}, {1, 0}, {1, 1}, {1, 2}, {2, -1}, {2, 1}}));
}

TEST(DirectionSet, InvalidArguments) {
  EXPECT_THROW(direction_set(0, 1), Error);
  EXPECT_THROW(direction_set(2, 0), Error);
}

TEST(DirectionSet, NestedAndCanonical) {
  for (Index d = 1; d <= 3; ++d) {
    for (std::int64_t q = 1; q <= 3; ++q) {
      const auto small = direction_set(d, q);
      const auto big = direction_set(d, q + 1);
      for (const auto& e : small.dirs) {
        EXPECT_TRUE(std::binary_search(big.dirs.begin(), big.dirs.end(), e, LexLess{}));
        EXPECT_EQ(primitive(e), e);
        EXPECT_EQ(canonical_direction(e), e);
        EXPECT_LE(inf_norm(e), Int(q));
      }
      EXPECT_TRUE(std::is_sorted(small.dirs.begin(), small.dirs.end(), LexLess{}));
    }
  }
}

TEST(Chambers, CoordinateQuadrants) {
  DirectionSet E = make_direction_set(2, vecs({{1, 0}, {0, 1}}));
  const auto ws = enumerate_chambers(E);
  ASSERT_EQ(ws.size(), 4U);
  expect_valid_witnesses(E, ws);
  std::vector<IntVec> hs;
  for (const auto& w : ws) hs.push_back(w.h);
  EXPECT_EQ(hs, vecs({{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}));
}

TEST(Chambers, EmptySetFails) {
  DirectionSet E;
  E.dim = 2;
  try {
    enumerate_chambers(E);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kEmptyDirectionSet);
  }
}

TEST(Chambers, PlaneRadiusOneHasEight) {
  const auto E = direction_set(2, 1);
  const auto ws = enumerate_chambers(E);
  EXPECT_EQ(ws.size(), 8U);
  expect_valid_witnesses(E, ws);
}

TEST(Chambers, SpaceRadiusOneMatchesScan) {
  const auto E = direction_set(3, 1);
  const auto ws = enumerate_chambers(E);
  expect_valid_witnesses(E, ws);
  const std::size_t scanned = scan_sign_patterns(E, box_bound(E));
  EXPECT_EQ(scanned, 96U);  // frozen from the scan oracle
  EXPECT_EQ(ws.size(), scanned);
  EXPECT_GE(ws.size(), 24U);
  EXPECT_LE(ws.size(), 158U);
}

TEST(Chambers, DegenerateCases) {
  EXPECT_EQ(enumerate_chambers(direction_set(1, 5)).size(), 2U);
  EXPECT_EQ(enumerate_chambers(make_direction_set(3, vecs({{1, 2, 3}}))).size(), 2U);
}

TEST(Chambers, AntipodalAndSorted) {
  for (auto [d, q] : {std::pair<Index, int>{2, 3}, {3, 1}, {3, 2}}) {
    const auto ws = enumerate_chambers(direction_set(d, q));
    std::set<std::vector<int>> patterns;
    for (const auto& w : ws) {
      std::vector<int> p;
      for (std::size_t i = 0; i < w.signs.size(); ++i) p.push_back(w.signs[i]);
      patterns.insert(p);
    }
    EXPECT_EQ(patterns.size(), ws.size());
    for (auto p : patterns) {
      for (auto& s : p) s = -s;
      EXPECT_TRUE(patterns.count(p));
    }
    for (std::size_t i = 1; i < ws.size(); ++i) EXPECT_TRUE(lex_less(ws[i - 1].h, ws[i].h));
  }
}

TEST(Chambers, RandomArrangementsMatchScanAndBound) {
  std::mt19937_64 rng(20241015);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const Index d = 2 + trial % 2;
    const int count = 1 + static_cast<int>(rng() % (d == 2 ? 10 : 6));
    std::vector<IntVec> raw;
    for (int i = 0; i < count; ++i) {
      IntVec v(d);
      for (Index t = 0; t < d; ++t) v(t) = entry(rng);
      raw.push_back(v);
    }
    const DirectionSet E = make_direction_set(d, raw);
    if (E.empty()) continue;
    const auto ws = enumerate_chambers(E);
    expect_valid_witnesses(E, ws);
    // Narrow chambers can miss the small box; every chamber holds a sum of
    // two or three extreme rays, built from cross products of the normals.
    const std::int64_t radius = d == 2 ? 4 : 64;
    EXPECT_EQ(ws.size(), scan_sign_patterns(E, radius)) << "trial " << trial;
    EXPECT_LE(BigInt(ws.size()), zonotope_vertex_bound(d, BigInt(E.size())));
  }
}

TEST(Chambers, BoundHoldsForCubes) {
  for (auto [d, q] : {std::pair<Index, int>{2, 1}, {2, 4}, {3, 1}, {3, 2}, {4, 1}}) {
    const auto E = direction_set(d, q);
    const auto ws = enumerate_chambers(E);
    expect_valid_witnesses(E, ws);
    EXPECT_LE(BigInt(ws.size()), zonotope_vertex_bound(d, BigInt(E.size())));
  }
}

TEST(Zonotope, UnitSquare) {
  const auto zv = zonotope_vertices(make_direction_set(2, vecs({{1, 0}, {0, 1}})));
  std::vector<IntVec> v;
  for (const auto& z : zv) v.push_back(z.vertex);
  sort_unique(v);
  EXPECT_EQ(v, vecs({{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}));
}

TEST(Zonotope, Segment) {
  const auto zv = zonotope_vertices(make_direction_set(1, vecs({{1}})));
  ASSERT_EQ(zv.size(), 2U);
}

TEST(Zonotope, OctagonAndUniqueMaximizers) {
  const auto E = direction_set(2, 1);
  const auto zv = zonotope_vertices(E);
  ASSERT_EQ(zv.size(), 8U);
  std::vector<IntVec> points;
  for (const auto& z : zv) points.push_back(z.vertex);
  // Octagon: all 8 sums are distinct vertices of their hull.
  EXPECT_EQ(hull_vertices(points, 2).size(), 8U);
  for (const auto& z : zv) {
    for (const auto& other : zv) {
      if (equal(other.vertex, z.vertex)) continue;
      EXPECT_GT(dot(z.witness.h, z.vertex), dot(z.witness.h, other.vertex));
    }
  }
}

TEST(Zonotope, VerticesAreHullVertices) {
  for (auto [d, q] : {std::pair<Index, int>{2, 2}, {2, 5}, {3, 1}}) {
    const auto zv = zonotope_vertices(direction_set(d, q));
    std::vector<IntVec> pts;
    for (const auto& z : zv) pts.push_back(z.vertex);
    auto sorted = pts;
    sort_unique(sorted);
    EXPECT_EQ(sorted.size(), zv.size());
    EXPECT_EQ(hull_vertices(pts, d), sorted);
  }
}

TEST(Hull, CollinearPointDropped) {
  EXPECT_EQ(hull_vertices(vecs({{0, 0}, {2, 0}, {0, 2}, {1, 1}}), 2), vecs({{0, 0}, {0, 2}, {2, 0}}));
}

TEST(Hull, CubeDropsInteriorFaceAndEdgePoints) {
  auto pts = vecs({{0, 0, 0}, {0, 0, 2}, {0, 2, 0}, {0, 2, 2}, {2, 0, 0}, {2, 0, 2}, {2, 2, 0}, {2, 2, 2}});
  const auto corners = pts;
  for (const auto& extra : vecs({{1, 1, 1}, {1, 1, 0}, {2, 1, 1}, {1, 0, 0}, {0, 1, 2}})) pts.push_back(extra);
  EXPECT_EQ(hull_vertices(pts, 3), corners);
}

TEST(Hull, SinglePoint) { EXPECT_EQ(hull_vertices(vecs({{3, 4}}), 2), vecs({{3, 4}})); }

TEST(Hull, OctagonU) {
  const auto U = vecs({{1, 0}, {2, 0}, {3, 1}, {3, 2}, {2, 3}, {1, 3}, {0, 2}, {0, 1}});
  auto sorted = U;
  sort_unique(sorted);
  EXPECT_EQ(hull_vertices(U, 2), sorted);
}

TEST(Hull, DimensionMismatch) {
  try {
    hull_vertices(vecs({{1, 2}, {1, 2, 3}}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimensionMismatch);
  }
}

TEST(Hull, IdempotentAndPermutationInvariant) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(0, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const Index d = 2 + trial % 2;
    std::vector<IntVec> pts;
    for (int i = 0; i < 12; ++i) {
      IntVec v(d);
      for (Index t = 0; t < d; ++t) v(t) = entry(rng);
      pts.push_back(v);
    }
    const auto hv = hull_vertices(pts, d);
    EXPECT_EQ(hull_vertices(hv, d), hv);
    std::shuffle(pts.begin(), pts.end(), rng);
    EXPECT_EQ(hull_vertices(pts, d), hv);
  }
}

TEST(Bound, Values) {
  EXPECT_EQ(zonotope_vertex_bound(2, 4), 8);
  // 2 * (1 + 12 + 66) for thirteen generators in R^3.
  EXPECT_EQ(zonotope_vertex_bound(3, 13), 158);
}

}  // namespace
}  // namespace ccm
