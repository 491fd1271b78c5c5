#pragma once

// Exhaustive reference computations for small sets. Nothing here calls the
// projector, the chamber enumeration or the oracles' solvers.

#include <cstdint>
#include <string>
#include <vector>

#include "ccm/instances.hpp"

namespace ccm {

struct EnumerationBudget {
  std::uint64_t max_points = 1'000'000;
  std::uint64_t max_box_volume = 1'000'000'000'000;  // box cells, or subsets for matroids
};

/// "P" or "P,V" as max_points and max_box_volume. Throws kParse.
EnumerationBudget parse_budget(const std::string& text);

/// The whole feasible set, sorted lexicographically. ILP-like sets are
/// scanned over their box with row-interval pruning.
std::vector<IntVec> enumerate_set(const FeasibleSet& set, const EnumerationBudget& budget = {});

/// True iff some linear functional is maximized over points uniquely at p.
bool separable_vertex(const IntVec& p, const std::vector<IntVec>& points);

/// Vertices of conv{W x : x in S}, sorted.
std::vector<IntVec> project_vertices(const std::vector<IntVec>& S, const IntMatrix& W);

/// Largest ||primitive(z - x)||_1 over edges [x, z] of conv(S); 0 for a
/// single point. Throws kBudgetExceeded above max_vertices vertices.
Int edge_complexity_exact(const std::vector<IntVec>& S, std::size_t max_vertices = 160);

/// max ||primitive(z - x)||_1 over all pairs of points. Never below the
/// edge complexity; no LP involved.
Int pairwise_direction_bound(const std::vector<IntVec>& S);

/// Number of sign vectors s with some h satisfying s_i <dirs[i], h> > 0 for
/// all i, that is the vertex count of the zonotope. One exact LP per
/// realizable prefix; throws kBudgetExceeded past max_lps.
std::size_t realizable_sign_patterns(const std::vector<IntVec>& dirs, std::size_t max_lps = 2'000'000);

}  // namespace ccm
