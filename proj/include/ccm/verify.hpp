#pragma once

// Cross-check of the projector against exhaustive enumeration.

#include <optional>
#include <vector>

#include "ccm/bruteforce.hpp"
#include "ccm/projector.hpp"

namespace ccm {

struct VerifyReport {
  bool pass = false;  // projector vertices == brute-force vertices
  std::vector<IntVec> projected;
  std::vector<IntVec> reference;
  std::vector<IntVec> missing;  // in reference only
  std::vector<IntVec> extra;    // in projected only
  std::size_t points = 0;       // |S|
  Int edge_bound = 0;
  std::optional<Int> exact_edge_complexity;  // when S is small enough
  Int certified_bound = 0;  // a bound known to be valid for S
  bool bound_verified = false;  // edge_bound >= certified_bound
  ProjectionResult projection;
};

/// Throws kTooLargeForBruteforce when S does not fit the budget.
VerifyReport verify_against_bruteforce(const Instance& instance, const ProjectionConfig& cfg,
                                       const EnumerationBudget& budget = {});

}  // namespace ccm
