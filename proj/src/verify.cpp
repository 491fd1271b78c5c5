#include "ccm/verify.hpp"

#include <algorithm>
#include <iterator>

namespace ccm {

VerifyReport verify_against_bruteforce(const Instance& instance, const ProjectionConfig& cfg,
                                       const EnumerationBudget& budget) {
  std::vector<IntVec> S;
  try {
    S = enumerate_set(instance.set, budget);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kBudgetExceeded) fail(ErrorKind::kTooLargeForBruteforce, e.what());
    throw;
  }
  if (S.empty()) fail(ErrorKind::kInfeasible, instance.name + " has no feasible point");

  VerifyReport r;
  r.points = S.size();
  r.edge_bound = cfg.edge_bound;
  r.reference = project_vertices(S, cfg.W);
  r.projection = project(*make_oracle(instance), cfg);
  r.projected = r.projection.V;
  std::set_difference(r.reference.begin(), r.reference.end(), r.projected.begin(), r.projected.end(),
                      std::back_inserter(r.missing), LexLess{});
  std::set_difference(r.projected.begin(), r.projected.end(), r.reference.begin(), r.reference.end(),
                      std::back_inserter(r.extra), LexLess{});
  r.pass = r.missing.empty() && r.extra.empty();

  if (S.size() <= 64) {
    r.exact_edge_complexity = edge_complexity_exact(S);
    r.certified_bound = *r.exact_edge_complexity;
  } else {
    r.certified_bound = pairwise_direction_bound(S);
  }
  r.bound_verified = cfg.edge_bound >= r.certified_bound;
  return r;
}

}  // namespace ccm
