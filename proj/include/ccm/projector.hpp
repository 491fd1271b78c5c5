#pragma once

// Vertices of conv(W S) from one oracle query per chamber of a refining
// zonotope, and maximization of convex functions of W x over S.

#include <optional>
#include <string>
#include <vector>

#include "ccm/geometry.hpp"
#include "ccm/oracles.hpp"
#include "ccm/rational.hpp"

namespace ccm {

/// Where the zonotope generators come from. Every choice contains all edge
/// directions of conv(W S) once the edge bound is valid.
enum class DirectionMode {
  kAuto,        // generators if known, else box image, else cube
  kCube,        // canonical directions of {-q..q}^d, q = e * ||W||_inf
  kGenerators,  // W g over edge generators g with ||g||_1 <= e
  kImage,       // W g over integer g in the oracle's box range with ||g||_1 <= e
};

const char* to_string(DirectionMode mode);
DirectionMode parse_direction_mode(const std::string& name);

struct ProjectionConfig {
  IntMatrix W;
  Int edge_bound = 1;
  DirectionMode mode = DirectionMode::kAuto;
  std::optional<std::vector<IntVec>> edge_generators;  // overrides the oracle's
  int threads = 1;

  Int q() const { return edge_bound * max_abs(W); }
};

struct Certificate {
  IntVec vertex;  // v = W x
  IntVec h;       // h W is maximized over S at x
  IntVec x;
};

struct ProjectionResult {
  std::vector<IntVec> V;  // vertices of conv(W S), sorted
  std::vector<IntVec> X;  // one preimage per distinct candidate, in candidate order
  std::vector<IntVec> candidates;  // distinct W x over all answers, sorted
  std::vector<Certificate> certificates;  // parallel to V
  std::size_t queries = 0;
  std::size_t chambers = 0;
  std::size_t directions = 0;
  DirectionMode mode_used = DirectionMode::kCube;
};

/// Zonotope generators used by project() for this oracle and configuration.
DirectionSet projection_directions(const LinearOracle& oracle, const ProjectionConfig& cfg, DirectionMode* used = nullptr);

ProjectionResult project(const LinearOracle& oracle, const ProjectionConfig& cfg);

class ConvexObjective {
 public:
  enum class Kind { kLinear, kMaxOfLinear, kSquaredEuclidean, kWeightedPNorm };

  static ConvexObjective linear(IntVec c);
  static ConvexObjective max_of_linear(std::vector<IntVec> c, std::vector<Int> offsets);
  static ConvexObjective squared_euclidean(IntVec center);
  /// p is 1, 2 or 0 for the infinity norm; weights must be nonnegative.
  static ConvexObjective weighted_p_norm(int p, IntVec weights);

  Kind kind() const { return kind_; }
  Index dimension() const;

  /// Sign of f(y) - f(z), decided exactly.
  int compare(const IntVec& y, const IntVec& z) const;

  /// f(y) when rational. The weighted 2-norm returns nullopt unless the
  /// radicand is a perfect square.
  std::optional<Rational> value(const IntVec& y) const;

  /// "p/q", or "sqrt(p/q)" for an irrational 2-norm.
  std::string value_string(const IntVec& y) const;

  // Parameters, for serialization.
  const std::vector<IntVec>& vectors() const { return vectors_; }
  const std::vector<Int>& offsets() const { return offsets_; }
  int p() const { return p_; }

 private:
  ConvexObjective() = default;
  Rational key(const IntVec& y) const;  // monotone in f

  Kind kind_ = Kind::kLinear;
  std::vector<IntVec> vectors_;  // c, c_i, center, or weights
  std::vector<Int> offsets_;
  int p_ = 1;
};

struct MaximizeResult {
  IntVec x;
  IntVec y;
  ProjectionResult projection;
};

/// x* in X maximizing f(W x); ties go to the lexicographically smallest y.
MaximizeResult maximize(const LinearOracle& oracle, const ProjectionConfig& cfg, const ConvexObjective& f);

}  // namespace ccm
