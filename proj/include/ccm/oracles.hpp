#pragma once

// Linear-optimization oracles: given w in Z^n, return a maximizer of w.x
// over a finite feasible set S together with the optimal value.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "ccm/integer.hpp"

namespace ccm {

struct OracleAnswer {
  IntVec x;
  Int value;
};

/// Coordinate bounds lower <= x <= upper valid for every point of S.
struct Box {
  IntVec lower;
  IntVec upper;
};

/// Immutable after construction; optimize() is safe to call concurrently and
/// returns identical answers for identical queries.
class LinearOracle {
 public:
  virtual ~LinearOracle() = default;

  virtual Index dimension() const = 0;
  virtual OracleAnswer optimize(const IntVec& w) const = 0;

  /// Vectors g in Z^n such that every edge of conv(S) is parallel to some g,
  /// when the oracle knows such a family. The projector uses their images
  /// W g as zonotope generators.
  virtual std::optional<std::vector<IntVec>> edge_generators() const { return std::nullopt; }

  /// A finite box containing S, if known.
  virtual std::optional<Box> bounding_box() const { return std::nullopt; }
};

using OraclePtr = std::shared_ptr<const LinearOracle>;

// ---------------------------------------------------------------------------
// Feasible-set descriptions

struct MatroidSpec {
  enum class Kind { kUniform, kGraphic, kCustom };
  using Predicate = std::function<bool(const std::vector<bool>&)>;

  Kind kind = Kind::kUniform;
  Index n = 0;      // ground set size
  Index rank = 0;   // uniform only
  Index vertices = 0;  // graphic only
  std::vector<std::pair<Index, Index>> edges;  // graphic only; edge i is element i
  Predicate independent;  // custom only

  static MatroidSpec uniform(Index n, Index r);
  static MatroidSpec graphic(Index vertices, std::vector<std::pair<Index, Index>> edges);
  static MatroidSpec custom(Index n, Predicate independent);
};

struct Arc {
  Index tail;
  Index head;
};

/// Flow conservation is inflow - outflow = demand[v] at every vertex.
struct TransshipmentSpec {
  Index vertices = 0;
  std::vector<Arc> arcs;
  IntVec demand;
  IntVec lower;
  IntVec upper;
};

/// {x in Z^n : A x = b, lower <= x <= upper}; a missing bound is infinite.
struct IlpSpec {
  IntMatrix A;
  IntVec b;
  std::vector<std::optional<Int>> lower;
  std::vector<std::optional<Int>> upper;

  Index n() const { return A.cols(); }
};

struct IlpOptions {
  std::int64_t node_budget = 5'000'000;  // per query
};

// ---------------------------------------------------------------------------
// Oracles

/// Lexicographically smallest maximizer over an explicit list.
OraclePtr explicit_oracle(std::vector<IntVec> points);

/// Greedy: elements by weight descending, ties by smaller index.
OraclePtr matroid_oracle(MatroidSpec spec);

/// Maximum-weight flow by successive shortest paths, refined to the
/// lexicographically smallest optimal flow.
OraclePtr transshipment_oracle(TransshipmentSpec spec);

/// Exact depth-first branch-and-bound; lexicographically smallest optimum.
OraclePtr bounded_ilp_oracle(IlpSpec spec, IlpOptions options = {});

/// Bound propagation over the equality rows. Every bound of the result is
/// finite. Throws kUnbounded if some variable stays unbounded, kInfeasible if
/// propagation empties a domain.
Box presolve_bounds(const IlpSpec& spec);

// ---------------------------------------------------------------------------
// Membership tests, written independently of the solvers.

bool is_member(const std::vector<IntVec>& points, const IntVec& x);
bool is_member(const MatroidSpec& spec, const IntVec& x);
bool is_member(const TransshipmentSpec& spec, const IntVec& x);
bool is_member(const IlpSpec& spec, const IntVec& x);

/// Rank of a graphic matroid: vertices minus connected components.
Index graphic_rank(Index vertices, const std::vector<std::pair<Index, Index>>& edges);

/// Vertex-arc incidence matrix: +1 at the head, -1 at the tail.
IntMatrix incidence_matrix(const TransshipmentSpec& spec);

/// The same feasible set written as an IlpSpec.
IlpSpec to_ilp(const TransshipmentSpec& spec);

}  // namespace ccm
