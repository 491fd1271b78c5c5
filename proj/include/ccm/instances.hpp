#pragma once

// Named constructions: a feasible set, a criteria matrix W and an edge bound
// valid for the set.

#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "ccm/integer.hpp"
#include "ccm/oracles.hpp"

namespace ccm {

struct ExplicitSpec {
  std::vector<IntVec> points;
};

/// l x m x n tables with all line sums prescribed:
///   sum_i x(i,j,k) = a(j,k), sum_j x(i,j,k) = b(i,k), sum_k x(i,j,k) = c(i,j).
/// Variable (i,j,k) sits at index k*l*m + i*m + j, so the system is the n-fold
/// product of (I_lm, incidence of K_{l,m}).
struct TablesSpec {
  Index l = 0, m = 0, n = 0;
  IntMatrix a;  // m x n
  IntMatrix b;  // l x n
  IntMatrix c;  // l x m
};

/// Items 0..items-1 split among players; player i receives sizes(i) items.
/// X(i,j) sits at index i*items + j.
struct PartitionSpec {
  Index players = 0;
  Index items = 0;
  IntVec sizes;
};

using FeasibleSet = std::variant<ExplicitSpec, MatroidSpec, TransshipmentSpec, IlpSpec, TablesSpec, PartitionSpec>;

struct Instance {
  std::string name;
  FeasibleSet set;
  IntMatrix W;
  Int edge_bound = 1;
  std::optional<std::vector<IntVec>> edge_generators;  // e.g. a Graver basis
  std::optional<std::vector<IntVec>> expected_vertices;
  std::optional<Index> expected_count;
  std::vector<IntVec> witnesses;  // optional h per expected vertex, same order
  std::string note;
};

/// "explicit", "uniform_matroid", "graphic_matroid", "custom_matroid",
/// "transshipment", "ilp", "tables" or "partition".
std::string kind_name(const FeasibleSet& set);

Index ambient_dimension(const FeasibleSet& set);

OraclePtr make_oracle(const Instance& instance, const IlpOptions& options = {});

/// Equality form of tables and partitions; IlpSpec passes through, and
/// transshipment goes through to_ilp. Throws kInvalidArgument otherwise.
IlpSpec ilp_form(const FeasibleSet& set);

bool is_member(const FeasibleSet& set, const IntVec& x);

/// Shape and consistency checks per kind (line sums, demands, ranks).
void validate_set(const FeasibleSet& set);

/// Dimensions, edge bound, and membership of one oracle answer.
void self_check(const Instance& instance);

// ---------------------------------------------------------------------------
// Generators

/// Points (i, i^2) for 0 <= i <= floor(sqrt(n/2)) as images of explicit 0/1
/// points under a 0/1 matrix with n columns.
Instance parabola_explicit(Index n);

/// 0/1 system whose projection is {(t, t^2) : 0 <= t < 2^k}.
Instance parabola_binary(Index k);

/// The same image with a 0/1 criteria matrix, paid for with doubling chains.
Instance parabola_doubling(Index k);

/// Column c of W_d^k has row i equal to bit i of c, each column repeated k
/// times in a row. S is the uniform matroid of rank r on k 2^d elements.
IntMatrix wkd_matrix(Index d, Index k);
Instance uniform_with_Wkd(Index d, Index k, Index r);

/// W_2^2 over the rank 3 uniform matroid on 8 elements, with the octagon's
/// vertices and one maximizing h per vertex.
Instance octagon_example();

/// W is supplied by the caller and must have l*m*n columns.
Instance tables_3way(Index l, Index m, Index n, IntMatrix a, IntMatrix b, IntMatrix c, IntMatrix W);

/// utilities[k] is the players x items matrix of criterion k.
Instance partition_instance(Index players, Index items, IntVec sizes, const std::vector<IntMatrix>& utilities);

Instance transshipment_instance(TransshipmentSpec spec, IntMatrix W);

/// Edge bound 2.
Instance matroid_instance(MatroidSpec spec, IntMatrix W);

/// Edge bound and generators for an ILP-like set: the Graver basis of the
/// equality matrix when it completes within the budget, else the sum of
/// the box widths.
void attach_ilp_edge_data(Instance& instance);

// ---------------------------------------------------------------------------
// Seeded random families. W has d rows with entries in [wlo, whi].

using Rng = std::mt19937_64;

IntMatrix random_matrix(Rng& rng, Index rows, Index cols, Int lo, Int hi);

/// Up to `points` distinct 0/1 points in dimension n; edge bound n.
Instance random_binary(Rng& rng, Index n, Index points, Index d, Int wlo, Int whi);
Instance random_uniform_matroid(Rng& rng, Index n, Index d, Int wlo, Int whi);
/// A multigraph without loops on `vertices` vertices with `edges` edges.
Instance random_graphic_matroid(Rng& rng, Index vertices, Index edges, Index d, Int wlo, Int whi);
/// Line sums of a random 0/1 table.
Instance random_tables(Rng& rng, Index l, Index m, Index n, Index d, Int wlo, Int whi);
Instance random_partition(Rng& rng, Index players, Index items, Index d, Int wlo, Int whi);
/// Capacities in [0, 2]; demands are those of a random feasible flow.
Instance random_transshipment(Rng& rng, Index vertices, Index arcs, Index d, Int wlo, Int whi);

}  // namespace ccm
