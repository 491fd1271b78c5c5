#include "ccm/instances.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "ccm/graver.hpp"

namespace ccm {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

Int pow_int(Int base, Index e) {
  Int r = 1;
  for (Index i = 0; i < e; ++i) r *= base;
  return r;
}

std::vector<std::pair<Index, Index>> index_pairs(Index k) {
  std::vector<std::pair<Index, Index>> out;
  for (Index i = 0; i < k; ++i)
    for (Index j = i + 1; j < k; ++j) out.emplace_back(i, j);
  return out;
}

TransshipmentSpec partition_network(const PartitionSpec& p) {
  TransshipmentSpec t;
  t.vertices = p.items + p.players;
  for (Index i = 0; i < p.players; ++i)
    for (Index j = 0; j < p.items; ++j) t.arcs.push_back({j, p.items + i});
  t.demand = IntVec::Zero(t.vertices);
  for (Index j = 0; j < p.items; ++j) t.demand(j) = -1;
  for (Index i = 0; i < p.players; ++i) t.demand(p.items + i) = p.sizes(i);
  t.lower = IntVec::Zero(p.players * p.items);
  t.upper = IntVec::Ones(p.players * p.items);
  return t;
}

bool tables_member(const TablesSpec& t, const IntVec& x) {
  if (x.size() != t.l * t.m * t.n) return false;
  auto at = [&](Index i, Index j, Index k) { return x(k * t.l * t.m + i * t.m + j); };
  for (Index idx = 0; idx < x.size(); ++idx)
    if (x(idx) < 0) return false;
  for (Index j = 0; j < t.m; ++j)
    for (Index k = 0; k < t.n; ++k) {
      Int s = 0;
      for (Index i = 0; i < t.l; ++i) s += at(i, j, k);
      if (s != t.a(j, k)) return false;
    }
  for (Index i = 0; i < t.l; ++i)
    for (Index k = 0; k < t.n; ++k) {
      Int s = 0;
      for (Index j = 0; j < t.m; ++j) s += at(i, j, k);
      if (s != t.b(i, k)) return false;
    }
  for (Index i = 0; i < t.l; ++i)
    for (Index j = 0; j < t.m; ++j) {
      Int s = 0;
      for (Index k = 0; k < t.n; ++k) s += at(i, j, k);
      if (s != t.c(i, j)) return false;
    }
  return true;
}

bool partition_member(const PartitionSpec& p, const IntVec& x) {
  if (x.size() != p.players * p.items) return false;
  for (Index j = 0; j < p.items; ++j) {
    Int owners = 0;
    for (Index i = 0; i < p.players; ++i) {
      const Int v = x(i * p.items + j);
      if (v != 0 && v != 1) return false;
      owners += v;
    }
    if (owners != 1) return false;
  }
  for (Index i = 0; i < p.players; ++i) {
    Int got = 0;
    for (Index j = 0; j < p.items; ++j) got += x(i * p.items + j);
    if (got != p.sizes(i)) return false;
  }
  return true;
}

std::vector<IntVec> parabola(Int count) {
  std::vector<IntVec> out;
  for (Int t = 0; t < count; t += 1) out.push_back(make_vec({t.value(), (t * t).value()}));
  return out;
}

}  // namespace

std::string kind_name(const FeasibleSet& set) {
  return std::visit(Overloaded{
                        [](const ExplicitSpec&) -> std::string { return "explicit"; },
                        [](const MatroidSpec& m) -> std::string {
                          switch (m.kind) {
                            case MatroidSpec::Kind::kUniform: return "uniform_matroid";
                            case MatroidSpec::Kind::kGraphic: return "graphic_matroid";
                            case MatroidSpec::Kind::kCustom: return "custom_matroid";
                          }
                          return "matroid";
                        },
                        [](const TransshipmentSpec&) -> std::string { return "transshipment"; },
                        [](const IlpSpec&) -> std::string { return "ilp"; },
                        [](const TablesSpec&) -> std::string { return "tables"; },
                        [](const PartitionSpec&) -> std::string { return "partition"; },
                    },
                    set);
}

Index ambient_dimension(const FeasibleSet& set) {
  return std::visit(Overloaded{
                        [](const ExplicitSpec& e) -> Index { return e.points.empty() ? 0 : e.points.front().size(); },
                        [](const MatroidSpec& m) -> Index { return m.n; },
                        [](const TransshipmentSpec& t) -> Index { return static_cast<Index>(t.arcs.size()); },
                        [](const IlpSpec& s) -> Index { return s.n(); },
                        [](const TablesSpec& t) -> Index { return t.l * t.m * t.n; },
                        [](const PartitionSpec& p) -> Index { return p.players * p.items; },
                    },
                    set);
}

IlpSpec ilp_form(const FeasibleSet& set) {
  return std::visit(
      Overloaded{
          [](const IlpSpec& s) -> IlpSpec { return s; },
          [](const TransshipmentSpec& t) -> IlpSpec { return to_ilp(t); },
          [](const PartitionSpec& p) -> IlpSpec { return to_ilp(partition_network(p)); },
          [](const TablesSpec& t) -> IlpSpec {
            const Index lm = t.l * t.m;
            IntMatrix K = IntMatrix::Zero(t.l + t.m, lm);
            for (Index i = 0; i < t.l; ++i)
              for (Index j = 0; j < t.m; ++j) {
                K(i, i * t.m + j) = 1;
                K(t.l + j, i * t.m + j) = 1;
              }
            IlpSpec s;
            s.A = n_fold(Bimatrix{IntMatrix::Identity(lm, lm), K}, t.n);
            s.b = IntVec::Zero(s.A.rows());
            for (Index i = 0; i < t.l; ++i)
              for (Index j = 0; j < t.m; ++j) s.b(i * t.m + j) = t.c(i, j);
            for (Index k = 0; k < t.n; ++k) {
              const Index row = lm + k * (t.l + t.m);
              for (Index i = 0; i < t.l; ++i) s.b(row + i) = t.b(i, k);
              for (Index j = 0; j < t.m; ++j) s.b(row + t.l + j) = t.a(j, k);
            }
            for (Index k = 0; k < t.n; ++k)
              for (Index i = 0; i < t.l; ++i)
                for (Index j = 0; j < t.m; ++j) {
                  s.lower.emplace_back(Int(0));
                  s.upper.emplace_back(std::min({t.c(i, j), t.b(i, k), t.a(j, k)}));
                }
            return s;
          },
          [](const auto&) -> IlpSpec {
            fail(ErrorKind::kInvalidArgument, "feasible set has no equality form");
          },
      },
      set);
}

OraclePtr make_oracle(const Instance& instance, const IlpOptions& options) {
  return std::visit(Overloaded{
                        [](const ExplicitSpec& e) { return explicit_oracle(e.points); },
                        [](const MatroidSpec& m) { return matroid_oracle(m); },
                        [](const TransshipmentSpec& t) { return transshipment_oracle(t); },
                        [&](const IlpSpec& s) { return bounded_ilp_oracle(s, options); },
                        [&](const TablesSpec& t) { return bounded_ilp_oracle(ilp_form(t), options); },
                        [](const PartitionSpec& p) { return transshipment_oracle(partition_network(p)); },
                    },
                    instance.set);
}

bool is_member(const FeasibleSet& set, const IntVec& x) {
  return std::visit(Overloaded{
                        [&](const ExplicitSpec& e) { return is_member(e.points, x); },
                        [&](const MatroidSpec& m) { return is_member(m, x); },
                        [&](const TransshipmentSpec& t) { return is_member(t, x); },
                        [&](const IlpSpec& s) { return is_member(s, x); },
                        [&](const TablesSpec& t) { return tables_member(t, x); },
                        [&](const PartitionSpec& p) { return partition_member(p, x); },
                    },
                    set);
}

void validate_set(const FeasibleSet& set) {
  auto sum = [](const IntMatrix& M) {
    Int s = 0;
    for (Index i = 0; i < M.rows(); ++i)
      for (Index j = 0; j < M.cols(); ++j) s += M(i, j);
    return s;
  };
  std::visit(
      Overloaded{
          [](const ExplicitSpec& e) {
            if (e.points.empty()) fail(ErrorKind::kEmptySet, "explicit set has no points");
            for (const auto& p : e.points)
              if (p.size() != e.points.front().size()) fail(ErrorKind::kDimensionMismatch, "points differ in length");
          },
          [](const MatroidSpec& m) {
            if (m.n < 0) fail(ErrorKind::kInvalidMatroid, "negative ground set");
            if (m.kind == MatroidSpec::Kind::kUniform && (m.rank < 0 || m.rank > m.n))
              fail(ErrorKind::kInvalidRank, "rank " + std::to_string(m.rank) + " outside [0, " + std::to_string(m.n) + "]");
            if (m.kind == MatroidSpec::Kind::kGraphic)
              for (const auto& [a, b] : m.edges)
                if (a < 0 || b < 0 || a >= m.vertices || b >= m.vertices)
                  fail(ErrorKind::kInvalidMatroid, "edge endpoint outside the vertex range");
          },
          [](const TransshipmentSpec& t) {
            const Index arcs = static_cast<Index>(t.arcs.size());
            if (t.demand.size() != t.vertices) fail(ErrorKind::kDimensionMismatch, "one demand per vertex");
            if (t.lower.size() != arcs || t.upper.size() != arcs)
              fail(ErrorKind::kDimensionMismatch, "one lower and one upper bound per arc");
            for (const auto& a : t.arcs)
              if (a.tail < 0 || a.head < 0 || a.tail >= t.vertices || a.head >= t.vertices)
                fail(ErrorKind::kInvalidArgument, "arc endpoint outside the vertex range");
            Int total = 0;
            for (Index v = 0; v < t.demand.size(); ++v) total += t.demand(v);
            if (total != 0) fail(ErrorKind::kUnbalancedDemand, "demands sum to " + to_string(total));
            for (Index e = 0; e < arcs; ++e)
              if (t.lower(e) > t.upper(e)) fail(ErrorKind::kInvalidArgument, "arc " + std::to_string(e) + " has l > u");
          },
          [](const IlpSpec& s) {
            if (s.b.size() != s.A.rows()) fail(ErrorKind::kDimensionMismatch, "b needs one entry per row of A");
            if (static_cast<Index>(s.lower.size()) != s.n() || static_cast<Index>(s.upper.size()) != s.n())
              fail(ErrorKind::kDimensionMismatch, "one lower and one upper bound per variable");
            for (std::size_t j = 0; j < s.lower.size(); ++j)
              if (s.lower[j] && s.upper[j] && *s.lower[j] > *s.upper[j])
                fail(ErrorKind::kInfeasible, "variable " + std::to_string(j) + " has l > u");
          },
          [&](const TablesSpec& t) {
            const Index l = t.l, m = t.m, n = t.n;
            if (l < 1 || m < 1 || n < 1) fail(ErrorKind::kInvalidDimension, "table sides must be positive");
            if (t.a.rows() != m || t.a.cols() != n || t.b.rows() != l || t.b.cols() != n || t.c.rows() != l ||
                t.c.cols() != m)
              fail(ErrorKind::kDimensionMismatch, "line sums must be m x n, l x n and l x m");
            for (const IntMatrix* M : {&t.a, &t.b, &t.c})
              for (Index i = 0; i < M->rows(); ++i)
                for (Index j = 0; j < M->cols(); ++j)
                  if ((*M)(i, j) < 0) fail(ErrorKind::kInconsistentLineSums, "negative line sum");
            if (sum(t.a) != sum(t.b) || sum(t.b) != sum(t.c))
              fail(ErrorKind::kInconsistentLineSums, "grand totals differ: " + to_string(sum(t.a)) + ", " +
                                                         to_string(sum(t.b)) + ", " + to_string(sum(t.c)));
            // Plane totals must agree too.
            for (Index k = 0; k < n; ++k)
              if (sum(t.a.col(k)) != sum(t.b.col(k)))
                fail(ErrorKind::kInconsistentLineSums, "a and b disagree on layer " + std::to_string(k));
            for (Index j = 0; j < m; ++j)
              if (sum(t.a.row(j)) != sum(t.c.col(j)))
                fail(ErrorKind::kInconsistentLineSums, "a and c disagree on column " + std::to_string(j));
            for (Index i = 0; i < l; ++i)
              if (sum(t.b.row(i)) != sum(t.c.row(i)))
                fail(ErrorKind::kInconsistentLineSums, "b and c disagree on row " + std::to_string(i));
          },
          [](const PartitionSpec& p) {
            if (p.players < 1 || p.items < 1) fail(ErrorKind::kInvalidDimension, "need at least one player and one item");
            if (p.sizes.size() != p.players) fail(ErrorKind::kDimensionMismatch, "one size per player");
            Int total = 0;
            for (Index i = 0; i < p.players; ++i) {
              if (p.sizes(i) < 0) fail(ErrorKind::kInvalidDemand, "negative part size");
              total += p.sizes(i);
            }
            if (total != p.items)
              fail(ErrorKind::kInvalidDemand,
                   "part sizes sum to " + to_string(total) + ", not " + std::to_string(p.items));
          },
      },
      set);
}

void self_check(const Instance& instance) {
  validate_set(instance.set);
  const auto oracle = make_oracle(instance);
  if (instance.W.rows() < 1 || instance.W.cols() != oracle->dimension())
    fail(ErrorKind::kDimensionMismatch, instance.name + ": W has " + std::to_string(instance.W.cols()) +
                                            " columns, the set lives in dimension " +
                                            std::to_string(oracle->dimension()));
  if (instance.edge_bound < 1) fail(ErrorKind::kInvalidEdgeBound, instance.name + ": edge bound below 1");
  const auto ans = oracle->optimize(IntVec::Zero(oracle->dimension()));
  if (!is_member(instance.set, ans.x))
    fail(ErrorKind::kInfeasible, instance.name + ": oracle answer " + to_string(ans.x) + " is not feasible");
}

namespace {

// Graver bases of equality matrices seen so far; nullopt when over budget.
std::optional<std::vector<IntVec>> cached_graver(const IntMatrix& A) {
  static std::mutex mutex;
  static std::map<std::string, std::optional<std::vector<IntVec>>> cache;
  std::string key = std::to_string(A.rows()) + "x" + std::to_string(A.cols());
  for (Index i = 0; i < A.rows(); ++i)
    for (Index j = 0; j < A.cols(); ++j) key += "," + std::to_string(A(i, j).value());
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::optional<std::vector<IntVec>> result;
  try {
    result = graver_basis(A, GraverOptions{20'000, Int(64)}).elements;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kBudgetExceeded) throw;
  }
  cache.emplace(std::move(key), result);
  return result;
}

Int max_l1(const std::vector<IntVec>& G) {
  Int best = 0;
  for (const auto& g : G) best = std::max(best, l1_norm(g));
  return best;
}

}  // namespace

void attach_ilp_edge_data(Instance& instance) {
  const IlpSpec ilp = ilp_form(instance.set);
  const Box box = presolve_bounds(ilp);
  Int width = 0;
  for (Index i = 0; i < box.lower.size(); ++i) width += box.upper(i) - box.lower(i);
  instance.edge_bound = std::max(width, Int(1));
  instance.edge_generators.reset();
  const auto G = cached_graver(ilp.A);
  if (!G) return;
  // Only differences of points in the box can be edge directions.
  std::vector<IntVec> fit;
  for (const auto& g : *G) {
    bool inside = true;
    for (Index i = 0; i < g.size() && inside; ++i) inside = abs(g(i)) <= box.upper(i) - box.lower(i);
    if (inside) fit.push_back(g);
  }
  instance.edge_bound = std::max(std::min(width, max_l1(fit)), Int(1));
  instance.edge_generators = std::move(fit);
}

// ---------------------------------------------------------------------------

Instance parabola_explicit(Index n) {
  if (n < 2) fail(ErrorKind::kInvalidArgument, "parabola_explicit needs n >= 2");
  Index k = static_cast<Index>(std::sqrt(static_cast<double>(n) / 2.0));
  while (2 * (k + 1) * (k + 1) <= n) ++k;
  while (k > 0 && 2 * k * k > n) --k;
  Instance inst;
  inst.name = "parabola_explicit(" + std::to_string(n) + ")";
  inst.W = IntMatrix::Zero(2, n);
  for (Index j = 0; j < k; ++j) inst.W(0, j) = 1;
  for (Index j = k; j < k + k * k; ++j) inst.W(1, j) = 1;
  ExplicitSpec S;
  for (Index i = 0; i <= k; ++i) {
    IntVec x = IntVec::Zero(n);
    for (Index j = 0; j < i; ++j) x(j) = 1;
    for (Index j = k; j < k + i * i; ++j) x(j) = 1;
    S.points.push_back(x);
  }
  inst.set = std::move(S);
  inst.edge_bound = n;
  inst.expected_vertices = parabola(k + 1);
  inst.expected_count = k + 1;
  inst.note = "k + 1 points (i, i^2), k = floor(sqrt(n/2))";
  self_check(inst);
  return inst;
}

namespace {

// Variables x_i, then x_ij, u_ij, v_ij, z_ij over pairs i < j; rows force
// x_ij = x_i x_j on 0/1 points.
IlpSpec product_system(Index k) {
  const auto pairs = index_pairs(k);
  const Index P = static_cast<Index>(pairs.size());
  IlpSpec s;
  s.A = IntMatrix::Zero(3 * P, k + 4 * P);
  s.b = IntVec::Zero(3 * P);
  for (Index p = 0; p < P; ++p) {
    const auto [i, j] = pairs[static_cast<std::size_t>(p)];
    const Index xij = k + p, u = k + P + p, v = k + 2 * P + p, z = k + 3 * P + p;
    s.A(3 * p, i) = 1;
    s.A(3 * p, xij) = -1;
    s.A(3 * p, u) = -1;
    s.A(3 * p + 1, j) = 1;
    s.A(3 * p + 1, xij) = -1;
    s.A(3 * p + 1, v) = -1;
    s.A(3 * p + 2, i) = 1;
    s.A(3 * p + 2, j) = 1;
    s.A(3 * p + 2, xij) = -1;
    s.A(3 * p + 2, z) = -1;
  }
  s.lower.assign(static_cast<std::size_t>(s.n()), Int(0));
  s.upper.assign(static_cast<std::size_t>(s.n()), Int(1));
  return s;
}

}  // namespace

Instance parabola_binary(Index k) {
  if (k < 2) fail(ErrorKind::kInvalidArgument, "parabola_binary needs k >= 2");
  const auto pairs = index_pairs(k);
  Instance inst;
  inst.name = "parabola_binary(" + std::to_string(k) + ")";
  IlpSpec s = product_system(k);
  inst.W = IntMatrix::Zero(2, s.n());
  for (Index i = 0; i < k; ++i) {
    inst.W(0, i) = pow_int(2, i);
    inst.W(1, i) = pow_int(4, i);
  }
  for (Index p = 0; p < static_cast<Index>(pairs.size()); ++p) {
    const auto [i, j] = pairs[static_cast<std::size_t>(p)];
    inst.W(1, k + p) = 2 * pow_int(2, i + j);
  }
  inst.set = std::move(s);
  attach_ilp_edge_data(inst);
  inst.expected_vertices = parabola(pow_int(2, k));
  inst.expected_count = static_cast<Index>(pow_int(2, k).value());
  inst.note = "2^k vertices (t, t^2)";
  self_check(inst);
  return inst;
}

Instance parabola_doubling(Index k) {
  if (k < 2) fail(ErrorKind::kInvalidArgument, "parabola_doubling needs k >= 2");
  const auto pairs = index_pairs(k);
  const Index P = static_cast<Index>(pairs.size());
  const IlpSpec base = product_system(k);
  const Index n0 = base.n();
  const Index m0 = base.A.rows();

  // Chain on base variable v of length len: 2 x^{r-1} - x^r = 0.
  struct Chain {
    Index base;
    Index length;
  };
  std::vector<Chain> chains;
  for (Index i = 0; i < k; ++i) chains.push_back({i, 2 * i});
  for (Index p = 0; p < P; ++p) {
    const auto [i, j] = pairs[static_cast<std::size_t>(p)];
    chains.push_back({k + p, i + j + 1});
  }
  Index extra = 0;
  for (const auto& c : chains) extra += c.length;

  IlpSpec s;
  s.A = IntMatrix::Zero(m0 + extra, n0 + extra);
  s.A.topLeftCorner(m0, n0) = base.A;
  s.b = IntVec::Zero(m0 + extra);
  s.lower = base.lower;
  s.upper = base.upper;
  s.lower.resize(static_cast<std::size_t>(n0 + extra));
  s.upper.resize(static_cast<std::size_t>(n0 + extra));

  // chain_var[c][r] is x^r of chain c, with x^0 the base variable.
  std::vector<std::vector<Index>> chain_var;
  Index next = n0, row = m0;
  for (const auto& c : chains) {
    std::vector<Index> vars{c.base};
    for (Index r = 1; r <= c.length; ++r) {
      s.A(row, vars.back()) = 2;
      s.A(row, next) = -1;
      vars.push_back(next);
      ++next;
      ++row;
    }
    chain_var.push_back(std::move(vars));
  }

  Instance inst;
  inst.name = "parabola_doubling(" + std::to_string(k) + ")";
  inst.W = IntMatrix::Zero(2, s.n());
  for (Index i = 0; i < k; ++i) {
    const auto& vars = chain_var[static_cast<std::size_t>(i)];
    inst.W(0, vars[static_cast<std::size_t>(i)]) += 1;
    inst.W(1, vars[static_cast<std::size_t>(2 * i)]) += 1;
  }
  for (Index p = 0; p < P; ++p) inst.W(1, chain_var[static_cast<std::size_t>(k + p)].back()) += 1;
  inst.set = std::move(s);
  attach_ilp_edge_data(inst);
  inst.expected_vertices = parabola(pow_int(2, k));
  inst.expected_count = static_cast<Index>(pow_int(2, k).value());
  inst.note = "2^k vertices (t, t^2) under a 0/1 matrix";
  self_check(inst);
  return inst;
}

IntMatrix wkd_matrix(Index d, Index k) {
  if (d < 1 || d > 20 || k < 1) fail(ErrorKind::kInvalidDimension, "W_d^k needs 1 <= d <= 20 and k >= 1");
  const Index cols = k << d;
  IntMatrix W = IntMatrix::Zero(d, cols);
  for (Index c = 0; c < (Index{1} << d); ++c)
    for (Index copy = 0; copy < k; ++copy)
      for (Index i = 0; i < d; ++i) W(i, c * k + copy) = (c >> i) & 1;
  return W;
}

Instance uniform_with_Wkd(Index d, Index k, Index r) {
  const IntMatrix W = wkd_matrix(d, k);
  if (r < 0 || r > W.cols())
    fail(ErrorKind::kInvalidRank, "rank " + std::to_string(r) + " outside [0, " + std::to_string(W.cols()) + "]");
  Instance inst;
  inst.name = "uniform_Wkd(" + std::to_string(d) + "," + std::to_string(k) + "," + std::to_string(r) + ")";
  inst.set = MatroidSpec::uniform(W.cols(), r);
  inst.W = W;
  inst.edge_bound = 2;
  if (k >= r) {
    inst.expected_count = Index{1} << d;
    inst.note = "cube [0,r]^d";
  } else if (k == 1 && r == 2) {
    inst.expected_count = d << (d - 1);
    inst.note = "d 2^(d-1) vertices";
  } else if (k >= 2 && r == k + 1) {
    inst.expected_count = d << d;
    inst.note = "d 2^d vertices";
  }
  self_check(inst);
  return inst;
}

Instance octagon_example() {
  Instance inst = uniform_with_Wkd(2, 2, 3);
  inst.name = "octagon";
  inst.expected_vertices = std::vector<IntVec>{make_vec({0, 1}), make_vec({0, 2}), make_vec({1, 0}), make_vec({1, 3}),
                                               make_vec({2, 0}), make_vec({2, 3}), make_vec({3, 1}), make_vec({3, 2})};
  inst.witnesses = {make_vec({-2, -1}), make_vec({-2, 1}), make_vec({-1, -2}), make_vec({-1, 2}),
                    make_vec({1, -2}),  make_vec({1, 2}),  make_vec({2, -1}),  make_vec({2, 1})};
  inst.note = "octagon homothetic to zone({-1,0,1}^2)";
  return inst;
}

Instance tables_3way(Index l, Index m, Index n, IntMatrix a, IntMatrix b, IntMatrix c, IntMatrix W) {
  Instance inst;
  inst.name = "tables(" + std::to_string(l) + "x" + std::to_string(m) + "x" + std::to_string(n) + ")";
  inst.set = TablesSpec{l, m, n, std::move(a), std::move(b), std::move(c)};
  validate_set(inst.set);
  inst.W = std::move(W);
  attach_ilp_edge_data(inst);
  self_check(inst);
  return inst;
}

Instance partition_instance(Index players, Index items, IntVec sizes, const std::vector<IntMatrix>& utilities) {
  validate_set(PartitionSpec{players, items, sizes});
  if (utilities.empty()) fail(ErrorKind::kInvalidDimension, "need at least one utility matrix");
  Instance inst;
  inst.name = "partition(" + std::to_string(players) + "," + std::to_string(items) + ")";
  inst.W = IntMatrix::Zero(static_cast<Index>(utilities.size()), players * items);
  for (std::size_t k = 0; k < utilities.size(); ++k) {
    const IntMatrix& U = utilities[k];
    if (U.rows() != players || U.cols() != items)
      fail(ErrorKind::kDimensionMismatch, "utility matrices must be players x items");
    for (Index i = 0; i < players; ++i)
      for (Index j = 0; j < items; ++j) inst.W(static_cast<Index>(k), i * items + j) = U(i, j);
  }
  inst.set = PartitionSpec{players, items, std::move(sizes)};
  attach_ilp_edge_data(inst);
  self_check(inst);
  return inst;
}

Instance transshipment_instance(TransshipmentSpec spec, IntMatrix W) {
  validate_set(spec);
  Instance inst;
  inst.name = "transshipment(" + std::to_string(spec.vertices) + "," + std::to_string(spec.arcs.size()) + ")";
  const Int arcs = static_cast<std::int64_t>(spec.arcs.size());
  inst.set = std::move(spec);
  inst.W = std::move(W);
  inst.edge_generators = cached_graver(incidence_matrix(std::get<TransshipmentSpec>(inst.set)));
  inst.edge_bound = arcs + 1;
  self_check(inst);
  return inst;
}

Instance matroid_instance(MatroidSpec spec, IntMatrix W) {
  Instance inst;
  inst.name = kind_name(FeasibleSet{spec}) + "(" + std::to_string(spec.n) + ")";
  inst.set = std::move(spec);
  validate_set(inst.set);
  inst.W = std::move(W);
  inst.edge_bound = 2;
  self_check(inst);
  return inst;
}

namespace {

std::int64_t pick(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

IntMatrix random_matrix(Rng& rng, Index rows, Index cols, Int lo, Int hi) {
  IntMatrix M(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) M(i, j) = pick(rng, lo.value(), hi.value());
  return M;
}

Instance random_binary(Rng& rng, Index n, Index points, Index d, Int wlo, Int whi) {
  if (n < 1 || n > 62 || points < 1) fail(ErrorKind::kInvalidDimension, "need 1 <= n <= 62 and points >= 1");
  std::vector<std::uint64_t> codes;
  for (Index t = 0; t < points; ++t) codes.push_back(rng() & ((std::uint64_t{1} << n) - 1));
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  ExplicitSpec e;
  for (auto c : codes) {
    IntVec x(n);
    for (Index i = 0; i < n; ++i) x(i) = static_cast<std::int64_t>((c >> i) & 1U);
    e.points.push_back(std::move(x));
  }
  Instance inst;
  inst.name = "random_binary(" + std::to_string(n) + "," + std::to_string(e.points.size()) + ")";
  inst.set = std::move(e);
  inst.W = random_matrix(rng, d, n, wlo, whi);
  inst.edge_bound = static_cast<std::int64_t>(n);
  self_check(inst);
  return inst;
}

Instance random_uniform_matroid(Rng& rng, Index n, Index d, Int wlo, Int whi) {
  const Index r = pick(rng, 1, n);
  auto inst = matroid_instance(MatroidSpec::uniform(n, r), random_matrix(rng, d, n, wlo, whi));
  inst.name = "random_uniform(" + std::to_string(n) + "," + std::to_string(r) + ")";
  return inst;
}

Instance random_graphic_matroid(Rng& rng, Index vertices, Index edges, Index d, Int wlo, Int whi) {
  if (vertices < 2) fail(ErrorKind::kInvalidDimension, "a graph needs two vertices for an edge");
  std::vector<std::pair<Index, Index>> E;
  for (Index t = 0; t < edges; ++t) {
    const Index a = pick(rng, 0, vertices - 1);
    Index b = pick(rng, 0, vertices - 2);
    if (b >= a) ++b;
    E.emplace_back(a, b);
  }
  auto inst = matroid_instance(MatroidSpec::graphic(vertices, std::move(E)), random_matrix(rng, d, edges, wlo, whi));
  inst.name = "random_graphic(" + std::to_string(vertices) + "," + std::to_string(edges) + ")";
  return inst;
}

Instance random_tables(Rng& rng, Index l, Index m, Index n, Index d, Int wlo, Int whi) {
  IntMatrix a = IntMatrix::Zero(m, n), b = IntMatrix::Zero(l, n), c = IntMatrix::Zero(l, m);
  for (Index i = 0; i < l; ++i)
    for (Index j = 0; j < m; ++j)
      for (Index k = 0; k < n; ++k) {
        const Int v = pick(rng, 0, 1);
        a(j, k) += v;
        b(i, k) += v;
        c(i, j) += v;
      }
  return tables_3way(l, m, n, a, b, c, random_matrix(rng, d, l * m * n, wlo, whi));
}

Instance random_partition(Rng& rng, Index players, Index items, Index d, Int wlo, Int whi) {
  IntVec sizes = IntVec::Zero(players);
  for (Index j = 0; j < items; ++j) sizes(pick(rng, 0, players - 1)) += 1;
  std::vector<IntMatrix> utilities;
  for (Index k = 0; k < d; ++k) utilities.push_back(random_matrix(rng, players, items, wlo, whi));
  return partition_instance(players, items, sizes, utilities);
}

Instance random_transshipment(Rng& rng, Index vertices, Index arcs, Index d, Int wlo, Int whi) {
  if (vertices < 2) fail(ErrorKind::kInvalidDimension, "a network needs two vertices for an arc");
  TransshipmentSpec t;
  t.vertices = vertices;
  t.demand = IntVec::Zero(vertices);
  t.lower = IntVec::Zero(arcs);
  t.upper = IntVec::Zero(arcs);
  for (Index e = 0; e < arcs; ++e) {
    const Index tail = pick(rng, 0, vertices - 1);
    Index head = pick(rng, 0, vertices - 2);
    if (head >= tail) ++head;
    t.arcs.push_back({tail, head});
    t.upper(e) = pick(rng, 0, 2);
    const Int f = pick(rng, 0, t.upper(e).value());
    t.demand(head) += f;
    t.demand(tail) -= f;
  }
  return transshipment_instance(std::move(t), random_matrix(rng, d, arcs, wlo, whi));
}

}  // namespace ccm
