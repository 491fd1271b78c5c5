#include "ccm/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "ccm/geometry.hpp"

namespace ccm {

MatroidSpec MatroidSpec::uniform(Index n, Index r) {
  MatroidSpec s;
  s.kind = Kind::kUniform;
  s.n = n;
  s.rank = r;
  return s;
}

MatroidSpec MatroidSpec::graphic(Index vertices, std::vector<std::pair<Index, Index>> edges) {
  MatroidSpec s;
  s.kind = Kind::kGraphic;
  s.n = static_cast<Index>(edges.size());
  s.vertices = vertices;
  s.edges = std::move(edges);
  return s;
}

MatroidSpec MatroidSpec::custom(Index n, Predicate independent) {
  MatroidSpec s;
  s.kind = Kind::kCustom;
  s.n = n;
  s.independent = std::move(independent);
  return s;
}

namespace {

Int dot_std(const IntVec& w, const IntVec& x) { return dot(w, x); }

void check_query(Index n, const IntVec& w) {
  if (w.size() != n) fail(ErrorKind::kDimensionMismatch, "query of length " + std::to_string(w.size()) +
                                                             " for an oracle of dimension " + std::to_string(n));
}

struct UnionFind {
  std::vector<Index> parent;
  explicit UnionFind(Index n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  Index find(Index v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }
  bool unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }
};

// ---------------------------------------------------------------------------

class ExplicitOracle final : public LinearOracle {
 public:
  explicit ExplicitOracle(std::vector<IntVec> points) : points_(std::move(points)) {
    if (points_.empty()) fail(ErrorKind::kEmptySet, "explicit oracle needs at least one point");
    n_ = points_.front().size();
    for (const auto& p : points_)
      if (p.size() != n_) fail(ErrorKind::kDimensionMismatch, "explicit points of unequal dimension");
    sort_unique(points_);
  }

  Index dimension() const override { return n_; }

  OracleAnswer optimize(const IntVec& w) const override {
    check_query(n_, w);
    std::size_t best = 0;
    Int best_value = dot_std(w, points_[0]);
    for (std::size_t i = 1; i < points_.size(); ++i) {
      const Int v = dot_std(w, points_[i]);
      if (v > best_value) {
        best_value = v;
        best = i;
      }
    }
    return {points_[best], best_value};
  }

  std::optional<std::vector<IntVec>> edge_generators() const override {
    if (points_.size() > 400) return std::nullopt;
    std::vector<IntVec> g;
    for (std::size_t i = 0; i < points_.size(); ++i)
      for (std::size_t j = i + 1; j < points_.size(); ++j) g.push_back(canonical_direction(points_[j] - points_[i]));
    sort_unique(g);
    return g;
  }

  std::optional<Box> bounding_box() const override {
    Box box{points_[0], points_[0]};
    for (const auto& p : points_) {
      for (Index i = 0; i < n_; ++i) {
        box.lower(i) = std::min(box.lower(i), p(i));
        box.upper(i) = std::max(box.upper(i), p(i));
      }
    }
    return box;
  }

 private:
  std::vector<IntVec> points_;
  Index n_ = 0;
};

// ---------------------------------------------------------------------------

class MatroidOracle final : public LinearOracle {
 public:
  explicit MatroidOracle(MatroidSpec spec) : spec_(std::move(spec)) {
    if (spec_.n <= 0) fail(ErrorKind::kEmptyMatroid, "matroid with an empty ground set");
    switch (spec_.kind) {
      case MatroidSpec::Kind::kUniform:
        if (spec_.rank < 0 || spec_.rank > spec_.n)
          fail(ErrorKind::kInvalidMatroid, "uniform matroid needs 0 <= r <= n");
        break;
      case MatroidSpec::Kind::kGraphic:
        if (spec_.vertices <= 0) fail(ErrorKind::kInvalidMatroid, "graphic matroid without vertices");
        for (const auto& [a, b] : spec_.edges)
          if (a < 0 || b < 0 || a >= spec_.vertices || b >= spec_.vertices)
            fail(ErrorKind::kInvalidMatroid, "graphic matroid edge references a missing vertex");
        break;
      case MatroidSpec::Kind::kCustom:
        if (!spec_.independent) fail(ErrorKind::kInvalidMatroid, "custom matroid without a predicate");
        if (!spec_.independent(std::vector<bool>(static_cast<std::size_t>(spec_.n), false)))
          fail(ErrorKind::kEmptyMatroid, "the empty set is not independent");
        break;
    }
  }

  Index dimension() const override { return spec_.n; }

  OracleAnswer optimize(const IntVec& w) const override {
    check_query(spec_.n, w);
    std::vector<Index> order(static_cast<std::size_t>(spec_.n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return w(a) > w(b); });

    std::vector<bool> chosen(static_cast<std::size_t>(spec_.n), false);
    switch (spec_.kind) {
      case MatroidSpec::Kind::kUniform:
        for (Index k = 0; k < spec_.rank; ++k) chosen[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = true;
        break;
      case MatroidSpec::Kind::kGraphic: {
        UnionFind uf(spec_.vertices);
        for (Index e : order) {
          const auto& [a, b] = spec_.edges[static_cast<std::size_t>(e)];
          if (uf.unite(a, b)) chosen[static_cast<std::size_t>(e)] = true;
        }
        break;
      }
      case MatroidSpec::Kind::kCustom:
        for (Index e : order) {
          chosen[static_cast<std::size_t>(e)] = true;
          if (!spec_.independent(chosen)) chosen[static_cast<std::size_t>(e)] = false;
        }
        break;
    }
    IntVec x = IntVec::Zero(spec_.n);
    for (Index i = 0; i < spec_.n; ++i) x(i) = chosen[static_cast<std::size_t>(i)] ? 1 : 0;
    return {x, dot_std(w, x)};
  }

  // Every edge of a matroid base polytope is parallel to e_i - e_j.
  std::optional<std::vector<IntVec>> edge_generators() const override {
    std::vector<IntVec> g;
    for (Index i = 0; i < spec_.n; ++i) {
      for (Index j = i + 1; j < spec_.n; ++j) {
        IntVec v = IntVec::Zero(spec_.n);
        v(i) = 1;
        v(j) = -1;
        g.push_back(std::move(v));
      }
    }
    return g;
  }

  std::optional<Box> bounding_box() const override {
    return Box{IntVec::Zero(spec_.n), IntVec::Ones(spec_.n)};
  }

 private:
  MatroidSpec spec_;
};

// ---------------------------------------------------------------------------
// Min-cost flow by successive shortest paths. Arcs of negative cost start
// saturated and appear reversed in the residual graph, so every residual
// cost is nonnegative and zero potentials are a valid start for Dijkstra.

struct Residual {
  Index to;
  std::size_t rev;
  Int cap;
  Int cost;
};

std::optional<std::vector<Int>> min_cost_flow(Index vertices, const std::vector<Arc>& arcs, const IntVec& lower,
                                              const IntVec& upper, const std::vector<Int>& cost,
                                              const IntVec& demand) {
  const std::size_t m = arcs.size();
  const Index source = vertices;
  const Index sink = vertices + 1;
  std::vector<std::vector<Residual>> g(static_cast<std::size_t>(vertices + 2));
  auto add = [&](Index a, Index b, Int cap, Int c) {
    auto& ga = g[static_cast<std::size_t>(a)];
    auto& gb = g[static_cast<std::size_t>(b)];
    const std::size_t ia = ga.size();
    const std::size_t ib = gb.size() + (a == b ? 1 : 0);
    ga.push_back({b, ib, cap, c});
    gb.push_back({a, ia, 0, -c});
    return std::pair<Index, std::size_t>{a, ia};
  };

  std::vector<Int> need(static_cast<std::size_t>(vertices));
  for (Index v = 0; v < vertices; ++v) need[static_cast<std::size_t>(v)] = demand(v);
  std::vector<std::pair<Index, std::size_t>> handle(m);
  std::vector<Int> base(m);
  for (std::size_t a = 0; a < m; ++a) {
    const Int cap = upper(static_cast<Index>(a)) - lower(static_cast<Index>(a));
    if (cap < 0) return std::nullopt;
    const Index t = arcs[a].tail;
    const Index h = arcs[a].head;
    base[a] = lower(static_cast<Index>(a));
    if (cost[a] < 0) {
      base[a] += cap;
      handle[a] = add(h, t, cap, -cost[a]);
    } else {
      handle[a] = add(t, h, cap, cost[a]);
    }
    need[static_cast<std::size_t>(h)] -= base[a];
    need[static_cast<std::size_t>(t)] += base[a];
  }
  Int required = 0;
  Int offered = 0;
  for (Index v = 0; v < vertices; ++v) {
    const Int r = need[static_cast<std::size_t>(v)];
    if (r < 0) {
      add(source, v, -r, 0);
      offered += -r;
    } else if (r > 0) {
      add(v, sink, r, 0);
      required += r;
    }
  }
  if (offered != required) return std::nullopt;

  const std::size_t nv = g.size();
  std::vector<Int> pot(nv, 0);
  Int flow = 0;
  while (flow < required) {
    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> dist(nv, kInf);
    std::vector<std::pair<Index, std::size_t>> prev(nv, {-1, 0});
    using Item = std::pair<std::int64_t, Index>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[static_cast<std::size_t>(source)] = 0;
    pq.push({0, source});
    while (!pq.empty()) {
      auto [d, v] = pq.top();
      pq.pop();
      if (d != dist[static_cast<std::size_t>(v)]) continue;
      const auto& out = g[static_cast<std::size_t>(v)];
      for (std::size_t i = 0; i < out.size(); ++i) {
        const auto& e = out[i];
        if (e.cap == 0) continue;
        const Int nd = Int(d) + e.cost + pot[static_cast<std::size_t>(v)] - pot[static_cast<std::size_t>(e.to)];
        if (nd.value() < dist[static_cast<std::size_t>(e.to)]) {
          dist[static_cast<std::size_t>(e.to)] = nd.value();
          prev[static_cast<std::size_t>(e.to)] = {v, i};
          pq.push({nd.value(), e.to});
        }
      }
    }
    if (dist[static_cast<std::size_t>(sink)] == kInf) return std::nullopt;
    for (std::size_t v = 0; v < nv; ++v)
      if (dist[v] != kInf) pot[v] += dist[v];
    Int push = required - flow;
    for (Index v = sink; v != source; v = prev[static_cast<std::size_t>(v)].first) {
      const auto [u, i] = prev[static_cast<std::size_t>(v)];
      push = std::min(push, g[static_cast<std::size_t>(u)][i].cap);
    }
    for (Index v = sink; v != source; v = prev[static_cast<std::size_t>(v)].first) {
      const auto [u, i] = prev[static_cast<std::size_t>(v)];
      auto& e = g[static_cast<std::size_t>(u)][i];
      e.cap -= push;
      g[static_cast<std::size_t>(e.to)][e.rev].cap += push;
    }
    flow += push;
  }

  std::vector<Int> x(m);
  for (std::size_t a = 0; a < m; ++a) {
    const auto [v, i] = handle[a];
    const Residual& e = g[static_cast<std::size_t>(v)][i];
    const Int moved = g[static_cast<std::size_t>(e.to)][e.rev].cap;
    x[a] = cost[a] < 0 ? base[a] - moved : base[a] + moved;
  }
  return x;
}

class TransshipmentOracle final : public LinearOracle {
 public:
  explicit TransshipmentOracle(TransshipmentSpec spec) : spec_(std::move(spec)) {
    const Index m = static_cast<Index>(spec_.arcs.size());
    if (spec_.vertices <= 0 || m == 0) fail(ErrorKind::kInvalidArgument, "transshipment needs vertices and arcs");
    if (spec_.demand.size() != spec_.vertices || spec_.lower.size() != m || spec_.upper.size() != m)
      fail(ErrorKind::kDimensionMismatch, "transshipment demand or bound vector has the wrong length");
    for (const auto& a : spec_.arcs)
      if (a.tail < 0 || a.head < 0 || a.tail >= spec_.vertices || a.head >= spec_.vertices)
        fail(ErrorKind::kInvalidArgument, "arc references a missing vertex");
    std::vector<Int> zero(static_cast<std::size_t>(m), 0);
    if (!min_cost_flow(spec_.vertices, spec_.arcs, spec_.lower, spec_.upper, zero, spec_.demand))
      fail(ErrorKind::kInfeasibleFlow, "no flow satisfies the demands and bounds");
  }

  Index dimension() const override { return static_cast<Index>(spec_.arcs.size()); }

  OracleAnswer optimize(const IntVec& w) const override {
    const Index m = dimension();
    check_query(m, w);
    IntVec lower = spec_.lower;
    IntVec upper = spec_.upper;
    // Fix coordinates one at a time to their least value among optimal flows.
    for (Index i = 0; i < m; ++i) {
      if (lower(i) == upper(i)) continue;
      const Int scale = upper(i) - lower(i) + 1;
      std::vector<Int> cost(static_cast<std::size_t>(m));
      for (Index a = 0; a < m; ++a) cost[static_cast<std::size_t>(a)] = -w(a) * scale + (a == i ? 1 : 0);
      const auto x = min_cost_flow(spec_.vertices, spec_.arcs, lower, upper, cost, spec_.demand);
      if (!x) fail(ErrorKind::kInfeasibleFlow, "no flow satisfies the demands and bounds");
      lower(i) = upper(i) = (*x)[static_cast<std::size_t>(i)];
    }
    return {lower, dot_std(w, lower)};
  }

  std::optional<Box> bounding_box() const override { return Box{spec_.lower, spec_.upper}; }

 private:
  TransshipmentSpec spec_;
};

// ---------------------------------------------------------------------------
// Bounded ILP

struct Row {
  std::vector<std::pair<Index, Int>> terms;
  Int rhs;
};

std::vector<Row> sparse_rows(const IntMatrix& A, const IntVec& b) {
  std::vector<Row> rows;
  for (Index r = 0; r < A.rows(); ++r) {
    Row row{{}, b(r)};
    for (Index c = 0; c < A.cols(); ++c)
      if (A(r, c) != 0) row.terms.emplace_back(c, A(r, c));
    if (row.terms.empty() && row.rhs != 0) fail(ErrorKind::kInfeasible, "row 0 = " + to_string(row.rhs));
    if (!row.terms.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

// a*x in [lo, hi] -> bounds on x.
void divide_range(Int a, Int lo, Int hi, Int& xlo, Int& xhi) {
  if (a > 0) {
    xlo = ceil_div(lo, a);
    xhi = floor_div(hi, a);
  } else {
    xlo = ceil_div(hi, a);
    xhi = floor_div(lo, a);
  }
}

// Fixpoint bound tightening over equality rows with finite bounds.
bool propagate(const std::vector<Row>& rows, IntVec& lo, IntVec& hi) {
  bool changed = true;
  for (int pass = 0; changed && pass < 64; ++pass) {
    changed = false;
    for (const Row& row : rows) {
      Int minact = 0;
      Int maxact = 0;
      for (const auto& [j, a] : row.terms) {
        minact += a > 0 ? a * lo(j) : a * hi(j);
        maxact += a > 0 ? a * hi(j) : a * lo(j);
      }
      if (minact > row.rhs || maxact < row.rhs) return false;
      if (minact == maxact) continue;
      for (const auto& [j, a] : row.terms) {
        const Int cmin = a > 0 ? a * lo(j) : a * hi(j);
        const Int cmax = a > 0 ? a * hi(j) : a * lo(j);
        Int xlo, xhi;
        divide_range(a, row.rhs - (maxact - cmax), row.rhs - (minact - cmin), xlo, xhi);
        if (xlo > lo(j) || xhi < hi(j)) {
          if (xlo > lo(j)) lo(j) = xlo;
          if (xhi < hi(j)) hi(j) = xhi;
          if (lo(j) > hi(j)) return false;
          changed = true;
          minact = 0;
          maxact = 0;
          for (const auto& [k, b] : row.terms) {
            minact += b > 0 ? b * lo(k) : b * hi(k);
            maxact += b > 0 ? b * hi(k) : b * lo(k);
          }
        }
      }
    }
  }
  return true;
}

class IlpOracle final : public LinearOracle {
 public:
  IlpOracle(IlpSpec spec, IlpOptions options) : spec_(std::move(spec)), options_(options) {
    try {
      rows_ = sparse_rows(spec_.A, spec_.b);
      box_ = presolve_bounds(spec_);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kInfeasible) throw;
      infeasible_ = true;
    }
  }

  Index dimension() const override { return spec_.n(); }

  OracleAnswer optimize(const IntVec& w) const override {
    check_query(spec_.n(), w);
    if (infeasible_) fail(ErrorKind::kInfeasible, "the integer program has no feasible point");
    Search s{rows_, w, options_.node_budget};
    IntVec lo = box_.lower;
    IntVec hi = box_.upper;
    s.maximize(lo, hi);
    if (!s.found) fail(ErrorKind::kInfeasible, "the integer program has no feasible point");

    // Lexicographically smallest point on the optimal face.
    std::vector<Row> face = rows_;
    Row obj{{}, s.best};
    for (Index j = 0; j < w.size(); ++j)
      if (w(j) != 0) obj.terms.emplace_back(j, w(j));
    if (!obj.terms.empty()) face.push_back(std::move(obj));
    Search lex{face, w, options_.node_budget};
    lex.nodes = s.nodes;
    lo = box_.lower;
    hi = box_.upper;
    IntVec x;
    if (!lex.first_in_order(lo, hi, x)) throw std::logic_error("optimal face lost during lexicographic search");
    return {x, dot_std(w, x)};
  }

  std::optional<Box> bounding_box() const override {
    if (infeasible_) return std::nullopt;
    return box_;
  }

 private:
  struct Search {
    const std::vector<Row>& rows;
    const IntVec& w;
    std::int64_t budget;
    std::int64_t nodes = 0;
    bool found = false;
    Int best = 0;

    void tick() {
      if (++nodes > budget)
        fail(ErrorKind::kBudgetExceeded, "branch-and-bound exceeded " + std::to_string(budget) + " nodes");
    }

    void maximize(IntVec& lo, IntVec& hi) {
      tick();
      if (!propagate(rows, lo, hi)) return;
      Int bound = 0;
      Index pick = -1;
      for (Index j = 0; j < lo.size(); ++j) {
        bound += std::max(w(j) * lo(j), w(j) * hi(j));
        if (lo(j) < hi(j) && (pick < 0 || hi(j) - lo(j) < hi(pick) - lo(pick))) pick = j;
      }
      if (found && bound <= best) return;
      if (pick < 0) {
        found = true;
        best = bound;
        return;
      }
      for (Int v = lo(pick); v <= hi(pick); v += 1) {
        IntVec l = lo;
        IntVec h = hi;
        l(pick) = h(pick) = v;
        maximize(l, h);
      }
    }

    bool first_in_order(IntVec& lo, IntVec& hi, IntVec& out) {
      tick();
      if (!propagate(rows, lo, hi)) return false;
      Index pick = -1;
      for (Index j = 0; j < lo.size() && pick < 0; ++j)
        if (lo(j) < hi(j)) pick = j;
      if (pick < 0) {
        out = lo;
        return true;
      }
      for (Int v = lo(pick); v <= hi(pick); v += 1) {
        IntVec l = lo;
        IntVec h = hi;
        l(pick) = h(pick) = v;
        if (first_in_order(l, h, out)) return true;
      }
      return false;
    }
  };

  IlpSpec spec_;
  IlpOptions options_;
  std::vector<Row> rows_;
  Box box_;
  bool infeasible_ = false;
};

}  // namespace

OraclePtr explicit_oracle(std::vector<IntVec> points) {
  return std::make_shared<ExplicitOracle>(std::move(points));
}

OraclePtr matroid_oracle(MatroidSpec spec) { return std::make_shared<MatroidOracle>(std::move(spec)); }

OraclePtr transshipment_oracle(TransshipmentSpec spec) {
  return std::make_shared<TransshipmentOracle>(std::move(spec));
}

OraclePtr bounded_ilp_oracle(IlpSpec spec, IlpOptions options) {
  return std::make_shared<IlpOracle>(std::move(spec), options);
}

Box presolve_bounds(const IlpSpec& spec) {
  const Index n = spec.n();
  if (spec.b.size() != spec.A.rows() || static_cast<Index>(spec.lower.size()) != n ||
      static_cast<Index>(spec.upper.size()) != n)
    fail(ErrorKind::kDimensionMismatch, "ILP bounds or right-hand side have the wrong length");
  std::vector<std::optional<Int>> lo = spec.lower;
  std::vector<std::optional<Int>> hi = spec.upper;
  const auto rows = sparse_rows(spec.A, spec.b);

  // Activity bound of a row: finite part plus a count of infinite terms.
  struct Act {
    Int sum = 0;
    int inf = 0;
  };
  auto contribution = [&](Index j, Int a, bool want_max) -> std::optional<Int> {
    const bool use_hi = (a > 0) == want_max;
    const auto& bnd = use_hi ? hi[static_cast<std::size_t>(j)] : lo[static_cast<std::size_t>(j)];
    if (!bnd) return std::nullopt;
    return a * *bnd;
  };
  auto tighten = [&](std::optional<Int>& slot, Int v, bool is_upper) {
    if (!slot || (is_upper ? v < *slot : v > *slot)) {
      slot = v;
      return true;
    }
    return false;
  };

  bool changed = true;
  for (int pass = 0; changed && pass < 1000; ++pass) {
    changed = false;
    for (const Row& row : rows) {
      Act mn, mx;
      for (const auto& [j, a] : row.terms) {
        if (auto c = contribution(j, a, false)) mn.sum += *c; else ++mn.inf;
        if (auto c = contribution(j, a, true)) mx.sum += *c; else ++mx.inf;
      }
      if ((mn.inf == 0 && mn.sum > row.rhs) || (mx.inf == 0 && mx.sum < row.rhs))
        fail(ErrorKind::kInfeasible, "bound propagation proves the system infeasible");
      for (const auto& [j, a] : row.terms) {
        const auto cmin = contribution(j, a, false);
        const auto cmax = contribution(j, a, true);
        // Rest of the row excluding term j.
        const bool rest_min_finite = mn.inf - (cmin ? 0 : 1) == 0;
        const bool rest_max_finite = mx.inf - (cmax ? 0 : 1) == 0;
        std::optional<Int> term_lo, term_hi;  // bounds on a*x_j
        if (rest_max_finite) term_lo = row.rhs - (mx.sum - cmax.value_or(0));
        if (rest_min_finite) term_hi = row.rhs - (mn.sum - cmin.value_or(0));
        auto& l = lo[static_cast<std::size_t>(j)];
        auto& u = hi[static_cast<std::size_t>(j)];
        bool moved = false;
        if (a > 0) {
          if (term_lo) moved |= tighten(l, ceil_div(*term_lo, a), false);
          if (term_hi) moved |= tighten(u, floor_div(*term_hi, a), true);
        } else {
          if (term_hi) moved |= tighten(l, ceil_div(*term_hi, a), false);
          if (term_lo) moved |= tighten(u, floor_div(*term_lo, a), true);
        }
        if (l && u && *l > *u) fail(ErrorKind::kInfeasible, "bound propagation empties a variable domain");
        if (moved) {
          changed = true;
          break;  // recompute this row's activities on the next pass
        }
      }
    }
  }

  Box box{IntVec(n), IntVec(n)};
  for (Index j = 0; j < n; ++j) {
    const auto& l = lo[static_cast<std::size_t>(j)];
    const auto& u = hi[static_cast<std::size_t>(j)];
    if (!l || !u) fail(ErrorKind::kUnbounded, "variable " + std::to_string(j) + " has no finite bound after presolve");
    box.lower(j) = *l;
    box.upper(j) = *u;
  }
  return box;
}

// ---------------------------------------------------------------------------

bool is_member(const std::vector<IntVec>& points, const IntVec& x) {
  return std::any_of(points.begin(), points.end(), [&](const IntVec& p) { return equal(p, x); });
}

Index graphic_rank(Index vertices, const std::vector<std::pair<Index, Index>>& edges) {
  UnionFind uf(vertices);
  Index rank = 0;
  for (const auto& [a, b] : edges)
    if (uf.unite(a, b)) ++rank;
  return rank;
}

bool is_member(const MatroidSpec& spec, const IntVec& x) {
  if (x.size() != spec.n) return false;
  std::vector<bool> set(static_cast<std::size_t>(spec.n));
  Index count = 0;
  for (Index i = 0; i < spec.n; ++i) {
    if (x(i) != 0 && x(i) != 1) return false;
    set[static_cast<std::size_t>(i)] = x(i) == 1;
    count += x(i) == 1 ? 1 : 0;
  }
  switch (spec.kind) {
    case MatroidSpec::Kind::kUniform:
      return count == spec.rank;
    case MatroidSpec::Kind::kGraphic: {
      std::vector<std::pair<Index, Index>> chosen;
      for (Index i = 0; i < spec.n; ++i)
        if (set[static_cast<std::size_t>(i)]) chosen.push_back(spec.edges[static_cast<std::size_t>(i)]);
      return graphic_rank(spec.vertices, chosen) == count && count == graphic_rank(spec.vertices, spec.edges);
    }
    case MatroidSpec::Kind::kCustom: {
      if (!spec.independent(set)) return false;
      for (Index i = 0; i < spec.n; ++i) {
        if (set[static_cast<std::size_t>(i)]) continue;
        set[static_cast<std::size_t>(i)] = true;
        const bool grows = spec.independent(set);
        set[static_cast<std::size_t>(i)] = false;
        if (grows) return false;
      }
      return true;
    }
  }
  return false;
}

IntMatrix incidence_matrix(const TransshipmentSpec& spec) {
  IntMatrix A = IntMatrix::Zero(spec.vertices, static_cast<Index>(spec.arcs.size()));
  for (std::size_t a = 0; a < spec.arcs.size(); ++a) {
    A(spec.arcs[a].head, static_cast<Index>(a)) += 1;
    A(spec.arcs[a].tail, static_cast<Index>(a)) -= 1;
  }
  return A;
}

IlpSpec to_ilp(const TransshipmentSpec& spec) {
  IlpSpec ilp;
  ilp.A = incidence_matrix(spec);
  ilp.b = spec.demand;
  for (Index a = 0; a < spec.lower.size(); ++a) {
    ilp.lower.emplace_back(spec.lower(a));
    ilp.upper.emplace_back(spec.upper(a));
  }
  return ilp;
}

bool is_member(const TransshipmentSpec& spec, const IntVec& x) {
  if (x.size() != static_cast<Index>(spec.arcs.size())) return false;
  for (Index a = 0; a < x.size(); ++a)
    if (x(a) < spec.lower(a) || x(a) > spec.upper(a)) return false;
  std::vector<Int> net(static_cast<std::size_t>(spec.vertices), 0);
  for (std::size_t a = 0; a < spec.arcs.size(); ++a) {
    net[static_cast<std::size_t>(spec.arcs[a].head)] += x(static_cast<Index>(a));
    net[static_cast<std::size_t>(spec.arcs[a].tail)] -= x(static_cast<Index>(a));
  }
  for (Index v = 0; v < spec.vertices; ++v)
    if (net[static_cast<std::size_t>(v)] != spec.demand(v)) return false;
  return true;
}

bool is_member(const IlpSpec& spec, const IntVec& x) {
  if (x.size() != spec.n()) return false;
  for (Index j = 0; j < x.size(); ++j) {
    const auto& l = spec.lower[static_cast<std::size_t>(j)];
    const auto& u = spec.upper[static_cast<std::size_t>(j)];
    if ((l && x(j) < *l) || (u && x(j) > *u)) return false;
  }
  for (Index r = 0; r < spec.A.rows(); ++r) {
    Int s = 0;
    for (Index j = 0; j < x.size(); ++j) s += spec.A(r, j) * x(j);
    if (s != spec.b(r)) return false;
  }
  return true;
}

}  // namespace ccm
