#include "ccm/bruteforce.hpp"

#include <functional>
#include <numeric>
#include <regex>
#include <unordered_map>

#include "ccm/rational.hpp"

namespace ccm {

EnumerationBudget parse_budget(const std::string& text) {
  static const std::regex re(R"(\s*(\d+)\s*(?:,\s*(\d+)\s*)?)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) fail(ErrorKind::kParse, "budget must be P or P,V; got '" + text + "'");
  EnumerationBudget b;
  try {
    b.max_points = std::stoull(m[1].str());
    if (m[2].matched) b.max_box_volume = std::stoull(m[2].str());
  } catch (const std::exception&) {
    fail(ErrorKind::kParse, "budget out of range: '" + text + "'");
  }
  if (b.max_points == 0 || b.max_box_volume == 0) fail(ErrorKind::kParse, "budget caps must be positive");
  return b;
}

namespace {

void check_points(std::size_t count, const EnumerationBudget& budget) {
  if (count > budget.max_points)
    fail(ErrorKind::kBudgetExceeded, "feasible set has more than " + std::to_string(budget.max_points) + " points");
}

// C(n, r), saturating at limit + 1.
std::uint64_t binomial_capped(Index n, Index r, std::uint64_t limit) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 c = 1;
  for (Index i = 1; i <= r; ++i) {
    c = c * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (c > limit) return limit + 1;
  }
  return static_cast<std::uint64_t>(c);
}

template <class Visit>
void for_each_subset(Index n, Index r, Visit visit) {
  std::vector<Index> idx(static_cast<std::size_t>(r));
  std::iota(idx.begin(), idx.end(), Index{0});
  while (true) {
    visit(idx);
    Index i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

IntVec indicator(Index n, const std::vector<Index>& members) {
  IntVec x = IntVec::Zero(n);
  for (Index i : members) x(i) = 1;
  return x;
}

bool acyclic(Index vertices, const std::vector<std::pair<Index, Index>>& edges, const std::vector<Index>& chosen) {
  std::vector<Index> root(static_cast<std::size_t>(vertices));
  std::iota(root.begin(), root.end(), Index{0});
  auto find = [&](Index v) {
    while (root[static_cast<std::size_t>(v)] != v) v = root[static_cast<std::size_t>(v)];
    return v;
  };
  for (Index e : chosen) {
    const Index a = find(edges[static_cast<std::size_t>(e)].first);
    const Index b = find(edges[static_cast<std::size_t>(e)].second);
    if (a == b) return false;
    root[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

std::vector<IntVec> enumerate_matroid(const MatroidSpec& m, const EnumerationBudget& budget) {
  std::vector<IntVec> out;
  switch (m.kind) {
    case MatroidSpec::Kind::kUniform: {
      check_points(binomial_capped(m.n, m.rank, budget.max_points), budget);
      for_each_subset(m.n, m.rank, [&](const std::vector<Index>& s) { out.push_back(indicator(m.n, s)); });
      break;
    }
    case MatroidSpec::Kind::kGraphic: {
      // Rank: vertices minus components, by depth-first search.
      std::vector<std::vector<Index>> adj(static_cast<std::size_t>(m.vertices));
      for (const auto& [a, b] : m.edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
      }
      std::vector<bool> seen(static_cast<std::size_t>(m.vertices), false);
      Index components = 0;
      for (Index s = 0; s < m.vertices; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++components;
        std::vector<Index> stack{s};
        seen[static_cast<std::size_t>(s)] = true;
        while (!stack.empty()) {
          const Index v = stack.back();
          stack.pop_back();
          for (Index w : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
              seen[static_cast<std::size_t>(w)] = true;
              stack.push_back(w);
            }
        }
      }
      const Index rank = m.vertices - components;
      const Index n = static_cast<Index>(m.edges.size());
      if (binomial_capped(n, rank, budget.max_box_volume) > budget.max_box_volume)
        fail(ErrorKind::kBudgetExceeded, "too many edge subsets to scan");
      for_each_subset(n, rank, [&](const std::vector<Index>& s) {
        if (acyclic(m.vertices, m.edges, s)) out.push_back(indicator(n, s));
      });
      check_points(out.size(), budget);
      break;
    }
    case MatroidSpec::Kind::kCustom: {
      if (m.n > 40 || (std::uint64_t{1} << m.n) > budget.max_box_volume)
        fail(ErrorKind::kBudgetExceeded, "too many subsets to scan");
      Index rank = -1;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.n); ++mask) {
        std::vector<bool> in(static_cast<std::size_t>(m.n));
        Index size = 0;
        for (Index i = 0; i < m.n; ++i) {
          in[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
          size += in[static_cast<std::size_t>(i)] ? 1 : 0;
        }
        if (size < rank || !m.independent(in)) continue;
        if (size > rank) {
          rank = size;
          out.clear();
        }
        IntVec x(m.n);
        for (Index i = 0; i < m.n; ++i) x(i) = in[static_cast<std::size_t>(i)] ? 1 : 0;
        out.push_back(x);
        check_points(out.size(), budget);
      }
      break;
    }
  }
  if (out.empty()) fail(ErrorKind::kEmptyMatroid, "no basis");
  return out;
}

std::vector<IntVec> enumerate_ilp(const IlpSpec& spec, const EnumerationBudget& budget) {
  const Index n = spec.n();
  const Index m = spec.A.rows();
  IntVec lo(n), hi(n);
  bool finite = true;
  for (Index j = 0; j < n; ++j) {
    const auto& l = spec.lower[static_cast<std::size_t>(j)];
    const auto& u = spec.upper[static_cast<std::size_t>(j)];
    finite = finite && l && u;
    if (l && u) {
      lo(j) = *l;
      hi(j) = *u;
    }
  }
  if (!finite) {
    const Box box = presolve_bounds(spec);
    lo = box.lower;
    hi = box.upper;
  }
  long double volume = 1;
  for (Index j = 0; j < n; ++j) {
    if (hi(j) < lo(j)) return {};
    volume *= static_cast<long double>((hi(j) - lo(j)).value()) + 1;
  }
  if (volume > static_cast<long double>(budget.max_box_volume))
    fail(ErrorKind::kBudgetExceeded, "box has more than " + std::to_string(budget.max_box_volume) + " cells");

  // rest_min/rest_max(r, k): extreme contributions of variables k.. to row r.
  IntMatrix rest_min = IntMatrix::Zero(m, n + 1), rest_max = IntMatrix::Zero(m, n + 1);
  for (Index r = 0; r < m; ++r)
    for (Index k = n - 1; k >= 0; --k) {
      const Int a = spec.A(r, k) * lo(k), b = spec.A(r, k) * hi(k);
      rest_min(r, k) = rest_min(r, k + 1) + std::min(a, b);
      rest_max(r, k) = rest_max(r, k + 1) + std::max(a, b);
    }

  std::vector<IntVec> out;
  IntVec x = lo;
  IntVec partial = IntVec::Zero(m);
  auto viable = [&](Index k) {
    for (Index r = 0; r < m; ++r)
      if (spec.b(r) < partial(r) + rest_min(r, k) || spec.b(r) > partial(r) + rest_max(r, k)) return false;
    return true;
  };
  auto dfs = [&](auto& self, Index k) -> void {
    if (!viable(k)) return;
    if (k == n) {
      out.push_back(x);
      check_points(out.size(), budget);
      return;
    }
    for (Int v = lo(k); v <= hi(k); v += 1) {
      x(k) = v;
      for (Index r = 0; r < m; ++r) partial(r) += spec.A(r, k) * v;
      self(self, k + 1);
      for (Index r = 0; r < m; ++r) partial(r) -= spec.A(r, k) * v;
    }
    x(k) = lo(k);
  };
  dfs(dfs, 0);
  return out;
}

// Dictionary simplex from the slack basis, Bland's rule. Rows are
// sum_j T(i,j) y_j <= rhs_i with rhs >= 0 and y >= 0; maximizes c.y and
// stops as soon as the objective is positive. Returns whether it got there.
bool reaches_positive(std::vector<std::vector<Rational>> T, std::vector<Rational> rhs, std::vector<Rational> c) {
  const std::size_t M = T.size();
  const std::size_t N = c.size();
  std::vector<std::size_t> nonbasic(N), basic(M);
  std::iota(nonbasic.begin(), nonbasic.end(), std::size_t{0});
  std::iota(basic.begin(), basic.end(), N);
  Rational z = 0;
  while (true) {
    if (z > 0) return true;
    std::size_t enter = N;
    for (std::size_t j = 0; j < N; ++j)
      if (c[j] > 0 && (enter == N || nonbasic[j] < nonbasic[enter])) enter = j;
    if (enter == N) return false;
    std::size_t leave = M;
    Rational best;
    for (std::size_t i = 0; i < M; ++i) {
      if (T[i][enter] <= 0) continue;
      const Rational ratio = rhs[i] / T[i][enter];
      if (leave == M || ratio < best || (ratio == best && basic[i] < basic[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == M) return true;  // unbounded above
    const Rational p = T[leave][enter];
    for (std::size_t k = 0; k < N; ++k)
      if (k != enter) T[leave][k] /= p;
    T[leave][enter] = 1 / p;
    rhs[leave] /= p;
    for (std::size_t i = 0; i < M; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      const Rational f = T[i][enter];
      for (std::size_t k = 0; k < N; ++k)
        if (k != enter) T[i][k] -= f * T[leave][k];
      T[i][enter] = -f / p;
      rhs[i] -= f * rhs[leave];
    }
    const Rational f = c[enter];
    for (std::size_t k = 0; k < N; ++k)
      if (k != enter) c[k] -= f * T[leave][k];
    c[enter] = -f / p;
    z += f * rhs[leave];
    std::swap(nonbasic[enter], basic[leave]);
  }
}

// Is there h with h.a < 0 for every a in strict and h.b = 0 for b in level?
// Variables h+ and h- in [0,1]^d and a margin t in [0,1]; maximize t.
bool strictly_separable(const std::vector<IntVec>& strict, const std::vector<IntVec>& level, Index d) {
  const std::size_t N = static_cast<std::size_t>(2 * d + 1);
  std::vector<std::vector<Rational>> T;
  std::vector<Rational> rhs;
  auto row = [&](const IntVec& a, int sign, int margin) {
    std::vector<Rational> r(N, Rational(0));
    for (Index i = 0; i < d; ++i) {
      r[static_cast<std::size_t>(i)] = sign * a(i).value();
      r[static_cast<std::size_t>(d + i)] = -sign * a(i).value();
    }
    r[N - 1] = margin;
    T.push_back(std::move(r));
    rhs.emplace_back(0);
  };
  for (const auto& a : strict) row(a, 1, 1);
  for (const auto& b : level) {
    row(b, 1, 0);
    row(b, -1, 0);
  }
  for (std::size_t j = 0; j < N; ++j) {
    std::vector<Rational> r(N, Rational(0));
    r[j] = 1;
    T.push_back(std::move(r));
    rhs.emplace_back(1);
  }
  std::vector<Rational> c(N, Rational(0));
  c[N - 1] = 1;
  return reaches_positive(std::move(T), std::move(rhs), std::move(c));
}

IntVec reduce_by_gcd(IntVec v) {
  Int g = 0;
  for (Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  if (g > 1)
    for (Index i = 0; i < v.size(); ++i) v(i) = v(i) / g;
  return v;
}

std::vector<IntVec> vertices_of(std::vector<IntVec> points) {
  sort_unique(points);
  std::vector<IntVec> out;
  for (const auto& p : points)
    if (separable_vertex(p, points)) out.push_back(p);
  return out;
}

}  // namespace

std::vector<IntVec> enumerate_set(const FeasibleSet& set, const EnumerationBudget& budget) {
  std::vector<IntVec> out;
  if (const auto* e = std::get_if<ExplicitSpec>(&set)) {
    out = e->points;
    sort_unique(out);
    check_points(out.size(), budget);
  } else if (const auto* m = std::get_if<MatroidSpec>(&set)) {
    out = enumerate_matroid(*m, budget);
  } else {
    out = enumerate_ilp(ilp_form(set), budget);
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

bool separable_vertex(const IntVec& p, const std::vector<IntVec>& points) {
  std::vector<IntVec> diffs;
  for (const auto& q : points) {
    if (q.size() != p.size()) fail(ErrorKind::kDimensionMismatch, "points of different dimensions");
    if (!equal(q, p)) diffs.push_back(q - p);
  }
  if (diffs.empty()) return true;
  return strictly_separable(diffs, {}, p.size());
}

std::vector<IntVec> project_vertices(const std::vector<IntVec>& S, const IntMatrix& W) {
  if (S.empty()) fail(ErrorKind::kEmptySet, "nothing to project");
  std::vector<IntVec> image;
  for (const auto& x : S) {
    if (x.size() != W.cols()) fail(ErrorKind::kDimensionMismatch, "point and W disagree on n");
    image.push_back(W * x);
  }
  return vertices_of(std::move(image));
}

Int edge_complexity_exact(const std::vector<IntVec>& S, std::size_t max_vertices) {
  if (S.empty()) fail(ErrorKind::kEmptySet, "edge complexity of an empty set");
  std::vector<IntVec> points = S;
  sort_unique(points);
  const auto V = vertices_of(points);
  if (V.size() > max_vertices)
    fail(ErrorKind::kBudgetExceeded, std::to_string(V.size()) + " vertices is too many for pairwise edge tests");
  const Index n = points.front().size();

  // y on the line through x with primitive direction prim.
  auto on_line = [n](const IntVec& x, const IntVec& prim, const IntVec& y) {
    const IntVec off = y - x;
    for (Index i = 0; i < n; ++i)
      if (prim(i) != 0) return equal(IntVec(prim * (off(i) / prim(i))), off);
    return false;
  };

  // Pair sums over all points: if x + z = y + w with y off the line xz, the
  // common midpoint lies in a face of dimension >= 2 and [x, z] is no edge.
  std::unordered_map<IntVec, std::vector<std::pair<std::size_t, std::size_t>>, IntVecHash, IntVecEqual> sums;
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b) sums[points[a] + points[b]].emplace_back(a, b);

  struct Candidate {
    Int norm;
    std::size_t a, b;
  };
  std::vector<Candidate> pairs;
  for (std::size_t a = 0; a < V.size(); ++a)
    for (std::size_t b = a + 1; b < V.size(); ++b) pairs.push_back({l1_norm(reduce_by_gcd(V[b] - V[a])), a, b});
  std::stable_sort(pairs.begin(), pairs.end(), [](const Candidate& p, const Candidate& q) { return p.norm > q.norm; });

  for (const auto& [norm, a, b] : pairs) {
    const IntVec dir = V[b] - V[a];
    const IntVec prim = reduce_by_gcd(dir);
    bool blocked = false;
    for (const auto& [y, w] : sums.at(V[a] + V[b]))
      if (!on_line(V[a], prim, points[y])) {
        blocked = true;
        break;
      }
    if (blocked) continue;
    // Every vertex off the line must fall strictly below the face.
    std::vector<IntVec> strict;
    for (const auto& q : V)
      if (!on_line(V[a], prim, q)) strict.push_back(q - V[a]);
    if (strictly_separable(strict, {dir}, n)) return norm;
  }
  return 0;
}

std::size_t realizable_sign_patterns(const std::vector<IntVec>& dirs, std::size_t max_lps) {
  if (dirs.empty()) fail(ErrorKind::kEmptyDirectionSet, "no directions");
  const Index d = dirs.front().size();
  std::vector<IntVec> strict;
  std::size_t lps = 0, count = 0;
  // Realizable prefixes only; s_0 = +1 and the mirror image doubles the count.
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    if (i == dirs.size()) {
      ++count;
      return;
    }
    for (int s : {1, -1}) {
      if (i == 0 && s < 0) continue;
      strict.push_back(IntVec(dirs[i] * Int(-s)));
      if (++lps > max_lps) fail(ErrorKind::kBudgetExceeded, "sign-pattern scan over " + std::to_string(max_lps) + " LPs");
      if (strictly_separable(strict, {}, d)) dfs(i + 1);
      strict.pop_back();
    }
  };
  dfs(0);
  return 2 * count;
}

Int pairwise_direction_bound(const std::vector<IntVec>& S) {
  std::vector<IntVec> V = S;
  sort_unique(V);
  Int best = 0;
  for (std::size_t a = 0; a < V.size(); ++a)
    for (std::size_t b = a + 1; b < V.size(); ++b) best = std::max(best, l1_norm(reduce_by_gcd(V[b] - V[a])));
  return best;
}

}  // namespace ccm
