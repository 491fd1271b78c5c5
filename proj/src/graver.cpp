#include "ccm/graver.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <tuple>

namespace ccm {

bool conformal_le(const IntVec& x, const IntVec& y) {
  if (x.size() != y.size()) fail(ErrorKind::kDimensionMismatch, "conformal order on unequal lengths");
  for (Index i = 0; i < x.size(); ++i) {
    if (x(i) == 0) continue;
    if ((x(i) > 0) != (y(i) > 0) || y(i) == 0 || abs(x(i)) > abs(y(i))) return false;
  }
  return true;
}

std::vector<IntVec> kernel_lattice_basis(const IntMatrix& A) {
  const Index m = A.rows();
  const Index n = A.cols();
  IntMatrix M = A;
  IntMatrix U = IntMatrix::Identity(n, n);
  auto swap_cols = [&](Index a, Index b) {
    if (a == b) return;
    M.col(a).swap(M.col(b));
    U.col(a).swap(U.col(b));
  };
  auto axpy_col = [&](Index dst, Int f, Index src) {  // col dst -= f * col src
    for (Index r = 0; r < m; ++r) M(r, dst) -= f * M(r, src);
    for (Index r = 0; r < n; ++r) U(r, dst) -= f * U(r, src);
  };
  Index pivot = 0;
  for (Index r = 0; r < m && pivot < n; ++r) {
    // Euclid across the remaining columns until row r has one nonzero.
    while (true) {
      Index best = -1;
      for (Index c = pivot; c < n; ++c)
        if (M(r, c) != 0 && (best < 0 || abs(M(r, c)) < abs(M(r, best)))) best = c;
      if (best < 0) break;
      swap_cols(pivot, best);
      bool done = true;
      for (Index c = pivot + 1; c < n; ++c) {
        if (M(r, c) == 0) continue;
        axpy_col(c, floor_div(M(r, c), M(r, pivot)), pivot);
        if (M(r, c) != 0) done = false;
      }
      if (done) {
        ++pivot;
        break;
      }
    }
  }
  std::vector<IntVec> basis;
  for (Index c = pivot; c < n; ++c) basis.push_back(U.col(c));
  return basis;
}

namespace {

struct Signed {
  IntVec v;
  std::vector<std::uint64_t> pos, neg;
  Int norm;
};

Signed make_signed(IntVec v) {
  Signed s;
  const std::size_t words = static_cast<std::size_t>((v.size() + 63) / 64);
  s.pos.assign(words, 0);
  s.neg.assign(words, 0);
  for (Index i = 0; i < v.size(); ++i) {
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (v(i) > 0) s.pos[static_cast<std::size_t>(i / 64)] |= bit;
    if (v(i) < 0) s.neg[static_cast<std::size_t>(i / 64)] |= bit;
  }
  s.norm = l1_norm(v);
  s.v = std::move(v);
  return s;
}

bool below(const Signed& g, const Signed& s) {
  if (g.norm > s.norm) return false;
  for (std::size_t w = 0; w < g.pos.size(); ++w)
    if ((g.pos[w] & ~s.pos[w]) || (g.neg[w] & ~s.neg[w])) return false;
  for (Index i = 0; i < g.v.size(); ++i)
    if (abs(g.v(i)) > abs(s.v(i))) return false;
  return true;
}

bool opposite_somewhere(const Signed& a, const Signed& b) {
  for (std::size_t w = 0; w < a.pos.size(); ++w)
    if ((a.pos[w] & b.neg[w]) || (a.neg[w] & b.pos[w])) return true;
  return false;
}

}  // namespace

GraverBasis graver_basis(const IntMatrix& A, const GraverOptions& options) {
  GraverBasis out{A, {}};
  const auto lattice = kernel_lattice_basis(A);
  if (lattice.empty()) return out;

  std::vector<Signed> G;
  for (const auto& b : lattice) {
    G.push_back(make_signed(b));
    G.push_back(make_signed(-b));
  }

  auto reduce = [&](IntVec s) {
    Signed cur = make_signed(std::move(s));
    bool progress = true;
    while (progress && cur.norm > 0) {
      progress = false;
      for (const Signed& g : G) {
        if (!below(g, cur)) continue;
        IntVec v = cur.v;
        do {
          v -= g.v;
          cur = make_signed(v);
        } while (cur.norm > 0 && below(g, cur));
        progress = true;
        break;
      }
    }
    return cur;
  };

  // Critical pairs by ascending norm of the sum; ties by index for determinism.
  using Pair = std::tuple<Int, std::size_t, std::size_t>;
  std::priority_queue<Pair, std::vector<Pair>, std::greater<>> pairs;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      if (opposite_somewhere(G[i], G[j])) pairs.emplace(l1_norm(G[i].v + G[j].v), i, j);
  };
  for (std::size_t j = 1; j < G.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    const auto [norm, i, j] = pairs.top();
    pairs.pop();
    Signed r = reduce(G[i].v + G[j].v);
    if (r.norm == 0) continue;
    if (r.norm > options.max_norm)
      fail(ErrorKind::kBudgetExceeded, "Graver completion produced an element of l1 norm " + to_string(r.norm));
    if (G.size() >= options.max_elements)
      fail(ErrorKind::kBudgetExceeded, "Graver completion exceeded " + std::to_string(options.max_elements) + " elements");
    G.push_back(std::move(r));
    push_pairs(G.size() - 1);
  }

  for (std::size_t a = 0; a < G.size(); ++a) {
    bool minimal = true;
    for (std::size_t b = 0; b < G.size() && minimal; ++b)
      if (b != a && below(G[b], G[a]) && !equal(G[b].v, G[a].v)) minimal = false;
    if (minimal) out.elements.push_back(G[a].v);
  }
  sort_unique(out.elements);
  return out;
}

Int l1_max(const GraverBasis& G) {
  Int best = 0;
  for (const auto& g : G.elements) best = std::max(best, l1_norm(g));
  return best;
}

IntMatrix n_fold(const Bimatrix& A, Index n) {
  if (n < 1) fail(ErrorKind::kInvalidArgument, "n-fold product needs n >= 1");
  const Index r = A.A1.rows();
  const Index s = A.A2.rows();
  const Index t = A.A1.cols();
  if (A.A2.cols() != t) fail(ErrorKind::kDimensionMismatch, "bimatrix blocks have different column counts");
  IntMatrix M = IntMatrix::Zero(r + n * s, n * t);
  for (Index k = 0; k < n; ++k) {
    M.block(0, k * t, r, t) = A.A1;
    M.block(r + k * s, k * t, s, t) = A.A2;
  }
  return M;
}

Index brick_count(const IntVec& x, Index t) {
  if (t <= 0 || x.size() % t != 0) fail(ErrorKind::kDimensionMismatch, "vector length is not a multiple of the brick size");
  Index count = 0;
  for (Index k = 0; k < x.size() / t; ++k) {
    bool nonzero = false;
    for (Index i = 0; i < t; ++i) nonzero = nonzero || x(k * t + i) != 0;
    count += nonzero ? 1 : 0;
  }
  return count;
}

Index observed_graver_complexity(const Bimatrix& A, Index n, const GraverOptions& options) {
  const auto G = graver_basis(n_fold(A, n), options);
  Index best = 0;
  for (const auto& g : G.elements) best = std::max(best, brick_count(g, A.A1.cols()));
  return best;
}

}  // namespace ccm
