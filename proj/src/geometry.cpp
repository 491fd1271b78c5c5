#include "ccm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace ccm {

IntVec primitive(const IntVec& v) {
  Int g = 0;
  for (Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  if (g == 0) fail(ErrorKind::kZeroVector, "primitive() of the zero vector");
  IntVec out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = v(i) / g;
  return out;
}

IntVec canonical_direction(const IntVec& v) {
  IntVec p = primitive(v);
  for (Index i = 0; i < p.size(); ++i) {
    if (p(i) != 0) {
      if (p(i) < 0) p = -p;
      break;
    }
  }
  return p;
}

namespace {

int leading_sign(const IntVec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return sign(v(i));
  return 0;
}

}  // namespace

DirectionSet direction_set(Index d, Int q) {
  if (d < 1) fail(ErrorKind::kInvalidDimension, "direction_set requires d >= 1");
  if (q < 1) fail(ErrorKind::kInvalidDimension, "direction_set requires q >= 1");
  const double cube = std::pow(2.0 * static_cast<double>(q.value()) + 1.0, static_cast<double>(d));
  if (cube > 5e7) fail(ErrorKind::kBudgetExceeded, "direction cube {-q..q}^d too large to enumerate");

  DirectionSet out;
  out.dim = d;
  out.radius = q;
  IntVec v = IntVec::Constant(d, -q);
  // Odometer over {-q,...,q}^d in lexicographic order.
  while (true) {
    if (leading_sign(v) > 0) {
      Int g = 0;
      for (Index i = 0; i < d; ++i) g = gcd(g, v(i));
      if (g == 1) out.dirs.push_back(v);
    }
    Index i = d - 1;
    while (i >= 0 && v(i) == q) {
      v(i) = -q;
      --i;
    }
    if (i < 0) break;
    v(i) += 1;
  }
  return out;
}

DirectionSet make_direction_set(Index d, const std::vector<IntVec>& vectors) {
  if (d < 1) fail(ErrorKind::kInvalidDimension, "make_direction_set requires d >= 1");
  DirectionSet out;
  out.dim = d;
  for (const auto& v : vectors) {
    if (v.size() != d) fail(ErrorKind::kDimensionMismatch, "direction of wrong dimension");
    if (is_zero(v)) continue;
    out.dirs.push_back(canonical_direction(v));
  }
  sort_unique(out.dirs);
  for (const auto& e : out.dirs) out.radius = std::max(out.radius, inf_norm(e));
  return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Chambers stored flat: cell c has witness h[c*dim .. c*dim+dim) and sign
// bits bits[c*words .. c*words+words); bit i set means <n_i, h> > 0.
struct Cells {
  Index dim = 0;
  std::size_t words = 0;
  std::vector<Int> h;
  std::vector<std::uint64_t> bits;

  std::size_t size() const { return dim == 0 ? 0 : h.size() / static_cast<std::size_t>(dim); }
  bool bit(std::size_t c, std::size_t i) const { return (bits[c * words + i / 64] >> (i % 64)) & 1U; }
};

// Integer basis (as rows) of the lattice {x in Z^d : <e, x> = 0}, e primitive.
std::vector<IntVec> orthogonal_lattice_basis(const IntVec& e) {
  const Index d = e.size();
  IntMatrix u = IntMatrix::Identity(d, d);
  IntVec row = e;
  for (Index j = 1; j < d; ++j) {
    if (row(j) == 0) continue;
    // Extended Euclid on (row(0), row(j)) applied to columns 0 and j.
    Int a = row(0), b = row(j);
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
      Int t = floor_div(a, b);
      Int r = a - t * b;
      a = b;
      b = r;
      Int nx = x0 - t * x1, ny = y0 - t * y1;
      x0 = x1; y0 = y1; x1 = nx; y1 = ny;
    }
    // a = gcd (possibly negative), x0*row0 + y0*rowj = a, x1*row0 + y1*rowj = 0.
    for (Index i = 0; i < d; ++i) {
      Int c0 = u(i, 0), cj = u(i, j);
      u(i, 0) = x0 * c0 + y0 * cj;
      u(i, j) = x1 * c0 + y1 * cj;
    }
    row(0) = a;
    row(j) = 0;
  }
  std::vector<IntVec> basis;
  for (Index j = 1; j < d; ++j) basis.push_back(u.col(j));
  return basis;
}

Int reduce_by_gcd(std::vector<Int>& h, std::size_t offset, Index dim) {
  Int g = 0;
  for (Index i = 0; i < dim; ++i) g = gcd(g, h[offset + static_cast<std::size_t>(i)]);
  if (g > 1)
    for (Index i = 0; i < dim; ++i) h[offset + static_cast<std::size_t>(i)] /= g;
  return g;
}

Cells chambers_of(const std::vector<IntVec>& normals, Index dim) {
  const std::size_t m = normals.size();
  Cells cells;
  cells.dim = dim;
  cells.words = (m + 63) / 64;

  auto dot_at = [&](const IntVec& n, const std::vector<Int>& h, std::size_t off) {
    Int s = 0;
    for (Index t = 0; t < dim; ++t) s += n(t) * h[off + static_cast<std::size_t>(t)];
    return s;
  };

  if (dim == 1) {
    // Canonical normals in dimension one all equal (1).
    for (int s : {1, -1}) {
      cells.h.push_back(s);
      for (std::size_t w = 0; w < cells.words; ++w) cells.bits.push_back(0);
      const std::size_t c = cells.size() - 1;
      for (std::size_t i = 0; i < m; ++i)
        if (sign(normals[i](0)) * s > 0) cells.bits[c * cells.words + i / 64] |= std::uint64_t{1} << (i % 64);
    }
    return cells;
  }

  std::vector<std::uint64_t> zobrist(m);
  for (std::size_t i = 0; i < m; ++i) zobrist[i] = splitmix64(i + 1);
  std::vector<std::uint64_t> hash;

  for (int s : {1, -1}) {
    for (Index t = 0; t < dim; ++t) cells.h.push_back(normals[0](t) * s);
    cells.bits.push_back(s > 0 ? 1 : 0);
    for (std::size_t w = 1; w < cells.words; ++w) cells.bits.push_back(0);
    hash.push_back(s > 0 ? zobrist[0] : 0);
  }

  for (std::size_t k = 1; k < m; ++k) {
    const IntVec& ek = normals[k];
    const std::vector<IntVec> basis = orthogonal_lattice_basis(ek);

    // Restrict the first k hyperplanes to ek^perp, in basis coordinates.
    std::vector<IntVec> restricted;
    std::vector<std::pair<std::size_t, int>> map(k);  // i -> (restricted index, orientation)
    {
      std::vector<std::pair<IntVec, std::size_t>> keyed;
      std::vector<IntVec> canon(k);
      std::vector<int> orient(k);
      for (std::size_t i = 0; i < k; ++i) {
        IntVec r(dim - 1);
        for (Index j = 0; j < dim - 1; ++j) r(j) = dot(basis[static_cast<std::size_t>(j)], normals[i]);
        IntVec c = canonical_direction(r);
        orient[i] = leading_sign(r);
        canon[i] = c;
        restricted.push_back(c);
      }
      sort_unique(restricted);
      for (std::size_t i = 0; i < k; ++i) {
        auto it = std::lower_bound(restricted.begin(), restricted.end(), canon[i], LexLess{});
        map[i] = {static_cast<std::size_t>(it - restricted.begin()), orient[i]};
      }
    }
    const Cells sub = chambers_of(restricted, dim - 1);

    struct Cut {
      std::uint64_t hash;
      std::size_t index;
    };
    const std::size_t nsub = sub.size();
    std::vector<Int> lifted(nsub * static_cast<std::size_t>(dim), 0);
    std::vector<std::uint64_t> lifted_bits(nsub * cells.words, 0);
    std::vector<Cut> cuts(nsub);
    for (std::size_t c = 0; c < nsub; ++c) {
      for (Index j = 0; j < dim - 1; ++j) {
        const Int pj = sub.h[c * static_cast<std::size_t>(dim - 1) + static_cast<std::size_t>(j)];
        for (Index t = 0; t < dim; ++t)
          lifted[c * static_cast<std::size_t>(dim) + static_cast<std::size_t>(t)] +=
              pj * basis[static_cast<std::size_t>(j)](t);
      }
      std::uint64_t hv = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const bool sb = sub.bit(c, map[i].first);
        if (sb == (map[i].second > 0)) {
          lifted_bits[c * cells.words + i / 64] |= std::uint64_t{1} << (i % 64);
          hv ^= zobrist[i];
        }
      }
      cuts[c] = {hv, c};
    }
    std::sort(cuts.begin(), cuts.end(), [](const Cut& a, const Cut& b) {
      return a.hash != b.hash ? a.hash < b.hash : a.index < b.index;
    });

    Cells next;
    next.dim = dim;
    next.words = cells.words;
    std::vector<std::uint64_t> next_hash;
    const std::size_t old = cells.size();
    next.h.reserve((old + nsub) * static_cast<std::size_t>(dim));
    next.bits.reserve((old + nsub) * cells.words);
    std::size_t matched = 0;
    for (std::size_t c = 0; c < old; ++c) {
      const std::size_t hoff = c * static_cast<std::size_t>(dim);
      const std::uint64_t* cb = &cells.bits[c * cells.words];
      std::size_t found = nsub;
      auto range = std::equal_range(cuts.begin(), cuts.end(), Cut{hash[c], 0},
                                    [](const Cut& a, const Cut& b) { return a.hash < b.hash; });
      for (auto it = range.first; it != range.second; ++it) {
        if (std::equal(cb, cb + cells.words, &lifted_bits[it->index * cells.words])) {
          found = it->index;
          break;
        }
      }
      if (found == nsub) {
        const Int t = dot_at(ek, cells.h, hoff);
        if (t == 0) throw std::logic_error("chamber witness lies on an uncut hyperplane");
        next.h.insert(next.h.end(), cells.h.begin() + static_cast<std::ptrdiff_t>(hoff),
                      cells.h.begin() + static_cast<std::ptrdiff_t>(hoff) + dim);
        next.bits.insert(next.bits.end(), cb, cb + cells.words);
        std::uint64_t hv = hash[c];
        if (t > 0) {
          next.bits[next.bits.size() - cells.words + k / 64] |= std::uint64_t{1} << (k % 64);
          hv ^= zobrist[k];
        }
        next_hash.push_back(hv);
        continue;
      }
      ++matched;
      // Split: K*p +/- ek with K large enough that no earlier sign flips.
      const std::size_t poff = found * static_cast<std::size_t>(dim);
      Int scale = 1;
      for (std::size_t i = 0; i < k; ++i) {
        const Int along = abs(dot(normals[i], ek));
        const Int at_p = abs(dot_at(normals[i], lifted, poff));
        scale = std::max(scale, along / at_p + 1);
      }
      for (int s : {1, -1}) {
        const std::size_t off = next.h.size();
        for (Index t = 0; t < dim; ++t)
          next.h.push_back(scale * lifted[poff + static_cast<std::size_t>(t)] + ek(t) * s);
        reduce_by_gcd(next.h, off, dim);
        next.bits.insert(next.bits.end(), cb, cb + cells.words);
        std::uint64_t hv = hash[c];
        if (s > 0) {
          next.bits[next.bits.size() - cells.words + k / 64] |= std::uint64_t{1} << (k % 64);
          hv ^= zobrist[k];
        }
        next_hash.push_back(hv);
      }
    }
    if (matched != nsub) throw std::logic_error("restricted chambers do not match cut chambers");
    cells = std::move(next);
    hash = std::move(next_hash);
  }
  return cells;
}

}  // namespace

std::vector<ChamberWitness> enumerate_chambers(const DirectionSet& E) {
  if (E.empty()) fail(ErrorKind::kEmptyDirectionSet, "cannot enumerate chambers of an empty arrangement");
  for (const auto& e : E.dirs)
    if (e.size() != E.dim) fail(ErrorKind::kDimensionMismatch, "direction of wrong dimension");

  const Cells cells = chambers_of(E.dirs, E.dim);
  std::vector<ChamberWitness> out;
  out.reserve(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    ChamberWitness w;
    w.h = IntVec(E.dim);
    for (Index t = 0; t < E.dim; ++t) w.h(t) = cells.h[c * static_cast<std::size_t>(E.dim) + static_cast<std::size_t>(t)];
    std::vector<std::uint64_t> words(cells.bits.begin() + static_cast<std::ptrdiff_t>(c * cells.words),
                                     cells.bits.begin() + static_cast<std::ptrdiff_t>((c + 1) * cells.words));
    w.signs = SignVector(E.size(), std::move(words));
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), [](const ChamberWitness& a, const ChamberWitness& b) { return lex_less(a.h, b.h); });
  return out;
}

std::vector<ZonotopeVertex> zonotope_vertices(const DirectionSet& E) {
  std::vector<ZonotopeVertex> out;
  for (auto& w : enumerate_chambers(E)) {
    IntVec v = IntVec::Zero(E.dim);
    for (std::size_t i = 0; i < E.size(); ++i) {
      if (w.signs[i] > 0) v += E.dirs[i]; else v -= E.dirs[i];
    }
    out.push_back({std::move(v), std::move(w)});
  }
  return out;
}

BigInt zonotope_vertex_bound(Index d, const BigInt& m) {
  if (m <= 0) return 1;
  BigInt total = 0;
  BigInt binom = 1;  // C(m-1, k)
  for (Index k = 0; k < d; ++k) {
    if (k > 0) {
      if (m - 1 < k) break;
      binom = binom * (m - k) / k;
    }
    total += binom;
  }
  return 2 * total;
}

namespace {

using Wide = __int128;

Wide cross(const IntVec& o, const IntVec& a, const IntVec& b) {
  return static_cast<Wide>((a(0) - o(0)).value()) * (b(1) - o(1)).value() -
         static_cast<Wide>((a(1) - o(1)).value()) * (b(0) - o(0)).value();
}

// Andrew's monotone chain on sorted distinct points; collinear points dropped.
std::vector<IntVec> planar_hull(const std::vector<IntVec>& pts) {
  std::vector<IntVec> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  sort_unique(hull);
  return hull;
}

// Phase one of the simplex method on {lambda >= 0 : M lambda = rhs}, with
// artificial variables and Bland's rule. True iff the system is feasible.
bool feasible_convex_combination(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t rows = m.size();
  const std::size_t n = rows == 0 ? 0 : m[0].size();
  for (std::size_t i = 0; i < rows; ++i) {
    if (rhs[i] < 0) {
      for (auto& x : m[i]) x = -x;
      rhs[i] = -rhs[i];
    }
    m[i].resize(n + rows, Rational(0));
    m[i][n + i] = 1;
  }
  std::vector<std::size_t> basic(rows);
  for (std::size_t i = 0; i < rows; ++i) basic[i] = n + i;
  // Reduced costs of the phase-one objective: minimize the sum of artificials.
  std::vector<Rational> cost(n + rows, Rational(0));
  Rational value = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[j] -= m[i][j];
    value += rhs[i];
  }
  while (value > 0) {
    std::size_t enter = n + rows;
    for (std::size_t j = 0; j < n + rows; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == n + rows) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (m[i][enter] > 0) {
        Rational ratio = rhs[i] / m[i][enter];
        if (leave == rows || ratio < best || (ratio == best && basic[i] < basic[leave])) {
          leave = i;
          best = ratio;
        }
      }
    }
    if (leave == rows) break;
    const Rational piv = m[leave][enter];
    for (auto& x : m[leave]) x /= piv;
    rhs[leave] /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || m[i][enter] == 0) continue;
      const Rational f = m[i][enter];
      for (std::size_t j = 0; j < n + rows; ++j)
        if (m[leave][j] != 0) m[i][j] -= f * m[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    const Rational f = cost[enter];
    for (std::size_t j = 0; j < n + rows; ++j)
      if (m[leave][j] != 0) cost[j] -= f * m[leave][j];
    value += f * rhs[leave];
    basic[leave] = enter;
  }
  return value == 0;
}

// p is a vertex iff it is not a convex combination of the other points.
bool is_hull_vertex(const std::vector<IntVec>& pts, std::size_t p, Index d) {
  const std::size_t nd = static_cast<std::size_t>(d);
  std::vector<std::vector<Rational>> m(nd + 1);
  std::vector<Rational> rhs(nd + 1);
  for (std::size_t q = 0; q < pts.size(); ++q) {
    if (q == p) continue;
    for (std::size_t i = 0; i < nd; ++i) m[i].emplace_back(pts[q](static_cast<Index>(i)).value());
    m[nd].emplace_back(1);
  }
  for (std::size_t i = 0; i < nd; ++i) rhs[i] = pts[p](static_cast<Index>(i)).value();
  rhs[nd] = 1;
  return !feasible_convex_combination(std::move(m), std::move(rhs));
}

}  // namespace

std::vector<IntVec> hull_vertices(const std::vector<IntVec>& points, Index d) {
  if (points.empty()) fail(ErrorKind::kEmptySet, "hull_vertices of an empty point set");
  for (const auto& p : points)
    if (p.size() != d) fail(ErrorKind::kDimensionMismatch, "point of wrong dimension in hull_vertices");
  std::vector<IntVec> pts = points;
  sort_unique(pts);
  if (pts.size() <= 2) return pts;
  if (d == 1) return {pts.front(), pts.back()};
  if (d == 2) return planar_hull(pts);
  std::vector<IntVec> out;
  for (std::size_t p = 0; p < pts.size(); ++p)
    if (is_hull_vertex(pts, p, d)) out.push_back(pts[p]);
  return out;
}

}  // namespace ccm
