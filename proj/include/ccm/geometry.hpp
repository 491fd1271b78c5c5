#pragma once

// Exact integer geometry: primitive directions, chambers of central
// hyperplane arrangements (equivalently vertices of zonotopes), and
// identification of convex-hull vertices in low dimension.

#include <cstdint>
#include <vector>

#include "ccm/integer.hpp"
#include "ccm/rational.hpp"

namespace ccm {

/// v divided by the gcd of its entries. Throws kZeroVector for v = 0.
IntVec primitive(const IntVec& v);

/// primitive(v), negated if needed so the first nonzero entry is positive.
IntVec canonical_direction(const IntVec& v);

/// A set of pairwise non-parallel primitive directions in Z^d, each with a
/// positive leading entry, sorted lexicographically.
struct DirectionSet {
  Index dim = 0;
  Int radius = 0;  // max infinity norm over dirs
  std::vector<IntVec> dirs;

  std::size_t size() const { return dirs.size(); }
  bool empty() const { return dirs.empty(); }
};

/// Canonical representatives of every direction spanned by a nonzero vector
/// of {-q,...,q}^d.
DirectionSet direction_set(Index d, Int q);

/// Canonicalizes and deduplicates arbitrary vectors (zeros are dropped).
DirectionSet make_direction_set(Index d, const std::vector<IntVec>& vectors);

/// Fixed-length vector over {+1,-1}, bit-packed.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}
  SignVector(std::size_t size, std::vector<std::uint64_t> words) : size_(size), words_(std::move(words)) {}

  std::size_t size() const { return size_; }
  int operator[](std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U ? 1 : -1; }
  void set(std::size_t i, int s) {
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (s > 0) words_[i / 64] |= bit; else words_[i / 64] &= ~bit;
  }
  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// An integer point strictly inside one chamber: signs[i] * <dirs[i], h> > 0.
struct ChamberWitness {
  IntVec h;
  SignVector signs;
};

/// One witness per open chamber of the central arrangement whose normals are
/// E.dirs, sorted lexicographically by h. Throws kEmptyDirectionSet.
std::vector<ChamberWitness> enumerate_chambers(const DirectionSet& E);

struct ZonotopeVertex {
  IntVec vertex;  // sum_i signs[i] * dirs[i]
  ChamberWitness witness;
};

/// Vertices of zone(E) = sum_i [-e_i, e_i], one per chamber.
std::vector<ZonotopeVertex> zonotope_vertices(const DirectionSet& E);

/// Upper bound 2 * sum_{k<d} C(m-1, k) on the vertex count of a zonotope
/// with m generators in R^d.
BigInt zonotope_vertex_bound(Index d, const BigInt& m);

/// The input points that are vertices of their convex hull, deduplicated and
/// sorted. A point is a vertex iff some linear functional is maximized over
/// the set uniquely there; decided with an exact rational LP.
std::vector<IntVec> hull_vertices(const std::vector<IntVec>& points, Index d);

}  // namespace ccm
