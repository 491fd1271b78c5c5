#pragma once

// Exact integer scalar and the dense Eigen types built on it. Every
// arithmetic operation on ccm::Int is overflow-checked and throws
// Error(kOverflow) instead of wrapping.

#include <Eigen/Core>

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "ccm/error.hpp"

namespace ccm {

class Int {
 public:
  constexpr Int() = default;
  template <std::integral T>
  constexpr Int(T v) : v_(static_cast<std::int64_t>(v)) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_unsigned_v<T> && sizeof(T) >= sizeof(std::int64_t)) {
      if (v > static_cast<T>(std::numeric_limits<std::int64_t>::max())) overflow("conversion");
    }
  }

  constexpr std::int64_t value() const { return v_; }
  explicit constexpr operator std::int64_t() const { return v_; }

  friend Int operator+(Int a, Int b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) overflow("addition");
    return Int(r);
  }
  friend Int operator-(Int a, Int b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) overflow("subtraction");
    return Int(r);
  }
  friend Int operator*(Int a, Int b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) overflow("multiplication");
    return Int(r);
  }
  // Truncating division, as for built-in integers; see floor_div / ceil_div.
  friend Int operator/(Int a, Int b) {
    if (b.v_ == 0) fail(ErrorKind::kInvalidArgument, "integer division by zero");
    if (a.v_ == std::numeric_limits<std::int64_t>::min() && b.v_ == -1) overflow("division");
    return Int(a.v_ / b.v_);
  }
  friend Int operator%(Int a, Int b) {
    if (b.v_ == 0) fail(ErrorKind::kInvalidArgument, "integer modulo by zero");
    if (b.v_ == -1) return Int(0);
    return Int(a.v_ % b.v_);
  }
  Int operator-() const {
    if (v_ == std::numeric_limits<std::int64_t>::min()) overflow("negation");
    return Int(-v_);
  }
  Int operator+() const { return *this; }

  Int& operator+=(Int o) { return *this = *this + o; }
  Int& operator-=(Int o) { return *this = *this - o; }
  Int& operator*=(Int o) { return *this = *this * o; }
  Int& operator/=(Int o) { return *this = *this / o; }

  friend constexpr bool operator==(Int a, Int b) = default;
  friend constexpr auto operator<=>(Int a, Int b) = default;

  friend std::ostream& operator<<(std::ostream& os, Int a) { return os << a.v_; }

 private:
  [[noreturn]] static void overflow(const char* op) {
    fail(ErrorKind::kOverflow, std::string("64-bit integer overflow in ") + op);
  }

  std::int64_t v_ = 0;
};

inline Int abs(Int a) { return a < 0 ? -a : a; }
inline int sign(Int a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

inline Int gcd(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q = q - 1;
  return q;
}

inline Int ceil_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) q = q + 1;
  return q;
}

inline std::string to_string(Int a) { return std::to_string(a.value()); }

}  // namespace ccm

namespace Eigen {

template <>
struct NumTraits<ccm::Int> : GenericNumTraits<std::int64_t> {
  using Real = ccm::Int;
  using NonInteger = ccm::Int;
  using Literal = ccm::Int;
  using Nested = ccm::Int;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3,
  };
  static inline ccm::Int epsilon() { return 0; }
  static inline ccm::Int dummy_precision() { return 0; }
  static inline ccm::Int highest() { return std::numeric_limits<std::int64_t>::max(); }
  static inline ccm::Int lowest() { return std::numeric_limits<std::int64_t>::min(); }
};

}  // namespace Eigen

namespace ccm {

using Index = Eigen::Index;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using IntVec = Vector<Int>;
using IntMatrix = Matrix<Int>;

inline IntVec make_vec(std::initializer_list<std::int64_t> entries) {
  IntVec v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (auto e : entries) v(i++) = e;
  return v;
}

inline IntVec make_vec(const std::vector<std::int64_t>& entries) {
  IntVec v(static_cast<Index>(entries.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = entries[static_cast<std::size_t>(i)];
  return v;
}

inline IntMatrix make_matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  IntMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c) fail(ErrorKind::kDimensionMismatch, "ragged matrix literal");
    Index j = 0;
    for (auto e : row) m(i, j++) = e;
    ++i;
  }
  return m;
}

template <typename A, typename B>
bool lex_less(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  const Index n = std::min(a.size(), b.size());
  for (Index i = 0; i < n; ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return a.size() < b.size();
}

struct LexLess {
  template <typename A, typename B>
  bool operator()(const A& a, const B& b) const {
    return lex_less(a, b);
  }
};

inline bool equal(const IntVec& a, const IntVec& b) { return a.size() == b.size() && a == b; }

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(v.size());
    for (Index i = 0; i < v.size(); ++i) {
      h ^= static_cast<std::uint64_t>(v(i).value()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

struct IntVecEqual {
  bool operator()(const IntVec& a, const IntVec& b) const { return equal(a, b); }
};

template <typename Derived>
Int dot(const Eigen::MatrixBase<Derived>& a, const IntVec& b) {
  if (a.size() != b.size()) fail(ErrorKind::kDimensionMismatch, "dot product of unequal lengths");
  Int s = 0;
  for (Index i = 0; i < b.size(); ++i) s += a(i) * b(i);
  return s;
}

inline Int inf_norm(const IntVec& v) {
  Int m = 0;
  for (Index i = 0; i < v.size(); ++i) m = std::max(m, abs(v(i)));
  return m;
}

inline Int l1_norm(const IntVec& v) {
  Int s = 0;
  for (Index i = 0; i < v.size(); ++i) s += abs(v(i));
  return s;
}

inline Int max_abs(const IntMatrix& m) {
  Int best = 0;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) best = std::max(best, abs(m(i, j)));
  return best;
}

inline bool is_zero(const IntVec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

inline std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v(i));
  }
  return s + ")";
}

inline std::vector<std::int64_t> to_std(const IntVec& v) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(v.size()));
  for (Index i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] = v(i).value();
  return out;
}

// Sorts lexicographically and removes duplicates.
inline void sort_unique(std::vector<IntVec>& points) {
  std::sort(points.begin(), points.end(), LexLess{});
  points.erase(std::unique(points.begin(), points.end(), IntVecEqual{}), points.end());
}

}  // namespace ccm
