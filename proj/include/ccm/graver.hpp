#pragma once

// Graver bases of small integer matrices by a completion procedure, plus the
// n-fold product and brick statistics.

#include <cstdint>
#include <vector>

#include "ccm/integer.hpp"

namespace ccm {

/// x is conformal to y (x ⊑ y): x_i y_i >= 0 and |x_i| <= |y_i| for all i.
bool conformal_le(const IntVec& x, const IntVec& y);

/// Basis of the lattice {x in Z^n : A x = 0}, as columns-turned-vectors.
std::vector<IntVec> kernel_lattice_basis(const IntMatrix& A);

struct GraverOptions {
  std::size_t max_elements = 200000;  // cap on the working set
  Int max_norm = 1000;                // cap on the l1 norm of any kept element
};

struct GraverBasis {
  IntMatrix A;
  std::vector<IntVec> elements;  // sorted lexicographically

  std::size_t size() const { return elements.size(); }
};

/// The ⊑-minimal nonzero elements of ker(A) ∩ Z^n. Throws kBudgetExceeded
/// when a cap in options is hit.
GraverBasis graver_basis(const IntMatrix& A, const GraverOptions& options = {});

/// Largest l1 norm of an element; 0 for an empty basis.
Int l1_max(const GraverBasis& G);

struct Bimatrix {
  IntMatrix A1;  // r x t
  IntMatrix A2;  // s x t
};

/// (r + n s) x (n t) matrix: A1 repeated along the top, A2 down the diagonal.
IntMatrix n_fold(const Bimatrix& A, Index n);

/// Number of nonzero t-blocks of x.
Index brick_count(const IntVec& x, Index t);

/// Maximum brick count over the Graver basis of the n-fold product.
Index observed_graver_complexity(const Bimatrix& A, Index n, const GraverOptions& options = {});

}  // namespace ccm
