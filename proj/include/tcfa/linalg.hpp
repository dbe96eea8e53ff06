#pragma once

#include <vector>

#include "tcfa/rational.hpp"

namespace tcfa {

// Sparse vector over Q: (row, coeff) pairs, sorted by row, coeffs nonzero.
using SparseVec = std::vector<std::pair<int, Rat>>;

Rat sparse_entry(const SparseVec& v, int row);
SparseVec sparse_axpy(const SparseVec& x, const Rat& a, const SparseVec& y);  // x + a*y
SparseVec sparse_scale(const SparseVec& v, const Rat& a);

/// Reduced column echelon basis of a subspace of Q^nrows: column j has a 1 at
/// pivot_rows[j] and 0 at every other pivot row. Pivot rows are the smallest
/// available row indices, so the basis is canonical for a given spanning set
/// order.
struct EchelonBasis {
    int nrows = 0;
    std::vector<int> pivot_rows;
    std::vector<SparseVec> cols;

    int dim() const { return static_cast<int>(cols.size()); }

    // Trace of the permutation of coordinates row -> perm[row] restricted to
    // the subspace, which must be invariant. perm_inv is the inverse
    // permutation; the trace is read off pivot rows in O(dim * log).
    Rat permutation_trace(const std::vector<int>& perm_inv) const;
};

struct ColumnReduction {
    int rank = 0;
    EchelonBasis image;   // reduced echelon basis of the column space
    EchelonBasis kernel;  // reduced echelon basis of the nullspace (if requested)
};

// Exact Gauss-Jordan over Q on the columns of an nrows x cols.size() sparse
// matrix. Deterministic: columns in the given order, pivots at the smallest
// nonzero row.
ColumnReduction column_reduce(int nrows, const std::vector<SparseVec>& cols, bool want_kernel);

}  // namespace tcfa
