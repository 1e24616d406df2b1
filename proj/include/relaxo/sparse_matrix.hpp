#ifndef RELAXO_SPARSE_MATRIX_HPP
#define RELAXO_SPARSE_MATRIX_HPP

#include <span>
#include <vector>

#include "relaxo/types.hpp"

namespace relaxo {

struct Triplet {
    Index row;
    Index col;
    double value;
};

/// Square symmetric sparse matrix in compressed sparse row storage.
///
/// Construction enforces the invariants every solver in this library relies
/// on: sorted, duplicate-free column indices per row, a stored and strictly
/// positive diagonal in every row, and exact value symmetry (each stored
/// (i, j, v) has a stored (j, i, v) with the identical value). Entries whose
/// value is exactly zero are kept structurally.
///
/// Instances are immutable after construction and safe to share across
/// concurrent readers.
class SparseMatrix {
public:
    SparseMatrix() = default;

    /// Builds an n-by-n matrix from coordinate entries (0-based indices).
    /// Throws std::invalid_argument when any invariant fails.
    static SparseMatrix from_triplets(Index n, std::vector<Triplet> entries);

    Index rows() const { return n_; }
    Index nnz() const { return static_cast<Index>(values_.size()); }

    std::span<const Index> row_ptr() const { return row_ptr_; }
    std::span<const Index> col_idx() const { return col_idx_; }
    std::span<const double> values() const { return values_; }

    /// Stored value of a_ii (always present, always > 0).
    double diagonal(Index i) const { return values_[diag_pos_[i]]; }

    /// Value at (i, j); zero when the entry is not stored.
    double coeff(Index i, Index j) const;

private:
    Index find_pos(Index i, Index j) const;

    Index n_ = 0;
    std::vector<Index> row_ptr_;
    std::vector<Index> col_idx_;
    std::vector<double> values_;
    std::vector<Index> diag_pos_; // position of (i, i) within values_
};

/// y = A x. Counts as exactly one matrix-vector product on `counter`
/// when a counter is supplied.
Vector matvec(const SparseMatrix& a, const Vector& x, MatvecCounter* counter = nullptr);

/// Euclidean inner product with an explicit length check.
double dot(const Vector& x, const Vector& y);

/// Euclidean norm.
double norm2(const Vector& x);

} // namespace relaxo

#endif
