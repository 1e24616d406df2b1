#include "relaxo/sparse_matrix.hpp"

#include <algorithm>
#include <string>

namespace relaxo {

namespace {

std::string entry_str(Index i, Index j)
{
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

} // namespace

SparseMatrix SparseMatrix::from_triplets(Index n, std::vector<Triplet> entries)
{
    if (n < 1) {
        throw std::invalid_argument("SparseMatrix: dimension must be at least 1");
    }
    for (const Triplet& t : entries) {
        if (t.row < 0 || t.row >= n || t.col < 0 || t.col >= n) {
            throw std::invalid_argument("SparseMatrix: index out of range at " +
                                        entry_str(t.row, t.col));
        }
    }

    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (std::size_t k = 1; k < entries.size(); ++k) {
        if (entries[k].row == entries[k - 1].row && entries[k].col == entries[k - 1].col) {
            throw std::invalid_argument("SparseMatrix: duplicate entry at " +
                                        entry_str(entries[k].row, entries[k].col));
        }
    }

    SparseMatrix m;
    m.n_ = n;
    m.row_ptr_.assign(static_cast<std::size_t>(n) + 1, 0);
    m.col_idx_.reserve(entries.size());
    m.values_.reserve(entries.size());
    m.diag_pos_.assign(static_cast<std::size_t>(n), -1);

    for (const Triplet& t : entries) {
        ++m.row_ptr_[static_cast<std::size_t>(t.row) + 1];
    }
    for (Index i = 0; i < n; ++i) {
        m.row_ptr_[i + 1] += m.row_ptr_[i];
    }
    for (const Triplet& t : entries) {
        if (t.row == t.col) {
            m.diag_pos_[t.row] = static_cast<Index>(m.values_.size());
        }
        m.col_idx_.push_back(t.col);
        m.values_.push_back(t.value);
    }

    for (Index i = 0; i < n; ++i) {
        if (m.diag_pos_[i] < 0) {
            throw std::invalid_argument("SparseMatrix: missing diagonal entry in row " +
                                        std::to_string(i));
        }
        if (!(m.values_[m.diag_pos_[i]] > 0.0)) {
            throw std::invalid_argument("SparseMatrix: non-positive diagonal in row " +
                                        std::to_string(i));
        }
    }

    // Value symmetry: the transposed entry must exist and match bitwise.
    for (Index i = 0; i < n; ++i) {
        for (Index k = m.row_ptr_[i]; k < m.row_ptr_[i + 1]; ++k) {
            const Index j = m.col_idx_[k];
            if (j <= i) {
                continue;
            }
            const Index mirror = m.find_pos(j, i);
            if (mirror < 0 || m.values_[mirror] != m.values_[k]) {
                throw std::invalid_argument("SparseMatrix: asymmetric entry at " +
                                            entry_str(i, j));
            }
        }
    }

    return m;
}

Index SparseMatrix::find_pos(Index i, Index j) const
{
    const Index begin = row_ptr_[i];
    const Index end = row_ptr_[i + 1];
    auto first = col_idx_.begin() + begin;
    auto last = col_idx_.begin() + end;
    auto it = std::lower_bound(first, last, j);
    if (it == last || *it != j) {
        return -1;
    }
    return begin + (it - first);
}

double SparseMatrix::coeff(Index i, Index j) const
{
    const Index pos = find_pos(i, j);
    return pos < 0 ? 0.0 : values_[pos];
}

Vector matvec(const SparseMatrix& a, const Vector& x, MatvecCounter* counter)
{
    if (x.size() != a.rows()) {
        throw std::invalid_argument("matvec: dimension mismatch");
    }
    const auto row_ptr = a.row_ptr();
    const auto col_idx = a.col_idx();
    const auto values = a.values();

    Vector y(a.rows());
    for (Index i = 0; i < a.rows(); ++i) {
        double sum = 0.0;
        for (Index k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
            sum += values[k] * x[col_idx[k]];
        }
        y[i] = sum;
    }
    if (counter != nullptr) {
        ++counter->count;
    }
    return y;
}

double dot(const Vector& x, const Vector& y)
{
    if (x.size() != y.size()) {
        throw std::invalid_argument("dot: dimension mismatch");
    }
    return x.dot(y);
}

double norm2(const Vector& x)
{
    return x.norm();
}

} // namespace relaxo
