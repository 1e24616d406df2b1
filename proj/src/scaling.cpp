#include "relaxo/scaling.hpp"

#include <cmath>

namespace relaxo {

ScaledSystem jacobi_scale(const SparseMatrix& a, const Vector& b)
{
    const Index n = a.rows();
    if (b.size() != n) {
        throw std::invalid_argument("jacobi_scale: dimension mismatch");
    }

    Vector root_diag(n);
    for (Index i = 0; i < n; ++i) {
        root_diag[i] = std::sqrt(a.diagonal(i));
    }

    const auto row_ptr = a.row_ptr();
    const auto col_idx = a.col_idx();
    const auto values = a.values();

    std::vector<Triplet> scaled;
    scaled.reserve(static_cast<std::size_t>(a.nnz()));
    for (Index i = 0; i < n; ++i) {
        for (Index k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
            const Index j = col_idx[k];
            const double v = i == j ? 1.0 : values[k] / (root_diag[i] * root_diag[j]);
            scaled.push_back({i, j, v});
        }
    }

    ScaledSystem sys;
    sys.matrix = SparseMatrix::from_triplets(n, std::move(scaled));
    sys.rhs = b.cwiseQuotient(root_diag);
    sys.scale = root_diag.cwiseInverse();
    return sys;
}

} // namespace relaxo
