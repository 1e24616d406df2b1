#ifndef RELAXO_SCALING_HPP
#define RELAXO_SCALING_HPP

#include "relaxo/sparse_matrix.hpp"

namespace relaxo {

/// A diagonally pre-scaled system: matrix has unit diagonal, rhs is the
/// scaled right-hand side, and scale holds the d_ii^{-1/2} factors mapping
/// scaled solutions back to the original variables.
struct ScaledSystem {
    SparseMatrix matrix;
    Vector rhs;
    Vector scale;

    /// Maps a solution of the scaled system back to original variables.
    Vector unscale(const Vector& scaled_solution) const
    {
        return scale.cwiseProduct(scaled_solution);
    }
};

/// Symmetric diagonal scaling: a_ij -> a_ij / sqrt(a_ii a_jj),
/// b_i -> b_i / sqrt(a_ii). The scaled diagonal is exactly 1, so the
/// transformation is idempotent. Symmetry of the input is preserved.
ScaledSystem jacobi_scale(const SparseMatrix& a, const Vector& b);

} // namespace relaxo

#endif
