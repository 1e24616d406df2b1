#ifndef RELAXO_PROBLEMS_HPP
#define RELAXO_PROBLEMS_HPP

#include <cstdint>

#include "relaxo/sparse_matrix.hpp"

namespace relaxo {

/// Uniform N x N mesh on the unit square with homogeneous Dirichlet
/// boundary; (N-1)^2 interior unknowns on a grid of width 1/N.
struct PoissonSpec {
    int N;

    double dx() const { return 1.0 / N; }
    Index unknowns() const { return static_cast<Index>(N - 1) * (N - 1); }
};

/// Five-point finite-difference Laplacian on PoissonSpec{N}, SPD orientation:
/// diagonal 4/dx^2, off-diagonal -1/dx^2. Interior points are ordered
/// row-major with the x index fastest. Requires N >= 2.
SparseMatrix poisson_matrix(int N);

/// sin(pi x) sin(pi y) sampled at the interior grid points, same ordering.
Vector poisson_rhs(int N);

/// The relaxation parameter minimising the SOR spectral radius for the
/// five-point Laplacian: 2 / (1 + sqrt(1 - cos^2(pi / (N + 1)))).
double omega_opt(int N);

/// The all-ones right-hand side.
Vector ones_rhs(Index n);

/// Dense-pattern random SPD matrix with eigenvalues drawn uniformly from
/// [lambda_min, lambda_max], built as Q diag(lambda) Q' for a random
/// orthogonal Q and symmetrised exactly. Deterministic per seed.
SparseMatrix random_spd_matrix(Index n, std::uint64_t seed, double lambda_min = 0.1,
                               double lambda_max = 1.9);

} // namespace relaxo

#endif
