#include "relaxo/problems.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

namespace relaxo {

SparseMatrix poisson_matrix(int N)
{
    if (N < 2) {
        throw std::invalid_argument("poisson_matrix: N must be at least 2");
    }
    const Index m = N - 1;
    const double inv_dx2 = static_cast<double>(N) * static_cast<double>(N);

    std::vector<Triplet> entries;
    entries.reserve(static_cast<std::size_t>(5 * m * m));
    const auto idx = [m](Index jx, Index ky) { return ky * m + jx; };
    for (Index ky = 0; ky < m; ++ky) {
        for (Index jx = 0; jx < m; ++jx) {
            const Index i = idx(jx, ky);
            entries.push_back({i, i, 4.0 * inv_dx2});
            if (jx > 0) {
                entries.push_back({i, idx(jx - 1, ky), -inv_dx2});
            }
            if (jx < m - 1) {
                entries.push_back({i, idx(jx + 1, ky), -inv_dx2});
            }
            if (ky > 0) {
                entries.push_back({i, idx(jx, ky - 1), -inv_dx2});
            }
            if (ky < m - 1) {
                entries.push_back({i, idx(jx, ky + 1), -inv_dx2});
            }
        }
    }
    return SparseMatrix::from_triplets(m * m, std::move(entries));
}

Vector poisson_rhs(int N)
{
    if (N < 2) {
        throw std::invalid_argument("poisson_rhs: N must be at least 2");
    }
    const Index m = N - 1;
    const double dx = 1.0 / N;
    Vector b(m * m);
    for (Index ky = 0; ky < m; ++ky) {
        for (Index jx = 0; jx < m; ++jx) {
            const double x = (jx + 1) * dx;
            const double y = (ky + 1) * dx;
            b[ky * m + jx] = std::sin(std::numbers::pi * x) * std::sin(std::numbers::pi * y);
        }
    }
    return b;
}

double omega_opt(int N)
{
    if (N < 2) {
        throw std::invalid_argument("omega_opt: N must be at least 2");
    }
    const double h = 1.0 / (N + 1);
    const double c = std::cos(std::numbers::pi * h);
    return 2.0 / (1.0 + std::sqrt(1.0 - c * c));
}

Vector ones_rhs(Index n)
{
    if (n < 1) {
        throw std::invalid_argument("ones_rhs: n must be at least 1");
    }
    return Vector::Ones(n);
}

SparseMatrix random_spd_matrix(Index n, std::uint64_t seed, double lambda_min,
                               double lambda_max)
{
    if (n < 1) {
        throw std::invalid_argument("random_spd_matrix: n must be at least 1");
    }
    if (!(0.0 < lambda_min && lambda_min <= lambda_max)) {
        throw std::invalid_argument("random_spd_matrix: need 0 < lambda_min <= lambda_max");
    }

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> uniform(lambda_min, lambda_max);

    Eigen::MatrixXd m(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            m(i, j) = gauss(rng);
        }
    }
    const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(m).householderQ();

    Vector lambda(n);
    for (Index i = 0; i < n; ++i) {
        lambda[i] = uniform(rng);
    }

    Eigen::MatrixXd dense = q * lambda.asDiagonal() * q.transpose();
    dense = 0.5 * (dense + dense.transpose()).eval(); // exact symmetry

    std::vector<Triplet> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            entries.push_back({i, j, dense(i, j)});
        }
    }
    return SparseMatrix::from_triplets(n, std::move(entries));
}

} // namespace relaxo
