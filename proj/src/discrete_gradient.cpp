#include "relaxo/discrete_gradient.hpp"

#include <cmath>
#include <string>

#include "relaxo/solver.hpp"

namespace relaxo {

double QuadraticObjective::value(const Vector& x) const
{
    return 0.5 * x.dot(matvec(matrix, x)) - x.dot(rhs);
}

Vector QuadraticObjective::gradient(const Vector& x) const
{
    return matvec(matrix, x) - rhs;
}

double QuadraticObjective::partial(const Vector& x, Index i) const
{
    const auto row_ptr = matrix.row_ptr();
    const auto col_idx = matrix.col_idx();
    const auto values = matrix.values();
    double sum = 0.0;
    for (Index k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
        sum += values[k] * x[col_idx[k]];
    }
    return sum - rhs[i];
}

Vector itoh_abe_dg_generic(const std::function<double(const Vector&)>& f,
                           const std::function<double(const Vector&, Index)>& df,
                           const Vector& x, const Vector& y)
{
    if (x.size() != y.size()) {
        throw std::invalid_argument("itoh_abe_dg_generic: dimension mismatch");
    }
    const Index n = x.size();
    Vector g(n);
    Vector z = y; // walks from y to x one coordinate at a time
    double f_prev = f(z);
    if (!std::isfinite(f_prev)) {
        throw std::runtime_error("itoh_abe_dg_generic: non-finite objective value");
    }
    for (Index i = 0; i < n; ++i) {
        if (std::abs(x[i] - y[i]) <= 1e-14 * (1.0 + std::abs(x[i]))) {
            g[i] = df(z, i);
            z[i] = x[i];
            f_prev = f(z);
        } else {
            z[i] = x[i];
            const double f_curr = f(z);
            if (!std::isfinite(f_curr)) {
                throw std::runtime_error("itoh_abe_dg_generic: non-finite objective value");
            }
            g[i] = (f_curr - f_prev) / (x[i] - y[i]);
            f_prev = f_curr;
        }
    }
    return g;
}

Vector itoh_abe_dg_quadratic(const QuadraticObjective& q, const Vector& x, const Vector& y)
{
    const Index n = q.matrix.rows();
    if (x.size() != n || y.size() != n || q.rhs.size() != n) {
        throw std::invalid_argument("itoh_abe_dg_quadratic: dimension mismatch");
    }
    const auto row_ptr = q.matrix.row_ptr();
    const auto col_idx = q.matrix.col_idx();
    const auto values = q.matrix.values();

    Vector g(n);
    for (Index i = 0; i < n; ++i) {
        double sum = 0.0;
        for (Index k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
            const Index j = col_idx[k];
            if (j < i) {
                sum += values[k] * x[j];
            } else if (j > i) {
                sum += values[k] * y[j];
            } else {
                sum += values[k] * 0.5 * (x[i] + y[i]);
            }
        }
        g[i] = sum - q.rhs[i];
    }
    return g;
}

Vector dg_scheme_step(const QuadraticObjective& q, const Vector& x, double h)
{
    if (!(h > 0.0)) {
        throw std::invalid_argument("dg_scheme_step: h must be positive");
    }
    const Index n = q.matrix.rows();
    if (x.size() != n) {
        throw std::invalid_argument("dg_scheme_step: dimension mismatch");
    }
    const auto row_ptr = q.matrix.row_ptr();
    const auto col_idx = q.matrix.col_idx();
    const auto values = q.matrix.values();

    Vector next = x;
    for (Index i = 0; i < n; ++i) {
        double sum = 0.0;
        double diag = 1.0;
        for (Index k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
            const Index j = col_idx[k];
            if (j == i) {
                diag = values[k];
            } else {
                sum += values[k] * next[j];
            }
        }
        next[i] = (x[i] * (1.0 - 0.5 * h) - h * (sum - q.rhs[i]) / diag) / (1.0 + 0.5 * h);
    }
    return next;
}

double verify_equivalence(const QuadraticObjective& q, const Vector& x0, double omega,
                          long steps)
{
    if (!(omega > 0.0 && omega < 2.0)) {
        throw std::invalid_argument("verify_equivalence: omega must lie in (0, 2)");
    }
    if (steps < 0) {
        throw std::invalid_argument("verify_equivalence: steps must be non-negative");
    }
    const double h = h_from_omega(omega);
    Vector u = x0; // SOR trajectory
    Vector v = x0; // discrete-gradient trajectory
    double max_dev = 0.0;
    for (long s = 0; s < steps; ++s) {
        u = sor_sweep(q.matrix, q.rhs, u, omega);
        v = dg_scheme_step(q, v, h);
        for (Index i = 0; i < u.size(); ++i) {
            const double dev = std::abs(u[i] - v[i]) / (1.0 + std::abs(u[i]));
            max_dev = std::max(max_dev, dev);
        }
    }
    return max_dev;
}

} // namespace relaxo
