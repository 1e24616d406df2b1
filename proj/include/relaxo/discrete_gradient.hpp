#ifndef RELAXO_DISCRETE_GRADIENT_HPP
#define RELAXO_DISCRETE_GRADIENT_HPP

#include <functional>

#include "relaxo/sparse_matrix.hpp"

namespace relaxo {

/// The strictly convex quadratic f(x) = x'Ax/2 - x'b attached to a
/// symmetric positive definite system A x = b. Its unique minimiser is the
/// solution of the system, and grad f(x) = Ax - b.
struct QuadraticObjective {
    SparseMatrix matrix;
    Vector rhs;

    double value(const Vector& x) const;
    Vector gradient(const Vector& x) const;

    /// i-th partial derivative, one sparse row product.
    double partial(const Vector& x, Index i) const;
};

/// Coordinate-wise difference-quotient approximation of the gradient:
/// component i is (f(x_1..x_i, y_{i+1}..y_n) - f(x_1..x_{i-1}, y_i..y_n))
/// divided by (x_i - y_i). Where |x_i - y_i| <= 1e-14 (1 + |x_i|) the
/// removable singularity is replaced by the analytic partial `df` at that
/// intermediate point. Satisfies f(x) - f(y) = g.(x - y) up to rounding.
Vector itoh_abe_dg_generic(const std::function<double(const Vector&)>& f,
                           const std::function<double(const Vector&, Index)>& df,
                           const Vector& x, const Vector& y);

/// Closed form of the same construction for a quadratic objective:
/// component i = sum_{j<i} a_ij x_j + a_ii (x_i + y_i)/2 + sum_{j>i} a_ij y_j - b_i.
/// No division, hence no special case at x_i = y_i.
Vector itoh_abe_dg_quadratic(const QuadraticObjective& q, const Vector& x, const Vector& y);

/// One step of the implicit update x' = x - h D^{-1} g(x', x) where g is the
/// quadratic-objective discrete gradient and D the diagonal of A. The i-th
/// equation is linear in x'_i given x'_1..x'_{i-1}, so a single forward
/// substitution solves the step exactly. Decreases f for every h > 0.
Vector dg_scheme_step(const QuadraticObjective& q, const Vector& x, double h);

/// Advances the SOR sweep and the implicit update with h = 2 omega/(2 - omega)
/// from the same x0 for `steps` iterations and returns the largest
/// componentwise deviation |u_i - v_i| / (1 + |u_i|) seen anywhere along the
/// two trajectories. The two iterations are algebraically identical, so the
/// result is rounding noise.
double verify_equivalence(const QuadraticObjective& q, const Vector& x0, double omega,
                          long steps);

} // namespace relaxo

#endif
