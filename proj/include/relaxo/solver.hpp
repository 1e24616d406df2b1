#ifndef RELAXO_SOLVER_HPP
#define RELAXO_SOLVER_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relaxo/scaling.hpp"
#include "relaxo/sparse_matrix.hpp"

namespace relaxo {

enum class Method {
    FixedSor,       // stationary SOR with a fixed relaxation parameter
    AdaptiveSd,     // step size from the locally optimal steepest-descent step
    AdaptiveArmijo, // step size grown/shrunk by the Armijo test
    AdaptiveWolfe,  // Armijo test plus curvature test
};

/// Accepts "fixed-sor", "adaptive-sd", "adaptive-armijo", "adaptive-wolfe".
Method method_from_name(std::string_view name);
std::string_view method_name(Method method);

struct SolverConfig {
    Method method = Method::FixedSor;

    /// Relaxation parameter, used by FixedSor only. Must lie in (0, 2).
    double omega = 1.0;

    // Line-search constants. The defaults perform well across symmetric
    // positive definite systems and are used unchanged in all benchmarks.
    double c1 = 0.89;      // sufficient-decrease constant, in (0, 1)
    double c2 = 0.95;      // curvature constant, in (c1, 1)
    double lambda1 = 1.15; // growth factor, > 1
    double lambda2 = 1.4;  // fast growth factor, > lambda1
    double rho1 = 0.85;    // shrink factor, in (0, 1)

    // Guard interval for the adaptive relaxation parameter. Leaving it means
    // resetting to (h, omega) = (2, 1).
    double eps_omega = 0.05;
    double max_omega = 1.995;

    double tol = 1e-12;     // relative-residual stopping tolerance
    long max_iter = 100000; // iteration cap

    /// Step-size update stride: the adaptive step-size rule runs every
    /// `update_stride`-th iteration (1 = every iteration).
    int update_stride = 1;

    /// Initial guess in original (unscaled) variables; empty means zero.
    Vector x0;

    /// Throws std::invalid_argument when any constraint is violated.
    void validate() const;
};

/// Per-iteration telemetry. `omega` and `h` are the values used for the
/// sweep leaving state k (for the final record, the values that would be
/// used next where the method defines them at no extra cost, else the last
/// used pair). They always satisfy omega = 2h/(2+h).
struct IterationRecord {
    long k;
    double omega;
    double h;
    double rel_residual; // ||b - A x^(k)||_2 / ||b||_2 in the scaled system
    double f_value;      // quadratic objective of the scaled system at x^(k)
    long long matvecs;   // cumulative matrix-vector products
};

struct SolveReport {
    bool converged = false;
    long iterations = 0;
    Vector solution; // original (unscaled) variables
    std::vector<IterationRecord> trace;
};

/// One forward SOR sweep: x'_i = (1-omega) x_i + omega (b_i - s_i) / a_ii
/// with s_i = sum_{j<i} a_ij x'_j + sum_{j>i} a_ij x_j, i ascending.
/// Mathematically equal to the matrix form G_omega x + c_omega; the
/// iteration matrix is never materialized. Requires omega in (0, 2).
Vector sor_sweep(const SparseMatrix& a, const Vector& b, const Vector& x, double omega);

/// omega = 2h / (2 + h), the strictly increasing bijection (0, inf) -> (0, 2).
double omega_from_h(double h);

/// h = 2 omega / (2 - omega), inverse of omega_from_h.
double h_from_omega(double omega);

/// Locally optimal steepest-descent step h = (r.r) / (r.Ar) for the
/// quadratic objective. The caller checks convergence first so r != 0.
double steepest_step(const Vector& r, const Vector& ar);

/// f(x) = x'Ax/2 - x'b evaluated without a matrix-vector product as
/// -x.(r + b)/2, valid when r is the exact residual b - Ax.
double objective_from_residual(const Vector& x, const Vector& r, const Vector& b);

/// Sufficient decrease: f_next <= f_curr + c1 * g_dot_dx, where g_dot_dx is
/// the true gradient at the current point dotted with the step taken.
bool armijo_holds(double f_next, double f_curr, double g_dot_dx, double c1);

/// Curvature: c2 * g_curr_dot_dx <= g_next_dot_dx.
bool curvature_holds(double g_curr_dot_dx, double g_next_dot_dx, double c2);

struct StepUpdate {
    double h;
    double omega;
    bool reset; // the guard interval was left and (h, omega) = (2, 1) applied
};

/// Step-size recurrence of the Armijo and Wolfe variants: grow by lambda1 on
/// success (lambda2 when the curvature test fails under AdaptiveWolfe),
/// shrink by rho1 on Armijo failure, then reset to (2, 1) whenever the
/// mapped omega falls outside (eps_omega, max_omega). `curvature_ok` is
/// ignored for AdaptiveArmijo. cfg.method must be one of the two.
StepUpdate next_step_size(double h, bool armijo_ok, bool curvature_ok,
                          const SolverConfig& cfg);

/// Runs the configured method on A x = b. The system is Jacobi-scaled
/// internally; the reported solution is in original variables while the
/// trace (residuals, objective values) describes the scaled system, which
/// is what the iteration operates on. Convergence is checked before each
/// sweep, so an already-converged initial guess performs zero sweeps.
/// Throws std::invalid_argument on bad input and std::runtime_error when an
/// iterate becomes non-finite.
SolveReport solve(const SparseMatrix& a, const Vector& b, const SolverConfig& cfg);

struct OmegaSweepEntry {
    double omega;
    long iterations; // max_iter marks non-convergence within the cap
    bool converged;
};

/// Runs FixedSor once per grid value and reports iteration counts.
/// Method and omega of `base` are ignored; tolerance and cap are honored.
std::vector<OmegaSweepEntry> omega_sweep(const SparseMatrix& a, const Vector& b,
                                         std::span<const double> grid,
                                         const SolverConfig& base = {});

} // namespace relaxo

#endif
