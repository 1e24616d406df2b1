#include "relaxo/solver.hpp"

#include <cmath>
#include <string>

namespace relaxo {

Method method_from_name(std::string_view name)
{
    if (name == "fixed-sor") {
        return Method::FixedSor;
    }
    if (name == "adaptive-sd") {
        return Method::AdaptiveSd;
    }
    if (name == "adaptive-armijo") {
        return Method::AdaptiveArmijo;
    }
    if (name == "adaptive-wolfe") {
        return Method::AdaptiveWolfe;
    }
    throw std::invalid_argument("unknown method: " + std::string(name));
}

std::string_view method_name(Method method)
{
    switch (method) {
    case Method::FixedSor:
        return "fixed-sor";
    case Method::AdaptiveSd:
        return "adaptive-sd";
    case Method::AdaptiveArmijo:
        return "adaptive-armijo";
    case Method::AdaptiveWolfe:
        return "adaptive-wolfe";
    }
    throw std::invalid_argument("unknown method enum value");
}

void SolverConfig::validate() const
{
    if (method == Method::FixedSor && !(omega > 0.0 && omega < 2.0)) {
        throw std::invalid_argument("SolverConfig: omega must lie in (0, 2)");
    }
    if (!(0.0 < c1 && c1 < c2 && c2 < 1.0)) {
        throw std::invalid_argument("SolverConfig: need 0 < c1 < c2 < 1");
    }
    if (!(1.0 < lambda1 && lambda1 < lambda2)) {
        throw std::invalid_argument("SolverConfig: need 1 < lambda1 < lambda2");
    }
    if (!(0.0 < rho1 && rho1 < 1.0)) {
        throw std::invalid_argument("SolverConfig: need 0 < rho1 < 1");
    }
    if (!(0.0 < eps_omega && eps_omega < 1.0 && 1.0 < max_omega && max_omega < 2.0)) {
        throw std::invalid_argument("SolverConfig: need 0 < eps_omega < 1 < max_omega < 2");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("SolverConfig: tol must be positive");
    }
    if (max_iter < 1) {
        throw std::invalid_argument("SolverConfig: max_iter must be at least 1");
    }
    if (update_stride < 1) {
        throw std::invalid_argument("SolverConfig: update_stride must be at least 1");
    }
}

Vector sor_sweep(const SparseMatrix& a, const Vector& b, const Vector& x, double omega)
{
    if (!(omega > 0.0 && omega < 2.0)) {
        throw std::invalid_argument("sor_sweep: omega must lie in (0, 2)");
    }
    const Index n = a.rows();
    if (b.size() != n || x.size() != n) {
        throw std::invalid_argument("sor_sweep: dimension mismatch");
    }
    const auto row_ptr = a.row_ptr();
    const auto col_idx = a.col_idx();
    const auto values = a.values();

    Vector next = x;
    for (Index i = 0; i < n; ++i) {
        double sum = 0.0;
        double diag = 1.0;
        for (Index k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
            const Index j = col_idx[k];
            if (j == i) {
                diag = values[k];
            } else {
                // next[j] already holds x'_j for j < i and x_j for j > i
                sum += values[k] * next[j];
            }
        }
        next[i] = (1.0 - omega) * x[i] + omega * (b[i] - sum) / diag;
    }
    return next;
}

double omega_from_h(double h)
{
    if (!(h > 0.0)) {
        throw std::invalid_argument("omega_from_h: h must be positive");
    }
    return 2.0 * h / (2.0 + h);
}

double h_from_omega(double omega)
{
    if (!(omega > 0.0 && omega < 2.0)) {
        throw std::invalid_argument("h_from_omega: omega must lie in (0, 2)");
    }
    return 2.0 * omega / (2.0 - omega);
}

double steepest_step(const Vector& r, const Vector& ar)
{
    const double denom = dot(r, ar);
    if (!(denom > 0.0)) {
        throw std::invalid_argument("steepest_step: r'Ar must be positive (r nonzero, A SPD)");
    }
    return r.squaredNorm() / denom;
}

double objective_from_residual(const Vector& x, const Vector& r, const Vector& b)
{
    if (x.size() != r.size() || x.size() != b.size()) {
        throw std::invalid_argument("objective_from_residual: dimension mismatch");
    }
    return -0.5 * x.dot(r + b);
}

bool armijo_holds(double f_next, double f_curr, double g_dot_dx, double c1)
{
    return f_next <= f_curr + c1 * g_dot_dx;
}

bool curvature_holds(double g_curr_dot_dx, double g_next_dot_dx, double c2)
{
    return c2 * g_curr_dot_dx <= g_next_dot_dx;
}

StepUpdate next_step_size(double h, bool armijo_ok, bool curvature_ok,
                          const SolverConfig& cfg)
{
    if (cfg.method != Method::AdaptiveArmijo && cfg.method != Method::AdaptiveWolfe) {
        throw std::invalid_argument("next_step_size: method has no step-size recurrence");
    }
    double next = h;
    if (armijo_ok) {
        if (cfg.method == Method::AdaptiveWolfe && !curvature_ok) {
            next *= cfg.lambda2; // step deemed too small, grow faster
        } else {
            next *= cfg.lambda1;
        }
    } else {
        next *= cfg.rho1;
    }
    double omega = omega_from_h(next);
    const bool reset = !(omega > cfg.eps_omega && omega < cfg.max_omega);
    if (reset) {
        next = 2.0;
        omega = 1.0;
    }
    return {next, omega, reset};
}

namespace {

void check_finite(const Vector& x, const Vector& r, long k)
{
    if (!x.allFinite() || !r.allFinite()) {
        throw std::runtime_error("solve: non-finite value at iteration " + std::to_string(k));
    }
}

} // namespace

SolveReport solve(const SparseMatrix& a, const Vector& b, const SolverConfig& cfg)
{
    cfg.validate();
    const Index n = a.rows();
    if (b.size() != n) {
        throw std::invalid_argument("solve: right-hand side dimension mismatch");
    }
    if (!b.allFinite()) {
        throw std::invalid_argument("solve: right-hand side is not finite");
    }
    if (cfg.x0.size() != 0 && cfg.x0.size() != n) {
        throw std::invalid_argument("solve: initial guess dimension mismatch");
    }

    const ScaledSystem sys = jacobi_scale(a, b);
    const SparseMatrix& sa = sys.matrix;
    const Vector& sb = sys.rhs;

    Vector x = cfg.x0.size() == 0 ? Vector(Vector::Zero(n))
                                  : Vector(cfg.x0.cwiseQuotient(sys.scale));

    MatvecCounter mv;
    Vector r = sb - matvec(sa, x, &mv);
    check_finite(x, r, 0);

    const double b_norm = norm2(sb);
    const double res_scale = b_norm > 0.0 ? b_norm : 1.0;

    double h = 2.0;
    double omega = 1.0;
    if (cfg.method == Method::FixedSor) {
        omega = cfg.omega;
        h = h_from_omega(omega);
    }

    SolveReport report;
    report.trace.reserve(64);

    long k = 0;
    for (;;) {
        const double rel_residual = norm2(r) / res_scale;
        const double f = objective_from_residual(x, r, sb);
        const bool converged = rel_residual <= cfg.tol;
        const bool capped = k >= cfg.max_iter;

        if (cfg.method == Method::AdaptiveSd && !converged && !capped &&
            k % cfg.update_stride == 0) {
            const Vector ar = matvec(sa, r, &mv);
            h = steepest_step(r, ar);
            omega = omega_from_h(h);
        }

        report.trace.push_back({k, omega, h, rel_residual, f, mv.count});

        if (converged || capped) {
            report.converged = converged;
            break;
        }

        Vector x_next = sor_sweep(sa, sb, x, omega);
        Vector r_next = sb - matvec(sa, x_next, &mv);
        check_finite(x_next, r_next, k + 1);

        if ((cfg.method == Method::AdaptiveArmijo || cfg.method == Method::AdaptiveWolfe) &&
            (k + 1) % cfg.update_stride == 0) {
            const double f_next = objective_from_residual(x_next, r_next, sb);
            const Vector dx = x_next - x;
            const double g_dot_dx = -r.dot(dx); // grad f(x) = -r
            const bool armijo_ok = armijo_holds(f_next, f, g_dot_dx, cfg.c1);
            const bool curvature_ok =
                cfg.method == Method::AdaptiveWolfe && armijo_ok
                    ? curvature_holds(g_dot_dx, -r_next.dot(dx), cfg.c2)
                    : false;
            const StepUpdate update = next_step_size(h, armijo_ok, curvature_ok, cfg);
            h = update.h;
            omega = update.omega;
        }

        x = std::move(x_next);
        r = std::move(r_next);
        ++k;
    }

    report.iterations = k;
    report.solution = sys.unscale(x);
    return report;
}

std::vector<OmegaSweepEntry> omega_sweep(const SparseMatrix& a, const Vector& b,
                                         std::span<const double> grid,
                                         const SolverConfig& base)
{
    std::vector<OmegaSweepEntry> table;
    table.reserve(grid.size());
    for (const double omega : grid) {
        SolverConfig cfg = base;
        cfg.method = Method::FixedSor;
        cfg.omega = omega;
        const SolveReport report = solve(a, b, cfg);
        table.push_back({omega, report.iterations, report.converged});
    }
    return table;
}

} // namespace relaxo
