#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgmn/helmholtz.hpp"
#include "cgmn/scalar.hpp"
#include "cgmn/sweeps.hpp"

namespace cgmn {

/// Which residual the stopping tolerance applies to. The natural residual of
/// CGMN is that of the preconditioned system (I-Q)u = Rs; the true residual
/// ||s - Au||/||s|| is available for callers that need a solution-accuracy
/// guarantee on the original system.
enum class StopOn { PreconditionedResidual, TrueResidual };

struct SolverConfig {
    double tolerance = 1e-6;  // relative residual
    int max_iterations = 0;   // 0 means 10 * N
    bool record_true_residual = false;
    StopOn stop_on = StopOn::PreconditionedResidual;

    void validate() const {
        if (!(tolerance > 0.0 && tolerance < 1.0))
            throw std::invalid_argument("tolerance must lie in (0, 1)");
        if (max_iterations < 0) throw std::invalid_argument("max_iterations must be nonnegative");
    }
};

enum class SolveStatus { Converged, MaxIterations, Breakdown };

struct ConvergenceHistory {
    std::vector<double> preconditioned_residuals;  // length iterations + 1
    std::vector<double> true_residuals;            // empty unless recorded
    int iterations = 0;
    bool converged = false;
    SolveStatus status = SolveStatus::MaxIterations;
};

namespace detail {

template <typename Scalar>
double true_residual_norm(const SparseRowMatrix& A, const std::vector<Scalar>& rhs,
                          const std::vector<Scalar>& u, std::vector<Scalar>& scratch) {
    A.multiply(u, scratch);
    double acc = 0.0;
    for (std::size_t j = 0; j < rhs.size(); ++j)
        acc += scalar_traits<Scalar>::abs2(rhs[j] - scratch[j]);
    return std::sqrt(acc);
}

}  // namespace detail

/// Conjugate gradients on the symmetric positive semi-definite system
/// (I - Q) u = R s built from the symmetric Kaczmarz double sweep. The
/// operator is real-symmetric, hence self-adjoint on complex vectors with the
/// conjugated inner product; no re-symmetrization is needed.
template <typename Scalar>
std::pair<std::vector<Scalar>, ConvergenceHistory> cgmn_solve(
    const HelmholtzProblem<Scalar>& problem, const SweepPlan& plan, const SolverConfig& config,
    std::vector<Scalar> initial_guess = {}) {
    config.validate();
    const SparseRowMatrix& A = problem.matrix;
    const int n = A.dimension();
    if (plan.size() != n) throw std::invalid_argument("plan does not match problem dimension");
    std::vector<Scalar> u = initial_guess.empty()
                                ? std::vector<Scalar>(static_cast<std::size_t>(n), Scalar{})
                                : std::move(initial_guess);
    if (static_cast<int>(u.size()) != n)
        throw std::invalid_argument("initial guess does not match problem dimension");
    const int max_iter = config.max_iterations > 0 ? config.max_iterations : 10 * n;

    const std::vector<Scalar> b = apply_R(problem.rhs, A, plan);
    const double b_norm = norm2(b);
    const double s_norm = norm2(problem.rhs);

    ConvergenceHistory history;
    std::vector<Scalar> scratch(static_cast<std::size_t>(n));

    std::vector<Scalar> r(static_cast<std::size_t>(n));
    {
        std::vector<Scalar> op_u = apply_I_minus_Q(u, A, plan);
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = b[j] - op_u[j];
    }
    double rho = norm2_sq(r);
    history.preconditioned_residuals.push_back(std::sqrt(rho));

    const bool track_true = config.record_true_residual || config.stop_on == StopOn::TrueResidual;
    double true_res = track_true ? detail::true_residual_norm(A, problem.rhs, u, scratch) : 0.0;
    if (track_true) history.true_residuals.push_back(true_res);

    // Relative-residual scales; a zero reference norm falls back to the
    // initial residual so the criterion stays meaningful for zero data.
    const double prec_scale = b_norm > 0.0 ? b_norm : history.preconditioned_residuals.front();
    const double true_scale = s_norm > 0.0 ? s_norm : (track_true ? true_res : 1.0);

    auto stop_value = [&]() {
        if (config.stop_on == StopOn::TrueResidual)
            return true_scale > 0.0 ? true_res / true_scale : 0.0;
        return prec_scale > 0.0 ? history.preconditioned_residuals.back() / prec_scale : 0.0;
    };

    std::vector<Scalar> p = r;
    std::vector<Scalar> w(static_cast<std::size_t>(n));
    int k = 0;
    history.status = SolveStatus::MaxIterations;
    while (true) {
        if (stop_value() <= config.tolerance) {
            history.status = SolveStatus::Converged;
            break;
        }
        if (k >= max_iter) break;
        w = apply_I_minus_Q(p, A, plan);
        const double curvature = scalar_traits<Scalar>::real(dot(p, w));
        if (std::abs(curvature) <= 1e-14 * norm2_sq(p)) {
            history.status = SolveStatus::Breakdown;
            break;
        }
        const double alpha = rho / curvature;
        for (std::size_t j = 0; j < u.size(); ++j) u[j] += p[j] * alpha;
        for (std::size_t j = 0; j < r.size(); ++j) r[j] -= w[j] * alpha;
        const double rho_next = norm2_sq(r);
        const double beta = rho_next / rho;
        for (std::size_t j = 0; j < p.size(); ++j) p[j] = r[j] + p[j] * beta;
        rho = rho_next;
        ++k;
        history.preconditioned_residuals.push_back(std::sqrt(rho));
        if (track_true) {
            true_res = detail::true_residual_norm(A, problem.rhs, u, scratch);
            history.true_residuals.push_back(true_res);
        }
    }
    history.iterations = k;
    history.converged = history.status == SolveStatus::Converged;
    return {std::move(u), std::move(history)};
}

/// Richardson iteration u <- Q u + R s on the preconditioned system. Used for
/// error-propagation studies, not production solving.
template <typename Scalar>
std::pair<std::vector<Scalar>, ConvergenceHistory> richardson_solve(
    const HelmholtzProblem<Scalar>& problem, const SweepPlan& plan, const SolverConfig& config,
    std::vector<Scalar> initial_guess = {}) {
    config.validate();
    const SparseRowMatrix& A = problem.matrix;
    const int n = A.dimension();
    std::vector<Scalar> u = initial_guess.empty()
                                ? std::vector<Scalar>(static_cast<std::size_t>(n), Scalar{})
                                : std::move(initial_guess);
    if (static_cast<int>(u.size()) != n)
        throw std::invalid_argument("initial guess does not match problem dimension");
    const int max_iter = config.max_iterations > 0 ? config.max_iterations : 10 * n;

    ConvergenceHistory history;
    std::vector<Scalar> scratch(static_cast<std::size_t>(n));
    const bool track_true = config.record_true_residual || config.stop_on == StopOn::TrueResidual;

    // The preconditioned residual of the current iterate is the step the next
    // sweep would take: r_k = (Q u_k + R s) - u_k.
    std::vector<Scalar> next = u;
    double_sweep(next, A, problem.rhs, plan);
    auto step_norm = [](const std::vector<Scalar>& a, const std::vector<Scalar>& bvec) {
        double acc = 0.0;
        for (std::size_t j = 0; j < a.size(); ++j)
            acc += scalar_traits<Scalar>::abs2(a[j] - bvec[j]);
        return std::sqrt(acc);
    };
    double res = step_norm(next, u);
    history.preconditioned_residuals.push_back(res);
    double true_res = track_true ? detail::true_residual_norm(A, problem.rhs, u, scratch) : 0.0;
    if (track_true) history.true_residuals.push_back(true_res);

    const std::vector<Scalar> b = apply_R(problem.rhs, A, plan);
    const double b_norm = norm2(b);
    const double s_norm = norm2(problem.rhs);
    const double prec_scale = b_norm > 0.0 ? b_norm : res;
    const double true_scale = s_norm > 0.0 ? s_norm : true_res;

    auto stop_value = [&]() {
        if (config.stop_on == StopOn::TrueResidual)
            return true_scale > 0.0 ? true_res / true_scale : 0.0;
        return prec_scale > 0.0 ? history.preconditioned_residuals.back() / prec_scale : 0.0;
    };

    int k = 0;
    history.status = SolveStatus::MaxIterations;
    while (true) {
        if (stop_value() <= config.tolerance) {
            history.status = SolveStatus::Converged;
            break;
        }
        if (k >= max_iter) break;
        u = next;
        double_sweep(next, A, problem.rhs, plan);
        res = step_norm(next, u);
        ++k;
        history.preconditioned_residuals.push_back(res);
        if (track_true) {
            true_res = detail::true_residual_norm(A, problem.rhs, u, scratch);
            history.true_residuals.push_back(true_res);
        }
    }
    history.iterations = k;
    history.converged = history.status == SolveStatus::Converged;
    return {std::move(u), std::move(history)};
}

}  // namespace cgmn
