#include "cgmn/dense_oracle.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cgmn::oracle {

namespace {

void check_dimension(Eigen::Index n) {
    if (n < 1 || n > kMaxOracleDimension)
        throw std::invalid_argument("dense oracle is restricted to 1 <= N <= 64");
}

double max_abs(const Eigen::MatrixXd& M) { return M.cwiseAbs().maxCoeff(); }

double rel_dev(const Eigen::MatrixXd& lhs, const Eigen::MatrixXd& rhs) {
    const double scale = std::max(max_abs(rhs), 1e-300);
    return max_abs(lhs - rhs) / scale;
}

// Portable deterministic uniforms in [-1, 1); keeps oracle runs bit-stable
// across platforms (std::uniform_real_distribution is not).
struct SplitMix64 {
    unsigned long long state;
    double next() {
        state += 0x9e3779b97f4a7c15ULL;
        unsigned long long z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return 2.0 * static_cast<double>(z >> 11) * 0x1.0p-53 - 1.0;
    }
};

}  // namespace

Eigen::MatrixXd to_dense(const SparseRowMatrix& A) {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(A.dimension(), A.dimension());
    for (int i = 0; i < A.dimension(); ++i)
        for (const auto& e : A.row(i)) M(i, e.col) = e.value;
    return M;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> build_normal_splitting(const Eigen::MatrixXd& A) {
    check_dimension(A.rows());
    if (A.rows() != A.cols()) throw std::invalid_argument("matrix must be square");
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        if (A.row(i).squaredNorm() <= 0.0) throw std::invalid_argument("matrix has a zero row");
    const Eigen::MatrixXd B = A * A.transpose();
    Eigen::MatrixXd D = B.diagonal().asDiagonal();
    Eigen::MatrixXd L = B.triangularView<Eigen::StrictlyLower>();
    return {std::move(D), std::move(L)};
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> build_ssor_matrices(const Eigen::MatrixXd& D,
                                                                const Eigen::MatrixXd& L,
                                                                double omega) {
    if (!(omega > 0.0 && omega < 2.0)) throw std::invalid_argument("omega must lie in (0, 2)");
    for (Eigen::Index i = 0; i < D.rows(); ++i)
        if (D(i, i) <= 0.0) throw std::invalid_argument("diagonal factor is singular");
    const Eigen::MatrixXd forward = D + omega * L;              // lower triangular
    const Eigen::MatrixXd backward = D + omega * L.transpose(); // upper triangular
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(D.rows(), D.cols());

    // G = backward^-1 ((1-w)D - wL) forward^-1 ((1-w)D - wL^T)
    Eigen::MatrixXd inner =
        forward.triangularView<Eigen::Lower>().solve((1.0 - omega) * D - omega * L.transpose());
    Eigen::MatrixXd G = backward.triangularView<Eigen::Upper>().solve(
        Eigen::MatrixXd(((1.0 - omega) * D - omega * L) * inner));

    // H = w(2-w) backward^-1 D forward^-1; the right division is a transposed
    // forward substitution.
    Eigen::MatrixXd M = backward.triangularView<Eigen::Upper>().solve(D);
    Eigen::MatrixXd Ht = forward.transpose().triangularView<Eigen::Upper>().solve(
        Eigen::MatrixXd(omega * (2.0 - omega) * M.transpose()));
    return {std::move(G), Eigen::MatrixXd(Ht.transpose())};
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> build_dense_QR(const Eigen::MatrixXd& A,
                                                           const std::vector<double>& omega) {
    check_dimension(A.rows());
    const Eigen::Index n = A.rows();
    if (static_cast<Eigen::Index>(omega.size()) != n)
        throw std::invalid_argument("omega vector does not match dimension");
    for (double w : omega)
        if (!(w > 0.0 && w < 2.0)) throw std::invalid_argument("omega must lie in (0, 2)");
    Eigen::MatrixXd Q = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(n, n);
    auto project = [&](Eigen::Index i) {
        const Eigen::VectorXd a = A.row(i).transpose();
        const double scale = omega[static_cast<std::size_t>(i)] / a.squaredNorm();
        // Q <- Q_i Q, R <- Q_i R + scale a e_i^T
        Q.noalias() -= scale * a * (a.transpose() * Q);
        R.noalias() -= scale * a * (a.transpose() * R);
        R.col(i) += scale * a;
    };
    for (Eigen::Index i = 0; i < n; ++i) project(i);
    for (Eigen::Index i = n - 1; i >= 0; --i) project(i);
    return {std::move(Q), std::move(R)};
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> sweep_assembled_QR(const SparseRowMatrix& A,
                                                               const SweepPlan& plan) {
    check_dimension(A.dimension());
    const int n = A.dimension();
    Eigen::MatrixXd Q(n, n), R(n, n);
    std::vector<double> unit(static_cast<std::size_t>(n), 0.0);
    const std::vector<double> zero(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) {
        unit.assign(static_cast<std::size_t>(n), 0.0);
        unit[static_cast<std::size_t>(j)] = 1.0;
        std::vector<double> qcol = unit;
        double_sweep(qcol, A, zero, plan);
        std::vector<double> rcol(static_cast<std::size_t>(n), 0.0);
        double_sweep(rcol, A, unit, plan);
        for (int i = 0; i < n; ++i) {
            Q(i, j) = qcol[static_cast<std::size_t>(i)];
            R(i, j) = rcol[static_cast<std::size_t>(i)];
        }
    }
    return {Q, R};
}

DenseOracleSet build_oracle_set(const Eigen::MatrixXd& A, double omega) {
    auto [D, L] = build_normal_splitting(A);
    auto [G, H] = build_ssor_matrices(D, L, omega);
    auto [Q, R] = build_dense_QR(A, std::vector<double>(static_cast<std::size_t>(A.rows()), omega));
    return {A * A.transpose(), std::move(D), std::move(L), std::move(G),
            std::move(H), std::move(Q), std::move(R)};
}

double IdentityDeviations::max() const {
    return std::max(std::max(g_vs_h, q_vs_h), std::max(intertwining, rhs_relation));
}

IdentityDeviations identity_deviations(const Eigen::MatrixXd& A, double omega) {
    const DenseOracleSet set = build_oracle_set(A, omega);
    const Eigen::Index n = A.rows();
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
    IdentityDeviations dev;
    dev.g_vs_h = rel_dev(set.iteration, I - set.solve * set.normal_matrix);
    dev.q_vs_h = rel_dev(set.kaczmarz_iteration, I - A.transpose() * set.solve * A);
    dev.intertwining = rel_dev(set.kaczmarz_iteration * A.transpose(), A.transpose() * set.iteration);
    dev.rhs_relation = rel_dev(set.kaczmarz_rhs, A.transpose() * set.solve);
    return dev;
}

PropagationReport verify_propagation(const SparseRowMatrix& A, const std::vector<double>& rhs,
                                     double omega, int steps, unsigned long long seed) {
    check_dimension(A.dimension());
    const int n = A.dimension();
    const Eigen::MatrixXd Ad = to_dense(A);
    const DenseOracleSet set = build_oracle_set(Ad, omega);
    const Eigen::VectorXd s = Eigen::Map<const Eigen::VectorXd>(rhs.data(), n);
    const Eigen::VectorXd exact = lu_solve(Ad, s);

    SplitMix64 gen{seed};
    std::vector<double> u(static_cast<std::size_t>(n));
    for (double& v : u) v = gen.next();

    const SweepPlan plan = SweepPlan::uniform(n, omega);
    PropagationReport report;
    report.steps = steps;
    Eigen::VectorXd e_k = Eigen::Map<const Eigen::VectorXd>(u.data(), n) - exact;
    report.residual_norms.push_back((Ad * e_k).norm());
    for (int step = 0; step < steps; ++step) {
        double_sweep(u, A, rhs, plan);
        const Eigen::VectorXd e_next = Eigen::Map<const Eigen::VectorXd>(u.data(), n) - exact;
        const Eigen::VectorXd r_k = Ad * e_k;
        const Eigen::VectorXd r_next = Ad * e_next;
        const double e_scale = std::max(e_k.cwiseAbs().maxCoeff(), 1e-300);
        const double r_scale = std::max(r_k.cwiseAbs().maxCoeff(), 1e-300);
        report.max_error_deviation = std::max(
            report.max_error_deviation,
            (e_next - set.kaczmarz_iteration * e_k).cwiseAbs().maxCoeff() / e_scale);
        report.max_residual_deviation =
            std::max(report.max_residual_deviation,
                     (r_next - set.iteration.transpose() * r_k).cwiseAbs().maxCoeff() / r_scale);
        report.residual_norms.push_back(r_next.norm());
        e_k = e_next;
    }
    return report;
}

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& M) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
    return solver.eigenvalues();
}

Eigen::VectorXd lu_solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
    return A.partialPivLu().solve(b);
}

Eigen::MatrixXd build_periodized_Q(int n, double points_per_wavelength, double omega) {
    check_dimension(n);
    if (!(omega > 0.0 && omega < 2.0)) throw std::invalid_argument("omega must lie in (0, 2)");
    const double h = 1.0 / n;
    const double k = 2.0 * std::numbers::pi / (points_per_wavelength * h);
    const double gamma = k * k - 2.0 / (h * h);
    const double h2inv = 1.0 / (h * h);
    const double beta = gamma * gamma + 2.0 * h2inv * h2inv;

    auto circulant = [n](auto first_col) {
        Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) C(i, j) = first_col(((i - j) % n + n) % n);
        return C;
    };
    const Eigen::MatrixXd A = circulant([&](int d) {
        if (d == 0) return gamma;
        if (d == 1 || d == n - 1) return h2inv;
        return 0.0;
    });
    // Cyclic lower part of A A^T: offsets 1 and 2 wrap around.
    const Eigen::MatrixXd L = circulant([&](int d) {
        if (d == 1) return 2.0 * gamma * h2inv;
        if (d == 2) return h2inv * h2inv;
        return 0.0;
    });
    const Eigen::MatrixXd D = beta * Eigen::MatrixXd::Identity(n, n);
    // Circulant factors are well-conditioned here; direct solves are fine.
    const Eigen::MatrixXd H = omega * (2.0 - omega) *
                              (D + omega * L.transpose()).partialPivLu().solve(
                                  Eigen::MatrixXd(D * (D + omega * L).inverse()));
    return Eigen::MatrixXd::Identity(n, n) - A.transpose() * H * A;
}

}  // namespace cgmn::oracle
