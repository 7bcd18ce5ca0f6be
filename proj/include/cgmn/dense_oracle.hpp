#pragma once

#include <Eigen/Dense>
#include <vector>

#include "cgmn/sparse_row_matrix.hpp"
#include "cgmn/sweeps.hpp"

namespace cgmn::oracle {

/// Dense ground-truth matrices for small systems. Exists for testing and the
/// `verify` subcommand, not production: assembly is O(N^3) and the dimension
/// is capped at 64 by contract.
constexpr int kMaxOracleDimension = 64;

struct DenseOracleSet {
    Eigen::MatrixXd normal_matrix;       // A A^T
    Eigen::MatrixXd diag;                // D
    Eigen::MatrixXd lower;               // strictly lower L
    Eigen::MatrixXd iteration;           // G
    Eigen::MatrixXd solve;               // H
    Eigen::MatrixXd kaczmarz_iteration;  // Q
    Eigen::MatrixXd kaczmarz_rhs;        // R
};

Eigen::MatrixXd to_dense(const SparseRowMatrix& A);

/// Splitting A A^T = D + L + L^T into diagonal and strictly lower parts.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> build_normal_splitting(const Eigen::MatrixXd& A);

/// SSOR iteration and solve matrices
///   G = (D+wL^T)^-1 ((1-w)D - wL) (D+wL)^-1 ((1-w)D - wL^T),
///   H = w(2-w) (D+wL^T)^-1 D (D+wL)^-1,
/// assembled with triangular substitution solves, never explicit inverses.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> build_ssor_matrices(const Eigen::MatrixXd& D,
                                                                const Eigen::MatrixXd& L,
                                                                double omega);

/// Dense Q and R as the explicit product of rank-1 projection factors in
/// forward-then-backward order (turnaround row twice), so that one double
/// sweep maps u to Q u + R s. Supports per-row omega.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> build_dense_QR(const Eigen::MatrixXd& A,
                                                           const std::vector<double>& omega);

/// Dense Q and R assembled column-by-column by running the actual sweep on
/// unit vectors; the independent route against build_dense_QR.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> sweep_assembled_QR(const SparseRowMatrix& A,
                                                               const SweepPlan& plan);

DenseOracleSet build_oracle_set(const Eigen::MatrixXd& A, double omega);

/// Max-entry deviations of the four SSOR/Kaczmarz identities, each relative
/// to the max-entry magnitude of its reference side.
struct IdentityDeviations {
    double g_vs_h;         // G = I - H A A^T
    double q_vs_h;         // Q = I - A^T H A
    double intertwining;   // Q A^T = A^T G
    double rhs_relation;   // R = A^T H
    double max() const;
};

IdentityDeviations identity_deviations(const Eigen::MatrixXd& A, double omega);

/// Richardson propagation check: runs the sweep iteration from a seeded
/// random start and measures the per-step deviation of e_{k+1} = Q e_k and
/// A e_{k+1} = G^T (A e_k) against the dense matrices. Scalar omega only;
/// the G/H formulas are not stated for per-row omega.
struct PropagationReport {
    int steps = 0;
    double max_error_deviation = 0.0;
    double max_residual_deviation = 0.0;
    std::vector<double> residual_norms;
};

PropagationReport verify_propagation(const SparseRowMatrix& A, const std::vector<double>& rhs,
                                     double omega, int steps, unsigned long long seed = 1234);

/// Eigenvalues of a symmetric matrix, ascending.
Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& M);

/// Dense LU reference solve (complex-capable via real/imag parts is not
/// needed: tests that use it work on real data).
Eigen::VectorXd lu_solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& b);

/// Periodized symbol oracle: the 1D operator made circulant together with the
/// *cyclic* diagonal/lower splitting of A A^T, from which Q = I - A^T H A is
/// assembled. Its spectrum equals the amplitude samples {a(2 pi j / n)}
/// exactly, which pins the factorization behind the amplitude function to a
/// matrix construction.
Eigen::MatrixXd build_periodized_Q(int n, double points_per_wavelength, double omega);

}  // namespace cgmn::oracle
