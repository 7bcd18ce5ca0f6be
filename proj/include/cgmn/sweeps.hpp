#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cgmn/scalar.hpp"
#include "cgmn/sparse_row_matrix.hpp"

namespace cgmn {

/// Row ordering and per-row relaxation factors for a symmetric Kaczmarz sweep.
/// omega is stored per row even when constant; spatially varying relaxation is
/// a first-class feature.
struct SweepPlan {
    std::vector<int> order;     // permutation of 0..N-1; forward pass order
    std::vector<double> omega;  // omega[i] belongs to ROW i, not to a position

    SweepPlan(std::vector<int> row_order, std::vector<double> per_row_omega)
        : order(std::move(row_order)), omega(std::move(per_row_omega)) {
        validate();
    }

    /// Natural order 0..N-1 with a constant relaxation factor.
    static SweepPlan uniform(int n, double w) {
        std::vector<int> ord(static_cast<std::size_t>(n));
        std::iota(ord.begin(), ord.end(), 0);
        return SweepPlan(std::move(ord), std::vector<double>(static_cast<std::size_t>(n), w));
    }

    /// Natural order with the given per-row factors.
    static SweepPlan per_row(std::vector<double> w) {
        std::vector<int> ord(w.size());
        std::iota(ord.begin(), ord.end(), 0);
        return SweepPlan(std::move(ord), std::move(w));
    }

    int size() const { return static_cast<int>(order.size()); }

    bool constant_omega() const {
        return std::all_of(omega.begin(), omega.end(),
                           [&](double w) { return w == omega.front(); });
    }

private:
    void validate() const {
        if (order.size() != omega.size())
            throw std::invalid_argument("order and omega must have the same length");
        if (order.empty()) throw std::invalid_argument("sweep plan must not be empty");
        for (double w : omega)
            if (!(w > 0.0 && w < 2.0))
                throw std::invalid_argument("relaxation factors must lie strictly in (0, 2)");
        std::vector<char> seen(order.size(), 0);
        for (int i : order) {
            if (i < 0 || static_cast<std::size_t>(i) >= order.size() || seen[static_cast<std::size_t>(i)])
                throw std::invalid_argument("order must be a permutation of the row indices");
            seen[static_cast<std::size_t>(i)] = 1;
        }
    }
};

/// One relaxed row projection, in place:
///   u <- u + omega_i (s_i - <a_i, u>) a_i / ||a_i||^2.
/// Only entries in row i's sparsity pattern change. The matrix is real, so
/// the conjugated inner product reduces to sum a_ij u_j for complex u too.
template <typename Scalar>
void project_row(std::vector<Scalar>& u, const SparseRowMatrix& A, Scalar rhs_i, int i,
                 double omega_i) {
    const auto entries = A.row(i);
    Scalar inner{};
    for (const auto& e : entries) inner += u[static_cast<std::size_t>(e.col)] * e.value;
    const Scalar step = (rhs_i - inner) * (omega_i / A.row_norm_sq(i));
    for (const auto& e : entries) u[static_cast<std::size_t>(e.col)] += step * e.value;
}

/// Symmetric Kaczmarz double sweep: forward through the plan's order, then
/// back. The turnaround row is projected twice consecutively; with omega != 1
/// the second projection is not a no-op and must not be deduplicated. The
/// affine map is u <- Q u + R s.
template <typename Scalar>
void double_sweep(std::vector<Scalar>& u, const SparseRowMatrix& A,
                  const std::vector<Scalar>& rhs, const SweepPlan& plan) {
    if (static_cast<int>(u.size()) != A.dimension() || plan.size() != A.dimension() ||
        rhs.size() != u.size())
        throw std::invalid_argument("dimension mismatch in double sweep");
    for (auto it = plan.order.begin(); it != plan.order.end(); ++it) {
        const int i = *it;
        project_row(u, A, rhs[static_cast<std::size_t>(i)], i, plan.omega[static_cast<std::size_t>(i)]);
    }
    for (auto it = plan.order.rbegin(); it != plan.order.rend(); ++it) {
        const int i = *it;
        project_row(u, A, rhs[static_cast<std::size_t>(i)], i, plan.omega[static_cast<std::size_t>(i)]);
    }
}

/// (I - Q) v, computed as v - double_sweep(v, 0). Q is never materialized.
template <typename Scalar>
std::vector<Scalar> apply_I_minus_Q(const std::vector<Scalar>& v, const SparseRowMatrix& A,
                                    const SweepPlan& plan) {
    std::vector<Scalar> swept = v;
    const std::vector<Scalar> zero(v.size(), Scalar{});
    double_sweep(swept, A, zero, plan);
    std::vector<Scalar> out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[j] = v[j] - swept[j];
    return out;
}

/// R s, computed as one double sweep from the zero iterate.
template <typename Scalar>
std::vector<Scalar> apply_R(const std::vector<Scalar>& rhs, const SparseRowMatrix& A,
                            const SweepPlan& plan) {
    std::vector<Scalar> u(rhs.size(), Scalar{});
    double_sweep(u, A, rhs, plan);
    return u;
}

}  // namespace cgmn
