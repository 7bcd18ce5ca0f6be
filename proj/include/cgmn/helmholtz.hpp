#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "cgmn/grid.hpp"
#include "cgmn/sparse_row_matrix.hpp"

namespace cgmn {

/// A discretized Helmholtz system A u = s. The matrix is real and symmetric;
/// the right-hand side may be real (1D experiments) or complex (2D scattered
/// field). Built problems are immutable apart from the right-hand side, which
/// the caller owns.
template <typename Scalar>
struct HelmholtzProblem {
    SparseRowMatrix matrix;
    std::vector<Scalar> rhs;
    int nx;  // interior points along x
    int ny;  // interior points along y (1 for 1D problems)
    double spacing;
    Medium medium;

    int dimension() const { return matrix.dimension(); }
};

/// Tridiagonal 1D Helmholtz operator on [0,1] with eliminated Dirichlet
/// boundaries: diagonal k^2 - 2/h^2, off-diagonals 1/h^2, h = 1/(N+1).
template <typename Scalar = double>
HelmholtzProblem<Scalar> build_helmholtz_1d(double k, int n_interior) {
    if (n_interior < 1) throw std::invalid_argument("n_interior must be >= 1");
    if (k < 0.0) throw std::invalid_argument("wavenumber must be nonnegative");
    Grid1D grid(n_interior);
    const double h2inv = 1.0 / (grid.spacing * grid.spacing);
    const double diag = k * k - 2.0 * h2inv;
    SparseRowMatrix A(n_interior);
    for (int i = 0; i < n_interior; ++i) {
        if (i > 0) A.push_entry(i, i - 1, h2inv);
        A.push_entry(i, i, diag);
        if (i + 1 < n_interior) A.push_entry(i, i + 1, h2inv);
    }
    A.finalize();
    return {std::move(A), std::vector<Scalar>(static_cast<std::size_t>(n_interior), Scalar{}),
            n_interior, 1, grid.spacing, Medium::constant(k, n_interior)};
}

/// Analytic eigenpair of the 1D operator: lambda_n = k^2 + 2 h^-2 (cos(n pi h) - 1)
/// with (unnormalized) eigenvector v_i = sin(n pi i h), i = 1..N.
inline std::pair<double, std::vector<double>> analytic_eigenpair_1d(int n, double k,
                                                                    const Grid1D& grid) {
    if (n < 1 || n > grid.n_interior) throw std::out_of_range("mode index out of range");
    const double h = grid.spacing;
    const double lambda = k * k + 2.0 / (h * h) * (std::cos(n * std::numbers::pi * h) - 1.0);
    std::vector<double> v(static_cast<std::size_t>(grid.n_interior));
    for (int i = 1; i <= grid.n_interior; ++i)
        v[static_cast<std::size_t>(i - 1)] = std::sin(n * std::numbers::pi * i * h);
    return {lambda, std::move(v)};
}

/// 5-point 2D Helmholtz operator with eliminated Dirichlet boundaries:
/// diagonal k(x)^2 - 4/h^2, cross-neighbors 1/h^2. Row-major, x fastest.
template <typename Scalar = std::complex<double>>
HelmholtzProblem<Scalar> build_helmholtz_2d(const Medium& medium, const Grid2D& grid) {
    if (medium.size() != static_cast<std::size_t>(grid.size()))
        throw std::invalid_argument("medium size does not match grid");
    const double h2inv = 1.0 / (grid.spacing * grid.spacing);
    SparseRowMatrix A(grid.size());
    for (int iy = 0; iy < grid.ny; ++iy) {
        for (int ix = 0; ix < grid.nx; ++ix) {
            const int i = iy * grid.nx + ix;
            const double ki = medium.wavenumber[static_cast<std::size_t>(i)];
            if (iy > 0) A.push_entry(i, i - grid.nx, h2inv);
            if (ix > 0) A.push_entry(i, i - 1, h2inv);
            A.push_entry(i, i, ki * ki - 4.0 * h2inv);
            if (ix + 1 < grid.nx) A.push_entry(i, i + 1, h2inv);
            if (iy + 1 < grid.ny) A.push_entry(i, i + grid.nx, h2inv);
        }
    }
    A.finalize();
    return {std::move(A), std::vector<Scalar>(static_cast<std::size_t>(grid.size()), Scalar{}),
            grid.nx, grid.ny, grid.spacing, medium};
}

/// Scattered-field source for an incident plane wave exp(i k0 x):
/// s_i = -(k(x_i)^2 - k0^2) exp(i k0 x_i). Zero wherever k = k0.
inline std::vector<std::complex<double>> scattered_field_rhs(const Medium& medium,
                                                             double background_k,
                                                             const Grid2D& grid) {
    if (background_k <= 0.0) throw std::invalid_argument("background wavenumber must be positive");
    if (medium.size() != static_cast<std::size_t>(grid.size()))
        throw std::invalid_argument("medium size does not match grid");
    std::vector<std::complex<double>> s(medium.size());
    for (int i = 0; i < grid.size(); ++i) {
        const double ki = medium.wavenumber[static_cast<std::size_t>(i)];
        const double contrast = ki * ki - background_k * background_k;
        const double phase = background_k * grid.x(i);
        s[static_cast<std::size_t>(i)] =
            -contrast * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return s;
}

/// Incident plane wave exp(i k0 x) sampled at the interior gridpoints.
inline std::vector<std::complex<double>> incident_plane_wave(double k0, const Grid2D& grid) {
    std::vector<std::complex<double>> u(static_cast<std::size_t>(grid.size()));
    for (int i = 0; i < grid.size(); ++i) {
        const double phase = k0 * grid.x(i);
        u[static_cast<std::size_t>(i)] = {std::cos(phase), std::sin(phase)};
    }
    return u;
}

}  // namespace cgmn
