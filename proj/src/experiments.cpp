#include "cgmn/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "cgmn/dense_oracle.hpp"
#include "cgmn/helmholtz.hpp"

namespace cgmn::experiments {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Unit point source at the center interior gridpoint: the default 1D forcing.
std::vector<double> center_point_source(int n) {
    std::vector<double> s(static_cast<std::size_t>(n), 0.0);
    s[static_cast<std::size_t>((n - 1) / 2)] = 1.0;
    return s;
}

Cell1D solve_cell(double k, int n, double omega, double tolerance, double predicted) {
    auto problem = build_helmholtz_1d(k, n);
    problem.rhs = center_point_source(n);
    SolverConfig config;
    config.tolerance = tolerance;
    config.record_true_residual = true;
    const SweepPlan plan = SweepPlan::uniform(n, omega);
    auto [u, history] = cgmn_solve(problem, plan, config);
    const double b_scale = history.preconditioned_residuals.front() > 0.0
                               ? history.preconditioned_residuals.front()
                               : 1.0;
    Cell1D cell;
    cell.k = k;
    cell.n_interior = n;
    cell.local_ng = kTwoPi * (n + 1) / k;
    cell.omega = omega;
    cell.iterations = history.iterations;
    cell.converged = history.converged;
    cell.final_prec_rel_residual = history.preconditioned_residuals.back() / b_scale;
    cell.final_true_rel_residual = history.true_residuals.back() / norm2(problem.rhs);
    cell.predicted_optimal_omega = predicted;
    return cell;
}

}  // namespace

std::vector<double> default_k_values() {
    return {10 * std::numbers::pi, 20 * std::numbers::pi, 40 * std::numbers::pi,
            80 * std::numbers::pi};
}

std::vector<double> default_omega_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 19; ++i) grid.push_back(1.0 + 0.05 * i);
    return grid;
}

int grid_size_for(double k, double n_g) {
    const int np1 = static_cast<int>(std::lround(k * n_g / kTwoPi));
    if (np1 < 2) throw std::invalid_argument("wavenumber too small for the requested resolution");
    return np1 - 1;
}

Scan1DResult run_fixed_ng_1d(const std::vector<double>& k_values, double n_g,
                             const std::vector<double>& omega_grid, double tolerance) {
    if (k_values.empty() || omega_grid.empty())
        throw std::invalid_argument("empty scan parameters");
    Scan1DResult result;
    result.k_values = k_values;
    result.n_g = n_g;
    result.tolerance = tolerance;
    for (double k : k_values) {
        if (k <= 0.0) throw std::invalid_argument("wavenumbers must be positive");
        const int n = grid_size_for(k, n_g);
        const double local_ng = kTwoPi * (n + 1) / k;
        const double predicted = optimal_omega(local_ng);
        for (double omega : omega_grid)
            result.cells.push_back(solve_cell(k, n, omega, tolerance, predicted));
    }
    return result;
}

Scan1DResult run_fixed_h_1d(const std::vector<double>& k_values, double n_g,
                            const std::vector<double>& omega_grid, double tolerance) {
    if (k_values.empty() || omega_grid.empty())
        throw std::invalid_argument("empty scan parameters");
    const double k_max = *std::max_element(k_values.begin(), k_values.end());
    const int n = grid_size_for(k_max, n_g);
    Scan1DResult result;
    result.k_values = k_values;
    result.n_g = n_g;
    result.tolerance = tolerance;
    for (double k : k_values) {
        if (k <= 0.0) throw std::invalid_argument("wavenumbers must be positive");
        const double local_ng = kTwoPi * (n + 1) / k;
        const double predicted = optimal_omega(local_ng);
        for (double omega : omega_grid)
            result.cells.push_back(solve_cell(k, n, omega, tolerance, predicted));
    }
    return result;
}

Contrast2DResult run_contrast_2d(const Contrast2DParams& params) {
    if (params.nx < 1 || params.ny < 1) throw std::invalid_argument("grid must be nonempty");
    const double h = 1.0 / (params.nx + 1);
    const double k0 = params.background_k > 0.0 ? params.background_k : kTwoPi / (10.0 * h);
    const double k1 = params.anomaly_k > 0.0 ? params.anomaly_k : 2.0 * k0;
    if (params.rect_x0 > params.rect_x1 || params.rect_y0 > params.rect_y1 ||
        params.rect_x0 < 0.0 || params.rect_x1 > 1.0 || params.rect_y0 < 0.0 ||
        params.rect_y1 > 1.0)
        throw std::invalid_argument("anomaly rectangle must lie inside the unit square");

    const Grid2D grid(params.nx, params.ny, h);
    const Medium medium = Medium::with_anomaly(grid, k0, k1, params.rect_x0, params.rect_x1,
                                               params.rect_y0, params.rect_y1);
    auto problem = build_helmholtz_2d<std::complex<double>>(medium, grid);
    problem.rhs = scattered_field_rhs(medium, k0, grid);

    std::vector<double> omega(static_cast<std::size_t>(grid.size()), params.constant_omega);
    if (params.policy == OmegaPolicy::LocalCurve) {
        const OmegaCurve curve = OmegaCurve::build_default();
        for (int i = 0; i < grid.size(); ++i) {
            const double ki = medium.wavenumber[static_cast<std::size_t>(i)];
            omega[static_cast<std::size_t>(i)] = curve.omega_at(kTwoPi / (ki * h));
        }
    }
    const SweepPlan plan = SweepPlan::per_row(omega);

    SolverConfig config;
    config.tolerance = params.tolerance;
    config.max_iterations = params.max_iterations;
    config.record_true_residual = true;
    auto [scattered, history] = cgmn_solve(problem, plan, config);

    Contrast2DResult result;
    result.scattered_field = scattered;
    result.total_field = incident_plane_wave(k0, grid);
    for (std::size_t i = 0; i < result.total_field.size(); ++i)
        result.total_field[i] += scattered[i];
    result.history = std::move(history);
    result.omega_per_row = std::move(omega);
    result.background_k = k0;
    result.anomaly_k = k1;
    result.spacing = h;
    result.nx = params.nx;
    result.ny = params.ny;
    return result;
}

OracleVerification verify_oracle(const std::vector<int>& sizes, const std::vector<double>& omegas,
                                 double tolerance) {
    if (sizes.empty()) throw std::invalid_argument("verify_oracle: size list must not be empty");
    if (omegas.empty()) throw std::invalid_argument("verify_oracle: omega list must not be empty");
    OracleVerification report;
    report.tolerance = tolerance;
    for (int n : sizes) {
        const double k = kTwoPi * (n + 1) / 10.0;  // n_g = 10 sizing
        const auto problem = build_helmholtz_1d(k, n);
        const Eigen::MatrixXd A = oracle::to_dense(problem.matrix);
        for (double omega : omegas) {
            const auto dev = oracle::identity_deviations(A, omega);
            report.entries.push_back(
                {n, omega, dev.g_vs_h, dev.q_vs_h, dev.intertwining, dev.rhs_relation});
            report.max_g_vs_h = std::max(report.max_g_vs_h, dev.g_vs_h);
            report.max_q_vs_h = std::max(report.max_q_vs_h, dev.q_vs_h);
            report.max_intertwining = std::max(report.max_intertwining, dev.intertwining);
            report.max_rhs_relation = std::max(report.max_rhs_relation, dev.rhs_relation);
        }
    }
    const double worst = std::max({report.max_g_vs_h, report.max_q_vs_h, report.max_intertwining,
                                   report.max_rhs_relation});
    report.passed = worst <= tolerance;
    return report;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

std::string scan1d_to_csv(const Scan1DResult& result) {
    std::string out =
        "k,n_interior,ng_local,omega,iterations,converged,"
        "final_prec_rel_residual,final_true_rel_residual,predicted_optimal_omega\n";
    for (const Cell1D& c : result.cells) {
        out += format_number(c.k) + ',' + std::to_string(c.n_interior) + ',' +
               format_number(c.local_ng) + ',' + format_number(c.omega) + ',' +
               std::to_string(c.iterations) + ',' + (c.converged ? "1" : "0") + ',' +
               format_number(c.final_prec_rel_residual) + ',' +
               format_number(c.final_true_rel_residual) + ',' +
               format_number(c.predicted_optimal_omega) + '\n';
    }
    return out;
}

std::string history_to_csv(const ConvergenceHistory& history) {
    const bool with_true = !history.true_residuals.empty();
    std::string out = with_true ? "iteration,prec_residual,true_residual\n"
                                : "iteration,prec_residual\n";
    for (std::size_t i = 0; i < history.preconditioned_residuals.size(); ++i) {
        out += std::to_string(i) + ',' + format_number(history.preconditioned_residuals[i]);
        if (with_true) out += ',' + format_number(history.true_residuals[i]);
        out += '\n';
    }
    return out;
}

std::string field_to_csv(const Contrast2DResult& result) {
    std::string out =
        "ix,iy,x,y,wavenumber_omega,total_re,total_im,scattered_re,scattered_im\n";
    const Grid2D grid(result.nx, result.ny, result.spacing);
    for (int i = 0; i < grid.size(); ++i) {
        const std::size_t u = static_cast<std::size_t>(i);
        out += std::to_string(i % result.nx) + ',' + std::to_string(i / result.nx) + ',' +
               format_number(grid.x(i)) + ',' + format_number(grid.y(i)) + ',' +
               format_number(result.omega_per_row[u]) + ',' +
               format_number(result.total_field[u].real()) + ',' +
               format_number(result.total_field[u].imag()) + ',' +
               format_number(result.scattered_field[u].real()) + ',' +
               format_number(result.scattered_field[u].imag()) + '\n';
    }
    return out;
}

std::string omega_curve_to_csv(const OmegaCurve& curve) {
    std::string out = "ng,optimal_omega,condition_proxy_at_optimum\n";
    for (const auto& s : curve.samples())
        out += format_number(s.n_g) + ',' + format_number(s.optimal_omega) + ',' +
               format_number(s.condition_proxy_at_optimum) + '\n';
    return out;
}

std::string oracle_report_to_csv(const OracleVerification& report) {
    std::string out = "n,omega,g_vs_h,q_vs_h,intertwining,rhs_relation\n";
    for (const auto& e : report.entries)
        out += std::to_string(e.n) + ',' + format_number(e.omega) + ',' +
               format_number(e.g_vs_h) + ',' + format_number(e.q_vs_h) + ',' +
               format_number(e.intertwining) + ',' + format_number(e.rhs_relation) + '\n';
    return out;
}

SymbolSurface compute_symbol_surface(double n_g, int theta_count, int omega_count) {
    if (theta_count < 2 || omega_count < 2)
        throw std::invalid_argument("surface needs at least 2 samples per axis");
    SymbolSurface surface;
    surface.n_g = n_g;
    surface.thetas = default_theta_grid(theta_count);
    surface.omegas.resize(static_cast<std::size_t>(omega_count));
    const double w_lo = 0.01, w_hi = 1.99;
    for (int j = 0; j < omega_count; ++j)
        surface.omegas[static_cast<std::size_t>(j)] =
            w_lo + (w_hi - w_lo) * j / (omega_count - 1);
    surface.amplitudes.reserve(surface.thetas.size() * surface.omegas.size());
    const double h_ref = 1.0 / 101.0;
    for (double theta : surface.thetas) {
        for (double w : surface.omegas) {
            const SymbolParams params(n_g, w, h_ref);
            surface.amplitudes.push_back(amplitude(theta, w, params));
        }
    }
    surface.proxies.reserve(surface.omegas.size());
    double best = std::numeric_limits<double>::infinity();
    surface.argmin_omega = surface.omegas.front();
    for (double w : surface.omegas) {
        const SymbolParams params(n_g, w, h_ref);
        const double p = condition_proxy(w, params, surface.thetas);
        surface.proxies.push_back(p);
        if (p < best) {
            best = p;
            surface.argmin_omega = w;
        }
    }
    surface.declared_grid_optimum = optimal_omega(n_g);
    return surface;
}

std::string surface_to_csv(const SymbolSurface& surface) {
    std::string out = "theta,omega,amplitude\n";
    std::size_t idx = 0;
    for (double theta : surface.thetas)
        for (double w : surface.omegas)
            out += format_number(theta) + ',' + format_number(w) + ',' +
                   format_number(surface.amplitudes[idx++]) + '\n';
    return out;
}

std::string surface_proxy_to_csv(const SymbolSurface& surface) {
    std::string out = "omega,condition_proxy,is_argmin\n";
    for (std::size_t j = 0; j < surface.omegas.size(); ++j)
        out += format_number(surface.omegas[j]) + ',' + format_number(surface.proxies[j]) + ',' +
               (surface.omegas[j] == surface.argmin_omega ? "1" : "0") + '\n';
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string make_manifest(const std::string& kind, const std::string& spec_echo_json,
                          const std::string& scalar_type, double wall_seconds,
                          const std::vector<int>& iteration_counts) {
    nlohmann::ordered_json manifest;
    manifest["kind"] = kind;
    manifest["spec"] = nlohmann::ordered_json::parse(spec_echo_json);
    manifest["library_version"] = kLibraryVersion;
    manifest["scalar_type"] = scalar_type;
    manifest["wall_seconds"] = wall_seconds;
    manifest["iteration_counts"] = iteration_counts;
    return manifest.dump(2) + "\n";
}

}  // namespace cgmn::experiments
