#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "cgmn/solver.hpp"
#include "cgmn/symbol.hpp"

namespace cgmn::experiments {

inline constexpr const char* kLibraryVersion = "0.1.0";

/// One (k, omega) cell of a 1D relaxation scan.
struct Cell1D {
    double k;
    int n_interior;
    double local_ng;  // 2 pi / (k h) on the grid actually used
    double omega;
    int iterations;
    bool converged;
    double final_prec_rel_residual;
    double final_true_rel_residual;
    double predicted_optimal_omega;
};

struct Scan1DResult {
    std::vector<Cell1D> cells;
    std::vector<double> k_values;
    double n_g;  // target gridpoints per wavelength (fixed-ng mode)
    double tolerance;
};

std::vector<double> default_k_values();    // {10 pi, 20 pi, 40 pi, 80 pi}
std::vector<double> default_omega_grid();  // 1.0 : 0.05 : 1.95

/// Interior size with k h = 2 pi / n_g: N + 1 = round(k n_g / (2 pi)).
int grid_size_for(double k, double n_g);

/// Fixed gridpoints-per-wavelength scan: each k gets its own grid with
/// k h = 2 pi / n_g; iteration counts to tolerance per (k, omega), with the
/// symbol-predicted optimum carried per row.
Scan1DResult run_fixed_ng_1d(const std::vector<double>& k_values, double n_g,
                             const std::vector<double>& omega_grid, double tolerance);

/// Fixed-spacing scan: h is chosen from the highest wavenumber at n_g, so
/// lower k see proportionally more points per wavelength; the prediction uses
/// the local n_g = 2 pi / (k h).
Scan1DResult run_fixed_h_1d(const std::vector<double>& k_values, double n_g,
                            const std::vector<double>& omega_grid, double tolerance);

enum class OmegaPolicy { Constant, LocalCurve };

struct Contrast2DParams {
    int nx = 64;
    int ny = 64;
    double background_k = 0.0;  // 0 means "n_g = 10 at the grid spacing"
    double anomaly_k = 0.0;     // 0 means 2 * background_k
    double rect_x0 = 0.25, rect_x1 = 0.75, rect_y0 = 0.25, rect_y1 = 0.75;
    OmegaPolicy policy = OmegaPolicy::Constant;
    double constant_omega = 1.5;
    double tolerance = 1e-6;
    int max_iterations = 0;  // 0 means 10 N
};

struct Contrast2DResult {
    std::vector<std::complex<double>> total_field;  // u_inc + u_sc
    std::vector<std::complex<double>> scattered_field;
    ConvergenceHistory history;
    std::vector<double> omega_per_row;
    double background_k;
    double anomaly_k;
    double spacing;
    int nx, ny;
};

/// Plane-wave scattering off a rectangular high-wavenumber anomaly, solved in
/// the scattered-field formulation with the selected relaxation policy.
Contrast2DResult run_contrast_2d(const Contrast2DParams& params);

struct OracleVerification {
    struct Entry {
        int n;
        double omega;
        double g_vs_h, q_vs_h, intertwining, rhs_relation;
    };
    std::vector<Entry> entries;
    double max_g_vs_h = 0.0, max_q_vs_h = 0.0, max_intertwining = 0.0, max_rhs_relation = 0.0;
    double tolerance = 1e-12;
    bool passed = false;
};

/// Full identity suite over sizes x omegas on 1D Helmholtz matrices sized for
/// n_g = 10. Throws on empty inputs -- an empty suite must not pass vacuously.
OracleVerification verify_oracle(const std::vector<int>& sizes, const std::vector<double>& omegas,
                                 double tolerance = 1e-12);

// ---- serialization ----------------------------------------------------

/// Full-precision scientific formatting (17 significant digits) used by every
/// CSV column so that re-emission is byte-identical.
std::string format_number(double v);

std::string scan1d_to_csv(const Scan1DResult& result);
std::string history_to_csv(const ConvergenceHistory& history);
std::string field_to_csv(const Contrast2DResult& result);
std::string omega_curve_to_csv(const OmegaCurve& curve);
std::string oracle_report_to_csv(const OracleVerification& report);

struct SymbolSurface {
    double n_g;
    std::vector<double> thetas;
    std::vector<double> omegas;
    std::vector<double> amplitudes;  // row-major over (theta, omega)
    std::vector<double> proxies;     // per omega
    double argmin_omega;             // over the emitted omega grid
    double declared_grid_optimum;    // optimal_omega(n_g) on the search grid
};

SymbolSurface compute_symbol_surface(double n_g, int theta_count, int omega_count);
std::string surface_to_csv(const SymbolSurface& surface);
std::string surface_proxy_to_csv(const SymbolSurface& surface);

/// Writes text with "\n" line endings regardless of platform.
void write_file(const std::string& path, const std::string& content);

/// Run manifest: spec echo, library version, scalar type, wall time, per-run
/// iteration counts. Serialized as JSON with stable key ordering.
std::string make_manifest(const std::string& kind, const std::string& spec_echo_json,
                          const std::string& scalar_type, double wall_seconds,
                          const std::vector<int>& iteration_counts);

}  // namespace cgmn::experiments
