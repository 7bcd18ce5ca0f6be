// Experiment front end: symbol surfaces, relaxation scans, the 2D contrast
// run, and the dense-oracle identity check, all emitting deterministic CSV
// plus a JSON manifest per run.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cgmn/experiments.hpp"
#include "cgmn/symbol.hpp"

namespace {

namespace exp = cgmn::experiments;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitBadArguments = 1;
constexpr int kExitNoConvergence = 2;
constexpr int kExitOracleFailure = 3;

std::string stem_of(const std::string& path) {
    const auto dot = path.find_last_of('.');
    const auto slash = path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path;
    return path.substr(0, dot);
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

/// Optional experiment-spec file: {"kind": ..., "parameters": {...},
/// "output_path": ...}. Flags override file values.
class SpecFile {
public:
    void load(const std::string& path, const std::string& expected_kind) {
        std::ifstream in(path);
        if (!in) throw CLI::ValidationError("--spec", "cannot open " + path);
        ordered_json doc = ordered_json::parse(in, nullptr, true);
        if (doc.value("kind", expected_kind) != expected_kind)
            throw CLI::ValidationError("--spec", "spec kind does not match this subcommand");
        params_ = doc.value("parameters", ordered_json::object());
        if (doc.contains("output_path")) output_path_ = doc["output_path"].get<std::string>();
    }

    template <typename T>
    void apply(const CLI::Option* opt, const std::string& key, T& value) const {
        if (opt->count() > 0) return;  // flag wins
        if (params_.contains(key)) value = params_[key].get<T>();
    }

    void apply_out(const CLI::Option* opt, std::string& out) const {
        if (opt->count() == 0 && output_path_) out = *output_path_;
    }

    const ordered_json& parameters() const { return params_; }

private:
    ordered_json params_ = ordered_json::object();
    std::optional<std::string> output_path_;
};

std::vector<double> parse_list(const std::string& csv) {
    std::vector<double> values;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) values.push_back(std::stod(item));
    }
    if (values.empty()) throw CLI::ValidationError("list", "expected comma-separated numbers");
    return values;
}

void emit_manifest(const std::string& out_path, const std::string& kind,
                   const ordered_json& spec_echo, const std::string& scalar_type,
                   double wall_seconds, const std::vector<int>& iterations) {
    exp::write_file(stem_of(out_path) + "_manifest.json",
                    exp::make_manifest(kind, spec_echo.dump(), scalar_type, wall_seconds,
                                       iterations));
}

int run_symbol(double ng, int theta_count, int omega_count, const std::string& out,
               const ordered_json& echo) {
    Timer timer;
    const exp::SymbolSurface surface = exp::compute_symbol_surface(ng, theta_count, omega_count);
    exp::write_file(out, exp::surface_to_csv(surface));
    exp::write_file(stem_of(out) + "_proxy.csv", exp::surface_proxy_to_csv(surface));
    emit_manifest(out, "symbol-surface", echo, "real", timer.seconds(), {});
    std::printf("symbol: ng=%g argmin_omega=%g (declared grid: %g)\n", ng, surface.argmin_omega,
                surface.declared_grid_optimum);
    return kExitOk;
}

int run_omega_curve(const std::vector<double>& ng_values, const std::string& out,
                    const ordered_json& echo) {
    Timer timer;
    const cgmn::OmegaCurve curve =
        ng_values.empty() ? cgmn::OmegaCurve::build_default() : cgmn::OmegaCurve::build(ng_values);
    exp::write_file(out, exp::omega_curve_to_csv(curve));
    emit_manifest(out, "omega-curve", echo, "real", timer.seconds(), {});
    std::printf("omega-curve: %zu samples written to %s\n", curve.samples().size(), out.c_str());
    return kExitOk;
}

int run_solve1d(const std::string& mode, std::vector<double> k_values,
                std::vector<double> omega_grid, double ng, double tol, const std::string& out,
                const ordered_json& echo) {
    Timer timer;
    if (k_values.empty()) k_values = exp::default_k_values();
    if (omega_grid.empty()) omega_grid = exp::default_omega_grid();
    const exp::Scan1DResult result = mode == "fixed-h"
                                         ? exp::run_fixed_h_1d(k_values, ng, omega_grid, tol)
                                         : exp::run_fixed_ng_1d(k_values, ng, omega_grid, tol);
    exp::write_file(out, exp::scan1d_to_csv(result));
    std::vector<int> iterations;
    for (const auto& cell : result.cells) iterations.push_back(cell.iterations);
    emit_manifest(out, mode == "fixed-h" ? "fixed-h-1d" : "fixed-ng-1d", echo, "real",
                  timer.seconds(), iterations);
    std::printf("solve1d %s: %zu cells written to %s\n", mode.c_str(), result.cells.size(),
                out.c_str());
    return kExitOk;
}

int run_solve2d(const exp::Contrast2DParams& params, const std::string& out,
                const ordered_json& echo) {
    Timer timer;
    const exp::Contrast2DResult result = exp::run_contrast_2d(params);
    exp::write_file(out, exp::field_to_csv(result));
    exp::write_file(stem_of(out) + "_history.csv", exp::history_to_csv(result.history));
    emit_manifest(out, "contrast-2d", echo, "complex", timer.seconds(),
                  {result.history.iterations});
    std::printf("solve2d: %s after %d iterations (policy %s)\n",
                result.history.converged ? "converged" : "NOT converged",
                result.history.iterations,
                params.policy == exp::OmegaPolicy::LocalCurve ? "local" : "constant");
    if (!result.history.converged) return kExitNoConvergence;
    return kExitOk;
}

int run_verify(const std::vector<int>& sizes, const std::vector<double>& omegas, double tol,
               const std::string& out, const ordered_json& echo) {
    Timer timer;
    const exp::OracleVerification report = exp::verify_oracle(sizes, omegas, tol);
    if (!out.empty()) {
        exp::write_file(out, exp::oracle_report_to_csv(report));
        emit_manifest(out, "verify-oracle", echo, "real", timer.seconds(), {});
    }
    std::printf("identity max deviations: G=I-HAA^T %.3e | Q=I-A^THA %.3e | "
                "QA^T=A^TG %.3e | R=A^TH %.3e (tolerance %.1e)\n",
                report.max_g_vs_h, report.max_q_vs_h, report.max_intertwining,
                report.max_rhs_relation, report.tolerance);
    std::printf("verify: %s\n", report.passed ? "PASS" : "FAIL");
    return report.passed ? kExitOk : kExitOracleFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CGMN Helmholtz solver experiments"};
    app.require_subcommand(1);

    try {
        // ---- symbol ----
        auto* symbol = app.add_subcommand("symbol", "Amplitude surface and condition proxy");
        double sym_ng = 10.0;
        int theta_count = 256, omega_count = 199;
        std::string sym_out = "symbol.csv", sym_spec;
        auto* sym_ng_opt = symbol->add_option("--ng", sym_ng, "gridpoints per wavelength");
        auto* sym_tc = symbol->add_option("--theta-count", theta_count, "theta samples");
        auto* sym_oc = symbol->add_option("--omega-count", omega_count, "omega samples");
        auto* sym_out_opt = symbol->add_option("--out", sym_out, "output CSV path");
        symbol->add_option("--spec", sym_spec, "JSON experiment spec");

        // ---- omega-curve ----
        auto* curve = app.add_subcommand("omega-curve", "Optimal omega against n_g");
        std::string curve_values, curve_out = "omega_curve.csv", curve_spec;
        auto* curve_vals_opt =
            curve->add_option("--ng-values", curve_values, "comma-separated n_g nodes");
        auto* curve_out_opt = curve->add_option("--out", curve_out, "output CSV path");
        curve->add_option("--spec", curve_spec, "JSON experiment spec");

        // ---- solve1d ----
        auto* solve1d = app.add_subcommand("solve1d", "1D relaxation scans");
        std::string mode = "fixed-ng", kvals_csv, wgrid_csv, s1_out = "scan1d.csv", s1_spec;
        double s1_ng = 10.0, s1_tol = 1e-6, s1_omega = 0.0;
        auto* mode_opt = solve1d->add_option("--mode", mode, "fixed-ng or fixed-h")
                             ->check(CLI::IsMember({"fixed-ng", "fixed-h"}));
        auto* kvals_opt = solve1d->add_option("--k-values", kvals_csv, "comma-separated k");
        auto* wgrid_opt = solve1d->add_option("--omega-grid", wgrid_csv, "comma-separated omega");
        auto* s1_omega_opt = solve1d->add_option("--omega", s1_omega, "single omega");
        auto* s1_ng_opt = solve1d->add_option("--ng", s1_ng, "gridpoints per wavelength");
        auto* s1_tol_opt = solve1d->add_option("--tol", s1_tol, "relative tolerance");
        auto* s1_out_opt = solve1d->add_option("--out", s1_out, "output CSV path");
        solve1d->add_option("--spec", s1_spec, "JSON experiment spec");

        // ---- solve2d ----
        auto* solve2d = app.add_subcommand("solve2d", "2D contrast experiment");
        exp::Contrast2DParams p2;
        std::string policy = "constant", s2_out = "field2d.csv", s2_spec;
        double s2_omega = 1.5;
        auto* s2_nx = solve2d->add_option("--nx", p2.nx, "interior points in x");
        auto* s2_ny = solve2d->add_option("--ny", p2.ny, "interior points in y");
        auto* s2_bg = solve2d->add_option("--background-k", p2.background_k,
                                          "background wavenumber (default: ng=10 at grid h)");
        auto* s2_an = solve2d->add_option("--anomaly-k", p2.anomaly_k,
                                          "anomaly wavenumber (default: 2 k0)");
        auto* s2_x0 = solve2d->add_option("--rect-x0", p2.rect_x0, "anomaly rectangle");
        auto* s2_x1 = solve2d->add_option("--rect-x1", p2.rect_x1, "anomaly rectangle");
        auto* s2_y0 = solve2d->add_option("--rect-y0", p2.rect_y0, "anomaly rectangle");
        auto* s2_y1 = solve2d->add_option("--rect-y1", p2.rect_y1, "anomaly rectangle");
        auto* s2_omega_opt = solve2d->add_option("--omega", s2_omega, "constant relaxation");
        auto* s2_policy = solve2d->add_option("--omega-policy", policy, "constant or local")
                              ->check(CLI::IsMember({"constant", "local"}));
        auto* s2_tol = solve2d->add_option("--tol", p2.tolerance, "relative tolerance");
        auto* s2_mi = solve2d->add_option("--max-iter", p2.max_iterations,
                                          "iteration cap (default 10 N)");
        auto* s2_out_opt = solve2d->add_option("--out", s2_out, "output CSV path");
        solve2d->add_option("--spec", s2_spec, "JSON experiment spec");

        // ---- verify ----
        auto* verify = app.add_subcommand("verify", "Dense SSOR/Kaczmarz identity suite");
        std::string sizes_csv = "5,8,16,32", omegas_csv = "0.5,1.0,1.5,1.9";
        std::string v_out;
        double v_tol = 1e-12;
        auto* v_sizes = verify->add_option("--sizes", sizes_csv, "comma-separated N");
        auto* v_omegas = verify->add_option("--omegas", omegas_csv, "comma-separated omega");
        auto* v_tol_opt = verify->add_option("--tol", v_tol, "identity tolerance");
        auto* v_out_opt = verify->add_option("--out", v_out, "optional report CSV path");
        std::string v_spec;
        verify->add_option("--spec", v_spec, "JSON experiment spec");

        CLI11_PARSE(app, argc, argv);

        if (symbol->parsed()) {
            SpecFile spec;
            if (!sym_spec.empty()) spec.load(sym_spec, "symbol-surface");
            spec.apply(sym_ng_opt, "ng", sym_ng);
            spec.apply(sym_tc, "theta_count", theta_count);
            spec.apply(sym_oc, "omega_count", omega_count);
            spec.apply_out(sym_out_opt, sym_out);
            ordered_json echo{{"ng", sym_ng}, {"theta_count", theta_count},
                              {"omega_count", omega_count}, {"out", sym_out}};
            return run_symbol(sym_ng, theta_count, omega_count, sym_out, echo);
        }
        if (curve->parsed()) {
            SpecFile spec;
            if (!curve_spec.empty()) spec.load(curve_spec, "omega-curve");
            spec.apply(curve_vals_opt, "ng_values", curve_values);
            spec.apply_out(curve_out_opt, curve_out);
            const std::vector<double> ng_values =
                curve_values.empty() ? std::vector<double>{} : parse_list(curve_values);
            ordered_json echo{{"ng_values", ng_values}, {"out", curve_out}};
            return run_omega_curve(ng_values, curve_out, echo);
        }
        if (solve1d->parsed()) {
            SpecFile spec;
            if (!s1_spec.empty())
                spec.load(s1_spec, mode_opt->count() && mode == "fixed-h" ? "fixed-h-1d"
                                                                          : "fixed-ng-1d");
            spec.apply(mode_opt, "mode", mode);
            spec.apply(kvals_opt, "k_values", kvals_csv);
            spec.apply(wgrid_opt, "omega_grid", wgrid_csv);
            spec.apply(s1_ng_opt, "ng", s1_ng);
            spec.apply(s1_tol_opt, "tolerance", s1_tol);
            spec.apply_out(s1_out_opt, s1_out);
            std::vector<double> k_values =
                kvals_csv.empty() ? std::vector<double>{} : parse_list(kvals_csv);
            std::vector<double> omega_grid =
                wgrid_csv.empty() ? std::vector<double>{} : parse_list(wgrid_csv);
            if (s1_omega_opt->count() > 0) omega_grid = {s1_omega};
            ordered_json echo{{"mode", mode},
                              {"k_values", k_values.empty() ? exp::default_k_values() : k_values},
                              {"omega_grid",
                               omega_grid.empty() ? exp::default_omega_grid() : omega_grid},
                              {"ng", s1_ng},
                              {"tolerance", s1_tol},
                              {"out", s1_out}};
            return run_solve1d(mode, k_values, omega_grid, s1_ng, s1_tol, s1_out, echo);
        }
        if (solve2d->parsed()) {
            SpecFile spec;
            if (!s2_spec.empty()) spec.load(s2_spec, "contrast-2d");
            spec.apply(s2_nx, "nx", p2.nx);
            spec.apply(s2_ny, "ny", p2.ny);
            spec.apply(s2_bg, "background_k", p2.background_k);
            spec.apply(s2_an, "anomaly_k", p2.anomaly_k);
            spec.apply(s2_x0, "rect_x0", p2.rect_x0);
            spec.apply(s2_x1, "rect_x1", p2.rect_x1);
            spec.apply(s2_y0, "rect_y0", p2.rect_y0);
            spec.apply(s2_y1, "rect_y1", p2.rect_y1);
            spec.apply(s2_omega_opt, "omega", s2_omega);
            spec.apply(s2_policy, "omega_policy", policy);
            spec.apply(s2_tol, "tolerance", p2.tolerance);
            spec.apply(s2_mi, "max_iterations", p2.max_iterations);
            spec.apply_out(s2_out_opt, s2_out);
            p2.policy = policy == "local" ? exp::OmegaPolicy::LocalCurve
                                          : exp::OmegaPolicy::Constant;
            p2.constant_omega = s2_omega;
            ordered_json echo{{"nx", p2.nx},
                              {"ny", p2.ny},
                              {"background_k", p2.background_k},
                              {"anomaly_k", p2.anomaly_k},
                              {"rect", {p2.rect_x0, p2.rect_x1, p2.rect_y0, p2.rect_y1}},
                              {"omega_policy", policy},
                              {"omega", s2_omega},
                              {"tolerance", p2.tolerance},
                              {"max_iterations", p2.max_iterations},
                              {"out", s2_out}};
            return run_solve2d(p2, s2_out, echo);
        }
        if (verify->parsed()) {
            SpecFile spec;
            if (!v_spec.empty()) spec.load(v_spec, "verify-oracle");
            spec.apply(v_sizes, "sizes", sizes_csv);
            spec.apply(v_omegas, "omegas", omegas_csv);
            spec.apply(v_tol_opt, "tolerance", v_tol);
            spec.apply_out(v_out_opt, v_out);
            std::vector<int> sizes;
            for (double v : parse_list(sizes_csv)) sizes.push_back(static_cast<int>(v));
            const std::vector<double> omegas = parse_list(omegas_csv);
            ordered_json echo{{"sizes", sizes}, {"omegas", omegas}, {"tolerance", v_tol}};
            return run_verify(sizes, omegas, v_tol, v_out, echo);
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitBadArguments;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    }
    return kExitBadArguments;
}
