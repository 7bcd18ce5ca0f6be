#pragma once

#include <complex>
#include <span>
#include <vector>

namespace cgmn {

/// Parameters of the 1D amplitude function. The normalization k h = 2 pi / n_g
/// ties the wavenumber to the gridpoints-per-wavelength count; gamma and beta
/// are the recurring derived quantities
///   gamma = k^2 - 2 h^-2,   beta = gamma^2 + 2 h^-4.
struct SymbolParams {
    double points_per_wavelength;  // n_g
    double omega;
    double spacing;  // h
    double gamma;
    double beta;

    SymbolParams(double n_g, double w, double h);
};

/// Fourier-mode factors of the four matrices entering the amplitude:
/// a1 for A, a2 for D + omega L, a3 for D, a4 for D + omega L^T.
struct SymbolFactors {
    double a1;
    std::complex<double> a2;
    double a3;
    std::complex<double> a4;
};

SymbolFactors symbol_factors(double theta, const SymbolParams& params);

/// Error-mode amplitude a(theta, omega, h), evaluated in the expanded real
/// closed form. Depends only on (theta, omega, n_g); h cancels.
double amplitude(double theta, double omega, const SymbolParams& params);

/// Same amplitude assembled from the factor form 1 - w(2-w) a1^2 a3 / (a2 a4);
/// kept as an independent route for consistency checks. The imaginary part of
/// the complex quotient is returned alongside.
std::pair<double, double> amplitude_factor_form(double theta, double omega,
                                                const SymbolParams& params);

/// Default theta sampling: `count` uniform points in (pi/count, pi - pi/count).
std::vector<double> default_theta_grid(int count = 1024);

/// max(1 - a) / min(1 - a) over the grid; a surrogate for the condition
/// number of I - Q. Returns +infinity when min(1 - a) <= 1e-14 (degenerate
/// regime, never silently clipped).
double condition_proxy(double omega, const SymbolParams& params, std::span<const double> thetas);

/// Exhaustive search for the proxy-minimizing omega on the declared grid
/// (0.01 to 1.99, step 0.005, ties toward smaller omega). The reference
/// spacing h = 1/101 is arbitrary: the amplitude depends only on n_g and
/// omega.
double optimal_omega(double n_g);

/// optimal_omega plus the proxy value it attains.
std::pair<double, double> optimal_omega_with_proxy(double n_g);

/// Tabulated optimal omega against n_g, with linear interpolation between
/// nodes. Queries outside the tabulated range clamp to the end samples.
class OmegaCurve {
public:
    struct Sample {
        double n_g;
        double optimal_omega;
        double condition_proxy_at_optimum;
    };

    explicit OmegaCurve(std::vector<Sample> samples);

    /// Curve at the default nodes {2.5, 3, 4, 5, 6, 8, 10, 12, 16, 20, 30, 50}.
    static OmegaCurve build_default();
    static OmegaCurve build(std::span<const double> n_g_values);

    double omega_at(double n_g) const;
    const std::vector<Sample>& samples() const { return samples_; }

private:
    std::vector<Sample> samples_;
};

}  // namespace cgmn
