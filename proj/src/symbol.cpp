#include "cgmn/symbol.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace cgmn {

SymbolParams::SymbolParams(double n_g, double w, double h)
    : points_per_wavelength(n_g), omega(w), spacing(h) {
    if (n_g <= 0.0) throw std::invalid_argument("n_g must be positive");
    if (h <= 0.0) throw std::invalid_argument("spacing must be positive");
    const double k = 2.0 * std::numbers::pi / (n_g * h);
    gamma = k * k - 2.0 / (h * h);
    beta = gamma * gamma + 2.0 / (h * h * h * h);
}

SymbolFactors symbol_factors(double theta, const SymbolParams& p) {
    const double h2inv = 1.0 / (p.spacing * p.spacing);
    const std::complex<double> em(std::cos(theta), -std::sin(theta));    // e^{-i theta}
    const std::complex<double> em2(std::cos(2 * theta), -std::sin(2 * theta));
    SymbolFactors f;
    f.a1 = p.gamma + 2.0 * h2inv * std::cos(theta);
    f.a2 = p.beta + p.omega * h2inv * (2.0 * p.gamma * em + h2inv * em2);
    f.a3 = p.beta;
    f.a4 = p.beta + p.omega * h2inv * (2.0 * p.gamma * std::conj(em) + h2inv * std::conj(em2));
    return f;
}

double amplitude(double theta, double omega, const SymbolParams& params) {
    const double h2inv = 1.0 / (params.spacing * params.spacing);
    const double h4inv = h2inv * h2inv;
    const double g = params.gamma;
    const double b = params.beta;
    const double c = std::cos(theta);
    const double c2 = std::cos(2.0 * theta);
    const double a1 = g + 2.0 * h2inv * c;
    const double den = b * b + 2.0 * b * omega * (2.0 * g * h2inv * c + h4inv * c2) +
                       omega * omega * h4inv * (4.0 * g * g + 4.0 * g * h2inv * c + h4inv);
    if (den == 0.0) throw std::domain_error("amplitude denominator vanished");
    return 1.0 - omega * (2.0 - omega) * b * a1 * a1 / den;
}

std::pair<double, double> amplitude_factor_form(double theta, double omega,
                                                const SymbolParams& params) {
    SymbolParams p = params;
    p.omega = omega;
    const SymbolFactors f = symbol_factors(theta, p);
    const std::complex<double> denom = f.a2 * f.a4;
    if (denom == std::complex<double>{}) throw std::domain_error("amplitude denominator vanished");
    const std::complex<double> a =
        1.0 - omega * (2.0 - omega) * (f.a1 * f.a1 * f.a3) / denom;
    return {a.real(), a.imag()};
}

std::vector<double> default_theta_grid(int count) {
    if (count < 1) throw std::invalid_argument("theta grid needs at least one point");
    std::vector<double> thetas(static_cast<std::size_t>(count));
    const double lo = std::numbers::pi / count;
    const double hi = std::numbers::pi - lo;
    if (count == 1) {
        thetas[0] = 0.5 * (lo + hi);
        return thetas;
    }
    const double step = (hi - lo) / (count - 1);
    for (int j = 0; j < count; ++j) thetas[static_cast<std::size_t>(j)] = lo + j * step;
    return thetas;
}

double condition_proxy(double omega, const SymbolParams& params, std::span<const double> thetas) {
    if (thetas.empty()) throw std::invalid_argument("theta grid must not be empty");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (double theta : thetas) {
        if (!(theta > 0.0 && theta < std::numbers::pi))
            throw std::invalid_argument("theta samples must lie in (0, pi)");
        const double one_minus = 1.0 - amplitude(theta, omega, params);
        lo = std::min(lo, one_minus);
        hi = std::max(hi, one_minus);
    }
    if (lo <= 1e-14) return std::numeric_limits<double>::infinity();
    return hi / lo;
}

namespace {

constexpr double kReferenceSpacing = 1.0 / 101.0;
constexpr double kOmegaGridStart = 0.01;
constexpr double kOmegaGridStep = 0.005;
constexpr int kOmegaGridCount = 397;  // 0.01, 0.015, ..., 1.99

}  // namespace

std::pair<double, double> optimal_omega_with_proxy(double n_g) {
    if (n_g < 2.0) throw std::invalid_argument("n_g below the Nyquist limit");
    const std::vector<double> thetas = default_theta_grid();
    double best_omega = kOmegaGridStart;
    double best_value = std::numeric_limits<double>::infinity();
    for (int j = 0; j < kOmegaGridCount; ++j) {
        const double w = kOmegaGridStart + j * kOmegaGridStep;
        const SymbolParams params(n_g, w, kReferenceSpacing);
        const double value = condition_proxy(w, params, thetas);
        if (value < best_value) {  // strict: ties break toward smaller omega
            best_value = value;
            best_omega = w;
        }
    }
    return {best_omega, best_value};
}

double optimal_omega(double n_g) { return optimal_omega_with_proxy(n_g).first; }

OmegaCurve::OmegaCurve(std::vector<Sample> samples) : samples_(std::move(samples)) {
    if (samples_.empty()) throw std::invalid_argument("omega curve needs at least one sample");
    for (std::size_t i = 1; i < samples_.size(); ++i)
        if (!(samples_[i].n_g > samples_[i - 1].n_g))
            throw std::invalid_argument("n_g samples must be strictly increasing");
}

OmegaCurve OmegaCurve::build(std::span<const double> n_g_values) {
    std::vector<Sample> samples;
    samples.reserve(n_g_values.size());
    for (double n_g : n_g_values) {
        const auto [w, proxy] = optimal_omega_with_proxy(n_g);
        samples.push_back({n_g, w, proxy});
    }
    return OmegaCurve(std::move(samples));
}

OmegaCurve OmegaCurve::build_default() {
    const double nodes[] = {2.5, 3, 4, 5, 6, 8, 10, 12, 16, 20, 30, 50};
    return build(nodes);
}

double OmegaCurve::omega_at(double n_g) const {
    if (n_g <= samples_.front().n_g) return samples_.front().optimal_omega;
    if (n_g >= samples_.back().n_g) return samples_.back().optimal_omega;
    std::size_t hi = 1;
    while (samples_[hi].n_g < n_g) ++hi;
    const Sample& a = samples_[hi - 1];
    const Sample& b = samples_[hi];
    if (n_g == b.n_g) return b.optimal_omega;  // table hits are exact
    const double t = (n_g - a.n_g) / (b.n_g - a.n_g);
    return a.optimal_omega + t * (b.optimal_omega - a.optimal_omega);
}

}  // namespace cgmn
