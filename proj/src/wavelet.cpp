#include "gauram/wavelet.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace gauram::wavelet {

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kTwoPi = 6.283185307179586476925286766559006;
// pi^(-1/4)
constexpr double kInvPiQuarter = 0.7511255444649424828587030047762277;
constexpr double kInf = std::numeric_limits<double>::infinity();

double psi_hermite_derivative(double t) {
    return std::sqrt(2.0) * kInvPiQuarter * (1.0 - t * t) * std::exp(-0.5 * t * t);
}

double psi_gr_derivative(double t, double t0) {
    const double b = normalization_constant(t0);
    return b * (-kTwoPi * t * std::exp(-kPi * t * t) +
                kTwoPi * (t - t0) * std::exp(-kPi * (t - t0) * (t - t0)));
}
}  // namespace

double normalization_constant(double t0) {
    if (t0 <= 0.0)
        throw std::domain_error("normalization_constant: t0 must be positive");
    return 1.0 / std::sqrt(std::sqrt(2.0) * (1.0 - std::exp(-0.5 * kPi * t0 * t0)));
}

double psi_gr(double t, double t0) {
    return normalization_constant(t0) *
           (std::exp(-kPi * t * t) - std::exp(-kPi * (t - t0) * (t - t0)));
}

double psi_hermite(double t) {
    return std::sqrt(2.0) * kInvPiQuarter * t * std::exp(-0.5 * t * t);
}

double autocorr_hermite(double tau) {
    return (1.0 - 0.5 * tau * tau) * std::exp(-0.25 * tau * tau);
}

double autocorr_gr(double tau, double t0) {
    if (t0 <= 0.0) throw std::domain_error("autocorr_gr: t0 must be positive");
    const double half_pi = 0.5 * kPi;
    const double numerator = 2.0 * std::exp(-half_pi * tau * tau) -
                             std::exp(-half_pi * (tau - t0) * (tau - t0)) -
                             std::exp(-half_pi * (tau + t0) * (tau + t0));
    return numerator / (2.0 * (1.0 - std::exp(-half_pi * t0 * t0)));
}

WaveletMetrics tf_metrics(WaveletKind kind, double t0,
                          const numerics::QuadratureSettings& settings) {
    std::function<double(double)> psi;
    std::function<double(double)> dpsi;
    if (kind == WaveletKind::hermite) {
        psi = [](double t) { return psi_hermite(t); };
        dpsi = [](double t) { return psi_hermite_derivative(t); };
    } else {
        psi = [t0](double t) { return psi_gr(t, t0); };
        dpsi = [t0](double t) { return psi_gr_derivative(t, t0); };
    }

    WaveletMetrics m;
    m.energy = numerics::integrate([&](double t) { return psi(t) * psi(t); }, -kInf, kInf,
                                   settings);
    m.mean_value = numerics::integrate(psi, -kInf, kInf, settings);

    const double second_moment = numerics::integrate(
        [&](double t) { return t * t * psi(t) * psi(t); }, -kInf, kInf, settings);
    m.delta_t = std::sqrt(second_moment);

    const double centroid = numerics::integrate(
        [&](double t) { return t * psi(t) * psi(t); }, -kInf, kInf, settings);
    m.delta_t_centered = std::sqrt(std::max(second_moment - centroid * centroid, 0.0));

    const double omega_sq = numerics::integrate(
        [&](double t) { return dpsi(t) * dpsi(t); }, -kInf, kInf, settings);
    m.delta_omega = std::sqrt(omega_sq);

    m.product = m.delta_t * m.delta_omega;
    return m;
}

double delta_omega_sq_frequency_domain(WaveletKind kind, double t0,
                                       const numerics::QuadratureSettings& settings) {
    std::function<double(double)> energy_spectrum;
    if (kind == WaveletKind::hermite) {
        // |Psi_H(f)|^2 = 16 pi^(5/2) f^2 exp(-4 pi^2 f^2)
        energy_spectrum = [](double f) {
            return 16.0 * std::pow(kPi, 2.5) * f * f * std::exp(-4.0 * kPi * kPi * f * f);
        };
    } else {
        // |Psi_GR(f)|^2 = 2 B^2 exp(-2 pi f^2) (1 - cos(2 pi f t0))
        const double b = normalization_constant(t0);
        energy_spectrum = [b, t0](double f) {
            return 2.0 * b * b * std::exp(-2.0 * kPi * f * f) *
                   (1.0 - std::cos(kTwoPi * f * t0));
        };
    }
    return numerics::integrate(
        [&](double f) { return kTwoPi * f * kTwoPi * f * energy_spectrum(f); }, -kInf, kInf,
        settings);
}

}  // namespace gauram::wavelet
