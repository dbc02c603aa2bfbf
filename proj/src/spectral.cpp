#include "gauram/spectral.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gauram::spectral {

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kSqrtPi = 1.7724538509055160272981674833411452;
constexpr double kSqrt2 = 1.4142135623730950488016887242096981;
constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490;

bool at_spectral_null(double f, double t0) {
    const double cycles = f * t0;
    return std::nearbyint(cycles) == cycles;
}
}  // namespace

std::complex<double> gr1_spectrum(double f, double t0) {
    const double envelope = kInvSqrt2 * std::exp(-kPi * f * f);
    const std::complex<double> delay_term =
        1.0 - std::polar(1.0, -2.0 * kPi * f * t0);
    return envelope * delay_term;
}

double gr1_magnitude(double f, double t0) {
    return kSqrt2 * std::exp(-kPi * f * f) * std::abs(std::sin(kPi * f * t0));
}

double gr1_phase(double f, double t0) {
    if (at_spectral_null(f, t0))
        throw std::domain_error("gr1_phase: phase undefined at spectral null");
    return -kPi * f * t0 + 0.5 * kPi;
}

double group_delay(double t0) {
    if (t0 <= 0.0) throw std::domain_error("group_delay: delay must be positive");
    return 0.5 * t0;
}

double gmsk_pulse(double t, double rho) {
    if (rho <= 0.0) throw std::domain_error("gmsk_pulse: rho must be positive");
    const double u = t / rho;
    return (kSqrtPi / rho) * std::exp(-kPi * u * u);
}

double gmsk_rho_from_bt(double bt) {
    if (bt <= 0.0) throw std::domain_error("gmsk_rho_from_bt: bt must be positive");
    return std::sqrt(std::log(2.0)) / (kPi * bt);
}

double grsk_pulse(double t, double eta, double t0) {
    if (eta <= 0.0) throw std::domain_error("grsk_pulse: eta must be positive");
    const double u = t / eta;
    const double v = (t - t0) / eta;
    return kInvSqrt2 * (kSqrtPi / eta) * (std::exp(-kPi * u * u) - std::exp(-kPi * v * v));
}

std::complex<double> gmsk_spectrum(double f, double rho) {
    if (rho <= 0.0) throw std::domain_error("gmsk_spectrum: rho must be positive");
    return {kSqrtPi * std::exp(-kPi * rho * rho * f * f), 0.0};
}

std::complex<double> grsk_spectrum(double f, double eta, double t0) {
    if (eta <= 0.0) throw std::domain_error("grsk_spectrum: eta must be positive");
    const double envelope = kInvSqrt2 * kSqrtPi * std::exp(-kPi * eta * eta * f * f);
    return envelope * (1.0 - std::polar(1.0, -2.0 * kPi * f * t0));
}

std::complex<double> pulse_spectrum_analytic(PulseKind kind, double f,
                                             const PulseParams& params) {
    switch (kind) {
        case PulseKind::gmsk:
            return gmsk_spectrum(f, params.rho);
        case PulseKind::grsk:
            return grsk_spectrum(f, params.eta, params.t0);
    }
    throw std::invalid_argument("pulse_spectrum_analytic: unknown pulse kind");
}

std::vector<SpectrumPoint> normalized_psd(std::vector<SpectrumPoint> samples,
                                          double floor_db) {
    double peak = 0.0;
    for (const SpectrumPoint& p : samples) peak = std::max(peak, p.magnitude);
    if (peak == 0.0) throw std::domain_error("normalized_psd: all-zero spectrum");

    const double peak_sq = peak * peak;
    for (SpectrumPoint& p : samples) {
        const double ratio = (p.magnitude * p.magnitude) / peak_sq;
        p.psd_db = (ratio > 0.0) ? std::max(10.0 * std::log10(ratio), floor_db) : floor_db;
    }
    return samples;
}

std::vector<double> null_frequencies(double t0, double f_max) {
    if (t0 <= 0.0) throw std::domain_error("null_frequencies: t0 must be positive");
    if (f_max <= 0.0) throw std::domain_error("null_frequencies: f_max must be positive");
    std::vector<double> nulls;
    const int m_max = static_cast<int>(std::floor(f_max * t0 + 1e-9));
    for (int m = 1; m <= m_max; ++m) nulls.push_back(m / t0);
    return nulls;
}

}  // namespace gauram::spectral
