#include "gauram/modulation.hpp"

#include <cmath>
#include <stdexcept>

#include "gauram/pulse.hpp"
#include "gauram/ramanujan.hpp"
#include "gauram/specfun.hpp"

namespace gauram::modulation {

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kTwoPi = 6.283185307179586476925286766559006;
constexpr double kSqrtPi = 1.7724538509055160272981674833411452;
constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490;

void check_grm(const GrmParams& p) {
    if (p.fc <= 0.0) throw std::domain_error("grm: carrier frequency must be positive");
    if (p.t0 <= 0.0) throw std::domain_error("grm: delay must be positive");
    if (p.ts <= 0.0) throw std::domain_error("grm: repetition period must be positive");
}
}  // namespace

IQSample grm_iq(double t, double t0) {
    return {kInvSqrt2 * std::exp(-kPi * t * t),
            -kInvSqrt2 * std::exp(-kPi * (t - t0) * (t - t0))};
}

double grm_waveform(double t, const GrmParams& params) {
    check_grm(params);
    const IQSample iq = grm_iq(t, params.t0);
    const double theta = kTwoPi * params.fc * t;
    return iq.i * std::cos(theta) + iq.q * std::sin(theta);
}

double grm_waveform_canonical(double t, const GrmParams& params) {
    check_grm(params);
    const IQSample iq = grm_iq(t, params.t0);
    const std::complex<double> envelope{iq.i, iq.q};
    // Conjugate carrier: Re{(I+jQ) e^{-j theta}} = I cos(theta) + Q sin(theta),
    // which is what the direct form evaluates.
    return (envelope * std::polar(1.0, -kTwoPi * params.fc * t)).real();
}

std::complex<double> grm_spectrum(double f, const GrmParams& params) {
    check_grm(params);
    const double lobe_lo = std::exp(-kPi * (f - params.fc) * (f - params.fc));
    const double lobe_hi = std::exp(-kPi * (f + params.fc) * (f + params.fc));
    const double c = 0.5 * kInvSqrt2;
    const std::complex<double> phasor = std::polar(1.0, -(kTwoPi * f * params.t0 - 0.5 * kPi));
    return c * (lobe_lo + lobe_hi) - c * phasor * (lobe_lo - lobe_hi);
}

std::complex<double> grm_spectrum_derived(double f, const GrmParams& params) {
    check_grm(params);
    const double f_lo = f - params.fc;
    const double f_hi = f + params.fc;
    const double lobe_lo = std::exp(-kPi * f_lo * f_lo);
    const double lobe_hi = std::exp(-kPi * f_hi * f_hi);
    const double c = 0.5 * kInvSqrt2;
    const std::complex<double> j{0.0, 1.0};
    return c * (lobe_lo + lobe_hi) +
           j * c *
               (lobe_lo * std::polar(1.0, -kTwoPi * f_lo * params.t0) -
                lobe_hi * std::polar(1.0, -kTwoPi * f_hi * params.t0));
}

double grm_phase(double t, double t0) {
    return -std::atan(std::exp(kPi * (2.0 * t0 * t - t0 * t0)));
}

ModulationIndex grm_modulation_index(double t0) {
    if (t0 <= 0.0) throw std::domain_error("grm_modulation_index: t0 must be positive");
    ModulationIndex index;
    index.at_midpoint = std::abs(grm_phase(0.5 * t0, t0));  // arctan(1) = pi/4
    const int n = 4001;
    for (int i = 0; i < n; ++i) {
        const double t = -t0 + 3.0 * t0 * i / (n - 1);
        index.max_over_window = std::max(index.max_over_window, std::abs(grm_phase(t, t0)));
    }
    return index;
}

EnergyPower grm_energy_power(const GrmParams& params) {
    check_grm(params);
    // I^2 + Q^2 integrates to (1/2)(1/sqrt 2 + 1/sqrt 2) = 1/sqrt 2, delay-free.
    EnergyPower ep;
    ep.energy = kInvSqrt2;
    ep.p_avg = ep.energy / params.ts;
    return ep;
}

Bandwidth grm_bandwidth(double t_scale) {
    if (t_scale <= 0.0) throw std::domain_error("grm_bandwidth: T must be positive");
    Bandwidth bw;
    bw.f_3db = std::sqrt(std::log(2.0) / kTwoPi);
    bw.fwhm = 2.0 * bw.f_3db;
    bw.bw = bw.fwhm / t_scale;
    return bw;
}

CpmConfig make_cpm_config(double fc, double symbol_t, double h, double energy,
                          double t0, std::vector<int> bits, double kappa) {
    if (fc <= 0.0) throw std::domain_error("cpm: carrier frequency must be positive");
    if (!(symbol_t > t0 && t0 > 0.0))
        throw std::domain_error("cpm: requires T > t0 > 0");
    if (h <= 0.0) throw std::domain_error("cpm: modulation index must be positive");
    if (energy <= 0.0) throw std::domain_error("cpm: symbol energy must be positive");
    for (int b : bits)
        if (b != 1 && b != -1)
            throw std::invalid_argument("cpm: bits must be +1 or -1");

    CpmConfig config;
    config.fc = fc;
    config.symbol_t = symbol_t;
    config.h = h;
    config.energy = energy;
    config.t0 = t0;
    config.bits = std::move(bits);
    if (kappa > 0.0) {
        config.kappa = kappa;
    } else {
        const double span = specfun::erf(kSqrtPi * symbol_t) -
                            specfun::erf(kSqrtPi * (symbol_t - t0));
        config.kappa = std::sqrt(2.0) / span;
    }
    return config;
}

double grsk_freq_pulse(double t, const CpmConfig& config) {
    if (t < 0.0 || t > config.symbol_t) return 0.0;
    return (config.kappa / std::sqrt(2.0)) *
           (std::exp(-kPi * t * t) - std::exp(-kPi * (t - config.t0) * (t - config.t0)));
}

double grsk_phase_pulse(double t, const CpmConfig& config) {
    const double clamped = std::min(std::max(t, 0.0), config.symbol_t);
    return (config.kappa / (2.0 * std::sqrt(2.0))) *
           (specfun::erf(kSqrtPi * clamped) - specfun::erf(kSqrtPi * (clamped - config.t0)));
}

double grsk_phase_pulse_quadrature(double t, const CpmConfig& config,
                                   const numerics::QuadratureSettings& settings) {
    const double clamped = std::min(std::max(t, 0.0), config.symbol_t);
    if (clamped == 0.0) return 0.0;
    return numerics::integrate([&](double tau) { return grsk_freq_pulse(tau, config); },
                               0.0, clamped, settings);
}

double grsk_accumulated_phase(double t, const CpmConfig& config) {
    if (config.bits.empty())
        throw std::invalid_argument("grsk: bit sequence must be non-empty");
    double sum = 0.0;
    for (size_t k = 0; k < config.bits.size(); ++k)
        sum += config.bits[k] *
               grsk_phase_pulse(t - static_cast<double>(k) * config.symbol_t, config);
    return kTwoPi * config.h * sum;
}

std::complex<double> grsk_baseband(double t, const CpmConfig& config) {
    const double amplitude = std::sqrt(2.0 * config.energy / config.symbol_t);
    return std::polar(amplitude, grsk_accumulated_phase(t, config));
}

double grsk_waveform(double t, const CpmConfig& config) {
    const double amplitude = std::sqrt(2.0 * config.energy / config.symbol_t);
    return amplitude * std::cos(kTwoPi * config.fc * t + grsk_accumulated_phase(t, config));
}

double generalized_grsk_pulse(double t, int k, double t0, double eta) {
    if (k < 1) throw std::domain_error("generalized_grsk_pulse: order must be >= 1");
    if (eta <= 0.0) throw std::domain_error("generalized_grsk_pulse: eta must be positive");

    const ramanujan::RamanujanSequence seq = ramanujan::sequence(k);
    const int terms = ramanujan::totient(k);

    double norm_sq = 0.0;
    for (int n = 0; n < terms; ++n)
        norm_sq += seq.raw[static_cast<size_t>(n)] * seq.raw[static_cast<size_t>(n)];
    const double norm = std::sqrt(norm_sq);

    double sum = 0.0;
    for (int n = 0; n < terms; ++n) {
        const double u = (t - n * t0) / eta;
        sum += (seq.raw[static_cast<size_t>(n)] / norm) * std::exp(-kPi * u * u);
    }
    return (kSqrtPi / eta) * sum;
}

}  // namespace gauram::modulation
