#pragma once

#include <complex>
#include <vector>

#include "gauram/numerics.hpp"

namespace gauram::modulation {

/// Continuous-wave scheme: Gaussian pulse on the in-phase carrier, negated
/// delayed pulse on the quadrature carrier.
struct GrmParams {
    double fc = 1.0;  // carrier, Hz
    double t0 = 1.0;  // pulse delay, s
    double ts = 1.0;  // repetition period, s (average-power accounting)
};

struct IQSample {
    double i = 0.0;
    double q = 0.0;
};

/// I(t) = (1/sqrt(2)) exp(-pi t^2); Q(t) = -(1/sqrt(2)) exp(-pi (t-t0)^2).
IQSample grm_iq(double t, double t0);

/// Bandpass waveform I(t) cos(2 pi fc t) + Q(t) sin(2 pi fc t).
double grm_waveform(double t, const GrmParams& params);

/// Same waveform through the complex-envelope route
/// Re{(I + jQ) exp(-j 2 pi fc t)}; agrees with grm_waveform to rounding.
double grm_waveform_canonical(double t, const GrmParams& params);

/// Closed-form passband spectrum with the delay phasor applied at the
/// output frequency:
///   (1/(2 sqrt 2)) [G(f-fc) + G(f+fc)]
///   - (1/(2 sqrt 2)) exp(-j(2 pi f t0 - pi/2)) [G(f-fc) - G(f+fc)].
/// See grm_spectrum_derived for the variant that transforms the waveform
/// exactly; the two differ by carrier-phase factors on the shifted lobe.
std::complex<double> grm_spectrum(double f, const GrmParams& params);

/// Exact transform of grm_waveform:
///   (1/(2 sqrt 2)) [G(f-fc) + G(f+fc)]
///   + (j/(2 sqrt 2)) [G(f-fc) e^{-j 2 pi (f-fc) t0} - G(f+fc) e^{-j 2 pi (f+fc) t0}].
std::complex<double> grm_spectrum_derived(double f, const GrmParams& params);

/// Envelope phase -arctan(exp(pi (2 t0 t - t0^2))), in (-pi/2, 0).
double grm_phase(double t, double t0);

struct ModulationIndex {
    // |phase| at the pulse-crossing point t = t0/2; always pi/4.
    double at_midpoint = 0.0;
    // Numeric max of |phase| over t in [-t0, 2 t0]; exceeds pi/4 since the
    // phase keeps growing toward pi/2 after the crossing.
    double max_over_window = 0.0;
};

ModulationIndex grm_modulation_index(double t0);

struct EnergyPower {
    double energy = 0.0;  // envelope energy, exactly 1/sqrt(2)
    double p_avg = 0.0;   // energy / ts
};

EnergyPower grm_energy_power(const GrmParams& params);

struct Bandwidth {
    double f_3db = 0.0;  // sqrt(ln 2 / (2 pi))
    double fwhm = 0.0;   // 2 f_3db
    double bw = 0.0;     // fwhm / T
};

Bandwidth grm_bandwidth(double t_scale = 1.0);

/// Continuous-phase modulation configuration for the shift-keying scheme.
struct CpmConfig {
    double fc = 1.0;       // carrier, Hz
    double symbol_t = 1.0; // symbol duration T, with T > t0
    double h = 0.5;        // modulation index
    double energy = 1.0;   // symbol energy E
    double t0 = 0.5;       // pulse delay
    double kappa = 1.0;    // frequency-pulse normalization
    std::vector<int> bits; // +1/-1 symbols
};

/// Validates fields and, when kappa <= 0 is passed, picks the default
/// kappa = sqrt(2) / [erf(sqrt(pi) T) - erf(sqrt(pi) (T - t0))] so the
/// closed-form phase pulse reaches 1/2 at t = T.
CpmConfig make_cpm_config(double fc, double symbol_t, double h, double energy,
                          double t0, std::vector<int> bits, double kappa = 0.0);

/// Frequency pulse (kappa/sqrt(2)) (e^{-pi t^2} - e^{-pi (t-t0)^2}) on [0, T],
/// zero outside.
double grsk_freq_pulse(double t, const CpmConfig& config);

/// Closed-form phase pulse
///   q(t) = (kappa/(2 sqrt 2)) [erf(sqrt(pi) t) - erf(sqrt(pi) (t - t0))],
/// clamped to its boundary values outside [0, T]. Note q(0) is nonzero: the
/// closed form omits the erf(sqrt(pi) t0) constant relative to the running
/// integral of the frequency pulse (see grsk_phase_pulse_quadrature).
double grsk_phase_pulse(double t, const CpmConfig& config);

/// Running integral of grsk_freq_pulse from 0 to t by quadrature; differs
/// from grsk_phase_pulse by the constant (kappa/(2 sqrt 2)) erf(sqrt(pi) t0).
double grsk_phase_pulse_quadrature(double t, const CpmConfig& config,
                                   const numerics::QuadratureSettings& settings = {});

/// Accumulated phase 2 pi h * sum_k d_k q(t - kT) over the whole burst;
/// every symbol contributes through the clamped phase pulse at all t, which
/// keeps the accumulated phase continuous (past symbols sit at q(T), future
/// ones at q(0)).
double grsk_accumulated_phase(double t, const CpmConfig& config);

/// Complex baseband sqrt(2E/T) exp(j accumulated phase); constant modulus.
std::complex<double> grsk_baseband(double t, const CpmConfig& config);

/// Bandpass waveform sqrt(2E/T) cos(2 pi fc t + accumulated phase).
double grsk_waveform(double t, const CpmConfig& config);

/// Totient-indexed pulse family
///   sum_{n=0..phi(k)-1} (r_k(n)/||r_k||) (sqrt(pi)/eta) e^{-pi (t-n t0)^2/eta^2},
/// where r_k(n) are the period-k sums and the norm runs over the phi(k)
/// summed coefficients only.
double generalized_grsk_pulse(double t, int k, double t0, double eta);

}  // namespace gauram::modulation
