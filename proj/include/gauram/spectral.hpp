#pragma once

#include <complex>
#include <limits>
#include <vector>

namespace gauram::spectral {

// Transform convention used throughout: X(f) = integral of x(t) exp(-j 2 pi f t) dt,
// under which exp(-pi t^2) maps to exp(-pi f^2).

struct SpectrumPoint {
    double f = 0.0;
    std::complex<double> value{0.0, 0.0};
    double magnitude = 0.0;
    double phase = 0.0;
    // Filled by normalized_psd; NaN until then.
    double psd_db = std::numeric_limits<double>::quiet_NaN();
};

/// Spectrum of the first-order pulse: (G(f)/sqrt(2)) (1 - exp(-j 2 pi f t0)),
/// G(f) = exp(-pi f^2).
std::complex<double> gr1_spectrum(double f, double t0);

/// sqrt(2) G(f) |sin(pi f t0)|, identically |gr1_spectrum|.
double gr1_magnitude(double f, double t0);

/// Unwrapped phase -pi f t0 + pi/2. Throws where the magnitude vanishes
/// (f t0 an exact integer), where phase is undefined.
double gr1_phase(double f, double t0);

/// Constant group delay t0/2, from tau_g = -(1/2pi) dpsi/df.
double group_delay(double t0);

/// Gaussian shift-keying frequency pulse (sqrt(pi)/rho) exp(-pi t^2 / rho^2).
double gmsk_pulse(double t, double rho);

/// Width parameter from a bandwidth-time product: rho = sqrt(ln 2) / (pi bt).
double gmsk_rho_from_bt(double bt);

/// Difference-of-Gaussians shift-keying pulse
/// (1/sqrt(2)) (sqrt(pi)/eta) [exp(-pi t^2/eta^2) - exp(-pi (t-t0)^2/eta^2)].
double grsk_pulse(double t, double eta, double t0);

enum class PulseKind { gmsk, grsk };

struct PulseParams {
    double rho = 1.0;  // gmsk width
    double eta = 1.0;  // grsk width
    double t0 = 0.0;   // grsk delay
};

/// Closed-form transforms of the shift-keying pulses:
///   gmsk -> sqrt(pi) exp(-pi rho^2 f^2)
///   grsk -> (sqrt(pi)/sqrt(2)) exp(-pi eta^2 f^2) (1 - exp(-j 2 pi f t0))
std::complex<double> pulse_spectrum_analytic(PulseKind kind, double f,
                                             const PulseParams& params);
std::complex<double> gmsk_spectrum(double f, double rho);
std::complex<double> grsk_spectrum(double f, double eta, double t0);

/// Fills psd_db with 10 log10(|X|^2 / max |X|^2); the peak lands at 0 dB
/// exactly and vanishing bins are clamped at floor_db.
std::vector<SpectrumPoint> normalized_psd(std::vector<SpectrumPoint> samples,
                                          double floor_db = -200.0);

/// Harmonics m/t0 in (0, f_max], ascending.
std::vector<double> null_frequencies(double t0, double f_max);

}  // namespace gauram::spectral
