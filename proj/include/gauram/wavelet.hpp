#pragma once

#include "gauram/numerics.hpp"

namespace gauram::wavelet {

/// Unit-energy scaling for the difference-of-Gaussians mother wavelet:
/// B = 1 / sqrt(sqrt(2) (1 - exp(-pi t0^2 / 2))).
double normalization_constant(double t0);

/// psi(t) = B [exp(-pi t^2) - exp(-pi (t - t0)^2)]; zero mean, unit energy.
double psi_gr(double t, double t0);

/// First-order Hermite wavelet sqrt(2) pi^(-1/4) t exp(-t^2/2); unit energy.
double psi_hermite(double t);

/// (1 - tau^2/2) exp(-tau^2/4).
double autocorr_hermite(double tau);

/// [2 e^{-(pi/2) tau^2} - e^{-(pi/2)(tau-t0)^2} - e^{-(pi/2)(tau+t0)^2}]
///   / (2 (1 - e^{-pi t0^2/2})).
double autocorr_gr(double tau, double t0);

enum class WaveletKind { hermite, gauram };

/// Joint time-frequency localization, computed by quadrature.
struct WaveletMetrics {
    double delta_t = 0.0;           // sqrt of the uncentered second moment
    double delta_t_centered = 0.0;  // spread about the energy centroid
    double delta_omega = 0.0;       // via the derivative identity int |psi'|^2 dt
    double product = 0.0;           // delta_t * delta_omega
    double energy = 0.0;            // int |psi|^2 dt
    double mean_value = 0.0;        // int psi dt
};

WaveletMetrics tf_metrics(WaveletKind kind, double t0 = 1.0,
                          const numerics::QuadratureSettings& settings = {});

/// Independent route for delta_omega^2: quadrature of the closed-form
/// energy spectrum, int (2 pi f)^2 |Psi(f)|^2 df. Cross-checks the
/// derivative identity used by tf_metrics.
double delta_omega_sq_frequency_domain(WaveletKind kind, double t0 = 1.0,
                                       const numerics::QuadratureSettings& settings = {});

}  // namespace gauram::wavelet
