#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gauram/numerics.hpp"
#include "gauram/specfun.hpp"

namespace gauram::pulse {

/// Normalized Gaussian pulse exp(-pi t^2): unit area, peak 1 at t = 0.
double gp(double t);

/// Delayed Gaussian pulse gp(t - t0).
double dgp(double t, double t0);

enum class GauRamOrder { zeroth, first, second, third, generalized };

/// A weighted sum of shifted Gaussians
///   sum_k w_k * (sqrt(pi)/eta)^s * exp(-pi (t - delay_k)^2 / eta^2),
/// where s = 1 only for the amplitude-scaled shift-keying family.
struct GauRamSpec {
    std::vector<double> weights;
    std::vector<double> delays;
    double t0 = 0.0;
    double width_eta = 1.0;
    GauRamOrder label = GauRamOrder::generalized;
    bool scaled_amplitude = false;
};

/// weights {1/sqrt(2), -1/sqrt(2)}, delays {0, t0}.
GauRamSpec first_order(double t0);
/// weights {1, -1/2, -1/2}, delays {0, t0, 2 t0}.
GauRamSpec second_order(double t0);
/// weights {1/sqrt(2), -1/sqrt(2)}, delays {0, 2 t0}.
GauRamSpec third_order(double t0);
/// Single unit-weight Gaussian.
GauRamSpec zeroth_order();

double eval(const GauRamSpec& spec, double t);

/// Gaussian/delayed-Gaussian inner product (1/sqrt(2)) exp(-pi t0^2 / 2).
double overlap_closed_form(double t0);

/// Inverts overlap_closed_form: the delay giving overlap epsilon,
/// t0 = 2 sigma sqrt(-ln(sqrt(2) epsilon)). Requires 0 < epsilon < 1/sqrt(2).
double delay_for_overlap(double epsilon, double sigma = 0.3989422804014327);

/// Mean overlap for a delay jittered uniformly on [t0 - delta, t0 + delta]:
///   [Q(sqrt(pi)(t0 - delta)) - Q(sqrt(pi)(t0 + delta))] / (2 delta).
/// delta must be positive; use overlap_closed_form for the jitter-free case.
double mean_overlap_exact(double t0, double delta);

/// Closed-form approximation of the mean overlap,
///   (1/delta) exp(-(a pi t0^2 + a pi delta^2 + b sqrt(pi) t0 + c))
///           * sinh(2 a pi t0 delta + b sqrt(pi) delta)
/// with (a, b, c) the Q-approximation constants.
double mean_overlap_approx(double t0, double delta,
                           const specfun::QApproxConstants& constants = {});

struct OverlapReport {
    double t0 = 0.0;
    double delta = 0.0;
    double exact = 0.0;        // Q-function form
    double approx = 0.0;       // sinh approximation
    double oracle = 0.0;       // direct quadrature of the averaged overlap
    double percent_error_approx_vs_exact = 0.0;
    // Seeded Monte-Carlo estimate of the same average, with its standard error.
    double monte_carlo = 0.0;
    double monte_carlo_std_error = 0.0;
};

OverlapReport overlap_report(double t0, double delta, std::uint64_t seed,
                             std::size_t mc_samples = 100000);

}  // namespace gauram::pulse
