#include "gauram/pulse.hpp"

#include <cmath>
#include <stdexcept>

namespace gauram::pulse {

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490;
constexpr double kSqrtPi = 1.7724538509055160272981674833411452;
}  // namespace

double gp(double t) { return std::exp(-kPi * t * t); }

double dgp(double t, double t0) { return gp(t - t0); }

GauRamSpec first_order(double t0) {
    return {{kInvSqrt2, -kInvSqrt2}, {0.0, t0}, t0, 1.0, GauRamOrder::first, false};
}

GauRamSpec second_order(double t0) {
    return {{1.0, -0.5, -0.5}, {0.0, t0, 2.0 * t0}, t0, 1.0, GauRamOrder::second, false};
}

GauRamSpec third_order(double t0) {
    return {{kInvSqrt2, -kInvSqrt2}, {0.0, 2.0 * t0}, t0, 1.0, GauRamOrder::third, false};
}

GauRamSpec zeroth_order() {
    return {{1.0}, {0.0}, 0.0, 1.0, GauRamOrder::zeroth, false};
}

double eval(const GauRamSpec& spec, double t) {
    if (spec.weights.size() != spec.delays.size() || spec.weights.empty())
        throw std::invalid_argument("eval: weights and delays must have equal nonzero length");
    if (spec.width_eta <= 0.0) throw std::domain_error("eval: width_eta must be positive");

    const double eta = spec.width_eta;
    const double amplitude = spec.scaled_amplitude ? kSqrtPi / eta : 1.0;
    double sum = 0.0;
    for (size_t k = 0; k < spec.weights.size(); ++k) {
        const double u = (t - spec.delays[k]) / eta;
        sum += spec.weights[k] * std::exp(-kPi * u * u);
    }
    return amplitude * sum;
}

double overlap_closed_form(double t0) {
    if (t0 < 0.0) throw std::domain_error("overlap_closed_form: delay must be >= 0");
    return kInvSqrt2 * std::exp(-0.5 * kPi * t0 * t0);
}

double delay_for_overlap(double epsilon, double sigma) {
    if (epsilon <= 0.0) throw std::domain_error("delay_for_overlap: overlap must be positive");
    if (epsilon >= kInvSqrt2)
        throw std::domain_error("delay_for_overlap: overlap must be below 1/sqrt(2)");
    return 2.0 * sigma * std::sqrt(-std::log(std::sqrt(2.0) * epsilon));
}

double mean_overlap_exact(double t0, double delta) {
    if (delta <= 0.0) throw std::domain_error("mean_overlap_exact: delta must be positive");
    const double lo = specfun::q_function(kSqrtPi * (t0 - delta));
    const double hi = specfun::q_function(kSqrtPi * (t0 + delta));
    return (lo - hi) / (2.0 * delta);
}

double mean_overlap_approx(double t0, double delta, const specfun::QApproxConstants& c) {
    if (delta <= 0.0) throw std::domain_error("mean_overlap_approx: delta must be positive");
    const double envelope =
        std::exp(-(c.alpha * kPi * t0 * t0 + c.alpha * kPi * delta * delta +
                   c.beta * kSqrtPi * t0 + c.gamma));
    const double argument = 2.0 * c.alpha * kPi * t0 * delta + c.beta * kSqrtPi * delta;
    return envelope * std::sinh(argument) / delta;
}

OverlapReport overlap_report(double t0, double delta, std::uint64_t seed,
                             std::size_t mc_samples) {
    OverlapReport report;
    report.t0 = t0;
    report.delta = delta;
    report.exact = mean_overlap_exact(t0, delta);
    report.approx = mean_overlap_approx(t0, delta);
    report.percent_error_approx_vs_exact =
        100.0 * std::abs(report.approx - report.exact) / report.exact;

    // Quadrature route: (1/(2 delta sqrt(2))) * integral of exp(-pi tau^2 / 2)
    // over [t0 - delta, t0 + delta].
    report.oracle = numerics::integrate(
                        [](double tau) { return kInvSqrt2 * std::exp(-0.5 * kPi * tau * tau); },
                        t0 - delta, t0 + delta) /
                    (2.0 * delta);

    if (mc_samples > 0) {
        const std::vector<double> draws =
            numerics::uniform_random(seed, t0 - delta, t0 + delta, mc_samples);
        double mean = 0.0;
        double mean_sq = 0.0;
        for (double tau : draws) {
            const double value = kInvSqrt2 * std::exp(-0.5 * kPi * tau * tau);
            mean += value;
            mean_sq += value * value;
        }
        const double n = static_cast<double>(mc_samples);
        mean /= n;
        const double variance = mean_sq / n - mean * mean;
        report.monte_carlo = mean;
        report.monte_carlo_std_error = std::sqrt(std::max(variance, 0.0) / n);
    }
    return report;
}

}  // namespace gauram::pulse
