#include "gauram/hilbert.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gauram/pulse.hpp"
#include "gauram/specfun.hpp"

namespace gauram::hilbert {

namespace {
constexpr double kSqrtPi = 1.7724538509055160272981674833411452;
constexpr double kTwoOverSqrtPi = 1.1283791670955125738961589031215452;
// sqrt(2/pi)
constexpr double kSqrtTwoOverPi = 0.7978845608028653558798921198687637;
}  // namespace

double hilbert_gp(double t) { return kTwoOverSqrtPi * specfun::dawson(kSqrtPi * t); }

double hilbert_gr1(double t, double t0) {
    return kSqrtTwoOverPi *
           (specfun::dawson(kSqrtPi * t) - specfun::dawson(kSqrtPi * (t - t0)));
}

std::complex<double> analytic_signal_gp(double t) {
    return {pulse::gp(t), hilbert_gp(t)};
}

std::complex<double> analytic_signal(double t, double t0) {
    return {pulse::eval(pulse::first_order(t0), t), hilbert_gr1(t, t0)};
}

double ht_orthogonality_defect(double t0, const numerics::QuadratureSettings& settings) {
    if (t0 <= 0.0) throw std::domain_error("ht_orthogonality_defect: t0 must be positive");
    const pulse::GauRamSpec spec = pulse::first_order(t0);
    const double inf = std::numeric_limits<double>::infinity();
    return numerics::integrate(
        [&](double t) { return pulse::eval(spec, t) * hilbert_gr1(t, t0); }, -inf, inf,
        settings);
}

double ht_orthogonality_defect_gp(const numerics::QuadratureSettings& settings) {
    const double inf = std::numeric_limits<double>::infinity();
    return numerics::integrate([](double t) { return pulse::gp(t) * hilbert_gp(t); },
                               -inf, inf, settings);
}

}  // namespace gauram::hilbert
