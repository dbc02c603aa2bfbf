#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "gauram/modulation.hpp"
#include "gauram/numerics.hpp"
#include "gauram/specfun.hpp"
#include "oracles.hpp"

using namespace gauram;
using namespace gauram::modulation;

namespace {
constexpr double kPi = oracles::kPi;
constexpr double kInf = std::numeric_limits<double>::infinity();

CpmConfig test_config() {
    return make_cpm_config(4.0, 1.0, 0.5, 1.0, 0.5,
                           {+1, -1, -1, +1, -1, +1, +1, -1});
}
}  // namespace

TEST_CASE("iq components carry the expected signs and values") {
    const IQSample iq = grm_iq(0.0, 1.8);
    CHECK(iq.i == doctest::Approx(0.70711).epsilon(1e-5));
    CHECK(iq.q == doctest::Approx(-0.70711 * std::exp(-kPi * 3.24)).epsilon(1e-5));

    for (double t : {-2.0, 0.0, 0.9, 3.5}) {
        const IQSample s = grm_iq(t, 1.8);
        CHECK(s.i > 0.0);
        CHECK(s.q < 0.0);
    }

    // At the midpoint both envelope terms coincide: I^2 + Q^2 = e^{-pi t0^2/2}.
    const IQSample mid = grm_iq(0.9, 1.8);
    CHECK(mid.i * mid.i + mid.q * mid.q ==
          doctest::Approx(std::exp(-0.5 * kPi * 1.8 * 1.8)).epsilon(1e-14));
}

TEST_CASE("direct and complex-envelope waveforms agree to rounding") {
    GrmParams params;
    params.fc = 4.0;
    params.t0 = 1.8;
    params.ts = 1.0;

    CHECK(grm_waveform(0.0, params) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

    for (int i = 0; i < 1000; ++i) {
        const double t = -3.0 + 8.0 * i / 999;
        CHECK(std::abs(grm_waveform(t, params) - grm_waveform_canonical(t, params)) <= 1e-14);
    }
}

TEST_CASE("waveform is bounded by its envelope") {
    GrmParams params;
    params.fc = 4.0;
    params.t0 = 1.8;
    for (int i = 0; i < 2000; ++i) {
        const double t = -3.0 + 8.0 * i / 1999;
        const IQSample iq = grm_iq(t, params.t0);
        const double envelope = std::sqrt(iq.i * iq.i + iq.q * iq.q);
        CHECK(std::abs(grm_waveform(t, params)) <= envelope + 1e-15);
    }
}

TEST_CASE("envelope identity from the two Gaussian terms") {
    for (int i = 0; i <= 500; ++i) {
        const double t = -2.0 + 6.0 * i / 500;
        const IQSample iq = grm_iq(t, 1.8);
        const double expected =
            0.5 * (std::exp(-2.0 * kPi * t * t) +
                   std::exp(-2.0 * kPi * (t - 1.8) * (t - 1.8)));
        CHECK(std::abs(iq.i * iq.i + iq.q * iq.q - expected) <= 1e-14);
    }
}

TEST_CASE("derived passband spectrum matches the sampled transform near the carrier") {
    GrmParams params;
    params.fc = 4.0;
    params.t0 = 1.8;

    const double peak = std::abs(grm_spectrum_derived(params.fc, params));
    for (double f : {3.2, 3.7, 4.0, 4.3, 4.8, -4.0, -3.6}) {
        const auto oracle = oracles::sampled_transform(
            [&](double t) { return grm_waveform(t, params); }, f, -12.0, 13.8, 10321);
        const auto closed = grm_spectrum_derived(f, params);
        CHECK(std::abs(closed - oracle) <= 1e-5 * peak);
    }
}

TEST_CASE("printed-form spectrum: substitution value and hermitian symmetry") {
    GrmParams params;
    params.fc = 4.0;
    params.t0 = 1.8;

    // With the far lobe negligible the value reduces to
    // (1/(2 sqrt 2)) (1 - e^{-j(2 pi fc t0 - pi/2)}).
    const std::complex<double> at_carrier = grm_spectrum(params.fc, params);
    const std::complex<double> reduced =
        (1.0 / (2.0 * std::sqrt(2.0))) *
        (1.0 - std::polar(1.0, -(2.0 * kPi * params.fc * params.t0 - 0.5 * kPi)));
    CHECK(std::abs(at_carrier - reduced) <= 1e-12);

    for (double f : {0.3, 1.1, 3.9, 4.2}) {
        const std::complex<double> pos = grm_spectrum(f, params);
        const std::complex<double> neg = grm_spectrum(-f, params);
        CHECK(std::abs(neg - std::conj(pos)) <= 1e-12);
    }

    // The derived form is hermitian too.
    for (double f : {0.3, 3.9}) {
        CHECK(std::abs(grm_spectrum_derived(-f, params) -
                       std::conj(grm_spectrum_derived(f, params))) <= 1e-12);
    }
}

TEST_CASE("envelope phase values and limits") {
    CHECK(grm_phase(0.9, 1.8) == doctest::Approx(-kPi / 4.0).epsilon(1e-15));
    CHECK(std::abs(grm_phase(-5.0, 1.8)) < 1e-6);
    CHECK(grm_phase(0.0, 1.8) == doctest::Approx(-std::exp(-kPi * 3.24)).epsilon(1e-4));
    for (double t : {-1.0, 0.0, 0.9, 2.0}) {
        CHECK(grm_phase(t, 1.8) < 0.0);
        CHECK(grm_phase(t, 1.8) > -0.5 * kPi);
    }
    // Far past the crossing the exponent saturates arctan; the value rounds
    // to -pi/2 at double precision but never passes it.
    CHECK(grm_phase(5.0, 1.8) >= -0.5 * kPi);
    CHECK(grm_phase(5.0, 1.8) < -1.57);
}

TEST_CASE("modulation index: pi/4 at the midpoint, larger over the window") {
    for (double t0 : {0.5, 1.8, 2.45}) {
        const ModulationIndex index = grm_modulation_index(t0);
        CHECK(index.at_midpoint == doctest::Approx(kPi / 4.0).epsilon(1e-15));
        CHECK(index.max_over_window > index.at_midpoint);
        CHECK(index.max_over_window <= 0.5 * kPi);
    }
}

TEST_CASE("energy is 1/sqrt(2), independent of delay; power divides by Ts") {
    for (double t0 : {0.5, 1.8, 3.0}) {
        GrmParams params;
        params.fc = 1.0;
        params.t0 = t0;
        params.ts = 1.0;
        const EnergyPower ep = grm_energy_power(params);
        CHECK(ep.energy == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
        CHECK(ep.p_avg == doctest::Approx(ep.energy).epsilon(1e-15));

        const double quadrature = numerics::integrate(
            [t0](double t) {
                const IQSample iq = grm_iq(t, t0);
                return iq.i * iq.i + iq.q * iq.q;
            },
            -kInf, kInf);
        CHECK(std::abs(ep.energy - quadrature) <= 1e-10);
    }

    GrmParams params;
    params.ts = 2.0;
    CHECK(grm_energy_power(params).p_avg ==
          doctest::Approx(0.5 / std::sqrt(2.0)).epsilon(1e-15));
    params.ts = -1.0;
    CHECK_THROWS_AS(grm_energy_power(params), std::domain_error);
}

TEST_CASE("bandwidth figures") {
    const Bandwidth bw = grm_bandwidth();
    CHECK(bw.f_3db == doctest::Approx(std::sqrt(std::log(2.0) / (2.0 * kPi))).epsilon(1e-15));
    CHECK(bw.f_3db == doctest::Approx(0.33214123513).epsilon(1e-10));
    CHECK(bw.fwhm == doctest::Approx(2.0 * bw.f_3db).epsilon(1e-15));
    CHECK(grm_bandwidth(2.0).bw == doctest::Approx(bw.f_3db).epsilon(1e-15));
    CHECK_THROWS_AS(grm_bandwidth(0.0), std::domain_error);
}

TEST_CASE("cpm config validation and default kappa") {
    CHECK_THROWS_AS(make_cpm_config(4.0, 0.4, 0.5, 1.0, 0.5, {1}), std::domain_error);
    CHECK_THROWS_AS(make_cpm_config(4.0, 1.0, 0.5, 1.0, 0.5, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(make_cpm_config(4.0, 1.0, -0.5, 1.0, 0.5, {1}), std::domain_error);

    const CpmConfig config = test_config();
    // Default kappa makes the closed-form phase pulse end at 1/2.
    CHECK(grsk_phase_pulse(config.symbol_t, config) == doctest::Approx(0.5).epsilon(1e-12));

    const CpmConfig manual = make_cpm_config(4.0, 1.0, 0.5, 1.0, 0.5, {1}, 1.0);
    CHECK(manual.kappa == 1.0);
}

TEST_CASE("frequency pulse support and antisymmetry") {
    const CpmConfig config = test_config();
    CHECK(grsk_freq_pulse(-0.1, config) == 0.0);
    CHECK(grsk_freq_pulse(config.symbol_t + 0.1, config) == 0.0);
    CHECK(std::abs(grsk_freq_pulse(0.25, config)) <= 1e-15);  // midpoint of {0, t0}

    const CpmConfig unit = make_cpm_config(4.0, 2.0, 0.5, 1.0, 1.0, {1}, 1.0);
    const double expected = (1.0 - std::exp(-kPi)) / std::sqrt(2.0);
    CHECK(grsk_freq_pulse(0.0, unit) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(expected == doctest::Approx(0.67655).epsilon(1e-4));
}

TEST_CASE("phase pulse closed form vs quadrature differs by the erf constant") {
    const CpmConfig unit = make_cpm_config(4.0, 2.0, 0.5, 1.0, 1.0, {1}, 1.0);

    // t = 0 value is (kappa/(2 sqrt 2)) erf(sqrt(pi) t0), not zero.
    const double at_zero = (1.0 / (2.0 * std::sqrt(2.0))) * specfun::erf(std::sqrt(kPi));
    CHECK(grsk_phase_pulse(0.0, unit) == doctest::Approx(at_zero).epsilon(1e-14));

    const double at_t0 = grsk_phase_pulse(1.0, unit);
    CHECK(at_t0 == doctest::Approx((1.0 / (2.0 * std::sqrt(2.0))) *
                                   specfun::erf(std::sqrt(kPi)))
                       .epsilon(1e-14));
    CHECK(at_t0 == doctest::Approx(0.34920).epsilon(1e-4));

    const double constant = (unit.kappa / (2.0 * std::sqrt(2.0))) *
                            specfun::erf(std::sqrt(kPi) * unit.t0);
    for (double t : {0.2, 0.6, 1.0, 1.5, 2.0}) {
        const double closed = grsk_phase_pulse(t, unit);
        const double integral = grsk_phase_pulse_quadrature(t, unit);
        CHECK(std::abs((closed - integral) - constant) <= 1e-9);
    }

    // Clamping outside the symbol window.
    CHECK(grsk_phase_pulse(-1.0, unit) == grsk_phase_pulse(0.0, unit));
    CHECK(grsk_phase_pulse(5.0, unit) == grsk_phase_pulse(2.0, unit));
}

TEST_CASE("phase pulse is monotone where the frequency pulse is positive") {
    const CpmConfig config = test_config();
    double prev = grsk_phase_pulse(0.0, config);
    for (int i = 1; i <= 100; ++i) {
        const double t = 0.5 * config.t0 * i / 100;  // first half: positive lobe only
        const double cur = grsk_phase_pulse(t, config);
        CHECK(cur >= prev - 1e-15);
        prev = cur;
    }
}

TEST_CASE("grsk waveform: constant envelope over an 8-symbol burst") {
    const CpmConfig config = test_config();
    const double expected_sq = 2.0 * config.energy / config.symbol_t;
    for (int i = 0; i <= 5000; ++i) {
        const double t = -1.0 + 10.0 * i / 5000;
        const std::complex<double> baseband = grsk_baseband(t, config);
        CHECK(std::abs(std::norm(baseband) - expected_sq) <= 1e-12);
    }
}

TEST_CASE("grsk accumulated phase is continuous across symbol boundaries") {
    const CpmConfig config = test_config();
    const double step = 1e-4 * config.symbol_t;

    // Bound the phase slope by its analytic derivative 2 pi h sum |g(t - kT)|;
    // supports do not overlap, so one symbol contributes at any t.
    double max_slope = 0.0;
    for (int i = 0; i <= 20000; ++i) {
        const double t = i * config.symbol_t / 20000.0;
        max_slope = std::max(max_slope,
                             2.0 * kPi * config.h * std::abs(grsk_freq_pulse(t, config)));
    }
    const double bound = max_slope * step;

    double max_jump = 0.0;
    const int n_bits = static_cast<int>(config.bits.size());
    const double t_lo = -0.5;
    const double t_hi = n_bits * config.symbol_t + 0.5;
    double prev = grsk_accumulated_phase(t_lo, config);
    for (double t = t_lo + step; t <= t_hi; t += step) {
        const double cur = grsk_accumulated_phase(t, config);
        max_jump = std::max(max_jump, std::abs(cur - prev));
        prev = cur;
    }
    CHECK(max_jump <= 1.05 * bound);
    CHECK(max_jump <= 10.0 * bound);  // no discontinuity anywhere near the bound
}

TEST_CASE("waveform amplitude never exceeds sqrt(2E/T)") {
    const CpmConfig config = test_config();
    const double amplitude = std::sqrt(2.0 * config.energy / config.symbol_t);
    double observed_peak = 0.0;
    for (int i = 0; i <= 20000; ++i) {
        const double t = -1.0 + 10.0 * i / 20000;
        const double s = grsk_waveform(t, config);
        CHECK(std::abs(s) <= amplitude + 1e-14);
        observed_peak = std::max(observed_peak, std::abs(s));
    }
    CHECK(observed_peak == doctest::Approx(amplitude).epsilon(1e-4));
}

TEST_CASE("steady-state regularity for the all-ones stream at h = 1/2") {
    const CpmConfig config = make_cpm_config(4.0, 1.0, 0.5, 1.0, 0.5,
                                             {+1, +1, +1, +1, +1, +1});
    // At a fixed offset into each symbol the increment between consecutive
    // symbols is 2 pi h (q(T) - q(0)), identical across symbols.
    for (double offset : {0.1, 0.45, 0.8}) {
        std::vector<double> increments;
        for (int k = 0; k + 1 < 6; ++k) {
            const double a = grsk_accumulated_phase(k * config.symbol_t + offset, config);
            const double b =
                grsk_accumulated_phase((k + 1) * config.symbol_t + offset, config);
            increments.push_back(b - a);
        }
        for (size_t i = 1; i < increments.size(); ++i)
            CHECK(increments[i] == doctest::Approx(increments[0]).epsilon(1e-12));
    }

    CpmConfig empty = config;
    empty.bits.clear();
    CHECK_THROWS_AS(grsk_accumulated_phase(0.0, empty), std::invalid_argument);
}

TEST_CASE("generalized pulse family from totient-indexed weights") {
    // Order 1: single Gaussian with peak sqrt(pi)/eta.
    CHECK(generalized_grsk_pulse(0.0, 1, 1.0, 1.0) ==
          doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
    CHECK(generalized_grsk_pulse(0.0, 1, 1.0, 2.0) ==
          doctest::Approx(0.5 * std::sqrt(kPi)).epsilon(1e-14));

    // Order 2 has totient(2) = 1 summed coefficient, so it degenerates to the
    // same single Gaussian (the two-term antisymmetric shape would need the
    // full period-2 sequence).
    for (double t : {-0.5, 0.0, 0.7})
        CHECK(generalized_grsk_pulse(t, 2, 1.0, 1.0) ==
              doctest::Approx(generalized_grsk_pulse(t, 1, 1.0, 1.0)).epsilon(1e-14));

    // Order 4: coefficients {2, 0} with norm 2, again one Gaussian.
    for (double t : {-0.5, 0.0, 0.7, 1.3})
        CHECK(generalized_grsk_pulse(t, 4, 1.0, 1.0) ==
              doctest::Approx(std::sqrt(kPi) * std::exp(-kPi * t * t)).epsilon(1e-13));

    // Order 6: coefficients {2, 1} with norm sqrt(5); two genuine terms.
    const double expected6 =
        (2.0 / std::sqrt(5.0)) * std::sqrt(kPi) * std::exp(-kPi * 0.25) +
        (1.0 / std::sqrt(5.0)) * std::sqrt(kPi) * std::exp(-kPi * 0.25);
    CHECK(generalized_grsk_pulse(0.5, 6, 1.0, 1.0) ==
          doctest::Approx(expected6).epsilon(1e-13));

    CHECK_THROWS_AS(generalized_grsk_pulse(0.0, 0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(generalized_grsk_pulse(0.0, 2, 1.0, -1.0), std::domain_error);
}
