#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace gauram::numerics {

/// Uniform sampling grid with inclusive endpoints.
/// Samples are exactly t_start + i*step for i in [0, n_points).
struct Grid {
    double t_start;
    double t_end;
    int n_points;

    Grid(double start, double end, int n) : t_start(start), t_end(end), n_points(n) {
        if (!(end > start)) throw std::domain_error("Grid: t_end must exceed t_start");
        if (n < 2) throw std::domain_error("Grid: n_points must be >= 2");
    }

    double step() const { return (t_end - t_start) / (n_points - 1); }
    double at(int i) const { return t_start + i * step(); }

    std::vector<double> points() const {
        std::vector<double> p(static_cast<size_t>(n_points));
        for (int i = 0; i < n_points; ++i) p[static_cast<size_t>(i)] = at(i);
        return p;
    }
};

/// Real samples on a uniform grid.
struct SampledSignal {
    Grid grid;
    std::vector<double> values;
};

struct QuadratureSettings {
    double abs_tol = 1e-10;
    int max_subdivisions = 60;
    // For infinite endpoints the integration window is grown outward in
    // chunks of this many width units until |f| drops below abs_tol/10.
    double infinite_tail_cutoff = 10.0;
};

/// Thrown when the adaptive scheme cannot reach abs_tol; carries the
/// best estimate obtained so far.
class quadrature_error : public std::runtime_error {
public:
    quadrature_error(const std::string& what, double estimate)
        : std::runtime_error(what), estimate_(estimate) {}
    double estimate() const { return estimate_; }

private:
    double estimate_;
};

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over [a, b].
/// a and b may be +/-infinity; the window is then truncated where the
/// integrand has decayed below abs_tol/10 (Gaussian-envelope contract).
/// Reversed limits negate the result.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSettings& settings = {});

/// integral of f(t)*g(t) over the real line.
double inner_product(const std::function<double(double)>& f,
                     const std::function<double(double)>& g,
                     const QuadratureSettings& settings = {});

/// Deterministic uniform draws on [lo, hi) from the SplitMix64 recurrence:
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   z ^= z >> 31
///   u = (z >> 11) * 2^-53
/// Same seed, same sequence, on every platform.
std::vector<double> uniform_random(std::uint64_t seed, double lo, double hi, std::size_t n);

}  // namespace gauram::numerics
