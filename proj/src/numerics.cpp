#include "gauram/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gauram::numerics {

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (QUADPACK dqk15).
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
// 7-point Gauss weights; nonzero only on the odd Kronrod nodes.
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct PanelResult {
    double value;
    double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double kronrod = kKronrodWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double pair = f(center + dx) + f(center - dx);
        kronrod += kKronrodWeights[i] * pair;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    // |K15 - G7| strongly overestimates the K15 error; used as a safe bound.
    return {kronrod, std::abs(kronrod - gauss)};
}

struct Panel {
    double a, b;
    double value, error;
    int depth;
};

double adaptive(const std::function<double(double)>& f, double a, double b,
                const QuadratureSettings& settings) {
    // Seed with panels of width <= 1 so no O(1)-wide feature can fall
    // between the nodes of a single wide panel and be mistaken for zero.
    const int n_seed = std::min(static_cast<int>(std::ceil(b - a)) + 1, 16384);
    std::vector<Panel> work;
    work.reserve(static_cast<size_t>(n_seed));
    for (int i = 0; i < n_seed; ++i) {
        const double lo = a + (b - a) * i / n_seed;
        const double hi = a + (b - a) * (i + 1) / n_seed;
        PanelResult seed = gk15(f, lo, hi);
        work.push_back({lo, hi, seed.value, seed.error, 0});
    }
    double accepted = 0.0;

    while (!work.empty()) {
        Panel p = work.back();
        work.pop_back();

        // Per-panel budget proportional to the panel's share of the interval,
        // so accepted errors sum to at most abs_tol.
        const double budget = settings.abs_tol * (p.b - p.a) / (b - a);
        if (p.error <= budget) {
            accepted += p.value;
            continue;
        }
        if (p.depth >= settings.max_subdivisions) {
            double pending = accepted + p.value;
            for (const Panel& q : work) pending += q.value;
            throw quadrature_error("quadrature did not converge", pending);
        }
        const double mid = 0.5 * (p.a + p.b);
        PanelResult left = gk15(f, p.a, mid);
        PanelResult right = gk15(f, mid, p.b);
        work.push_back({p.a, mid, left.value, left.error, p.depth + 1});
        work.push_back({mid, p.b, right.value, right.error, p.depth + 1});
    }
    return accepted;
}

// Expands outward from `from` in chunks until |f| stays below abs_tol/10
// across a whole chunk. direction is +1 or -1.
double find_cutoff(const std::function<double(double)>& f, double from, int direction,
                   const QuadratureSettings& settings) {
    const double threshold = settings.abs_tol / 10.0;
    const double chunk = settings.infinite_tail_cutoff;
    const int probes_per_chunk = 17;
    const int max_chunks = 256;

    double lo = from;
    for (int k = 0; k < max_chunks; ++k) {
        const double hi = lo + direction * chunk;
        double peak = 0.0;
        for (int i = 0; i <= probes_per_chunk; ++i) {
            const double t = lo + (hi - lo) * i / probes_per_chunk;
            peak = std::max(peak, std::abs(f(t)));
        }
        if (peak < threshold) return hi;
        lo = hi;
    }
    throw quadrature_error("integrand tail did not decay below cutoff threshold", 0.0);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSettings& settings) {
    if (settings.abs_tol <= 0) throw std::domain_error("integrate: abs_tol must be positive");
    if (settings.max_subdivisions < 1)
        throw std::domain_error("integrate: max_subdivisions must be >= 1");
    if (std::isnan(a) || std::isnan(b)) throw std::domain_error("integrate: NaN endpoint");
    if (a == b) return 0.0;
    if (a > b) return -integrate(f, b, a, settings);

    double lo = a;
    double hi = b;
    if (std::isinf(lo) && std::isinf(hi)) {
        lo = find_cutoff(f, 0.0, -1, settings);
        hi = find_cutoff(f, 0.0, +1, settings);
    } else if (std::isinf(lo)) {
        lo = find_cutoff(f, std::min(hi, 0.0), -1, settings);
    } else if (std::isinf(hi)) {
        hi = find_cutoff(f, std::max(lo, 0.0), +1, settings);
    }
    return adaptive(f, lo, hi, settings);
}

double inner_product(const std::function<double(double)>& f,
                     const std::function<double(double)>& g,
                     const QuadratureSettings& settings) {
    const double inf = std::numeric_limits<double>::infinity();
    return integrate([&](double t) { return f(t) * g(t); }, -inf, inf, settings);
}

std::vector<double> uniform_random(std::uint64_t seed, double lo, double hi, std::size_t n) {
    if (!(lo < hi)) throw std::domain_error("uniform_random: requires lo < hi");
    if (n == 0) throw std::domain_error("uniform_random: requires n >= 1");
    std::vector<double> out(n);
    std::uint64_t state = seed;
    for (std::size_t i = 0; i < n; ++i) {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        z ^= z >> 31;
        const double u = static_cast<double>(z >> 11) * 0x1.0p-53;
        out[i] = lo + u * (hi - lo);
    }
    return out;
}

}  // namespace gauram::numerics
