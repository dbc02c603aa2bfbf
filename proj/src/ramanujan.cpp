#include "gauram/ramanujan.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gauram::ramanujan {

namespace {

constexpr int kMaxPeriod = 10000;  // direct evaluation stays cheap up to here
constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_period(int period) {
    if (period < 1) throw std::domain_error("ramanujan: period must be >= 1");
    if (period > kMaxPeriod) throw std::domain_error("ramanujan: period exceeds supported cap");
}

}  // namespace

double ramanujan_sum(int period, long long m) {
    check_period(period);
    // Reduce m into [0, R) so the angle products stay small and exact.
    const long long r = period;
    const long long m_mod = ((m % r) + r) % r;

    double re = 0.0;
    double im = 0.0;
    for (long long k = 1; k <= r; ++k) {
        if (std::gcd(k, r) != 1) continue;
        const double angle = kTwoPi * static_cast<double>((k * m_mod) % r) / static_cast<double>(r);
        re += std::cos(angle);
        im += std::sin(angle);
    }
    if (std::abs(im) > 1e-9)
        throw std::runtime_error("ramanujan_sum: imaginary part failed to vanish");
    return re;
}

int totient(int k) {
    if (k < 1) throw std::domain_error("totient: argument must be >= 1");
    int count = 0;
    for (int n = 1; n <= k; ++n)
        if (std::gcd(n, k) == 1) ++count;
    return count;
}

RamanujanSequence sequence(int period) {
    check_period(period);
    RamanujanSequence seq;
    seq.period = period;
    seq.raw.resize(static_cast<size_t>(period));

    double norm_sq = 0.0;
    for (int m = 0; m < period; ++m) {
        const double value = ramanujan_sum(period, m);
        const double rounded = std::round(value);
        if (std::abs(value - rounded) > 1e-9)
            throw std::runtime_error("sequence: sum is not integer-valued");
        seq.raw[static_cast<size_t>(m)] = rounded;
        norm_sq += rounded * rounded;
    }

    const double norm = std::sqrt(norm_sq);
    seq.weights.resize(seq.raw.size());
    for (size_t i = 0; i < seq.raw.size(); ++i) seq.weights[i] = seq.raw[i] / norm;
    return seq;
}

std::vector<double> RamanujanSequence::peak_normalized() const {
    // raw[0] = totient(period) >= 1, never zero.
    std::vector<double> out(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) out[i] = raw[i] / raw[0];
    return out;
}

double orthogonality_defect(int period1, int period2) {
    check_period(period1);
    check_period(period2);
    if (period1 == period2)
        throw std::domain_error("orthogonality_defect: periods must differ");

    const RamanujanSequence s1 = sequence(period1);
    const RamanujanSequence s2 = sequence(period2);
    const long long window = std::lcm<long long>(period1, period2);

    double sum = 0.0;
    for (long long n = 0; n < window; ++n)
        sum += s1.raw[static_cast<size_t>(n % period1)] * s2.raw[static_cast<size_t>(n % period2)];
    return sum;
}

}  // namespace gauram::ramanujan
