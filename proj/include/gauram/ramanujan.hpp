#pragma once

#include <vector>

namespace gauram::ramanujan {

/// One period of a Ramanujan sum with its normalized weights.
struct RamanujanSequence {
    int period = 0;
    // S_R(0..R-1); sums of roots of unity over a reduced residue system,
    // always integer-valued, stored exactly after integrality is checked.
    std::vector<double> raw;
    // raw scaled to unit L2 norm over one period.
    std::vector<double> weights;

    // raw scaled so the m = 0 component equals 1 (equivalently raw / totient).
    std::vector<double> peak_normalized() const;
};

/// S_R(m): real part of the sum of exp(j 2 pi k m / R) over k in [1, R]
/// coprime to R. The imaginary part is checked to vanish.
double ramanujan_sum(int period, long long m);

/// Euler's totient: count of n in [1, k] with gcd(n, k) = 1.
int totient(int k);

/// Builds one period of S_R with unit-norm weights.
RamanujanSequence sequence(int period);

/// Sum of S_R1(n) * S_R2(n) over one LCM(R1, R2) window; zero for R1 != R2.
double orthogonality_defect(int period1, int period2);

}  // namespace gauram::ramanujan
