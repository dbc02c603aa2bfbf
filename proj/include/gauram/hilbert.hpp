#pragma once

#include <complex>

#include "gauram/numerics.hpp"

namespace gauram::hilbert {

/// Hilbert transform of the Gaussian pulse: (2/sqrt(pi)) D+(sqrt(pi) t).
/// Odd, decays like 1/(pi t); closed form, no frequency-domain numerics.
double hilbert_gp(double t);

/// Hilbert transform of the first-order pulse:
/// sqrt(2/pi) [D+(sqrt(pi) t) - D+(sqrt(pi) (t - t0))].
double hilbert_gr1(double t, double t0);

/// gp(t) + j hilbert_gp(t).
std::complex<double> analytic_signal_gp(double t);

/// First-order pulse + j its Hilbert transform.
std::complex<double> analytic_signal(double t, double t0);

/// Quadrature value of the inner product of the first-order pulse with its
/// Hilbert transform; vanishes for any finite-energy real signal.
double ht_orthogonality_defect(double t0,
                               const numerics::QuadratureSettings& settings = {});

/// Same defect for the plain Gaussian pulse (odd integrand, exactly zero).
double ht_orthogonality_defect_gp(const numerics::QuadratureSettings& settings = {});

}  // namespace gauram::hilbert
