#pragma once

namespace gauram::specfun {

/// Constants of the exponential right-tail approximation
/// Q(y) ~ exp(-(alpha*y^2 + beta*y + gamma)), fitted by least squares.
struct QApproxConstants {
    double alpha = 0.3842;
    double beta = 0.7640;
    double gamma = 0.6964;
};

/// Error function (2/sqrt(pi)) * integral of exp(-u^2) over [0, x].
double erf(double x);

/// Complementary error function 1 - erf(x).
double erfc(double x);

/// Imaginary error function (2/sqrt(pi)) * integral of exp(+s^2) over [0, x].
/// Evaluated by its own power series, independent of dawson().
double erfi(double x);

/// Dawson's function D+(x) = exp(-x^2) * integral of exp(u^2) over [0, x].
/// Maclaurin series for |x| <= 1, exponentially sampled series for the
/// mid range, asymptotic series for |x| >= 7.
double dawson(double x);

/// Gaussian right-tail probability Q(y) = erfc(y/sqrt(2)) / 2.
double q_function(double y);

/// exp(-(alpha*y^2 + beta*y + gamma)); valid on the right tail y >= 0.
double q_approx(double y, const QApproxConstants& constants = {});

}  // namespace gauram::specfun
