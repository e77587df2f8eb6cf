#pragma once

#include <utility>

#include "collatz/constants.hpp"

namespace collatz {

// The entropy-like objective phi(x,y) = S ln S - x ln x - y ln y - z ln z,
// z = 1 - a x - b y, S = x + y + z, maximized over the open triangle
// x > 0, y > 0, z > 0. Its maximum scales the counting exponent w0.

struct StationaryPoint {
    double x0 = 0, y0 = 0, z0 = 0;
    double w0 = 0;        // 0.2405 * phi(x0, y0)
    double residual = 0;  // max |gradient component| at (x0, y0)
    double a = 0, b = 0;
    int iterations = 0;
};

/// phi at a strictly interior point; throws std::domain_error otherwise.
double phi(double x, double y, double a = kOddIndexCoeff, double b = kEvenIndexCoeff);

/// Analytic gradient ((1-a) ln S - ln x + a ln z, (1-b) ln S - ln y + b ln z).
std::pair<double, double> phi_grad(double x, double y, double a = kOddIndexCoeff,
                                   double b = kEvenIndexCoeff);

/// Symmetric Hessian of phi, row-major {dxx, dxy, dxy, dyy}.
struct Hessian {
    double dxx = 0, dxy = 0, dyy = 0;
};
Hessian phi_hessian(double x, double y, double a = kOddIndexCoeff, double b = kEvenIndexCoeff);

/// Damped Newton solve of grad phi = 0 from the triangle centroid
/// (1/(3a), 1/(3b)); steps are clipped to stay interior and halved until the
/// residual decreases. Throws std::runtime_error with the iterate trace on
/// non-convergence.
StationaryPoint solve_stationary(double a = kOddIndexCoeff, double b = kEvenIndexCoeff,
                                 double tol = 1e-12, int max_iterations = 200);

/// Same solve from a caller-chosen interior start (used for multistart).
StationaryPoint solve_stationary_from(double x_start, double y_start, double a, double b,
                                      double tol = 1e-12, int max_iterations = 200);

/// The counting exponent 0.2405 * phi at the stationary point.
double counting_exponent(double a = kOddIndexCoeff, double b = kEvenIndexCoeff);

}  // namespace collatz
