#pragma once

#include <functional>

#include "anzb/enclosure.hpp"

namespace anzb {

/// 20-point Gauss-Legendre rule on [a, b].
double gauss_legendre(const std::function<double(double)>& f, double a, double b);

/// Integral over [a, b] by panelled Gauss-Legendre with doubling: panels are
/// split until two consecutive refinements agree to tol; the error estimate
/// is the last observed change times a safety factor of 10.
Enclosure integrate(const std::function<double(double)>& f, double a, double b,
                    double tol = 1e-10, int max_doublings = 18);

}  // namespace anzb
