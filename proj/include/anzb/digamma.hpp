#pragma once

#include <complex>

#include "anzb/enclosure.hpp"
#include "anzb/real.hpp"

namespace anzb {

enum class DigammaMode { exact, stirling };

/// Main term and error radius of the two-term Stirling form
/// Re Gamma'/Gamma(z) = log|z| - (1/2) Re(1/z) + O*(1/(4|z|^2)), Re z >= 0.
struct StirlingBudget {
    std::complex<double> z;
    double main;
    double err;  // = 1/(4|z|^2)
};

StirlingBudget stirling_re_digamma(std::complex<double> z);

/// Complex digamma by recurrence into |z| >= 16 plus the asymptotic series,
/// with a rigorous tail bound folded into the enclosure.
ComplexEnclosure digamma(std::complex<double> z);

/// Re Gamma'/Gamma(z). exact: reference evaluation; stirling: the two-term
/// Stirling form with its O* radius as the error.
Enclosure re_digamma(std::complex<double> z, DigammaMode mode = DigammaMode::exact);

}  // namespace anzb
