#include "anzb/digamma.hpp"

#include <cmath>

namespace anzb {

namespace {

// B_{2k}/(2k) for the asymptotic series, k = 1..8
constexpr double kB2kOver2k[] = {
    1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240, 1.0 / 132, -691.0 / 32760, 1.0 / 12, -3617.0 / 8160,
};
constexpr double kB18Over18 = 43867.0 / 798 / 18;  // first omitted coefficient

}  // namespace

StirlingBudget stirling_re_digamma(std::complex<double> z) {
    if (z.real() < 0) throw DomainError("stirling_re_digamma: requires Re z >= 0");
    double n2 = std::norm(z);
    return {z, std::log(std::abs(z)) - 0.5 * (z.real() / n2), 0.25 / n2};
}

ComplexEnclosure digamma(std::complex<double> z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw DomainError("digamma: pole at nonpositive integer");
    if (z.real() < 0) throw DomainError("digamma: requires Re z >= 0");

    std::complex<double> shift(0.0, 0.0);
    double shift_mag = 0.0;
    while (std::abs(z) < 16.0) {
        shift -= 1.0 / z;
        shift_mag += 1.0 / std::abs(z);
        z += 1.0;
    }
    std::complex<double> inv2 = 1.0 / (z * z);
    std::complex<double> series(0.0, 0.0), zpow = inv2;
    for (double c : kB2kOver2k) {
        series += c * zpow;
        zpow *= inv2;
    }
    std::complex<double> val = std::log(z) - 0.5 / z - series + shift;

    // Tail of the asymptotic series: |R| <= |B18/18| / |z|^18 * sec(arg z / 2)^18.
    // Re z >= 0 gives |arg z| <= pi/2, so the secant factor is at most 2^9.
    double tail = kB18Over18 * 512.0 / std::pow(std::abs(z), 18.0);
    double round = 1e-15 * (std::abs(val) + shift_mag + 4.0);
    return {val, tail + round};
}

Enclosure re_digamma(std::complex<double> z, DigammaMode mode) {
    if (mode == DigammaMode::stirling) {
        StirlingBudget b = stirling_re_digamma(z);
        return {b.main, b.err};
    }
    ComplexEnclosure d = digamma(z);
    return d.real();
}

}  // namespace anzb
