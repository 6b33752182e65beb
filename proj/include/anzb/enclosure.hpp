#pragma once

#include <cmath>
#include <complex>

namespace anzb {

/// Scalar value with a rigorous absolute error bound: the exact quantity
/// lies in [value - err, value + err]. Fast-path companion of Interval.
struct Enclosure {
    double value = 0.0;
    double err = 0.0;

    Enclosure() = default;
    Enclosure(double v, double e) : value(v), err(e) {}

    double lo() const { return value - err; }
    double hi() const { return value + err; }
    bool consistent_with(double x) const { return std::abs(value - x) <= err; }
};

inline Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    return {a.value + b.value, a.err + b.err + 1e-15 * std::abs(a.value + b.value)};
}
inline Enclosure operator-(const Enclosure& a, const Enclosure& b) {
    return {a.value - b.value, a.err + b.err + 1e-15 * std::abs(a.value - b.value)};
}

/// Complex value with one shared absolute error radius.
struct ComplexEnclosure {
    std::complex<double> value{0.0, 0.0};
    double err = 0.0;

    ComplexEnclosure() = default;
    ComplexEnclosure(std::complex<double> v, double e) : value(v), err(e) {}

    Enclosure real() const { return {value.real(), err}; }
    Enclosure imag() const { return {value.imag(), err}; }
    Enclosure magnitude() const { return {std::abs(value), err}; }
};

}  // namespace anzb
