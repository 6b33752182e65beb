#pragma once

#include <complex>

#include "anzb/interval.hpp"

namespace anzb {

/// The Poisson kernel h(x) = (1/2)/(1/4 + x^2).
double h_poisson(double x);
Interval h_poisson(const Interval& x, mpfr_prec_t prec);
/// Fourier transform of the Poisson kernel: pi e^{-pi |xi|}.
double ft_poisson(double xi);

enum class Sign { plus, minus };
enum class Form { ratio, product };

/// Parameters of the extremal majorant (plus) / minorant (minus) of the
/// Poisson kernel with Fourier support in [-delta, delta].
struct ExtremalParams {
    double delta;
    Sign sign;

    /// normalization c = (e^{pi delta/2} -+ e^{-pi delta/2})^2
    double c() const;
};

/// h_delta^{+-}(x). Ratio form: h(x) (2 cosh(pi delta) - 2 cos(2 pi delta x))/c;
/// product form: (2/c) prod_{+-} sin(pi delta(x +- i/2))/(x +- i/2).
double h_extremal(const ExtremalParams& p, double x, Form form = Form::ratio);
Interval h_extremal(const ExtremalParams& p, const Interval& x, mpfr_prec_t prec);

/// Product-form evaluation at a complex argument (the ratio form has
/// removable singularities at z = +-i/2).
std::complex<double> h_extremal(const ExtremalParams& p, std::complex<double> z);

/// Closed-form Fourier transform: 2 pi sinh(pi(delta - |xi|))/c on
/// [-delta, delta], zero outside.
double ft_extremal(const ExtremalParams& p, double xi);

/// Pointwise bound for |d/dx h(x)|.
double h_deriv_bound(double x);
/// Pointwise bound for |d/dx h_delta^{+-}(x)|.
double h_extremal_deriv_bound(const ExtremalParams& p, double x);

struct SandwichReport {
    long grid_size = 0;
    // smallest certified slack of the strict inequalities away from nodes
    double min_slack = 0.0;
};

/// Checks 0 <= h^- <= h <= h^+ on a dense grid of [-50, 50]; switches to
/// interval enclosures near the tangency nodes. minorant_scale != 1 is a
/// fault-injection hook. Throws VerificationFailed with a witness.
SandwichReport sandwich_selftest(const ExtremalParams& p, long grid_size = 20000,
                                 double minorant_scale = 1.0);

struct FtCheckReport {
    double numeric = 0.0;
    double closed = 0.0;
    double budget = 0.0;  // quadrature estimate + truncation tail
};

/// Compares adaptive quadrature of the transform integral against the closed
/// form at one frequency. Throws VerificationFailed on disagreement beyond
/// the returned budget.
FtCheckReport ft_selftest(const ExtremalParams& p, double xi, double quad_tol = 1e-10);

}  // namespace anzb
