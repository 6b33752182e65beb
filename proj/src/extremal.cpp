#include "anzb/extremal.hpp"

#include <cmath>
#include <string>

#include "anzb/quadrature.hpp"

namespace anzb {

double h_poisson(double x) { return 0.5 / (0.25 + x * x); }

Interval h_poisson(const Interval& x, mpfr_prec_t prec) {
    Interval xx = x.with_prec(prec);
    return Interval::point(0.5, prec) / (Interval::point(0.25, prec) + pow_int(xx, 2));
}

double ft_poisson(double xi) { return M_PI * std::exp(-M_PI * std::abs(xi)); }

double ExtremalParams::c() const {
    double e = std::exp(M_PI * delta / 2.0);
    double b = (sign == Sign::plus) ? e - 1.0 / e : e + 1.0 / e;
    return b * b;
}

double h_extremal(const ExtremalParams& p, double x, Form form) {
    if (p.delta <= 0.0) throw DomainError("h_extremal: delta must be positive");
    if (form == Form::ratio) {
        double num = 2.0 * std::cosh(M_PI * p.delta) - 2.0 * std::cos(2.0 * M_PI * p.delta * x);
        return h_poisson(x) * num / p.c();
    }
    return h_extremal(p, std::complex<double>(x, 0.0)).real();
}

Interval h_extremal(const ExtremalParams& p, const Interval& x, mpfr_prec_t prec) {
    if (p.delta <= 0.0) throw DomainError("h_extremal: delta must be positive");
    Interval xx = x.with_prec(prec);
    Interval pd = Interval::pi(prec) * Interval::point(p.delta, prec);
    Interval num = 2.0 * cosh(pd) - 2.0 * cos(2.0 * pd * xx);
    Interval e = exp(pd / 2.0);
    Interval b = (p.sign == Sign::plus) ? e - 1.0 / e : e + 1.0 / e;
    return h_poisson(xx, prec) * num / pow_int(b, 2);
}

namespace {

// sin(w z)/z continued through z = 0
std::complex<double> sinc_factor(double w, std::complex<double> z) {
    if (std::abs(z) < 1e-8) {
        // sin(wz)/z = w - w^3 z^2/6 + O(z^4)
        return w - w * w * w * z * z / 6.0;
    }
    return std::sin(w * z) / z;
}

}  // namespace

std::complex<double> h_extremal(const ExtremalParams& p, std::complex<double> z) {
    if (p.delta <= 0.0) throw DomainError("h_extremal: delta must be positive");
    const double w = M_PI * p.delta;
    const std::complex<double> i_half(0.0, 0.5);
    return 2.0 / p.c() * sinc_factor(w, z + i_half) * sinc_factor(w, z - i_half);
}

double ft_extremal(const ExtremalParams& p, double xi) {
    if (p.delta <= 0.0) throw DomainError("ft_extremal: delta must be positive");
    double a = std::abs(xi);
    if (a >= p.delta) return 0.0;
    return 2.0 * M_PI * std::sinh(M_PI * (p.delta - a)) / p.c();
}

double h_deriv_bound(double x) {
    double d = 0.25 + x * x;
    return std::abs(x) / (d * d);
}

double h_extremal_deriv_bound(const ExtremalParams& p, double x) {
    double g = 2.0 * std::cosh(M_PI * p.delta) + 2.0;
    return (h_deriv_bound(x) * g + h_poisson(x) * 4.0 * M_PI * p.delta) / p.c();
}

SandwichReport sandwich_selftest(const ExtremalParams& p, long grid_size, double minorant_scale) {
    const double X = 50.0;
    const ExtremalParams plus{p.delta, Sign::plus};
    const ExtremalParams minus{p.delta, Sign::minus};
    const double node_radius = 0.01 / p.delta;
    SandwichReport rep;
    rep.grid_size = grid_size;
    rep.min_slack = HUGE_VAL;
    auto fail = [](const char* what, double x) {
        throw VerificationFailed(std::string("sandwich violated (") + what +
                                 ") at x = " + std::to_string(x));
    };
    for (long i = 0; i <= grid_size; ++i) {
        double x = -X + 2.0 * X * static_cast<double>(i) / static_cast<double>(grid_size);
        // distance to the nearest tangency node k/delta or (k+1/2)/delta
        double q = std::abs(x) * p.delta;
        double d_plus = std::abs(q - std::round(q)) / p.delta;
        double d_minus = std::abs(q - 0.5 - std::floor(q)) / p.delta;
        double hp = h_extremal(plus, x);
        double hm = minorant_scale * h_extremal(minus, x);
        double hh = h_poisson(x);
        if (hm < -1e-15) fail("minorant negative", x);
        if (d_plus < node_radius || d_minus < node_radius) {
            // cancellation zone: certify with interval enclosures instead
            Interval xi = Interval::point(x, 192);
            Interval dp = h_extremal(plus, xi, 192) - h_poisson(xi, 192);
            Interval dm = h_poisson(xi, 192) -
                          Interval::point(minorant_scale, 192) * h_extremal(minus, xi, 192);
            if (dp.hi_d() < 0.0) fail("majorant", x);
            if (dm.hi_d() < 0.0) fail("minorant", x);
        } else {
            if (hp < hh) fail("majorant", x);
            if (hh < hm) fail("minorant", x);
            rep.min_slack = std::min(rep.min_slack, std::min(hp - hh, hh - hm));
        }
    }
    return rep;
}

FtCheckReport ft_selftest(const ExtremalParams& p, double xi, double quad_tol) {
    // h_delta^{+-} is even, so the transform reduces to a cosine integral
    const double X = std::max(2000.0, 200.0 / (1.0 + std::abs(xi)));
    auto integrand = [&](double x) {
        return h_extremal(p, x) * std::cos(2.0 * M_PI * xi * x);
    };
    Enclosure quad = integrate(integrand, 0.0, X, quad_tol / 4.0);
    double numeric = 2.0 * quad.value;
    // |h_delta(x)| <= (2 cosh(pi delta)+2)/c * 1/(2x^2) gives the tail
    double tail = 2.0 * (2.0 * std::cosh(M_PI * p.delta) + 2.0) / p.c() / (2.0 * X);
    FtCheckReport rep;
    rep.numeric = numeric;
    rep.closed = ft_extremal(p, xi);
    rep.budget = 2.0 * quad.err + tail + quad_tol;
    if (std::abs(rep.numeric - rep.closed) > rep.budget)
        throw VerificationFailed("transform check failed at xi = " + std::to_string(xi));
    return rep;
}

}  // namespace anzb
