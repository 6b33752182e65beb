#include "anzb/interval.hpp"

#include <algorithm>
#include <cmath>

namespace anzb {

namespace {

mpfr_prec_t pmax(const Interval& a, const Interval& b) {
    return std::max(a.prec(), b.prec());
}

Interval make_raw(mpfr_prec_t prec) { return Interval(Real(prec), Real(prec)); }

}  // namespace

Interval::Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!(lo_.is_nan() || hi_.is_nan()) && lo_ > hi_)
        throw DomainError("Interval: lo > hi");
}

Interval Interval::point(double x, mpfr_prec_t prec) {
    return Interval(Real(x, prec), Real(x, prec));
}

Interval Interval::point(const Real& x) { return Interval(x, x); }

Interval Interval::make(double lo, double hi, mpfr_prec_t prec) {
    return Interval(Real(lo, prec), Real(hi, prec));
}

Interval Interval::parse(const std::string& s, mpfr_prec_t prec) {
    return Interval(Real(s, prec, MPFR_RNDD), Real(s, prec, MPFR_RNDU));
}

Interval Interval::pi(mpfr_prec_t prec) {
    return Interval(Real::pi(prec, MPFR_RNDD), Real::pi(prec, MPFR_RNDU));
}

Interval Interval::euler_gamma(mpfr_prec_t prec) {
    return Interval(Real::euler_gamma(prec, MPFR_RNDD), Real::euler_gamma(prec, MPFR_RNDU));
}

Interval Interval::entire(mpfr_prec_t prec) {
    return Interval(Real::inf(prec, -1), Real::inf(prec, 1));
}

double Interval::width() const {
    Real w(prec());
    mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
    return w.to_double(MPFR_RNDU);
}

Real Interval::mid() const {
    Real m(prec());
    mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
    mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
    return m;
}

std::string Interval::str(int digits) const {
    return "[" + lo_.str(digits) + ", " + hi_.str(digits) + "]";
}

Interval Interval::with_prec(mpfr_prec_t prec) const {
    Real lo(prec), hi(prec);
    mpfr_set(lo.raw(), lo_.raw(), MPFR_RNDD);
    mpfr_set(hi.raw(), hi_.raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval operator+(const Interval& a, const Interval& b) {
    Interval r = make_raw(pmax(a, b));
    Real lo(r.prec()), hi(r.prec());
    mpfr_add(lo.raw(), a.lo().raw(), b.lo().raw(), MPFR_RNDD);
    mpfr_add(hi.raw(), a.hi().raw(), b.hi().raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval operator-(const Interval& a, const Interval& b) {
    Real lo(pmax(a, b)), hi(pmax(a, b));
    mpfr_sub(lo.raw(), a.lo().raw(), b.hi().raw(), MPFR_RNDD);
    mpfr_sub(hi.raw(), a.hi().raw(), b.lo().raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval operator-(const Interval& a) {
    Real lo(a.prec()), hi(a.prec());
    mpfr_neg(lo.raw(), a.hi().raw(), MPFR_RNDD);
    mpfr_neg(hi.raw(), a.lo().raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval operator*(const Interval& a, const Interval& b) {
    mpfr_prec_t p = pmax(a, b);
    Real lo(p), hi(p), t(p);
    mpfr_srcptr as[2] = {a.lo().raw(), a.hi().raw()};
    mpfr_srcptr bs[2] = {b.lo().raw(), b.hi().raw()};
    bool first = true;
    for (auto x : as)
        for (auto y : bs) {
            mpfr_mul(t.raw(), x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t.raw(), lo.raw()) < 0) mpfr_set(lo.raw(), t.raw(), MPFR_RNDD);
            mpfr_mul(t.raw(), x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t.raw(), hi.raw()) > 0) mpfr_set(hi.raw(), t.raw(), MPFR_RNDU);
            first = false;
        }
    return Interval(std::move(lo), std::move(hi));
}

Interval operator/(const Interval& a, const Interval& b) {
    mpfr_prec_t p = pmax(a, b);
    if (b.lo().sign() <= 0 && b.hi().sign() >= 0) return Interval::entire(p);
    Real lo(p), hi(p), t(p);
    mpfr_srcptr as[2] = {a.lo().raw(), a.hi().raw()};
    mpfr_srcptr bs[2] = {b.lo().raw(), b.hi().raw()};
    bool first = true;
    for (auto x : as)
        for (auto y : bs) {
            mpfr_div(t.raw(), x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t.raw(), lo.raw()) < 0) mpfr_set(lo.raw(), t.raw(), MPFR_RNDD);
            mpfr_div(t.raw(), x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t.raw(), hi.raw()) > 0) mpfr_set(hi.raw(), t.raw(), MPFR_RNDU);
            first = false;
        }
    return Interval(std::move(lo), std::move(hi));
}

Interval operator+(const Interval& a, double b) { return a + Interval::point(b, a.prec()); }
Interval operator+(double a, const Interval& b) { return Interval::point(a, b.prec()) + b; }
Interval operator-(const Interval& a, double b) { return a - Interval::point(b, a.prec()); }
Interval operator-(double a, const Interval& b) { return Interval::point(a, b.prec()) - b; }
Interval operator*(const Interval& a, double b) { return a * Interval::point(b, a.prec()); }
Interval operator*(double a, const Interval& b) { return Interval::point(a, b.prec()) * b; }
Interval operator/(const Interval& a, double b) { return a / Interval::point(b, a.prec()); }
Interval operator/(double a, const Interval& b) { return Interval::point(a, b.prec()) / b; }

namespace {

using unary_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

// For monotone increasing elementary functions.
Interval monotone_inc(const Interval& x, unary_fn f) {
    Real lo(x.prec()), hi(x.prec());
    f(lo.raw(), x.lo().raw(), MPFR_RNDD);
    f(hi.raw(), x.hi().raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

}  // namespace

Interval exp(const Interval& x) { return monotone_inc(x, mpfr_exp); }
Interval sinh(const Interval& x) { return monotone_inc(x, mpfr_sinh); }
Interval tanh(const Interval& x) { return monotone_inc(x, mpfr_tanh); }

Interval log(const Interval& x) {
    if (x.hi().sign() <= 0) throw DomainError("log: nonpositive interval");
    Real lo(x.prec()), hi(x.prec());
    if (x.lo().sign() <= 0)
        mpfr_set_inf(lo.raw(), -1);
    else
        mpfr_log(lo.raw(), x.lo().raw(), MPFR_RNDD);
    mpfr_log(hi.raw(), x.hi().raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval sqrt(const Interval& x) {
    if (x.hi().sign() < 0) throw DomainError("sqrt: negative interval");
    Real lo(x.prec()), hi(x.prec());
    if (x.lo().sign() < 0)
        mpfr_set_zero(lo.raw(), 1);
    else
        mpfr_sqrt(lo.raw(), x.lo().raw(), MPFR_RNDD);
    mpfr_sqrt(hi.raw(), x.hi().raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval cosh(const Interval& x) {
    Real lo(x.prec()), hi(x.prec());
    if (x.lo().sign() <= 0 && x.hi().sign() >= 0) {
        mpfr_set_ui(lo.raw(), 1, MPFR_RNDD);
        Real a(x.prec()), b(x.prec());
        mpfr_cosh(a.raw(), x.lo().raw(), MPFR_RNDU);
        mpfr_cosh(b.raw(), x.hi().raw(), MPFR_RNDU);
        mpfr_max(hi.raw(), a.raw(), b.raw(), MPFR_RNDU);
    } else if (x.lo().sign() > 0) {
        mpfr_cosh(lo.raw(), x.lo().raw(), MPFR_RNDD);
        mpfr_cosh(hi.raw(), x.hi().raw(), MPFR_RNDU);
    } else {
        mpfr_cosh(lo.raw(), x.hi().raw(), MPFR_RNDD);
        mpfr_cosh(hi.raw(), x.lo().raw(), MPFR_RNDU);
    }
    return Interval(std::move(lo), std::move(hi));
}

namespace {

// Shared logic for sin/cos. `phase` shifts the critical-point lattice:
// cos has maxima at 2k*pi, minima at (2k+1)*pi; sin(x) = cos(x - pi/2).
Interval trig(const Interval& x, bool is_sin) {
    mpfr_prec_t p = std::max<mpfr_prec_t>(x.prec(), 64) + 16;
    if (x.width() >= 7.0 || x.lo().is_inf() || x.hi().is_inf())
        return Interval::make(-1.0, 1.0, x.prec());

    unary_fn f = is_sin ? static_cast<unary_fn>(mpfr_sin) : static_cast<unary_fn>(mpfr_cos);
    Real a(x.prec()), b(x.prec()), lo(x.prec()), hi(x.prec());
    f(a.raw(), x.lo().raw(), MPFR_RNDD);
    f(b.raw(), x.lo().raw(), MPFR_RNDU);
    f(lo.raw(), x.hi().raw(), MPFR_RNDD);
    f(hi.raw(), x.hi().raw(), MPFR_RNDU);
    mpfr_min(lo.raw(), lo.raw(), a.raw(), MPFR_RNDD);
    mpfr_max(hi.raw(), hi.raw(), b.raw(), MPFR_RNDU);

    // Critical points of cos at k*pi; of sin at (k + 1/2)*pi.
    Real q(p);
    Real pi_lo = Real::pi(p, MPFR_RNDD), pi_hi = Real::pi(p, MPFR_RNDU);
    mpfr_div(q.raw(), x.lo().raw(), pi_lo.raw(), MPFR_RNDD);
    if (is_sin) mpfr_sub_d(q.raw(), q.raw(), 0.5, MPFR_RNDD);
    long klo = mpfr_get_si(q.raw(), MPFR_RNDD) - 1;
    mpfr_div(q.raw(), x.hi().raw(), pi_lo.raw(), MPFR_RNDU);
    if (is_sin) mpfr_sub_d(q.raw(), q.raw(), 0.5, MPFR_RNDU);
    long khi = mpfr_get_si(q.raw(), MPFR_RNDU) + 1;
    for (long k = klo; k <= khi; ++k) {
        // enclosure of the critical point
        Real clo(p), chi(p);
        if (is_sin) {
            mpfr_mul_d(clo.raw(), (k >= 0 ? pi_lo : pi_hi).raw(), k + 0.5, MPFR_RNDD);
            mpfr_mul_d(chi.raw(), (k >= 0 ? pi_hi : pi_lo).raw(), k + 0.5, MPFR_RNDU);
        } else {
            mpfr_mul_si(clo.raw(), (k >= 0 ? pi_lo : pi_hi).raw(), k, MPFR_RNDD);
            mpfr_mul_si(chi.raw(), (k >= 0 ? pi_hi : pi_lo).raw(), k, MPFR_RNDU);
        }
        // k >= 0: even k -> max (+1), odd k -> min (-1); symmetric for k < 0.
        bool inside = mpfr_cmp(chi.raw(), x.lo().raw()) >= 0 &&
                      mpfr_cmp(clo.raw(), x.hi().raw()) <= 0;
        if (!inside) continue;
        long kk = k % 2;
        if (kk < 0) kk += 2;
        if (kk == 0)
            mpfr_set_si(hi.raw(), 1, MPFR_RNDU);
        else
            mpfr_set_si(lo.raw(), -1, MPFR_RNDD);
    }
    if (mpfr_cmp_si(lo.raw(), -1) < 0) mpfr_set_si(lo.raw(), -1, MPFR_RNDD);
    if (mpfr_cmp_si(hi.raw(), 1) > 0) mpfr_set_si(hi.raw(), 1, MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

}  // namespace

Interval sin(const Interval& x) { return trig(x, true); }
Interval cos(const Interval& x) { return trig(x, false); }

Interval abs(const Interval& x) {
    if (x.lo().sign() >= 0) return x;
    if (x.hi().sign() <= 0) return -x;
    Real hi(x.prec()), t(x.prec());
    mpfr_neg(t.raw(), x.lo().raw(), MPFR_RNDU);
    mpfr_max(hi.raw(), t.raw(), x.hi().raw(), MPFR_RNDU);
    return Interval(Real(0.0, x.prec()), std::move(hi));
}

Interval pow_int(const Interval& x, long n) {
    if (n == 0) return Interval::point(1.0, x.prec());
    if (n < 0) return Interval::point(1.0, x.prec()) / pow_int(x, -n);
    Real lo(x.prec()), hi(x.prec()), a(x.prec()), b(x.prec());
    mpfr_pow_si(a.raw(), x.lo().raw(), n, MPFR_RNDD);
    mpfr_pow_si(b.raw(), x.hi().raw(), n, MPFR_RNDU);
    if (n % 2 == 1) return Interval(std::move(a), std::move(b));
    // even power
    if (x.lo().sign() >= 0) {
        mpfr_pow_si(hi.raw(), x.hi().raw(), n, MPFR_RNDU);
        return Interval(std::move(a), std::move(hi));
    }
    if (x.hi().sign() <= 0) {
        mpfr_pow_si(lo.raw(), x.hi().raw(), n, MPFR_RNDD);
        mpfr_pow_si(hi.raw(), x.lo().raw(), n, MPFR_RNDU);
        return Interval(std::move(lo), std::move(hi));
    }
    mpfr_pow_si(a.raw(), x.lo().raw(), n, MPFR_RNDU);
    mpfr_pow_si(b.raw(), x.hi().raw(), n, MPFR_RNDU);
    mpfr_max(hi.raw(), a.raw(), b.raw(), MPFR_RNDU);
    return Interval(Real(0.0, x.prec()), std::move(hi));
}

Interval pow(const Interval& x, const Interval& y) {
    if (x.lo().sign() <= 0) throw DomainError("pow: base must be positive");
    return exp(y * log(x));
}

Interval hull(const Interval& a, const Interval& b) {
    mpfr_prec_t p = pmax(a, b);
    Real lo(p), hi(p);
    mpfr_min(lo.raw(), a.lo().raw(), b.lo().raw(), MPFR_RNDD);
    mpfr_max(hi.raw(), a.hi().raw(), b.hi().raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval intersect(const Interval& a, const Interval& b) {
    if (!a.intersects(b)) throw DomainError("intersect: empty");
    mpfr_prec_t p = pmax(a, b);
    Real lo(p), hi(p);
    mpfr_max(lo.raw(), a.lo().raw(), b.lo().raw(), MPFR_RNDD);
    mpfr_min(hi.raw(), a.hi().raw(), b.hi().raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval imin(const Interval& a, const Interval& b) {
    mpfr_prec_t p = pmax(a, b);
    Real lo(p), hi(p);
    mpfr_min(lo.raw(), a.lo().raw(), b.lo().raw(), MPFR_RNDD);
    mpfr_min(hi.raw(), a.hi().raw(), b.hi().raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval imax(const Interval& a, const Interval& b) {
    mpfr_prec_t p = pmax(a, b);
    Real lo(p), hi(p);
    mpfr_max(lo.raw(), a.lo().raw(), b.lo().raw(), MPFR_RNDD);
    mpfr_max(hi.raw(), a.hi().raw(), b.hi().raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

}  // namespace anzb
