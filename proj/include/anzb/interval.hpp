#pragma once

#include "anzb/real.hpp"

namespace anzb {

/// Outward-rounded real enclosure. Every operation returns an interval that
/// contains the exact image of its arguments.
class Interval {
  public:
    Interval() : lo_(128), hi_(128) {}
    Interval(Real lo, Real hi);

    /// Thin interval around an exactly representable value.
    static Interval point(double x, mpfr_prec_t prec = 128);
    static Interval point(const Real& x);
    /// [lo, hi] from doubles (taken as exact endpoints).
    static Interval make(double lo, double hi, mpfr_prec_t prec = 128);
    /// Tight enclosure of a decimal literal.
    static Interval parse(const std::string& s, mpfr_prec_t prec = 128);
    static Interval pi(mpfr_prec_t prec = 128);
    static Interval euler_gamma(mpfr_prec_t prec = 128);
    static Interval entire(mpfr_prec_t prec = 128);

    const Real& lo() const { return lo_; }
    const Real& hi() const { return hi_; }
    double lo_d() const { return lo_.to_double(MPFR_RNDD); }
    double hi_d() const { return hi_.to_double(MPFR_RNDU); }
    mpfr_prec_t prec() const { return lo_.prec(); }

    double width() const;
    Real mid() const;
    bool contains(double x) const { return lo_.cmp(x) <= 0 && hi_.cmp(x) >= 0; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool intersects(const Interval& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }
    bool is_point() const { return lo_ == hi_; }

    std::string str(int digits = 17) const;

    Interval with_prec(mpfr_prec_t prec) const;

  private:
    Real lo_, hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);

Interval operator+(const Interval& a, double b);
Interval operator+(double a, const Interval& b);
Interval operator-(const Interval& a, double b);
Interval operator-(double a, const Interval& b);
Interval operator*(const Interval& a, double b);
Interval operator*(double a, const Interval& b);
Interval operator/(const Interval& a, double b);
Interval operator/(double a, const Interval& b);

Interval exp(const Interval& x);
Interval log(const Interval& x);
Interval sqrt(const Interval& x);
Interval sin(const Interval& x);
Interval cos(const Interval& x);
Interval sinh(const Interval& x);
Interval cosh(const Interval& x);
Interval tanh(const Interval& x);
Interval abs(const Interval& x);
Interval pow_int(const Interval& x, long n);
/// x^y for x > 0, via exp(y log x).
Interval pow(const Interval& x, const Interval& y);

Interval hull(const Interval& a, const Interval& b);
Interval intersect(const Interval& a, const Interval& b);
Interval imin(const Interval& a, const Interval& b);
Interval imax(const Interval& a, const Interval& b);

}  // namespace anzb
