#include <doctest.h>

#include "anzb/interval.hpp"

using anzb::Interval;

TEST_CASE("arithmetic encloses exact results") {
    Interval a = Interval::make(1.0, 2.0);
    Interval b = Interval::make(-3.0, 0.5);
    Interval s = a + b;
    CHECK(s.lo_d() <= -2.0);
    CHECK(s.hi_d() >= 2.5);
    Interval p = a * b;
    CHECK(p.lo_d() <= -6.0);
    CHECK(p.hi_d() >= 1.0);
    Interval d = a / Interval::make(2.0, 4.0);
    CHECK(d.lo_d() <= 0.25);
    CHECK(d.hi_d() >= 1.0);
    CHECK(d.lo_d() > 0.2);
}

TEST_CASE("division by a zero-straddling interval is the whole line") {
    Interval q = Interval::point(1.0) / Interval::make(-1.0, 1.0);
    CHECK(q.lo().is_inf());
    CHECK(q.hi().is_inf());
}

TEST_CASE("parse encloses the decimal literal tightly") {
    Interval x = Interval::parse("0.1");
    CHECK(x.lo_d() <= 0.1);
    CHECK(x.hi_d() >= 0.1);
    CHECK(x.width() < 1e-30);
    CHECK(x.lo_d() > 0.0999999);
}

TEST_CASE("exp/log/sqrt round outward and stay tight") {
    Interval x = Interval::make(1.0, 1.0);
    Interval e = exp(x);
    CHECK(e.lo_d() <= 2.718281828459045);
    CHECK(e.hi_d() >= 2.718281828459045);
    CHECK(e.width() < 1e-30);
    Interval l = log(Interval::make(4.0, 4.0));
    CHECK(l.lo_d() <= 1.3862943611198906);
    CHECK(l.hi_d() >= 1.3862943611198906);
    Interval r = sqrt(Interval::make(2.0, 2.0));
    CHECK(r.lo_d() <= 1.4142135623730951);
    CHECK(r.hi_d() >= 1.4142135623730951);
    // a domain straddling zero keeps the valid part: [-inf, log hi]
    CHECK(log(Interval::make(-1.0, 1.0)).lo().is_inf());
    CHECK_THROWS_AS(log(Interval::make(-2.0, -1.0)), anzb::DomainError);
}

TEST_CASE("sin/cos handle interior extrema") {
    Interval s = sin(Interval::make(0.0, 3.2));  // max at pi/2 inside
    CHECK(s.hi_d() >= 1.0);
    CHECK(s.lo_d() <= 0.0);
    Interval c = cos(Interval::make(3.0, 3.3));  // min at pi inside
    CHECK(c.lo_d() <= -1.0);
    CHECK(c.hi_d() >= -0.9899924966);  // cos(3)
    Interval wide = cos(Interval::make(0.0, 100.0));
    CHECK(wide.lo_d() <= -1.0);
    CHECK(wide.hi_d() >= 1.0);
}

TEST_CASE("pow via exp-log contains the exact power") {
    Interval v = pow(Interval::make(2.0, 2.0), Interval::make(0.5, 0.5));
    CHECK(v.lo_d() <= 1.4142135623730951);
    CHECK(v.hi_d() >= 1.4142135623730951);
    Interval w = pow_int(Interval::make(-2.0, 3.0), 2);
    CHECK(w.lo_d() <= 0.0);
    CHECK(w.hi_d() >= 9.0);
}

TEST_CASE("pi and euler_gamma constants") {
    CHECK(Interval::pi().lo_d() <= 3.141592653589793);
    CHECK(Interval::pi().hi_d() >= 3.141592653589793);
    CHECK(Interval::pi().width() < 1e-30);
    CHECK(Interval::euler_gamma().lo_d() <= 0.5772156649015329);
    CHECK(Interval::euler_gamma().hi_d() >= 0.5772156649015329);
}

TEST_CASE("hull and intersect") {
    Interval a = Interval::make(0.0, 1.0);
    Interval b = Interval::make(2.0, 3.0);
    Interval h = hull(a, b);
    CHECK(h.contains(1.5));
    CHECK_THROWS_AS(intersect(a, b), anzb::DomainError);
    Interval c = intersect(Interval::make(0.5, 2.5), h);
    CHECK(c.lo_d() <= 0.5);
    CHECK(c.hi_d() >= 2.5);
}
