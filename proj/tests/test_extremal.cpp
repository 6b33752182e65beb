#include <doctest.h>

#include <cmath>
#include <random>

#include "anzb/extremal.hpp"

using namespace anzb;

TEST_CASE("poisson kernel point values") {
    CHECK(h_poisson(0.0) == 2.0);
    CHECK(h_poisson(0.5) == 1.0);
    CHECK(h_poisson(10.0) == doctest::Approx(0.5 / 100.25).epsilon(1e-15));
    CHECK(ft_poisson(0.0) == doctest::Approx(M_PI).epsilon(1e-15));
}

TEST_CASE("majorant and minorant at the origin") {
    ExtremalParams plus{0.5, Sign::plus};
    ExtremalParams minus{0.5, Sign::minus};
    CHECK(h_extremal(plus, 0.0) == doctest::Approx(2.0).epsilon(1e-14));
    double th = std::tanh(M_PI / 4.0);
    CHECK(h_extremal(minus, 0.0) == doctest::Approx(2.0 * th * th).epsilon(1e-14));
    CHECK(h_extremal(minus, 0.0) == doctest::Approx(0.8601320723).epsilon(1e-9));
}

TEST_CASE("majorant interpolates the kernel at k/delta") {
    ExtremalParams plus{0.7, Sign::plus};
    for (int k = 1; k <= 3; ++k) {
        double x = k / 0.7;
        CHECK(h_extremal(plus, x) == doctest::Approx(h_poisson(x)).epsilon(1e-13));
    }
}

TEST_CASE("ratio and product forms agree") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> ux(-30.0, 30.0);
    for (double delta : {0.5, 0.699, 1.0, 3.0}) {
        for (Sign s : {Sign::plus, Sign::minus}) {
            ExtremalParams p{delta, s};
            for (int i = 0; i < 2500; ++i) {
                double x = ux(rng);
                double a = h_extremal(p, x, Form::ratio);
                double b = h_extremal(p, x, Form::product);
                CHECK(std::abs(a - b) <= 1e-13 * (1.0 + std::abs(a)));
            }
        }
    }
}

TEST_CASE("interval form encloses the point form") {
    ExtremalParams p{1.0, Sign::minus};
    for (double x : {0.0, 0.3, 1.7, 12.0}) {
        Interval img = h_extremal(p, Interval::point(x, 128), 128);
        double v = h_extremal(p, x);
        CHECK(img.lo_d() <= v + 1e-15);
        CHECK(img.hi_d() >= v - 1e-15);
    }
}

TEST_CASE("transform closed form") {
    ExtremalParams plus{0.5, Sign::plus};
    ExtremalParams minus{0.5, Sign::minus};
    CHECK(ft_extremal(plus, 0.5) == 0.0);
    CHECK(ft_extremal(plus, -0.8) == 0.0);
    CHECK(ft_extremal(plus, 0.0) ==
          doctest::Approx(M_PI * (1.0 + 2.0 / (std::exp(M_PI / 2) - 1.0))).epsilon(1e-13));
    CHECK(ft_extremal(plus, 0.0) == doctest::Approx(4.7905160506).epsilon(1e-9));
    CHECK(ft_extremal(minus, 0.0) == doctest::Approx(2.0602382493).epsilon(1e-9));
}

TEST_CASE("sinh identity for the normalization") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> ud(0.05, 4.0);
    for (int i = 0; i < 100; ++i) {
        double d = ud(rng);
        for (Sign s : {Sign::plus, Sign::minus}) {
            ExtremalParams p{d, s};
            double lhs = std::sinh(M_PI * d) / p.c();
            double sgn = (s == Sign::plus) ? 1.0 : -1.0;
            double rhs = 0.5 + 1.0 / (sgn * std::exp(M_PI * d) - 1.0);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
}

TEST_CASE("complex pole combination stays small") {
    // |h(t - i/2) + h(t + i/2)| <= 3.4/t^2 for delta >= 1/2
    for (double delta : {0.5, 1.0, 2.0}) {
        ExtremalParams plus{delta, Sign::plus};
        for (double t : {1.0, 3.0, 10.0, 100.0, 1000.0}) {
            std::complex<double> v = h_extremal(plus, {t, 0.5}) + h_extremal(plus, {t, -0.5});
            CHECK(std::abs(v) <= 3.4 / (t * t));
        }
    }
}

TEST_CASE("sandwich selftest passes and catches faults") {
    SandwichReport r1 = sandwich_selftest({0.5, Sign::plus});
    CHECK(r1.min_slack >= 0.0);
    sandwich_selftest({2.0, Sign::plus});
    CHECK_THROWS_AS(sandwich_selftest({0.5, Sign::plus}, 20000, 1.001), VerificationFailed);
}

TEST_CASE("transform quadrature matches the closed form") {
    FtCheckReport a = ft_selftest({1.0, Sign::plus}, 0.0);
    CHECK(std::abs(a.numeric - M_PI * (1.0 + 2.0 / (std::exp(M_PI) - 1.0))) <= a.budget);
    FtCheckReport b = ft_selftest({0.5, Sign::minus}, 0.75);  // outside the support
    CHECK(std::abs(b.numeric) <= b.budget);
    ft_selftest({0.5, Sign::plus}, 0.25);
    ft_selftest({0.5, Sign::minus}, 0.25);
}

TEST_CASE("derivative bounds dominate finite differences") {
    ExtremalParams p{0.7, Sign::minus};
    for (double x : {0.1, 0.9, 3.3, 15.0}) {
        double fd = (h_extremal(p, x + 5e-7) - h_extremal(p, x - 5e-7)) / 1e-6;
        CHECK(std::abs(fd) <= h_extremal_deriv_bound(p, x) + 1e-6);
        double fdh = (h_poisson(x + 5e-7) - h_poisson(x - 5e-7)) / 1e-6;
        CHECK(std::abs(fdh) <= h_deriv_bound(x) + 1e-6);
    }
}
