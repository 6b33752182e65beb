#include <doctest.h>

#include <cmath>

#include "anzb/mangoldt.hpp"

using namespace anzb;

static const MangoldtTable& table() {
    static MangoldtTable tbl = MangoldtTable::build(2000000);
    return tbl;
}

TEST_CASE("sieve agrees with trial factorization up to 1e4") {
    const MangoldtTable& tbl = table();
    size_t idx = 0;
    for (int64_t n = 2; n <= 10000; ++n) {
        // trial factorization of n as p^m
        double lam = 0.0;
        int64_t m = n;
        for (int64_t p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                while (m % p == 0) m /= p;
                lam = (m == 1) ? std::log(static_cast<double>(p)) : 0.0;
                m = 1;
                break;
            }
        }
        if (m > 1) lam = std::log(static_cast<double>(m));  // n itself prime
        bool present = idx < tbl.count() && tbl.n()[idx] == n;
        if (lam > 0.0) {
            REQUIRE(present);
            CHECK(tbl.lam()[idx] == doctest::Approx(lam).epsilon(1e-15));
            ++idx;
        } else {
            CHECK_FALSE(present);
        }
    }
}

TEST_CASE("chebyshev psi") {
    const MangoldtTable& tbl = table();
    CHECK(tbl.psi(1.0) == 0.0);
    CHECK(tbl.psi(10.0) == doctest::Approx(7.8320141805054690).epsilon(1e-14));
    double x = 1e6;
    double lx = std::log(x);
    CHECK(tbl.psi(x) <= x + std::sqrt(x) * lx * lx / (8.0 * M_PI));
    CHECK_THROWS_AS(tbl.psi(1e9), DomainError);
}

TEST_CASE("sum_loglog single-term values and lemma bound") {
    const MangoldtTable& tbl = table();
    CHECK(sum_loglog(std::exp(1.0), tbl) == doctest::Approx(0.1534264097200273).epsilon(1e-13));
    CHECK(sum_loglog(2.9, tbl) == doctest::Approx(0.1744903773028849).epsilon(1e-13));
    CHECK_THROWS_AS(sum_loglog(2.0, tbl), DomainError);
    for (double x : {3.0, 10.0, 100.0, 1e3, 1e4, 1e5, 1e6}) {
        CHECK(sum_loglog(x, tbl) <= lemma52_rhs(x));
    }
}

TEST_CASE("sum_cesaro values and lemma bound") {
    const MangoldtTable& tbl = table();
    CHECK(sum_cesaro(2.0, tbl) == 0.0);
    CHECK(sum_cesaro(3.0, tbl) == doctest::Approx(0.1155245300933242).epsilon(1e-13));
    for (double x : {3.0, 10.0, 100.0, 1e3, 1e4, 1e5, 1e6}) {
        CHECK(sum_cesaro(x, tbl) <= lemma53_rhs(x));
    }
}

TEST_CASE("twisted sums reduce to untwisted at t=0, bit for bit") {
    const MangoldtTable& tbl = table();
    for (double x : {3.0, 97.0, 12345.0}) {
        CHECK(sum_twisted({SumKind::cesaro_twisted, x, 0.0, 0.0}, tbl) == sum_cesaro(x, tbl));
        CHECK(sum_twisted({SumKind::loglog, x, 0.0, 0.0}, tbl) == sum_loglog(x, tbl));
    }
    double v = sum_twisted({SumKind::cesaro_twisted, 3.0, 0.0, M_PI / std::log(2.0)}, tbl);
    CHECK(v == doctest::Approx(-0.1155245300933242).epsilon(1e-12));
}

TEST_CASE("lambda_xy_sum hand value and cutoff invariance") {
    const MangoldtTable& tbl = table();
    CHECK(lambda_xy_sum(2.0, 2.0, tbl) == doctest::Approx(0.4985620226019125).epsilon(1e-13));
    // asymptotic consistency at x=1e4, y=1e2
    double x = 1e4, y = 1e2;
    double v = lambda_xy_sum(x, y, tbl);
    double main = std::log(x) - 0.5772156649015329 + 0.5 * std::log(y);
    double slack = 0.046191417932242068 * (std::sqrt(y) + 1.0) / std::sqrt(x * y) / std::log(y) + 0.5;
    CHECK(std::abs(v - main) <= slack);
}

TEST_CASE("q_of_x enclosure and the master small bounds") {
    const MangoldtTable& tbl = table();
    Enclosure q81 = q_of_x(81.0, tbl);
    CHECK(q81.err < 1e-3);
    CHECK(q81.consistent_with(0.0775560360474374));
    CHECK(9.0 * q81.hi() - 2.0 / std::log(81.0) <= 0.249);
    double x = 73.2 * 73.2;
    Enclosure q = q_of_x(x, tbl);
    CHECK(std::sqrt(x) * q.hi() - 2.0 / std::log(x) <= 0.229);
    CHECK_THROWS_AS(q_of_x(80.0, tbl), DomainError);
}

TEST_CASE("trig polynomial values and nonnegativity on a grid") {
    CHECK(trig_poly_p2(0.0) == 0.0);
    CHECK(trig_poly_p2(M_PI) == doctest::Approx(1.5640970336662513).epsilon(1e-13));
    CHECK(trig_poly_p2(M_PI / 2) == doctest::Approx(0.4225466095776532).epsilon(1e-13));
    for (int i = 0; i <= 2000; ++i) {
        double th = 2.0 * M_PI * i / 2000.0;
        CHECK(trig_poly_p2(th) >= -1e-12);
    }
    Interval img = trig_poly_p2(Interval::make(3.1, 3.2), 128);
    CHECK(img.contains(trig_poly_p2(3.15)));
}
