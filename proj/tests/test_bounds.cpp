#include <doctest.h>

#include <cmath>
#include <sstream>

#include "anzb/bounds.hpp"

using namespace anzb;

namespace {
constexpr double kGamma = 0.57721566490153286;
}

TEST_CASE("reference values of the closed bounds") {
    double t18 = std::exp(18.0);
    CHECK(eval_bound(BoundId::thm11_upper, t18) ==
          doctest::Approx(2.0 * std::log(18.0) + 1.0 - kGamma - std::log(4.0) +
                          8.0 * std::log(18.0) / 18.0 - 8.6 / 18.0)
              .epsilon(1e-14));
    CHECK(eval_bound(BoundId::thm11_upper, t18) == doctest::Approx(5.6240653822).epsilon(1e-9));
    CHECK(eval_bound(BoundId::thm13, 1e30) == doctest::Approx(8.4589677857).epsilon(1e-9));
    CHECK(eval_bound(BoundId::two_loglog, 1e30) == doctest::Approx(8.4704596538).epsilon(1e-9));
    CHECK(eval_bound(BoundId::thm13, 1e30) <= eval_bound(BoundId::two_loglog, 1e30));
    CHECK(eval_bound(BoundId::thm12_abs, 1e10) < eval_bound(BoundId::lls_abs, 1e10));
    CHECK_THROWS_AS(eval_bound(BoundId::thm13, 2.0), DomainError);
}

TEST_CASE("independent re-transcription agrees at ten heights") {
    for (int i = 0; i < 10; ++i) {
        double t = std::exp(18.0 + 6.0 * i);
        double L = std::log(t), LL = std::log(L), eg = std::exp(kGamma);
        double u = 2 * LL + 1 - kGamma - std::log(4.0) + (8 * LL - 8.6) / L;
        double l = 2 * LL + 1 - kGamma - std::log(4.0) - (8 * LL - 7.0) / L;
        double za = 2 * eg * (LL - std::log(2.0) + 0.5 + 0.2674 / LL - 2.6 * LL / L);
        double zr = (12 * eg / (M_PI * M_PI)) *
                    (LL - std::log(2.0) + 0.5 + 0.625 / LL + 10.8 / (LL * LL));
        double ld = 2 * LL + 0.0784 - kGamma + (9.0581 * LL - 4.7) / L;
        double la = 2 * eg * (LL - std::log(2.0) + 0.5 + 1.0 / LL);
        double lr = (12 * eg / (M_PI * M_PI)) *
                    (LL - std::log(2.0) + 0.5 + 1.0 / LL + 14.0 * LL / L);
        double cv = 2 * LL - 0.4989 + 5.35 * LL * LL / L;
        CHECK(eval_bound(BoundId::thm11_upper, t) == doctest::Approx(u).epsilon(1e-14));
        CHECK(eval_bound(BoundId::thm11_lower, t) == doctest::Approx(l).epsilon(1e-14));
        CHECK(eval_bound(BoundId::thm12_abs, t) == doctest::Approx(za).epsilon(1e-14));
        CHECK(eval_bound(BoundId::thm12_recip, t) == doctest::Approx(zr).epsilon(1e-14));
        CHECK(eval_bound(BoundId::thm13, t) == doctest::Approx(ld).epsilon(1e-14));
        CHECK(eval_bound(BoundId::lls_abs, t) == doctest::Approx(la).epsilon(1e-14));
        CHECK(eval_bound(BoundId::lls_recip, t) == doctest::Approx(lr).epsilon(1e-14));
        CHECK(eval_bound(BoundId::cvs, t) == doctest::Approx(cv).epsilon(1e-14));
        // structural gap between the two first-theorem bounds
        double gap = eval_bound(BoundId::thm11_upper, t) - eval_bound(BoundId::thm11_lower, t);
        CHECK(gap == doctest::Approx(16.0 * LL / L - 15.6 / L).epsilon(1e-12));
    }
}

TEST_CASE("validity thresholds") {
    CHECK(bound_threshold(BoundId::thm11_upper) == doctest::Approx(std::exp(18.0)).epsilon(1e-12));
    CHECK(bound_threshold(BoundId::lls_abs) == 1e10);
    CHECK(bound_threshold(BoundId::cvs) == 1e30);
    CHECK(bound_valid_at(BoundId::thm13, 1e30));
    CHECK_FALSE(bound_valid_at(BoundId::thm13, 1e6));
}

TEST_CASE("crossover search") {
    double tc = crossover(BoundId::thm13, BoundId::two_loglog, std::exp(18.0), 1e40);
    CHECK(tc <= 1e30);
    CHECK(eval_bound(BoundId::thm13, tc * 1.001) <= eval_bound(BoundId::two_loglog, tc * 1.001));
    CHECK(eval_bound(BoundId::thm13, tc * 0.999) >= eval_bound(BoundId::two_loglog, tc * 0.999));
    CHECK_THROWS_AS(crossover(BoundId::thm13, BoundId::thm13, 1e10, 1e30), NoCrossing);
}

TEST_CASE("sweep fills bounds, empirical values, and flags") {
    SweepConfig cfg;
    cfg.with_empirical = true;
    std::vector<BoundReport> reps = empirical_sweep({1000.0, 100.0}, cfg);
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].t == 100.0);  // sorted ascending
    CHECK(reps[0].emp_abs_zeta.has_value());
    CHECK(reps[0].emp_abs_zeta->consistent_with(1.6342543013545226));
    CHECK(reps[0].flags == "ok");  // all thresholds above 100: comparisons suppressed
    std::ostringstream csv;
    write_csv(csv, reps);
    CHECK(csv.str().find("t,log_t,loglog_t,thm11_upper") == 0);
    CHECK(csv.str().find("ok") != std::string::npos);
}

TEST_CASE("sweep without empirical leaves fields empty") {
    std::vector<BoundReport> reps = empirical_sweep({1e20});
    REQUIRE(reps.size() == 1);
    CHECK_FALSE(reps[0].emp_abs_zeta.has_value());
    CHECK(reps[0].flags.empty());
    std::ostringstream csv;
    write_csv(csv, reps);
    CHECK(csv.str().find(",,,,\n") != std::string::npos);
}
