#include <doctest.h>

#include "anzb/optimize.hpp"

using namespace anzb;

static Interval quartic(const Interval& x, mpfr_prec_t) {
    // x^4 - x^2, global min -1/4 at x = +-1/sqrt(2)
    return pow_int(x, 4) - pow_int(x, 2);
}

TEST_CASE("certified_min finds the quartic minimum") {
    CertificateRequest req;
    req.domain = Interval::make(-2.0, 2.0);
    req.tolerance = 1e-9;
    Interval m = certified_min(quartic, req);
    CHECK(m.contains(-0.25));
    CHECK(m.width() <= 1e-9);
}

TEST_CASE("certified_sup of sin over [0, 4]") {
    CertificateRequest req;
    req.domain = Interval::make(0.0, 4.0);
    req.tolerance = 1e-9;
    Interval s = certified_sup([](const Interval& x, mpfr_prec_t) { return sin(x); }, req);
    CHECK(s.contains(1.0));
    CHECK(s.width() <= 1e-9);
}

TEST_CASE("certified_min at a boundary point") {
    CertificateRequest req;
    req.domain = Interval::make(1.0, 3.0);
    req.tolerance = 1e-10;
    Interval m = certified_min([](const Interval& x, mpfr_prec_t) { return exp(x); }, req);
    CHECK(m.contains(2.718281828459045));
}

TEST_CASE("verify_monotone certifies and refutes") {
    auto expfn = [](const Interval& x, mpfr_prec_t) { return exp(x); };
    VerifyResult r = verify_monotone(expfn, Interval::make(0.0, 5.0), Direction::increasing);
    CHECK(r.verdict == Verdict::verified);

    auto sinfn = [](const Interval& x, mpfr_prec_t) { return sin(x); };
    VerifyResult bad = verify_monotone(sinfn, Interval::make(0.0, 3.0), Direction::increasing);
    CHECK(bad.verdict == Verdict::refuted);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->first < bad.witness->second);

    VerifyResult dec = verify_monotone(expfn, Interval::make(0.0, 5.0), Direction::decreasing);
    CHECK(dec.verdict == Verdict::refuted);
}

TEST_CASE("verify_nonneg with an exact zero minimum") {
    auto sq = [](const Interval& x, mpfr_prec_t) { return pow_int(x, 2); };
    VerifyResult r = verify_nonneg(sq, Interval::make(-1.0, 1.0), 100000, 128, -1e-12);
    CHECK(r.verdict == Verdict::verified);
    REQUIRE(r.inf_enclosure.has_value());
    CHECK(r.inf_enclosure->lo_d() >= -1e-12);

    auto shifted = [](const Interval& x, mpfr_prec_t) {
        return pow_int(x, 2) - Interval::point(0.5, x.prec());
    };
    VerifyResult neg = verify_nonneg(shifted, Interval::make(-1.0, 1.0));
    CHECK(neg.verdict == Verdict::refuted);
    REQUIRE(neg.witness.has_value());
}

TEST_CASE("impossible tolerance escalates precision and throws") {
    CertificateRequest req;
    req.domain = Interval::make(0.0, 1.0);
    req.tolerance = 1e-300;  // unreachable even at max precision
    req.max_depth = 8;
    req.max_boxes = 500;
    req.max_precision = 256;
    CHECK_THROWS_AS(certified_min([](const Interval& x, mpfr_prec_t) { return sin(x) + exp(x); }, req),
                    PrecisionExhausted);
}
