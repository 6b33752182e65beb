#include <doctest.h>

#include <cmath>

#include "anzb/zeta.hpp"

using namespace anzb;

TEST_CASE("zeta(1+it) matches reference values") {
    ComplexEnclosure z = zeta_1line(1.0);
    CHECK(z.err < 1e-9);
    CHECK(z.real().consistent_with(0.5821580597520036));
    CHECK(z.imag().consistent_with(-0.9268485643308071));

    ComplexEnclosure z100 = zeta_1line(100.0);
    CHECK(z100.magnitude().consistent_with(1.6342543013545226));
}

TEST_CASE("negative ordinate conjugates") {
    ComplexEnclosure zp = zeta_1line(7.5);
    ComplexEnclosure zm = zeta_1line(-7.5);
    CHECK(zp.value.real() == doctest::Approx(zm.value.real()).epsilon(1e-14));
    CHECK(zp.value.imag() == doctest::Approx(-zm.value.imag()).epsilon(1e-14));
}

TEST_CASE("zeta'/zeta on the 1-line matches reference values") {
    ComplexEnclosure r100 = zeta_logderiv_1line(100.0);
    CHECK(r100.real().consistent_with(-0.6585487323990442));
    CHECK(r100.imag().consistent_with(-0.0446155457204730));
    CHECK(r100.err < 1e-7);

    ComplexEnclosure r1000 = zeta_logderiv_1line(1000.0);
    CHECK(r1000.real().consistent_with(0.1414724330879445));
}

TEST_CASE("shared main sum: pair agrees with individual calls") {
    ZetaPair p = zeta_pair_1line(42.0);
    ComplexEnclosure z = zeta_1line(42.0);
    CHECK(p.zeta.value == z.value);
    CHECK(p.zeta.err == z.err);
    CHECK(std::abs(p.zeta_deriv.value) > 0.0);
}

TEST_CASE("pole neighborhood rejected") {
    CHECK_THROWS_AS(zeta_1line(0.5), DomainError);
}

TEST_CASE("requested error achieved at larger heights") {
    EulerMaclaurinConfig cfg;
    cfg.target_abs_err = 1e-10;
    ComplexEnclosure z = zeta_1line(5000.0, cfg);
    CHECK(z.err <= 1e-10);
}
