#include <doctest.h>

#include <cmath>

#include "anzb/digamma.hpp"

using namespace anzb;

TEST_CASE("digamma at small integers") {
    ComplexEnclosure g1 = digamma({1.0, 0.0});
    CHECK(g1.real().consistent_with(-0.5772156649015329));
    CHECK(g1.err < 1e-12);
    ComplexEnclosure g2 = digamma({2.0, 0.0});
    CHECK(g2.real().consistent_with(0.4227843350984671));
}

TEST_CASE("digamma at complex arguments matches reference values") {
    ComplexEnclosure a = digamma({1.0, 1.0});
    CHECK(a.real().consistent_with(0.0946503206224770));
    CHECK(a.imag().consistent_with(1.0766740474685811));
    CHECK(a.err < 1e-12);

    ComplexEnclosure b = digamma({0.25, 2.5});
    CHECK(b.real().consistent_with(0.9146116676038024));
    CHECK(b.imag().consistent_with(1.6718547744640197));
}

TEST_CASE("digamma rejects the left half-plane and poles") {
    CHECK_THROWS_AS(digamma({-1.0, 0.5}), DomainError);
    CHECK_THROWS_AS(digamma({0.0, 0.0}), DomainError);
}

TEST_CASE("stirling form brackets the exact value") {
    std::complex<double> z{0.5, 50.0};
    StirlingBudget sb = stirling_re_digamma(z);
    const double exact = 3.9120063375945666;
    CHECK(std::abs(sb.main - exact) <= sb.err);
    CHECK(sb.err == doctest::Approx(1.0 / (4.0 * std::norm(z))).epsilon(1e-12));

    Enclosure st = re_digamma(z, DigammaMode::stirling);
    Enclosure ex = re_digamma(z, DigammaMode::exact);
    CHECK(std::abs(st.value - ex.value) <= st.err + ex.err);
    CHECK(ex.err < 1e-10);
}
