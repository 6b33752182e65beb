#include "anzb/real.hpp"

#include <cstdio>
#include <vector>

namespace anzb {

Real::Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(double x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, x, MPFR_RNDN);  // doubles convert exactly when prec >= 53
}

Real::Real(long x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, x, MPFR_RNDN);
}

Real::Real(const std::string& s, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    mpfr_init2(v_, prec);
    if (mpfr_set_str(v_, s.c_str(), 10, rnd) != 0 && mpfr_nan_p(v_)) {
        mpfr_clear(v_);
        throw DomainError("Real: cannot parse '" + s + "'");
    }
}

Real::Real(const Real& o) {
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, o.prec());
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

std::string Real::str(int digits) const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%%.%dRg", digits);
    std::vector<char> out(static_cast<size_t>(digits) + 32);
    mpfr_snprintf(out.data(), out.size(), buf, v_);
    return std::string(out.data());
}

Real Real::pi(mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Real r(prec);
    mpfr_const_pi(r.v_, rnd);
    return r;
}

Real Real::euler_gamma(mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Real r(prec);
    mpfr_const_euler(r.v_, rnd);
    return r;
}

Real Real::log2(mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Real r(prec);
    mpfr_const_log2(r.v_, rnd);
    return r;
}

Real Real::inf(mpfr_prec_t prec, int sign) {
    Real r(prec);
    mpfr_set_inf(r.v_, sign);
    return r;
}

}  // namespace anzb
