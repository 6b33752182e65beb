#pragma once

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace anzb {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VerificationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arbitrary-precision floating value with explicit precision in bits.
/// Rounding is always stated at the call site; nothing depends on a global mode.
class Real {
  public:
    explicit Real(mpfr_prec_t prec = 128);
    Real(double x, mpfr_prec_t prec);
    Real(long x, mpfr_prec_t prec);
    Real(const std::string& s, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(v_, rnd); }
    std::string str(int digits = 20) const;

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
    int cmp(double d) const { return mpfr_cmp_d(v_, d); }
    bool operator<(const Real& o) const { return cmp(o) < 0; }
    bool operator<=(const Real& o) const { return cmp(o) <= 0; }
    bool operator>(const Real& o) const { return cmp(o) > 0; }
    bool operator>=(const Real& o) const { return cmp(o) >= 0; }
    bool operator==(const Real& o) const { return cmp(o) == 0; }

    // Constants at the given precision, rounded in the given direction.
    static Real pi(mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
    static Real euler_gamma(mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
    static Real log2(mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
    static Real inf(mpfr_prec_t prec, int sign);

  private:
    mpfr_t v_;
};

}  // namespace anzb
