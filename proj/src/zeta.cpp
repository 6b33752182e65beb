#include "anzb/zeta.hpp"

#include <cmath>
#include <atomic>
#include <thread>
#include <vector>

namespace anzb {

namespace {

// B_{2k}/(2k)! for k = 1..13
const double kBernFact[] = {
    1.0 / 12,
    -1.0 / 720,
    1.0 / 30240,
    -1.0 / 1209600,
    1.0 / 47900160,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0,
    77683.0 / 14101100039391805440000.0,
    -236364091.0 / 1693824136731743669452800000.0,
    657931.0 / 186134520519971831808000000.0,
};

struct SumParts {
    double re = 0, im = 0;      // sum n^{-1-it}
    double dre = 0, dim = 0;    // sum log(n) n^{-1-it}
    double err = 0;             // accumulated rounding/phase budget
};

// Partial sums over [n0, n1). Phases in long double so the argument
// reduction error stays ~1e-10 even at t ~ 1e8.
SumParts partial_sum(long n0, long n1, double t) {
    long double re = 0, im = 0, dre = 0, dim = 0, err = 0;
    const long double tl = t;
    for (long n = n0; n < n1; ++n) {
        long double ln = logl(static_cast<long double>(n));
        long double phase = tl * ln;
        double c = static_cast<double>(cosl(phase));
        double s = static_cast<double>(sinl(phase));
        double inv = 1.0 / static_cast<double>(n);
        re += c * inv;
        im -= s * inv;
        double lnd = static_cast<double>(ln);
        dre += lnd * c * inv;
        dim -= lnd * s * inv;
        // phase ulp (64-bit mantissa) + a few double roundings, weighted by 1/n
        err += (static_cast<double>(phase) * 2.2e-19 + 8e-16) * inv * (1.0 + lnd);
    }
    return {static_cast<double>(re), static_cast<double>(im), static_cast<double>(dre),
            static_cast<double>(dim), static_cast<double>(err)};
}

ZetaPair evaluate(double t, long N, int M, int threads) {
    const std::complex<double> s(1.0, t);
    const std::complex<double> i_unit(0.0, 1.0);

    SumParts sum;
    if (N - 1 < 200000 || threads <= 1) {
        sum = partial_sum(1, N, t);
    } else {
        // fixed chunking so the reduction is deterministic at any thread count
        const long chunk = 1 << 20;
        std::vector<std::pair<long, long>> ranges;
        for (long a = 1; a < N; a += chunk) ranges.push_back({a, std::min(a + chunk, N)});
        std::vector<SumParts> parts(ranges.size());
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        int nthreads = threads > 0 ? threads : (int)std::thread::hardware_concurrency();
        for (int w = 0; w < nthreads; ++w)
            pool.emplace_back([&] {
                for (size_t j = next.fetch_add(1); j < ranges.size(); j = next.fetch_add(1))
                    parts[j] = partial_sum(ranges[j].first, ranges[j].second, t);
            });
        for (auto& th : pool) th.join();
        long double re = 0, im = 0, dre = 0, dim = 0, err = 0;
        for (auto& p : parts) {
            re += p.re;
            im += p.im;
            dre += p.dre;
            dim += p.dim;
            err += p.err;
        }
        sum = {static_cast<double>(re), static_cast<double>(im), static_cast<double>(dre),
               static_cast<double>(dim), static_cast<double>(err)};
    }

    const double lnN = std::log(static_cast<double>(N));
    // N^{-s} = (1/N) e^{-i t ln N}, phase in long double
    long double phN = static_cast<long double>(t) * logl(static_cast<long double>(N));
    std::complex<double> Npow_ms(static_cast<double>(cosl(phN)) / N,
                                 -static_cast<double>(sinl(phN)) / N);

    std::complex<double> zeta(sum.re, sum.im);
    std::complex<double> zder(-sum.dre, -sum.dim);

    // boundary terms: N^{1-s}/(s-1) + N^{-s}/2 and their s-derivatives
    std::complex<double> sm1 = s - 1.0;
    std::complex<double> T1 = (Npow_ms * static_cast<double>(N)) / sm1;
    zeta += T1 + 0.5 * Npow_ms;
    zder += -lnN * T1 - T1 / sm1 - 0.5 * lnN * Npow_ms;

    // Bernoulli corrections: sum_k B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}
    std::complex<double> poch = s;                // (s)_1
    std::complex<double> dpoch_factor = 1.0 / s;  // sum 1/(s+j)
    double Nscale = 1.0 / N;                      // N^{-(2k-1)}
    std::complex<double> Ns = Npow_ms;
    for (int k = 1; k <= M; ++k) {
        std::complex<double> term = kBernFact[k - 1] * poch * Ns * Nscale;
        zeta += term;
        zder += term * (dpoch_factor - std::complex<double>(lnN, 0.0));
        if (k < M) {
            poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
            dpoch_factor += 1.0 / (s + static_cast<double>(2 * k - 1)) +
                            1.0 / (s + static_cast<double>(2 * k));
            Nscale /= static_cast<double>(N) * static_cast<double>(N);
        }
    }
    // Remainder via the periodic-Bernoulli integral form:
    // |R|  <= |(s)_{2M+1}| * 4/(2pi)^{2M+1} * N^{-a}/a,            a = 2M+1
    // |R'| <= |(s)'_{2M+1}| * (same) + |(s)_{2M+1}| * 4/(2pi)^{2M+1} * (lnN/a + 1/a^2) N^{-a}
    double abs_p = 1.0, sum_inv = 0.0;
    for (int j = 0; j <= 2 * M; ++j) {
        double m = std::hypot(1.0 + j, t);
        abs_p *= m;
        sum_inv += 1.0 / m;
    }
    const double a = 2.0 * M + 1.0;  // sigma + 2M with sigma = 1
    double geom = 4.0 / std::pow(2.0 * M_PI, 2.0 * M + 1.0) * std::pow(static_cast<double>(N), -a);
    double R = abs_p * geom / a;
    double Rd = abs_p * sum_inv * geom / a + abs_p * geom * (lnN / a + 1.0 / (a * a));

    double base_round = 1e-15 * (std::abs(zeta) + 2.0);
    double base_round_d = 1e-15 * (std::abs(zder) + lnN + 2.0);
    return {{zeta, R + sum.err + base_round},
            {zder, Rd + sum.err * 2.0 + base_round_d}};
}

}  // namespace

ZetaPair zeta_pair_1line(double t, const EulerMaclaurinConfig& cfg) {
    if (std::abs(t) < 1.0) throw DomainError("zeta_1line: requires |t| >= 1");
    long N = cfg.cutoff > 0 ? cfg.cutoff
                            : std::max<long>(100, static_cast<long>(std::ceil(1.2 * std::abs(t))));
    int M = std::min(cfg.bernoulli_terms, 13);
    for (int attempt = 0; attempt < 3; ++attempt) {
        ZetaPair r = evaluate(std::abs(t), N, M, cfg.threads);
        if (t < 0) {  // Schwarz reflection: zeta(1-it) = conj(zeta(1+it))
            r.zeta.value = std::conj(r.zeta.value);
            r.zeta_deriv.value = std::conj(r.zeta_deriv.value);
        }
        if (r.zeta.err <= cfg.target_abs_err && r.zeta_deriv.err <= cfg.target_abs_err) return r;
        N *= 2;
        M = std::min(M + 1, 13);
    }
    throw PrecisionExhausted("zeta_1line: remainder bound cannot meet target");
}

ComplexEnclosure zeta_1line(double t, const EulerMaclaurinConfig& cfg) {
    return zeta_pair_1line(t, cfg).zeta;
}

ComplexEnclosure zeta_logderiv_1line(double t, const EulerMaclaurinConfig& cfg) {
    ZetaPair p = zeta_pair_1line(t, cfg);
    double az = std::abs(p.zeta.value);
    if (az <= p.zeta.err) throw DivisionByNearZero("zeta_logderiv_1line: zeta enclosure straddles 0");
    std::complex<double> r = p.zeta_deriv.value / p.zeta.value;
    double err = (p.zeta_deriv.err + std::abs(r) * p.zeta.err) / (az - p.zeta.err) +
                 1e-15 * std::abs(r);
    return {r, err};
}

}  // namespace anzb
