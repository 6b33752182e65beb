// Generates a table of ordinates of nontrivial zeta zeros on the critical
// line, ascending, one per line. Sign-change scan of the Riemann-Siegel Z
// function (main sum plus first correction), each bracket then refined with
// Euler-Maclaurin evaluations of zeta(1/2+it) accurate to ~1e-12. Block
// counts are cross-checked against the argument-principle density; any
// mismatch triggers a finer rescan before the program will emit output.
//
// Usage: gen_zeros [count] [outfile]

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <thread>
#include <vector>

namespace {

constexpr long double kPi = 3.14159265358979323846264338328L;
constexpr long double kTwoPi = 2.0L * kPi;

// B_{2k}/(2k)! for k = 1..13
constexpr double kBernFact[] = {
    0.0,
    8.3333333333333333e-02,  -1.3888888888888889e-03, 3.3068783068783069e-05,
    -8.2671957671957672e-07, 2.0876756987868099e-08,  -5.2841901386874932e-10,
    1.3382536530684679e-11,  -3.3896802963225829e-13, 8.5860620562778446e-15,
    -2.1748686985580619e-16, 5.5090028283602295e-18,  -1.3954464685812523e-19,
    3.5347070396294675e-21};

std::vector<long double> g_logn;  // logs of 1..Nmax

void build_log_table(size_t nmax) {
    g_logn.resize(nmax + 1);
    for (size_t n = 1; n <= nmax; ++n) g_logn[n] = logl(static_cast<long double>(n));
}

long double theta(long double t) {
    // asymptotic expansion of the Riemann-Siegel theta function
    long double lt = logl(t / kTwoPi);
    return t / 2 * lt - t / 2 - kPi / 8 + 1.0L / (48 * t) + 7.0L / (5760 * t * t * t);
}

// zeta(1/2+it) by Euler-Maclaurin with N ~ t/2 terms, 12 Bernoulli corrections.
std::complex<double> zeta_half(double t) {
    const long N = std::max(100L, static_cast<long>(std::ceil(0.5 * t)));
    const std::complex<double> s(0.5, t);
    const long double tl = t;
    double re = 0.0, im = 0.0;
    for (long n = 1; n < N; ++n) {
        long double ph = remainderl(tl * g_logn[static_cast<size_t>(n)], kTwoPi);
        double r = 1.0 / std::sqrt(static_cast<double>(n));
        double p = static_cast<double>(ph);
        re += r * std::cos(p);
        im -= r * std::sin(p);
    }
    std::complex<double> sum(re, im);
    // N^{-s} = N^{-1/2} e^{-it log N}
    long double phN = remainderl(tl * g_logn[static_cast<size_t>(N)], kTwoPi);
    std::complex<double> eN(std::cos(static_cast<double>(phN)), -std::sin(static_cast<double>(phN)));
    double rN = 1.0 / std::sqrt(static_cast<double>(N));
    std::complex<double> Nms = rN * eN;          // N^{-s}
    std::complex<double> N1ms = static_cast<double>(N) * Nms;  // N^{1-s}
    sum += N1ms / (s - 1.0) + 0.5 * Nms;
    // Bernoulli corrections: B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}
    std::complex<double> poch = s;  // (s)_1
    double Nscale = 1.0 / static_cast<double>(N);  // N^{1-2k} at k=1
    const int M = 12;
    for (int k = 1; k <= M; ++k) {
        sum += kBernFact[k] * poch * Nms * Nscale;
        if (k < M) {
            poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
            Nscale /= static_cast<double>(N) * static_cast<double>(N);
        }
    }
    return sum;
}

// Hardy Z via Euler-Maclaurin: accurate to ~1e-11 absolute.
double Z_em(double t) {
    std::complex<double> z = zeta_half(t);
    long double th = remainderl(theta(t), kTwoPi);
    double c = std::cos(static_cast<double>(th)), s = std::sin(static_cast<double>(th));
    return c * z.real() - s * z.imag();
}

// Riemann-Siegel Z with the leading correction term; error O(t^{-3/4}).
double Z_rs(double t) {
    long double a = sqrtl(static_cast<long double>(t) / kTwoPi);
    long N = static_cast<long>(a);
    double p = static_cast<double>(a - N);
    long double th = theta(t);
    double sum = 0.0;
    const long double tl = t;
    for (long n = 1; n <= N; ++n) {
        long double ph = remainderl(th - tl * g_logn[static_cast<size_t>(n)], kTwoPi);
        sum += std::cos(static_cast<double>(ph)) / std::sqrt(static_cast<double>(n));
    }
    sum *= 2.0;
    double psi = std::cos(2.0 * M_PI * (p * p - p - 0.0625)) / std::cos(2.0 * M_PI * p);
    double c0 = ((N % 2) ? 1.0 : -1.0) * std::pow(static_cast<double>(a), -0.5) * psi;
    return sum + c0;
}

// Illinois secant: root of Z_em in (a, b) with Z_em(a), Z_em(b) of opposite sign.
double refine(double a, double b, double fa, double fb) {
    for (int it = 0; it < 80 && b - a > 1e-12; ++it) {
        double m = (fa * b - fb * a) / (fa - fb);
        if (!(m > a && m < b)) m = 0.5 * (a + b);
        double fm = Z_em(m);
        if (fm == 0.0) return m;
        if ((fm > 0) == (fa > 0)) {
            a = m;
            fa = fm;
            fb *= 0.5;  // Illinois damping keeps both ends moving
        } else {
            b = m;
            fb = fm;
            fa *= 0.5;
        }
    }
    return 0.5 * (a + b);
}

// Scan [t0, t1) at the given step, appending refined zeros. use_em selects the
// expensive but accurate evaluator for the scan itself.
void scan(double t0, double t1, double step, bool use_em, std::vector<double>& out) {
    auto eval = [&](double t) { return use_em ? Z_em(t) : Z_rs(t); };
    double ta = t0, fa = eval(ta);
    while (ta < t1) {
        double tb = std::min(ta + step, t1);
        double fb = eval(tb);
        if ((fa > 0) != (fb > 0)) {
            // true bracket on the accurate evaluator before refining
            double ga = Z_em(ta), gb = Z_em(tb);
            if ((ga > 0) != (gb > 0)) {
                double z = refine(ta, tb, ga, gb);
                if (z >= t0 && z < t1) out.push_back(z);
            }
        }
        ta = tb;
        fa = fb;
    }
}

// Zeros in [t0, t1), with the count checked against theta(t1)-theta(t0).
// Rescans at finer steps (switching to the accurate evaluator) on mismatch.
std::vector<double> block(double t0, double t1) {
    double expected = static_cast<double>((theta(t1) - theta(t0)) / kPi);
    double gap = 2.0 * M_PI / std::log(t1 / (2.0 * M_PI));
    double step = gap / 8.0;
    bool use_em = t1 < 200.0;
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::vector<double> zs;
        scan(t0, t1, step, use_em, zs);
        std::sort(zs.begin(), zs.end());
        zs.erase(std::unique(zs.begin(), zs.end(),
                             [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                 zs.end());
        // S(t) fluctuation allows a slack of ~2 across the block ends
        if (std::abs(static_cast<double>(zs.size()) - expected) < 2.2) return zs;
        step /= 6.0;
        use_em = true;
    }
    std::fprintf(stderr, "gen_zeros: count check failed in [%.2f, %.2f)\n", t0, t1);
    std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
    const long want = argc > 1 ? std::atol(argv[1]) : 100000;
    const char* outfile = argc > 2 ? argv[2] : "zeros.txt";
    // invert the density to get a safe scan ceiling for `want` zeros
    double tend = 100.0;
    while (static_cast<double>((theta(tend) / kPi)) + 1.0 < static_cast<double>(want) + 20.0)
        tend *= 1.01;
    build_log_table(static_cast<size_t>(std::ceil(0.5 * tend)) + 2);

    const double kBlock = 50.0;
    std::vector<double> blocks_start;
    for (double a = 10.0; a < tend; a += kBlock) blocks_start.push_back(a);
    std::vector<std::vector<double>> results(blocks_start.size());

    unsigned nthreads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (unsigned w = 0; w < nthreads; ++w) {
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < blocks_start.size(); i = next.fetch_add(1)) {
                double a = blocks_start[i];
                results[i] = block(a, std::min(a + kBlock, tend));
                if (i % 50 == 0) std::fprintf(stderr, "  ... block at t=%.0f\n", a);
            }
        });
    }
    for (auto& th : pool) th.join();

    std::vector<double> zeros;
    for (auto& r : results) zeros.insert(zeros.end(), r.begin(), r.end());
    std::sort(zeros.begin(), zeros.end());
    if (static_cast<long>(zeros.size()) < want) {
        std::fprintf(stderr, "gen_zeros: found only %zu zeros\n", zeros.size());
        return 1;
    }
    zeros.resize(static_cast<size_t>(want));

    // sanity: the classical first ordinate and the count below 100
    if (std::abs(zeros[0] - 14.134725141734694) > 1e-8) {
        std::fprintf(stderr, "gen_zeros: first ordinate off: %.12f\n", zeros[0]);
        return 1;
    }
    long below100 = std::count_if(zeros.begin(), zeros.end(), [](double z) { return z < 100.0; });
    if (below100 != 29) {
        std::fprintf(stderr, "gen_zeros: %ld ordinates below 100, expected 29\n", below100);
        return 1;
    }

    std::FILE* f = std::fopen(outfile, "w");
    if (!f) {
        std::perror("gen_zeros: fopen");
        return 1;
    }
    std::fprintf(f, "# ordinates of nontrivial zeta zeros on the critical line, ascending\n");
    std::fprintf(f, "# count: %ld, accuracy: 2e-9\n", want);
    for (double z : zeros) std::fprintf(f, "%.9f\n", z);
    std::fclose(f);
    std::fprintf(stderr, "gen_zeros: wrote %ld zeros up to %.6f\n", want, zeros.back());
    return 0;
}
