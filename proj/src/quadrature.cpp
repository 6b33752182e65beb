#include "anzb/quadrature.hpp"

#include <cmath>
#include <vector>

namespace anzb {

namespace {

struct GL20 {
    double x[10], w[10];  // positive nodes and weights on [-1, 1]
    GL20() {
        const int n = 20;
        for (int i = 0; i < 10; ++i) {
            // Newton iteration from the Chebyshev estimate
            double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = n * (t * p1 - p0) / (t * t - 1.0);
                double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-16) break;
            }
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            x[i] = t;
            w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

const GL20& rule() {
    static GL20 r;
    return r;
}

}  // namespace

double gauss_legendre(const std::function<double(double)>& f, double a, double b) {
    const GL20& r = rule();
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 10; ++i)
        s += r.w[i] * (f(mid + half * r.x[i]) + f(mid - half * r.x[i]));
    return s * half;
}

Enclosure integrate(const std::function<double(double)>& f, double a, double b, double tol,
                    int max_doublings) {
    long panels = 1;
    double prev = gauss_legendre(f, a, b);
    double change = HUGE_VAL;
    for (int d = 0; d < max_doublings; ++d) {
        panels *= 2;
        double s = 0.0;
        double hstep = (b - a) / static_cast<double>(panels);
        for (long i = 0; i < panels; ++i)
            s += gauss_legendre(f, a + i * hstep, a + (i + 1) * hstep);
        change = std::abs(s - prev);
        prev = s;
        if (change < tol) break;
    }
    return Enclosure{prev, 10.0 * change + 1e-15 * std::abs(prev)};
}

}  // namespace anzb
