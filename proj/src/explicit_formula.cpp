#include "anzb/explicit_formula.hpp"

#include <cmath>

#include "anzb/digamma.hpp"
#include "anzb/quadrature.hpp"

namespace anzb {

SumFn poisson_sum_fn() {
    return SumFn{[](double x) { return h_poisson(x); }, [](double x) { return h_deriv_bound(x); },
                 0.5};
}

SumFn extremal_sum_fn(const ExtremalParams& p) {
    double decay = (2.0 * std::cosh(M_PI * p.delta) + 2.0) / (2.0 * p.c());
    return SumFn{[p](double x) { return h_extremal(p, x); },
                 [p](double x) { return h_extremal_deriv_bound(p, x); }, decay};
}

Enclosure zero_sum(const SumFn& g, double t, const ZeroTable& table, BudgetItems* items,
                   const ZeroSumOptions& opt) {
    const double H = table.max_height();
    if (H < 2.0 * std::abs(t) + 20.0)
        throw DataError("zero_sum: table coverage ends too close to t");
    long double acc = 0.0L;
    long double dacc = 0.0L;
    for (double gm : table.ordinates()) {
        acc += static_cast<long double>(g.value(t - gm) + g.value(t + gm));
        dacc += static_cast<long double>(g.deriv_bound(t - gm) + g.deriv_bound(t + gm));
    }
    double sum = static_cast<double>(acc);
    // beyond the table: at most 0.25 log u + 2 ordinates per unit height,
    // |g| <= decay_c/x^2 and |u -+ t| >= u/2 for u >= H >= 2t
    double tail = 5.0 * g.decay_c * (0.25 * (std::log(H) + 1.0) + 2.0) / H;
    double ord = table.accuracy() * static_cast<double>(dacc);
    double rounding = 1e-12;
    if (tail > opt.max_tail_fraction * (std::abs(sum) + 0.01))
        throw DataError("zero_sum: tail bound dominates; table coverage insufficient");
    if (items) {
        items->zero_tail += tail;
        items->ordinate_accuracy += ord;
        items->euler_maclaurin += rounding;
    }
    return Enclosure{sum, tail + ord + rounding};
}

namespace {

// (1/2pi) int h_delta(t-u) Re psi(1/4 + iu/2) du over |u - t| <= W, in a
// near panel plus dyadic shells, with the analytic remainder beyond W.
struct ArchResult {
    double value;
    double quad_err;
    double eval_err;
    double tail;
};

ArchResult archimedean(const ExtremalParams& p, double t, double quad_tol) {
    double eval_err_max = 0.0;
    auto f = [&](double u) {
        ComplexEnclosure d = digamma({0.25, 0.5 * u});
        eval_err_max = std::max(eval_err_max, d.err);
        return h_extremal(p, t - u) * d.value.real();
    };
    const double W0 = 64.0;
    const double W = 1e5;
    double total = 0.0, quad_err = 0.0;
    Enclosure near = integrate(f, t - W0, t + W0, quad_tol / 4.0);
    total += near.value;
    quad_err += near.err;
    for (double a = W0; a < W; a *= 2.0) {
        double b = std::min(2.0 * a, W);
        for (int side = 0; side < 2; ++side) {
            double lo = side ? t - b : t + a;
            double hi = side ? t - a : t + b;
            Enclosure sh = integrate(f, lo, hi, quad_tol / 16.0, 10);
            total += sh.value;
            quad_err += sh.err;
        }
    }
    const double C = (2.0 * std::cosh(M_PI * p.delta) + 2.0) / (2.0 * p.c());
    // |Re psi(1/4+iu/2)| <= log(2 + |u|) + 3 on the integration ray
    double tail = (C / M_PI) * (std::log(t + W + 2.0) + 4.0) / W;
    return ArchResult{total / (2.0 * M_PI), quad_err / (2.0 * M_PI),
                      eval_err_max * 2.0 * W / (2.0 * M_PI), tail};
}

}  // namespace

GwResult gw_reconcile(const ExtremalParams& p, double t, const ZeroTable& table,
                      const MangoldtTable& primes, double quad_tol, bool drop_prime_sum) {
    if (p.delta < 0.5) throw DomainError("gw_reconcile: delta must be >= 1/2");
    if (t <= 0.0) throw DomainError("gw_reconcile: t must be positive");
    const double prime_cutoff = std::exp(2.0 * M_PI * p.delta);
    if (prime_cutoff > static_cast<double>(primes.limit()))
        throw DomainError("gw_reconcile: sieve limit below e^{2 pi delta}");

    GwResult res;
    BudgetItems items;
    Enclosure lhs = zero_sum(extremal_sum_fn(p), t, table, &items);

    ArchResult arch = archimedean(p, t, quad_tol);
    items.quadrature += arch.quad_err + arch.tail;
    items.euler_maclaurin += arch.eval_err;

    double rhs = arch.value;
    rhs -= std::log(M_PI) / (2.0 * M_PI) * ft_extremal(p, 0.0);
    std::complex<double> poles =
        h_extremal(p, {t, 0.5}) + h_extremal(p, {t, -0.5});
    rhs += poles.real();
    if (!drop_prime_sum) {
        long double ps = 0.0L;
        const size_t end = primes.upper_index(prime_cutoff);
        for (size_t i = 0; i < end; ++i) {
            double n = static_cast<double>(primes.n()[i]);
            double ln = std::log(n);
            ps += static_cast<long double>(primes.lam()[i] / std::sqrt(n) *
                                           ft_extremal(p, ln / (2.0 * M_PI)) * std::cos(t * ln));
        }
        rhs -= static_cast<double>(ps) / M_PI;
    }

    res.cmp.lhs = Enclosure{lhs.value, 0.0};
    res.cmp.rhs = Enclosure{rhs, 0.0};
    res.cmp.items = items;
    res.cmp.verdict = std::abs(lhs.value - rhs) <= items.total() ? CompVerdict::consistent
                                                                 : CompVerdict::violated;

    // archimedean integral against its closed-form expansion
    double sgn = (p.sign == Sign::plus) ? 1.0 : -1.0;
    res.arch_numeric = arch.value;
    res.arch_closed =
        (0.5 + 1.0 / (sgn * std::exp(M_PI * p.delta) - 1.0)) * std::log(t / 2.0);
    res.arch_budget = 1.3 / (t * t) + arch.quad_err + arch.tail + arch.eval_err;
    res.arch_consistent = std::abs(res.arch_numeric - res.arch_closed) <= res.arch_budget;
    return res;
}

BudgetedComparison lemma21_check(double t, const ZeroTable& table,
                                 const EulerMaclaurinConfig& cfg) {
    if (t < 10.0) throw DomainError("lemma21_check: t must be >= 10");
    BudgetedComparison cmp;
    ComplexEnclosure r = zeta_logderiv_1line(t, cfg);
    cmp.lhs = Enclosure{r.value.real(), 0.0};
    cmp.items.euler_maclaurin += r.err;
    Enclosure zs = zero_sum(poisson_sum_fn(), t, table, &cmp.items);
    cmp.rhs = Enclosure{zs.value - 0.5 * std::log(t / (2.0 * M_PI)), 0.0};
    cmp.items.stated_o += 7.0 / (4.0 * t * t);
    cmp.verdict = std::abs(cmp.lhs.value - cmp.rhs.value) <= cmp.items.total()
                      ? CompVerdict::consistent
                      : CompVerdict::violated;
    return cmp;
}

BudgetedComparison zero_energy_bound_check(double t, const ZeroTable& table) {
    BudgetedComparison cmp;
    BudgetItems zi;
    Enclosure zs = zero_sum(poisson_sum_fn(), t, table, &zi);
    cmp.lhs = Enclosure{2.0 * zs.value, 0.0};
    cmp.items.zero_tail += 2.0 * zi.zero_tail;
    cmp.items.ordinate_accuracy += 2.0 * zi.ordinate_accuracy;
    cmp.items.euler_maclaurin += 2.0 * zi.euler_maclaurin;
    ComplexEnclosure r = zeta_logderiv_1line(t);
    cmp.rhs = Enclosure{std::log(t / (2.0 * M_PI)) + 2.0 * r.value.real(), 0.0};
    cmp.items.euler_maclaurin += 2.0 * r.err;
    cmp.items.stated_o += 7.0 / (2.0 * t * t);
    cmp.verdict = std::abs(cmp.lhs.value - cmp.rhs.value) <= cmp.items.total()
                      ? CompVerdict::consistent
                      : CompVerdict::violated;
    return cmp;
}

BudgetedComparison lemma55_check(double t, double x, const ZeroTable& table,
                                 const MangoldtTable& primes, const EulerMaclaurinConfig& cfg) {
    if (t < 10.0) throw DomainError("lemma55_check: t must be >= 10");
    if (x < 2.0) throw DomainError("lemma55_check: x must be >= 2");
    if (x > static_cast<double>(primes.limit()))
        throw DomainError("lemma55_check: x exceeds sieve limit");
    BudgetedComparison cmp;
    ComplexEnclosure r = zeta_logderiv_1line(t, cfg);
    double re_zdz = r.value.real();
    double tw = sum_twisted({SumKind::cesaro_twisted, x, 0.0, t}, primes);
    cmp.lhs = Enclosure{tw + re_zdz, 0.0};
    cmp.rhs = Enclosure{-(std::log(t / (2.0 * M_PI)) + re_zdz) / x, 0.0};
    cmp.items.euler_maclaurin += r.err * (1.0 + 1.0 / x);
    BudgetItems zi;
    Enclosure zs = zero_sum(poisson_sum_fn(), t, table, &zi);
    double energy = 2.0 * (zs.value + zs.err);  // sum_rho |rho - it|^{-2}, upper
    cmp.items.stated_o += energy / std::sqrt(x) + 1.7 / (t * t);
    cmp.verdict = std::abs(cmp.lhs.value - cmp.rhs.value) <= cmp.items.total()
                      ? CompVerdict::consistent
                      : CompVerdict::violated;
    return cmp;
}

}  // namespace anzb
