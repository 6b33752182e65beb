#include "anzb/mangoldt.hpp"

#include <algorithm>
#include <cmath>

#include "anzb/real.hpp"

namespace anzb {

namespace {

constexpr double kEulerGamma = 0.57721566490153286;
// 2|B|, B the constant in the classical estimate for sum Lambda(n)/n - log x
constexpr double kTwoAbsB = 0.046191417932242068;

}  // namespace

MangoldtTable MangoldtTable::build(int64_t limit) {
    if (limit < 1) throw DomainError("MangoldtTable::build: limit must be >= 1");
    MangoldtTable tbl;
    tbl.limit_ = limit;
    std::vector<bool> composite(static_cast<size_t>(limit) + 1, false);
    for (int64_t p = 2; p * p <= limit; ++p) {
        if (composite[static_cast<size_t>(p)]) continue;
        for (int64_t q = p * p; q <= limit; q += p) composite[static_cast<size_t>(q)] = true;
    }
    for (int64_t p = 2; p <= limit; ++p) {
        if (composite[static_cast<size_t>(p)]) continue;
        const double lp = std::log(static_cast<double>(p));
        for (int64_t q = p; q <= limit; q *= p) {
            tbl.n_.push_back(q);
            tbl.lam_.push_back(lp);
            if (q > limit / p) break;  // next power would overflow past limit
        }
    }
    // powers of distinct primes interleave; restore global ascending order
    std::vector<size_t> order(tbl.n_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return tbl.n_[a] < tbl.n_[b]; });
    std::vector<int64_t> ns(tbl.n_.size());
    std::vector<double> ls(tbl.n_.size());
    for (size_t i = 0; i < order.size(); ++i) {
        ns[i] = tbl.n_[order[i]];
        ls[i] = tbl.lam_[order[i]];
    }
    tbl.n_ = std::move(ns);
    tbl.lam_ = std::move(ls);
    tbl.psi_.resize(tbl.n_.size());
    long double acc = 0.0L;
    for (size_t i = 0; i < tbl.n_.size(); ++i) {
        acc += tbl.lam_[i];
        tbl.psi_[i] = static_cast<double>(acc);
    }
    return tbl;
}

size_t MangoldtTable::upper_index(double x) const {
    return static_cast<size_t>(
        std::upper_bound(n_.begin(), n_.end(), x,
                         [](double v, int64_t n) { return v < static_cast<double>(n); }) -
        n_.begin());
}

double MangoldtTable::psi(double x) const {
    if (x < 1.0 || x > static_cast<double>(limit_))
        throw DomainError("psi: x outside [1, limit]");
    size_t k = upper_index(x);
    return k == 0 ? 0.0 : psi_[k - 1];
}

double sum_twisted(const WeightedSumSpec& spec, const MangoldtTable& tbl) {
    switch (spec.kind) {
        case SumKind::psi:
            return tbl.psi(spec.x);
        case SumKind::lambda_xy:
            return lambda_xy_sum(spec.x, spec.y, tbl);
        default:
            break;
    }
    const double x = spec.x;
    const double t = spec.t;
    if (spec.kind == SumKind::loglog) {
        if (x < std::exp(1.0) * (1.0 - 1e-15)) throw DomainError("sum_loglog: x must be >= e");
    } else if (x <= 1.0) {
        throw DomainError("sum_twisted: x must be > 1");
    }
    if (x > static_cast<double>(tbl.limit()))
        throw DomainError("sum_twisted: x exceeds table limit");
    const double lx = std::log(x);
    const size_t end = tbl.upper_index(x);
    long double acc = 0.0L;
    for (size_t i = 0; i < end; ++i) {
        const double n = static_cast<double>(tbl.n()[i]);
        const double ln = std::log(n);
        double w = 0.0;
        switch (spec.kind) {
            case SumKind::loglog:
                w = tbl.lam()[i] / (n * ln) * (lx - ln) / lx;
                break;
            case SumKind::cesaro:
            case SumKind::cesaro_twisted:
                w = tbl.lam()[i] / n * (1.0 - n / x);
                break;
            case SumKind::logweight_twisted:
                w = tbl.lam()[i] * (1.0 / (n * ln) - 1.0 / (x * lx));
                break;
            default:
                break;
        }
        const double c = (t == 0.0) ? 1.0 : std::cos(t * ln);
        acc += static_cast<long double>(w * c);
    }
    return static_cast<double>(acc);
}

double sum_loglog(double x, const MangoldtTable& tbl) {
    return sum_twisted({SumKind::loglog, x, 0.0, 0.0}, tbl);
}

double lemma52_rhs(double x) {
    const double lx = std::log(x);
    return std::log(lx) + kEulerGamma - 1.0 + kEulerGamma / lx +
           kTwoAbsB / (std::sqrt(x) * lx * lx);
}

double sum_cesaro(double x, const MangoldtTable& tbl) {
    return sum_twisted({SumKind::cesaro, x, 0.0, 0.0}, tbl);
}

double lemma53_rhs(double x) {
    const double lx = std::log(x);
    return lx - (1.0 + kEulerGamma) + std::log(2.0 * M_PI) / x + kTwoAbsB / std::sqrt(x) -
           1.0 / (6.0 * x * x * x);
}

double lambda_xy_sum(double x, double y, const MangoldtTable& tbl) {
    if (x < 2.0 || y < 2.0) throw DomainError("lambda_xy_sum: x, y must be >= 2");
    const double xy = x * y;
    if (xy > static_cast<double>(tbl.limit()))
        throw DomainError("lambda_xy_sum: xy exceeds table limit");
    const double ly = std::log(y);
    const double lxy = std::log(xy);
    const size_t end = tbl.upper_index(xy);
    long double acc = 0.0L;
    for (size_t i = 0; i < end; ++i) {
        const double n = static_cast<double>(tbl.n()[i]);
        const double w = (n <= x) ? 1.0 : (lxy - std::log(n)) / ly;
        acc += static_cast<long double>(tbl.lam()[i] / n * w);
    }
    return static_cast<double>(acc);
}

Enclosure q_of_x(double x, const MangoldtTable& tbl, int64_t tail_limit) {
    if (x < 81.0) throw DomainError("q_of_x: x must be >= 81");
    const double rx = std::sqrt(x);
    int64_t T = tail_limit > 0
                    ? tail_limit
                    : static_cast<int64_t>(std::max(1e6, 100.0 * rx));
    T = std::min<int64_t>(T, tbl.limit());
    if (static_cast<double>(T) < 2.0 * rx)
        throw DomainError("q_of_x: tail cutoff below 2*sqrt(x); enlarge the table");
    const size_t lo = tbl.upper_index(rx);
    const size_t hi = tbl.upper_index(static_cast<double>(T));
    long double s1 = 0.0L;
    for (size_t i = lo; i < hi; ++i) {
        const double n = static_cast<double>(tbl.n()[i]);
        s1 += static_cast<long double>(tbl.lam()[i] / (n * n * std::log(n)));
    }
    const double s2 = 2.0 * tbl.psi(rx) / (x * std::log(x));
    // tail of sum_{m>T} Lambda(m)/(m^2 log m): integrate against
    // psi(u) <= u + sqrt(u) log^2 u / (8 pi)
    const double lT = std::log(static_cast<double>(T));
    const double tail = 2.0 / (T * lT) + 1.0 / (T * lT * lT) +
                        (2.0 * lT + 7.0 / 3.0) / (12.0 * M_PI) * std::pow(T, -1.5);
    const double partial = static_cast<double>(s1) + s2;
    return Enclosure{partial + 0.5 * tail, 0.5 * tail + 1e-13};
}

double trig_poly_p2(double theta) {
    const double l2 = std::log(2.0);
    const double c81 = 1.0 / (81.0 * std::log(81.0));
    const double c100 = 1.0 / (100.0 * std::log(100.0));
    double s = 0.0;
    for (int j = 1; j <= 6; ++j) {
        const double a = 1.0 / (std::pow(2.0, j) * j * l2) - (j % 2 ? c81 : c100);
        const double term = (1.0 - std::cos(j * theta)) * a;
        s += (j % 2) ? term : -term;
    }
    return s;
}

Interval trig_poly_p2(const Interval& theta, mpfr_prec_t prec) {
    const Interval one = Interval::point(1.0, prec);
    const Interval two = Interval::point(2.0, prec);
    const Interval l2 = log(two);
    const Interval c81 = one / (Interval::point(81.0, prec) * log(Interval::point(81.0, prec)));
    const Interval c100 =
        one / (Interval::point(100.0, prec) * log(Interval::point(100.0, prec)));
    Interval s = Interval::point(0.0, prec);
    for (int j = 1; j <= 6; ++j) {
        const Interval jj = Interval::point(static_cast<double>(j), prec);
        const Interval a = one / (pow_int(two, j) * jj * l2) - (j % 2 ? c81 : c100);
        const Interval term = (one - cos(jj * theta)) * a;
        s = (j % 2) ? s + term : s - term;
    }
    return s;
}

}  // namespace anzb
