#include "anzb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace anzb {

namespace {

constexpr double kGamma = 0.57721566490153286;

constexpr double kThresholdMain = 6.5659969137330511e7;  // e^18

struct BoundMeta {
    BoundId id;
    const char* name;
    double threshold;
};

constexpr BoundMeta kMeta[] = {
    {BoundId::thm11_upper, "thm11_upper", kThresholdMain},
    {BoundId::thm11_lower, "thm11_lower", kThresholdMain},
    {BoundId::thm12_abs, "thm12_abs", kThresholdMain},
    {BoundId::thm12_recip, "thm12_recip", kThresholdMain},
    {BoundId::thm13, "thm13", kThresholdMain},
    {BoundId::lls_abs, "lls_abs", 1e10},
    {BoundId::lls_recip, "lls_recip", 1e10},
    {BoundId::cvs, "cvs", 1e30},
    {BoundId::two_loglog, "two_loglog", kThresholdMain},
};

}  // namespace

const char* bound_name(BoundId id) { return kMeta[static_cast<int>(id)].name; }

double bound_threshold(BoundId id) { return kMeta[static_cast<int>(id)].threshold; }

bool bound_valid_at(BoundId id, double t) { return t >= bound_threshold(id); }

double eval_bound(BoundId id, double t) {
    if (!(t > std::exp(1.0)))
        throw DomainError("eval_bound: t must exceed e");
    const double L = std::log(t);
    const double LL = std::log(L);
    const double eg = std::exp(kGamma);
    switch (id) {
        case BoundId::thm11_upper:
            return 2.0 * LL + 1.0 - kGamma - std::log(4.0) + 8.0 * LL / L - 8.6 / L;
        case BoundId::thm11_lower:
            return 2.0 * LL + 1.0 - kGamma - std::log(4.0) - 8.0 * LL / L + 7.0 / L;
        case BoundId::thm12_abs:
            return 2.0 * eg * (LL - std::log(2.0) + 0.5 + 0.2674 / LL - 2.6 * LL / L);
        case BoundId::thm12_recip:
            return 12.0 * eg / (M_PI * M_PI) *
                   (LL - std::log(2.0) + 0.5 + 5.0 / (8.0 * LL) + 10.8 / (LL * LL));
        case BoundId::thm13:
            return 2.0 * LL + 0.0784 - kGamma + 9.0581 * LL / L - 4.7 / L;
        case BoundId::lls_abs:
            return 2.0 * eg * (LL - std::log(2.0) + 0.5 + 1.0 / LL);
        case BoundId::lls_recip:
            return 12.0 * eg / (M_PI * M_PI) *
                   (LL - std::log(2.0) + 0.5 + 1.0 / LL + 14.0 * LL / L);
        case BoundId::cvs:
            return 2.0 * LL - 0.4989 + 5.35 * LL * LL / L;
        case BoundId::two_loglog:
            return 2.0 * LL;
    }
    throw DomainError("eval_bound: unknown bound");
}

double crossover(BoundId a, BoundId b, double t_lo, double t_hi, double tol) {
    double ulo = std::log(t_lo), uhi = std::log(t_hi);
    auto f = [&](double u) {
        double t = std::exp(u);
        return eval_bound(a, t) - eval_bound(b, t);
    };
    double flo = f(ulo), fhi = f(uhi);
    if (flo == 0.0 && fhi == 0.0)
        throw NoCrossing("crossover: bounds coincide on the whole bracket");
    if (flo == 0.0) return t_lo;
    if (fhi == 0.0) return t_hi;
    if ((flo > 0) == (fhi > 0))
        throw NoCrossing("crossover: difference keeps one sign on the bracket");
    while (uhi - ulo > tol) {
        double um = 0.5 * (ulo + uhi);
        double fm = f(um);
        if (fm == 0.0) return std::exp(um);
        if ((fm > 0) == (flo > 0)) {
            ulo = um;
            flo = fm;
        } else {
            uhi = um;
        }
    }
    return std::exp(0.5 * (ulo + uhi));
}

std::vector<BoundReport> empirical_sweep(std::vector<double> ts, const SweepConfig& cfg) {
    std::sort(ts.begin(), ts.end());
    std::vector<BoundReport> out;
    out.reserve(ts.size());
    for (double t : ts) {
        BoundReport rep;
        rep.t = t;
        for (int i = 0; i < 9; ++i) rep.bounds[i] = eval_bound(static_cast<BoundId>(i), t);
        if (cfg.with_empirical && t <= cfg.max_empirical_height) {
            // the main-sum rounding floor grows like N * eps, so a fixed
            // target becomes unattainable at large heights; relax it with t
            EulerMaclaurinConfig em = cfg.em;
            em.target_abs_err = std::max(em.target_abs_err, 2e-14 * t);
            ZetaPair zp = zeta_pair_1line(t, em);
            double az = std::abs(zp.zeta.value);
            rep.emp_abs_zeta = Enclosure{az, zp.zeta.err};
            if (az > zp.zeta.err) {
                rep.emp_recip_zeta =
                    Enclosure{1.0 / az, zp.zeta.err / (az * (az - zp.zeta.err))};
                std::complex<double> r = zp.zeta_deriv.value / zp.zeta.value;
                double rerr = (zp.zeta_deriv.err + std::abs(r) * zp.zeta.err) / (az - zp.zeta.err);
                rep.emp_re_logderiv = Enclosure{r.real(), rerr};
                rep.emp_abs_logderiv = Enclosure{std::abs(r), rerr};
            }
            // flag any violated assertion; suppressed below each threshold
            std::string bad;
            auto check = [&](BoundId id, const std::optional<Enclosure>& emp, bool negate) {
                if (!emp || !bound_valid_at(id, t)) return;
                double v = negate ? -emp->value : emp->value;
                if (eval_bound(id, t) < v - emp->err) bad += std::string(bound_name(id)) + "!";
            };
            check(BoundId::thm11_upper, rep.emp_re_logderiv, false);
            check(BoundId::thm11_lower, rep.emp_re_logderiv, true);
            check(BoundId::thm12_abs, rep.emp_abs_zeta, false);
            check(BoundId::thm12_recip, rep.emp_recip_zeta, false);
            check(BoundId::thm13, rep.emp_abs_logderiv, false);
            check(BoundId::lls_abs, rep.emp_abs_zeta, false);
            check(BoundId::lls_recip, rep.emp_recip_zeta, false);
            check(BoundId::cvs, rep.emp_abs_logderiv, false);
            rep.flags = bad.empty() ? "ok" : bad;
        }
        out.push_back(std::move(rep));
    }
    return out;
}

void write_csv(std::ostream& out, const std::vector<BoundReport>& reports) {
    out << "t,log_t,loglog_t,thm11_upper,thm11_lower,thm12_abs,thm12_recip,thm13,"
           "lls_abs,lls_recip,cvs,two_loglog,emp_re_logderiv,emp_abs_zeta,"
           "emp_recip_zeta,emp_abs_logderiv,flags\n";
    auto emit = [&](const std::optional<Enclosure>& e) {
        out << ',';
        if (e) out << e->value;
    };
    for (const BoundReport& r : reports) {
        std::ostringstream line;
        line.precision(12);
        line << r.t << ',' << std::log(r.t) << ',' << std::log(std::log(r.t));
        for (int i = 0; i < 9; ++i) line << ',' << r.bounds[i];
        out << line.str();
        emit(r.emp_re_logderiv);
        emit(r.emp_abs_zeta);
        emit(r.emp_recip_zeta);
        emit(r.emp_abs_logderiv);
        out << ',' << r.flags << '\n';
    }
}

}  // namespace anzb
