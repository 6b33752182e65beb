#include "anzb/optimize.hpp"

#include <cmath>
#include <map>
#include <vector>

namespace anzb {

namespace {

struct Box {
    Interval x;
    double f_lo;  // lower bound of f on x
    int depth;
};

// One branch-and-bound pass at fixed precision. Returns the enclosure of the
// global minimum, or nullopt if the tolerance was not reached within budget.
std::optional<Interval> min_pass(const IntervalFn& f, const CertificateRequest& req,
                                 mpfr_prec_t prec) {
    // boxes ordered by their lower bound; the first key is the global lower bound
    std::multimap<double, Box> queue;
    double best_ub = HUGE_VAL;

    auto push = [&](const Interval& x, int depth) {
        Interval img = f(x, prec);
        double lo = img.lo_d();
        Interval at_mid = f(Interval::point(x.mid()), prec);
        best_ub = std::min(best_ub, at_mid.hi_d());
        if (lo <= best_ub) queue.insert({lo, Box{x, lo, depth}});
    };

    push(req.domain, 0);
    long boxes = 1;
    while (!queue.empty()) {
        auto it = queue.begin();
        Box box = it->second;
        if (best_ub - box.f_lo <= req.tolerance) {
            Real lo(prec), hi(prec);
            mpfr_set_d(lo.raw(), box.f_lo, MPFR_RNDD);
            mpfr_set_d(hi.raw(), best_ub, MPFR_RNDU);
            return Interval(std::move(lo), std::move(hi));
        }
        queue.erase(it);
        if (box.depth >= req.max_depth || boxes >= req.max_boxes) return std::nullopt;
        Real m = box.x.mid();
        push(Interval(box.x.lo(), m), box.depth + 1);
        push(Interval(m, box.x.hi()), box.depth + 1);
        boxes += 2;
        // prune boxes whose lower bound exceeds the incumbent
        while (!queue.empty()) {
            auto last = std::prev(queue.end());
            if (last->first > best_ub)
                queue.erase(last);
            else
                break;
        }
    }
    // queue drained: the min is pinned at the incumbent
    return Interval::make(best_ub - req.tolerance, best_ub, prec);
}

}  // namespace

Interval certified_min(const IntervalFn& f, const CertificateRequest& req) {
    for (mpfr_prec_t p = req.precision; p <= req.max_precision; p *= 2) {
        if (auto r = min_pass(f, req, p)) return *r;
    }
    throw PrecisionExhausted("certified_min: tolerance unreachable within budget");
}

Interval certified_sup(const IntervalFn& f, const CertificateRequest& req) {
    IntervalFn neg = [&f](const Interval& x, mpfr_prec_t p) { return -f(x, p); };
    return -certified_min(neg, req);
}

VerifyResult verify_monotone(const IntervalFn& f, const Interval& domain, Direction dir,
                             long step_budget, mpfr_prec_t prec) {
    const bool dec = dir == Direction::decreasing;
    for (mpfr_prec_t p = prec; p <= 1024; p *= 2) {
        for (long k = 16; k <= step_budget; k *= 2) {
            std::vector<Real> nodes;
            nodes.reserve(k + 1);
            Interval w = domain.with_prec(p);
            for (long i = 0; i <= k; ++i) {
                Real t(p);
                // node_i = lo + i*(hi-lo)/k, rounded to nearest (exactness not required)
                mpfr_sub(t.raw(), w.hi().raw(), w.lo().raw(), MPFR_RNDN);
                mpfr_mul_si(t.raw(), t.raw(), i, MPFR_RNDN);
                mpfr_div_si(t.raw(), t.raw(), k, MPFR_RNDN);
                mpfr_add(t.raw(), t.raw(), w.lo().raw(), MPFR_RNDN);
                if (i == 0) t = w.lo();
                if (i == k) t = w.hi();
                nodes.push_back(std::move(t));
            }
            // refutation check on thin node values
            std::vector<Interval> thin;
            thin.reserve(k + 1);
            for (auto& n : nodes) thin.push_back(f(Interval::point(n), p));
            for (long i = 0; i + 1 <= k; ++i) {
                bool out_of_order = dec ? thin[i].hi_d() < thin[i + 1].lo_d()
                                        : thin[i].lo_d() > thin[i + 1].hi_d();
                if (out_of_order)
                    return {Verdict::refuted,
                            std::make_pair(nodes[i].to_double(), nodes[i + 1].to_double()),
                            std::nullopt};
            }
            // certification: images of cells separated by one mesh cell must
            // be disjoint in the stated order
            std::vector<Interval> img;
            img.reserve(k);
            for (long i = 0; i < k; ++i) img.push_back(f(Interval(nodes[i], nodes[i + 1]), p));
            bool ok = true;
            for (long i = 0; i + 2 < k && ok; ++i) {
                if (dec)
                    ok = img[i].lo_d() > img[i + 2].hi_d();
                else
                    ok = img[i].hi_d() < img[i + 2].lo_d();
            }
            if (ok) return {Verdict::verified, std::nullopt, std::nullopt};
        }
    }
    return {Verdict::inconclusive, std::nullopt, std::nullopt};
}

VerifyResult verify_nonneg(const IntervalFn& f, const Interval& domain, long step_budget,
                           mpfr_prec_t prec, double floor) {
    for (mpfr_prec_t p = prec; p <= 1024; p *= 2) {
        std::vector<Box> stack{{domain, 0.0, 0}};
        double inf_lo = HUGE_VAL, inf_hi = HUGE_VAL;
        long used = 0;
        bool budget_hit = false;
        while (!stack.empty()) {
            Box box = stack.back();
            stack.pop_back();
            Interval img = f(box.x, p);
            Interval thin = f(Interval::point(box.x.mid()), p);
            inf_hi = std::min(inf_hi, thin.hi_d());
            // a thin evaluation certainly below the floor refutes outright
            if (thin.hi_d() < floor || img.hi_d() < floor) {
                const Interval& ev = thin.hi_d() < floor ? thin : img;
                return {Verdict::refuted,
                        std::make_pair(box.x.mid().to_double(), box.x.mid().to_double()),
                        Interval::make(ev.lo_d(), ev.hi_d())};
            }
            if (img.lo_d() >= floor) {
                inf_lo = std::min(inf_lo, img.lo_d());
                continue;
            }
            if (++used > step_budget || box.depth > 200) {
                budget_hit = true;
                break;
            }
            Real m = box.x.mid();
            stack.push_back({Interval(box.x.lo(), m), 0.0, box.depth + 1});
            stack.push_back({Interval(m, box.x.hi()), 0.0, box.depth + 1});
        }
        if (!budget_hit) {
            Interval inf_enc = Interval::make(std::min(inf_lo, inf_hi), inf_hi);
            return {Verdict::verified, std::nullopt, inf_enc};
        }
    }
    return {Verdict::inconclusive, std::nullopt, std::nullopt};
}

}  // namespace anzb
