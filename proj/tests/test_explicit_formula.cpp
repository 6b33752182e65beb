#include <doctest.h>

#include <cmath>
#include <fstream>
#include <memory>

#include "anzb/explicit_formula.hpp"

using namespace anzb;

namespace {

const ZeroTable* big_table() {
    static std::unique_ptr<ZeroTable> tbl = [] {
        std::ifstream f(std::string(ANZB_REPO_DIR) + "/data/zeros_100k.txt");
        if (!f) return std::unique_ptr<ZeroTable>();
        return std::make_unique<ZeroTable>(ZeroTable::load(f));
    }();
    return tbl.get();
}

const MangoldtTable& primes() {
    static MangoldtTable t = MangoldtTable::build(100000);
    return t;
}

}  // namespace

TEST_CASE("zero_sum of the Poisson kernel at t=0 recovers the zero energy") {
    if (!big_table()) return;
    BudgetItems items;
    Enclosure s = zero_sum(poisson_sum_fn(), 0.0, *big_table(), &items);
    CHECK(s.err < 1e-3);
    CHECK(s.consistent_with(0.5 * 0.0461914179));  // |B|, B the zero-energy constant
    CHECK(items.zero_tail > 0.0);
    CHECK(items.total() == doctest::Approx(s.err).epsilon(1e-9));
}

TEST_CASE("zero_sum demands coverage") {
    if (!big_table()) return;
    CHECK_THROWS_AS(zero_sum(poisson_sum_fn(), 60000.0, *big_table()), DataError);
}

TEST_CASE("two routes to Re zeta'/zeta agree") {
    if (!big_table()) return;
    for (double t : {100.0, 1000.0}) {
        BudgetedComparison c = lemma21_check(t, *big_table());
        CHECK(c.verdict == CompVerdict::consistent);
        CHECK(std::abs(c.lhs.value - c.rhs.value) <= c.budget());
    }
    CHECK_THROWS_AS(lemma21_check(1000.0, big_table()->truncated(200.0)), DataError);
}

TEST_CASE("explicit-formula reconciliation") {
    if (!big_table()) return;
    for (double delta : {0.5, 1.0}) {
        for (double t : {30.0, 100.0}) {
            for (Sign s : {Sign::plus, Sign::minus}) {
                GwResult r = gw_reconcile({delta, s}, t, *big_table(), primes());
                CHECK(r.cmp.verdict == CompVerdict::consistent);
                CHECK(r.arch_consistent);
            }
        }
    }
    GwResult dropped =
        gw_reconcile({0.7, Sign::plus}, 50.0, *big_table(), primes(), 1e-8, true);
    CHECK(dropped.cmp.verdict == CompVerdict::violated);
    CHECK_THROWS_AS(gw_reconcile({0.3, Sign::plus}, 50.0, *big_table(), primes()), DomainError);
}

TEST_CASE("zero-energy inequality holds") {
    if (!big_table()) return;
    for (double t : {100.0, 500.0, 14.13}) {
        BudgetedComparison c = zero_energy_bound_check(t, *big_table());
        CHECK(c.verdict == CompVerdict::consistent);
        CHECK(c.lhs.value <= c.rhs.value + c.budget());
    }
}

TEST_CASE("twisted cesaro sum against the reflected route") {
    if (!big_table()) return;
    BudgetedComparison a = lemma55_check(100.0, 1e4, *big_table(), primes());
    CHECK(a.verdict == CompVerdict::consistent);
    BudgetedComparison b = lemma55_check(100.0, 4.0, *big_table(), primes());
    CHECK(b.verdict == CompVerdict::consistent);
    CHECK_THROWS_AS(lemma55_check(100.0, 1.5, *big_table(), primes()), DomainError);
}
