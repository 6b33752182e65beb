#include <doctest.h>

#include <sstream>

#include "anzb/claims.hpp"

using namespace anzb;

TEST_CASE("claim catalogue lists C1..C20 in order") {
    auto ids = claim_ids();
    REQUIRE(ids.size() == 20);
    CHECK(ids.front() == "C1");
    CHECK(ids.back() == "C20");
    for (size_t i = 0; i < ids.size(); ++i)
        CHECK(ids[i] == "C" + std::to_string(i + 1));
}

TEST_CASE("closed-form constant claims reproduce their frozen enclosures") {
    ClaimOptions opts;

    auto c1 = run_claim("C1", opts);
    CHECK(c1.verdict == ClaimVerdict::verified);
    CHECK(c1.computed.lo_d() >= -0.023096);
    CHECK(c1.computed.hi_d() <= -0.023088);
    // independent high-precision value of log(4 pi)/2 - 1 - gamma/2
    CHECK(c1.computed.lo_d() <= -0.0230957089);
    CHECK(c1.computed.hi_d() >= -0.0230957090);

    auto c11 = run_claim("C11", opts);
    CHECK(c11.verdict == ClaimVerdict::verified);
    CHECK(c11.computed.lo_d() <= 2.13884895);
    CHECK(c11.computed.hi_d() >= 2.13884894);
    CHECK(c11.computed.lo_d() >= 2.1388);
    CHECK(c11.computed.hi_d() <= 2.1389);
}

TEST_CASE("certified optimizer claims land inside their stated windows") {
    ClaimOptions opts;

    auto c2 = run_claim("C2", opts);
    CHECK(c2.verdict == ClaimVerdict::verified);
    // minimum of (2/c + A(c)^2)/8 over [1/2, 3]; value at c = 1.0467 is
    // 0.26735611723..., and the true minimum sits within 1e-7 below it
    CHECK(c2.computed.lo_d() >= 0.267356);
    CHECK(c2.computed.hi_d() <= 0.2673562);
    CHECK(c2.computed.hi_d() >= 0.2673561);

    auto c3 = run_claim("C3", opts);
    CHECK(c3.verdict == ClaimVerdict::verified);
    // minimum of (e^l + 1)/(2l) - l - gamma over [1/2, 5]
    CHECK(c3.computed.lo_d() >= -0.49892);
    CHECK(c3.computed.hi_d() <= -0.49891);

    auto c4 = run_claim("C4", opts);
    CHECK(c4.verdict == ClaimVerdict::verified);
    CHECK(c4.computed.hi_d() <= 1.299);
    CHECK(c4.computed.hi_d() >= 1.2987);

    auto c5 = run_claim("C5", opts);
    CHECK(c5.verdict == ClaimVerdict::verified);
    CHECK(c5.computed.hi_d() <= 3.326);
    CHECK(c5.computed.hi_d() >= 3.3252);
}

TEST_CASE("subdivision claims verify with positive margins") {
    ClaimOptions opts;
    for (const char* id : {"C6", "C7", "C10", "C12", "C13", "C14", "C15",
                           "C16", "C17", "C20"}) {
        auto r = run_claim(id, opts);
        CHECK_MESSAGE(r.verdict == ClaimVerdict::verified, id);
        CHECK_MESSAGE(r.margin >= -1e-12, id);
    }
}

TEST_CASE("prime-table claims verify against the default sieve") {
    ClaimOptions opts;
    for (const char* id : {"C8", "C9", "C18", "C19"}) {
        auto r = run_claim(id, opts);
        CHECK_MESSAGE(r.verdict == ClaimVerdict::verified, id);
    }
}

TEST_CASE("run_all honours the comma-separated filter") {
    auto reports = run_all("C1,C3");
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].id == "C1");
    CHECK(reports[1].id == "C3");
    auto s = summarize(reports);
    CHECK(s.verified == 2);
    CHECK(s.violated == 0);
    CHECK(s.inconclusive == 0);
}

TEST_CASE("no claim is reported violated even at minimal precision") {
    ClaimOptions opts;
    opts.precision = 64;
    opts.max_precision = 64;
    for (const char* id : {"C1", "C4", "C5", "C7", "C11"}) {
        auto r = run_claim(id, opts);
        CHECK_MESSAGE(r.verdict != ClaimVerdict::violated, id);
    }
}

TEST_CASE("json report uses a stable key order") {
    auto reports = run_all("C1");
    std::ostringstream out;
    write_json(out, reports);
    std::string s = out.str();
    auto pos = [&](const char* key) { return s.find(key); };
    REQUIRE(pos("\"id\"") != std::string::npos);
    CHECK(pos("\"id\"") < pos("\"description\""));
    CHECK(pos("\"description\"") < pos("\"paper_anchor\""));
    CHECK(pos("\"paper_anchor\"") < pos("\"verdict\""));
    CHECK(pos("\"verdict\"") < pos("\"computed_lo\""));
    CHECK(pos("\"computed_lo\"") < pos("\"computed_hi\""));
    CHECK(pos("\"computed_hi\"") < pos("\"asserted\""));
    CHECK(pos("\"asserted\"") < pos("\"margin\""));
    CHECK(pos("\"margin\"") < pos("\"precision_bits\""));
    CHECK(pos("\"precision_bits\"") < pos("\"runtime_ms\""));
    CHECK(s.find("\"verified\"") != std::string::npos);
}

TEST_CASE("run_claim rejects unknown ids") {
    CHECK_THROWS(run_claim("C99"));
    CHECK_THROWS(run_claim(""));
}
