#include <doctest.h>

#include <fstream>
#include <sstream>

#include "anzb/zeros.hpp"

using namespace anzb;

TEST_CASE("parses comments and ordinates") {
    std::istringstream in(
        "# comment\n"
        "14.134725\n"
        "21.022040\n"
        "\n"
        "25.010858\n");
    ZeroTable t = load_zeros(in);
    CHECK(t.count() == 3);
    CHECK(t.ordinates()[0] == doctest::Approx(14.134725));
    CHECK(t.accuracy() == 2e-9);
    CHECK(t.max_height() == doctest::Approx(25.010858));
    CHECK(t.count_below(21.0) == 1);
}

TEST_CASE("rejects malformed input") {
    std::istringstream bad1("14.1\nxyz\n");
    CHECK_THROWS_AS(load_zeros(bad1), DataError);
    std::istringstream bad2("21.0\n14.1\n");  // descending
    CHECK_THROWS_AS(load_zeros(bad2), DataError);
    std::istringstream bad3("-3.0\n");
    CHECK_THROWS_AS(load_zeros(bad3), DataError);
    std::istringstream bad4("# only comments\n");
    CHECK_THROWS_AS(load_zeros(bad4), DataError);
}

TEST_CASE("truncation keeps the prefix") {
    std::istringstream in("14.13\n21.02\n25.01\n30.42\n");
    ZeroTable t = load_zeros(in);
    ZeroTable cut = t.truncated(25.5);
    CHECK(cut.count() == 3);
    CHECK(cut.max_height() == doctest::Approx(25.01));
}

TEST_CASE("the bundled table starts with the classical ordinates") {
    std::ifstream f(std::string(ANZB_REPO_DIR) + "/data/zeros_100k.txt");
    if (!f) return;  // table not generated in this checkout
    ZeroTable t = ZeroTable::load(f);
    CHECK(t.count() == 100000);
    CHECK(t.ordinates()[0] == doctest::Approx(14.134725142).epsilon(1e-9));
    CHECK(t.ordinates()[1] == doctest::Approx(21.022039639).epsilon(1e-9));
    CHECK(t.count_below(100.0) == 29);
}
