#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "giclass/selftest.hpp"

using namespace giclass;

TEST_CASE("quick selftest passes and reports deterministically") {
    std::vector<CheckResult> a = run_selftest(SelftestLevel::Quick, 12345);
    REQUIRE(a.size() == 5);  // the two heavy checks are full-level only
    CHECK(a[0].name == "oracle-counts");
    CHECK(a[1].name == "cograph-canon");
    CHECK(a[2].name == "classification-fidelity");
    CHECK(a[3].name == "dispatch-soundness");
    CHECK(a[4].name == "graph6-roundtrip");
    for (const CheckResult& c : a) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.passed);
        CHECK_FALSE(c.detail.empty());
    }
    CHECK(all_passed(a));

    // Same level and seed must reproduce the report byte for byte; the
    // timing fields are deliberately excluded from it.
    std::vector<CheckResult> b = run_selftest(SelftestLevel::Quick, 12345);
    CHECK(selftest_report(a) == selftest_report(b));
}

TEST_CASE("the report format names every check with its verdict") {
    std::vector<CheckResult> results{{"alpha", true, "fine", 0.1},
                                     {"beta", false, "broken", 0.2}};
    std::string report = selftest_report(results);
    CHECK(report.find("[PASS] alpha: fine") != std::string::npos);
    CHECK(report.find("[FAIL] beta: broken") != std::string::npos);
    CHECK(report.find("1/2 checks passed") != std::string::npos);
    CHECK_FALSE(all_passed(results));
    CHECK(all_passed({}));
}

TEST_CASE("a different seed still passes quick level") {
    std::vector<CheckResult> r = run_selftest(SelftestLevel::Quick, 987654321);
    CHECK(all_passed(r));
}
