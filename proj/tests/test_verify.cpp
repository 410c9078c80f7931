#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spanres/verify.hpp"

#include <sstream>

using namespace spanres;

TEST_CASE("law corpus is deterministic and within bounds") {
    auto a = law_corpus(123, 20);
    auto b = law_corpus(123, 20);
    REQUIRE(a.size() == 20);
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        CHECK(a[i].vertex_count() >= 2);
        CHECK(a[i].vertex_count() <= 9);
        CHECK(a[i].is_connected());
    }
    auto c = law_corpus(124, 20);
    bool any_different = false;
    for (size_t i = 0; i < c.size(); ++i) any_different = any_different || !(a[i] == c[i]);
    CHECK(any_different);
}

TEST_CASE("reports are identical for any job count") {
    VerifyOptions serial;
    serial.max_m = 4;
    serial.max_n = 4;
    serial.jobs = 1;
    VerifyOptions threaded = serial;
    threaded.jobs = 4;

    VerifyReport a = verify_gmnp(serial);
    VerifyReport b = verify_gmnp(threaded);
    REQUIRE(a.records.size() == b.records.size());
    for (size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].check == b.records[i].check);
        CHECK(a.records[i].params == b.records[i].params);
        CHECK(a.records[i].actual == b.records[i].actual);
        CHECK(a.records[i].pass == b.records[i].pass);
    }
    CHECK(a.all_passed());
}

TEST_CASE("small suites pass") {
    VerifyOptions opts;
    opts.max_m = 4;
    opts.max_n = 4;
    opts.jobs = 2;
    opts.law_graph_count = 15;
    CHECK(verify_matching(opts).all_passed());
    CHECK(verify_tree(opts).all_passed());
    CHECK(verify_laws(opts).all_passed());
    CHECK(verify_oracle_consistency(opts).all_passed());
}

TEST_CASE("report accounting and failure printing") {
    VerifyReport report;
    report.records.push_back({"demo check", "m=2 n=3", "1/2", "1/2", true});
    report.records.push_back({"demo check", "m=4 n=5", "7/12", "5/12", false});
    CHECK(report.passed() == 1);
    CHECK(report.failed() == 1);
    CHECK_FALSE(report.all_passed());

    std::ostringstream out;
    print_report(out, report, false);
    const std::string text = out.str();
    // A failing record surfaces its parameters and both values.
    CHECK(text.find("FAIL demo check [m=4 n=5]") != std::string::npos);
    CHECK(text.find("expected 7/12") != std::string::npos);
    CHECK(text.find("got 5/12") != std::string::npos);
    CHECK(text.find("[m=2 n=3]") == std::string::npos);  // passing records stay quiet

    std::ostringstream verbose;
    print_report(verbose, report, true);
    CHECK(verbose.str().find("ok   demo check [m=2 n=3]") != std::string::npos);
}
