#include <doctest.h>

#include <hmn/field.hpp>
#include <hmn/verify.hpp>

#include <json.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

using namespace hmn;

TEST_CASE("suite registry: fixed ids in a fixed order") {
    const std::vector<std::string> ids = verify_suite_ids();
    const std::vector<std::string> want = {
        "algebra",        "hopf",          "radical",      "coefficients",
        "simples",        "semisimple-length", "projectives", "regular-decomposition",
        "blocks",         "envelopes",     "type11",       "syzygy-simples",
        "syzygy-shifts",  "ar-simples",    "eta-iso",      "eta-family",
        "towers",         "towers-bar",    "towers-eta",   "classification",
    };
    CHECK(ids == want);
    CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
}

TEST_CASE("selected suites run in request order and pass") {
    VerifyOptions opt;
    opt.suites = {"algebra", "radical", "coefficients"};
    VerifyReport rep = run_verification(opt);
    CHECK(rep.ok);
    CHECK(rep.m == 2);
    CHECK(rep.n == 2);
    REQUIRE(rep.suites.size() == 3);
    CHECK(rep.suites[0].id == "algebra");
    CHECK(rep.suites[1].id == "radical");
    CHECK(rep.suites[2].id == "coefficients");
    for (const SuiteResult& s : rep.suites) {
        CHECK(s.ok);
        CHECK(s.failed() == 0);
        CHECK(s.passed() == static_cast<int>(s.cases.size()));
        CHECK(s.elapsed_ms == 0); // timings off keeps the report reproducible
        for (const CaseResult& c : s.cases) CHECK(c.ok);
    }
}

TEST_CASE("bad requests are rejected up front") {
    VerifyOptions opt;
    opt.suites = {"algebra", "no-such-suite"};
    CHECK_THROWS_AS(run_verification(opt), std::invalid_argument);

    VerifyOptions degenerate;
    degenerate.m = 1;
    degenerate.suites = {"coefficients"};
    CHECK_THROWS_AS(run_verification(degenerate), std::invalid_argument);
}

TEST_CASE("reports serialize to parseable json with stable bytes") {
    VerifyOptions opt;
    opt.suites = {"radical", "coefficients", "blocks"};
    VerifyReport a = run_verification(opt);
    VerifyReport b = run_verification(opt);
    const std::string ja = a.to_json();
    const std::string jb = b.to_json();
    CHECK(ja == jb);

    auto parsed = nlohmann::json::parse(ja);
    CHECK(parsed["m"] == 2);
    CHECK(parsed["n"] == 2);
    CHECK(parsed["ok"] == true);
    REQUIRE(parsed["suites"].size() == 3);
    CHECK(parsed["suites"][0]["id"] == "radical");
    CHECK(parsed["suites"][2]["id"] == "blocks");
    for (const auto& s : parsed["suites"]) {
        CHECK(s["ok"] == true);
        CHECK(s["elapsed_ms"] == 0);
        CHECK(s["cases"].is_array());
        CHECK(!s["cases"].empty());
    }

    // the linking-class count at the base parameters
    bool found13 = false;
    for (const auto& c : parsed["suites"][2]["cases"])
        if (c["params"] == "number of linking classes") found13 = c["detail"] == "13";
    CHECK(found13);
}

TEST_CASE("scalar parsing covers rationals and root powers") {
    Field F(2, 2);
    CHECK(parse_scalar(F, "2") == F.integer(2));
    CHECK(parse_scalar(F, "-1") == -F.one());
    CHECK(parse_scalar(F, "1/2") == F.one() / F.integer(2));
    CHECK(parse_scalar(F, "xi") == F.root(1));
    CHECK(parse_scalar(F, "xi^3") == F.root(3));
    CHECK(parse_scalar(F, "xi^-1") == F.root(-1));
    CHECK_THROWS_AS(parse_scalar(F, "foo"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar(F, "xi^x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar(F, ""), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar(F, "1/0"), std::invalid_argument);
}
