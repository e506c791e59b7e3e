#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xeop/fixtures.hpp"
#include "xeop/verify.hpp"

using namespace xeop;

namespace {

std::vector<std::string> failed_names(const Report& r) {
    std::vector<std::string> out;
    for (const auto& c : r.checks) {
        if (!c.passed) out.push_back(c.name);
    }
    return out;
}

}  // namespace

TEST_CASE("reference families") {
    for (const auto& p : {FamilyParams(2, 3), FamilyParams(2, 5), FamilyParams(4, 5), FamilyParams(4, 7)}) {
        const Report r = verify_family(p);
        CAPTURE(p.label());
        CHECK(r.all_passed());
        CHECK(r.checks.size() > 100);
    }
}

TEST_CASE("reference (2,7) potential is caught") {
    const FamilyParams p(2, 7);
    const Report fixture = verify_potential_fixture(p);
    REQUIRE(fixture.failures() == 1);
    const CheckResult& bad = fixture.checks.front();
    REQUIRE(bad.witness.has_value());
    CHECK(*bad.witness == Rational(1792) * Polynomial{273, 0, 1008, 0, 1932, 0, 1072});

    VerifyOptions opt;
    opt.numeric = false;
    const Report all = verify_family(p, opt);
    CHECK(all.failures() == 1);
    CHECK(failed_names(all) == failed_names(fixture));
}

TEST_CASE("an injected fault fails") {
    VerifyOptions opt;
    opt.numeric = false;
    opt.fixture_offset = 1;
    const Report r = verify_family(FamilyParams(4, 7), opt);
    CHECK_FALSE(r.all_passed());
    CHECK(r.failures() == 1);
    CHECK(verify_potential_fixture(FamilyParams(4, 7), 1).checks.front().witness == Polynomial{-1});
    CHECK(verify_potential_fixture(FamilyParams(2, 9)).checks.empty());
}

TEST_CASE("identity checks") {
    CHECK(verify_hermite_identities(15).all_passed());
    for (const auto& p : default_grid()) {
        CHECK(verify_wronskian_identities(p).all_passed());
        CHECK(verify_zero_mode_census(p).all_passed());
    }
    CHECK(verify_diffeq_first(6, 16).all_passed());
}

TEST_CASE("report json") {
    VerifyOptions opt;
    opt.numeric = false;
    const Json j = verify_family(FamilyParams(2, 3), opt);
    CHECK(j.at("passed") == true);
    CHECK(j.at("failures") == 0);
    CHECK(j.at("total") == j.at("checks").size());
    const Json& first = j.at("checks").front();
    CHECK(first.contains("name"));
    CHECK(first.at("params") == "(2,3)");
    CHECK(first.at("status") == "pass");
    CHECK(first.at("witness").is_null());

    const Json bad = verify_potential_fixture(FamilyParams(2, 7));
    CHECK(bad.at("passed") == false);
    CHECK(bad.at("checks").front().at("status") == "fail");
    CHECK(bad.at("checks").front().at("witness").is_array());
}
