#include <doctest.h>

#include <cmath>
#include <json.hpp>
#include <limits>

#include "octohls/errors.hpp"
#include "octohls/verify.hpp"

using namespace octohls;

TEST_SUITE("verify")
{
    TEST_CASE("check semantics")
    {
        CHECK(make_check("a", 0, 1.0 + 1e-9, 1.0, 1e-8, CheckKind::Rel).pass);
        CHECK_FALSE(make_check("a", 0, 1.1, 1.0, 1e-8, CheckKind::Rel).pass);
        CHECK(make_check("a", 0, 5e-9, 0.0, 0.0, CheckKind::RelOrAbs).pass);
        CHECK(make_check("a", 0, 0.5, 1.0, 0.0, CheckKind::AtMost).pass);
        CHECK_FALSE(make_check("a", 0, 1.0, 1.0, 0.0, CheckKind::Below).pass);
        CHECK(make_check("a", 0, 1.0, 1.0, 0.0, CheckKind::AtLeast).pass);
        CHECK_FALSE(make_check("a", 0, 1.0, 1.0, 0.0, CheckKind::Above).pass);
        const auto nan = make_check("a", 0, std::numeric_limits<double>::quiet_NaN(), 0.0, 1.0, CheckKind::AtMost);
        CHECK_FALSE(nan.pass);
        const auto inf = make_check("a", 0, -std::numeric_limits<double>::infinity(), 0.0, 1.0, CheckKind::AtMost);
        CHECK_FALSE(inf.pass);
        const auto c = make_check("a", 2.5, 3.0, 2.0, 1.0, CheckKind::Abs);
        CHECK(c.abs_err == 1.0);
        CHECK(c.rel_err == 0.5);
        CHECK(c.lambda_or_alpha == 2.5);
    }

    TEST_CASE("criteria run, are deterministic and serialize")
    {
        VerifyConfig cfg;
        cfg.nodes_theta = 64;
        cfg.nodes_phi = 64;
        const auto a = run_criterion(1, cfg), b = run_criterion(1, cfg);
        CHECK(a.pass());
        CHECK(report_json({a}) == report_json({b}));
        const auto js = nlohmann::json::parse(report_json({a, run_criterion(8, cfg)}));
        CHECK(js["schema_version"] == 1);
        CHECK(js["pass"] == true);
        CHECK(js["criteria"].size() == 2);
        CHECK(js["criteria"][1]["id"] == 8);
        const std::string csv = report_csv({a});
        CHECK(csv.rfind("criterion,check,", 0) == 0);
        CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(a.checks.size()) + 1);
    }

    TEST_CASE("tolerance override replaces every tolerance")
    {
        VerifyConfig cfg;
        cfg.tolerance_override = 1e-300;
        const auto r = run_criterion(8, cfg);
        for (const auto& c : r.checks) CHECK(c.tolerance == 1e-300);
        CHECK_FALSE(r.pass());
    }

    TEST_CASE("unknown ids are rejected")
    {
        CHECK_THROWS_AS(run_criterion(0), DomainError);
        CHECK_THROWS_AS(run_criterion(kCriterionCount + 1), DomainError);
    }

    TEST_CASE("empty report does not pass")
    {
        CriterionReport r;
        CHECK_FALSE(r.pass());
    }
}
