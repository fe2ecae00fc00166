#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string cli()
{
    const char* p = std::getenv("OCTOHLS_CLI");
    return p ? p : "";
}

struct Run {
    int code;
    std::string out;
};

// Runs the CLI with stdout captured to a temporary file.
Run run(const std::string& args)
{
    const auto path = std::filesystem::temp_directory_path() / "octohls_cli_test.out";
    const std::string cmd = "\"" + cli() + "\" " + args + " > \"" + path.string() + "\" 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::filesystem::remove(path);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("binary is available")
    {
        REQUIRE_MESSAGE(!cli().empty(), "OCTOHLS_CLI not set");
        CHECK(std::filesystem::exists(cli()));
    }

    TEST_CASE("constants")
    {
        if (cli().empty()) return;
        const Run r = run("constants --lambda 12 16 --format json");
        REQUIRE(r.code == 0);
        const auto js = nlohmann::json::parse(r.out);
        CHECK(js["schema_version"] == 1);
        CHECK(js["command"] == "constants");
        REQUIRE(js["rows"].size() == 2);
        CHECK(js["rows"][0]["C_lambda"].get<double>() == doctest::Approx(0.4542334983496807).epsilon(1e-13));
        CHECK(js["rows"][0]["C_sobolev"].is_null());
        CHECK(js["rows"][1]["C_sobolev"].get<double>() == doctest::Approx(1033.6379232606268).epsilon(1e-12));
        const Run c = run("constants --lambda 12 --format csv");
        CHECK(c.code == 0);
        CHECK(c.out.rfind("lambda,p,C_lambda", 0) == 0);
    }

    TEST_CASE("usage and domain errors exit with 2")
    {
        if (cli().empty()) return;
        CHECK(run("constants --lambda 22").code == 2);
        CHECK(run("constants --format xml").code == 2);
        CHECK(run("eigs --alpha 6").code == 2);
        CHECK(run("verify --criterion 13").code == 2);
        CHECK(run("nonsense").code == 2);
    }

    TEST_CASE("eigs compares closed forms with quadrature")
    {
        if (cli().empty()) return;
        const Run r = run("eigs --alpha 3.5 --jmax 2 --nodes-theta 64 --nodes-phi 64 --format json");
        CHECK(r.code == 0);
        const auto js = nlohmann::json::parse(r.out);
        CHECK(js["command"] == "eigs");
        CHECK(!js["rows"].empty());
    }

    TEST_CASE("margin reports the zero set and the witness below 3")
    {
        if (cli().empty()) return;
        const Run r = run("margin --alpha 3 2.5 --jmax 20 --format json");
        CHECK(r.code == 0);
        const std::string& s = r.out;
        CHECK(s.find("{(0,0)} U {k>=2}") != std::string::npos);
        CHECK(s.find("\"violated\": true") != std::string::npos);
    }

    TEST_CASE("verify is deterministic and fails only on the distance relation")
    {
        if (cli().empty()) return;
        const Run a = run("verify --criterion 7 8 --format json");
        const Run b = run("verify --criterion 7 8 --format json");
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        const Run full = run("verify --skip-mc --format json");
        CHECK(full.code == 1);
        const auto js = nlohmann::json::parse(full.out);
        for (const auto& c : js["criteria"]) {
            if (c["id"] == 3) {
                CHECK(c["pass"] == false);
                for (const auto& ch : c["checks"])
                    CHECK(ch["pass"] == (ch["check"] != "cayley.distance_relation"));
            } else {
                CHECK_MESSAGE(c["pass"] == true, "criterion " << c["id"]);
            }
        }
    }
}
