#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rrsing/cli.hpp"

using namespace rrsing;
using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream f(p);
    f << content;
    return p;
}

}  // namespace

TEST_CASE("verify passes and reports all suites") {
    CliRun r = run({"verify", "--json"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("pass").get<bool>());
    CHECK(j.at("suites").size() >= 7);
    for (const auto& s : j.at("suites")) CHECK(s.at("pass").get<bool>());
}

TEST_CASE("verify names the euler suite under fault injection") {
    setenv("RRSING_FAULT", "flip-e3", 1);
    CliRun r = run({"verify", "--json"});
    unsetenv("RRSING_FAULT");
    CHECK(r.code == 1);
    json j = json::parse(r.out);
    CHECK_FALSE(j.at("pass").get<bool>());
    CHECK(j.at("first_failure").get<std::string>() == "euler_vs_bernoulli");
}

TEST_CASE("gti tables through the CLI") {
    SUBCASE("dimension one coefficients") {
        CliRun r = run({"gti", "--delta", "1", "--lambda", "0", "--json"});
        REQUIRE(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j.at("tail") == json::array({"3/4", "-1/4"}));
        CHECK(j.at("prefix_signs").empty());
    }
    SUBCASE("dimension two coefficients") {
        CliRun r = run({"gti", "--delta", "3", "--json"});
        REQUIRE(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j.at("tail") == json::array({"15/16", "-11/16", "5/16", "-1/16"}));
    }
    SUBCASE("prefix signs at delta zero") {
        CliRun r = run({"gti", "--delta", "0", "--lambda", "2", "--json"});
        REQUIRE(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j.at("tail") == json::array({"1/2"}));
        CHECK(j.at("prefix_signs") == json::array({1, -1}));
    }
}

TEST_CASE("stirling and euler-numbers commands") {
    CliRun s = run({"stirling", "--max", "3", "--format", "tsv"});
    CHECK(s.code == 0);
    CHECK(s.out.find("3\t2\t-3") != std::string::npos);
    CliRun e = run({"euler-numbers", "--max", "7", "--format", "tsv"});
    CHECK(e.code == 0);
    CHECK(e.out.find("7\t17/8") != std::string::npos);
    CHECK(e.out.find("1\t-1/2") != std::string::npos);
}

TEST_CASE("hilbert command") {
    SUBCASE("the squared curve") {
        auto p = write_temp("rrsing_curve.ideal", "char 5\nvars x y z\nx*z\nz^3\n");
        CliRun r = run({"hilbert", p.string(), "--json"});
        REQUIRE(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j.at("chi").get<long long>() == 3);
        CHECK(j.at("numerator") == json::array({1, 0, -1, -1, 1}));
    }
    SUBCASE("empty generator list is all of P^2") {
        auto p = write_temp("rrsing_p2.ideal", "char 5\nvars x y z\n");
        CliRun r = run({"hilbert", p.string(), "--json"});
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.out).at("chi").get<long long>() == 1);
    }
    SUBCASE("the conic") {
        auto p = write_temp("rrsing_conic.ideal", "char 0\nvars x0 x1 x2\nx0*x2 - x1^2\n");
        CliRun r = run({"hilbert", p.string(), "--json"});
        REQUIRE(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j.at("chi").get<long long>() == 1);
        CHECK(j.at("hp") == json::array({"1", "2"}));
    }
    SUBCASE("parse errors mention the line") {
        auto p = write_temp("rrsing_bad.ideal", "char 0\nvars x\nx + w\n");
        CliRun r = run({"hilbert", p.string()});
        CHECK(r.code == 1);
        CHECK(r.err.find("line 3") != std::string::npos);
    }
}

TEST_CASE("imported chi pipeline") {
    auto p = write_temp("rrsing_chi.json",
                        R"({"n_start":1,"chi":[3,5,7,7,5,0,-7,-16,-27,-40]})");
    SUBCASE("chi-pipeline") {
        CliRun r = run({"chi-pipeline", "--import", p.string(), "--delta", "1", "--json"});
        REQUIRE(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j.at("gti") ==
              json::array({"7/4", "2", "5/2", "5/2", "11/4", "3", "3", "3", "3"}));
        CHECK(j.at("stabilization").at("lambda_star").get<int>() == 5);
        CHECK(j.at("stabilization").at("status").get<std::string>() == "empirical");
        CHECK(j.at("stabilization").at("matches_reference").get<bool>());
        CHECK(j.at("a") == json(std::vector<long long>{3, 2, 2, 0, -2, -5, -7, -9, -11, -13}));
    }
    SUBCASE("diagonal-example accepts the same import") {
        CliRun r = run({"diagonal-example", "--import", p.string(), "--delta", "1", "--json"});
        REQUIRE(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j.at("chi_provenance")[0].get<std::string>() == "imported");
        CHECK(j.at("gti").size() == 9);
    }
    SUBCASE("bad table is rejected") {
        auto bad = write_temp("rrsing_chi_bad.json", R"({"n_start":2,"chi":[1]})");
        CliRun r = run({"chi-pipeline", "--import", bad.string()});
        CHECK(r.code == 1);
    }
}

TEST_CASE("p1p1 scenario through the CLI with a warm cache") {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "rrsing_cli_cache";
    std::filesystem::remove_all(dir);
    std::vector<std::string> args = {"diagonal-example", "--p1p1",      "--max-n", "2",
                                     "--json",           "--cache-dir", dir.string()};
    CliRun cold = run(args);
    REQUIRE(cold.code == 0);
    CliRun warm = run(args);
    REQUIRE(warm.code == 0);

    json jc = json::parse(cold.out);
    json jw = json::parse(warm.out);
    CHECK(jc.at("chi") == json(std::vector<long long>{1, 0}));
    CHECK(jw.at("meta").at("from_cache") == json::array({true, true}));
    // primary output is identical once timing metadata is stripped
    jc.erase("meta");
    jw.erase("meta");
    CHECK(jc.dump() == jw.dump());
    std::filesystem::remove_all(dir);
}

TEST_CASE("scenario files drive the diagonal example") {
    auto p = write_temp("rrsing_scenario.ideal",
                        "[scenario]\n"
                        "type segre-square\n"
                        "char 5\n"
                        "vars x0 x1 x2\n"
                        "x0*x2\n"
                        "x2^3\n");
    CliRun r = run({"diagonal-example", "--scenario", p.string(), "--max-n", "2", "--json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("chi") == json(std::vector<long long>{3, 5}));
    CHECK(j.at("kind").get<std::string>() == "segre-square");

    auto bad = write_temp("rrsing_scenario_bad.ideal", "char 5\nvars x y z\nx*z\n");
    CliRun rb = run({"diagonal-example", "--scenario", bad.string(), "--max-n", "1"});
    CHECK(rb.code == 1);
}

TEST_CASE("imports that cannot support the requested delta fail loudly") {
    auto p = write_temp("rrsing_chi_short.json", R"({"n_start":1,"chi":[3]})");
    CliRun r = run({"chi-pipeline", "--import", p.string(), "--delta", "3"});
    CHECK(r.code == 1);
    CHECK(r.err.find("need chi up to n = 4") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"diagonal-example"}).code == 2);
    CHECK(run({"diagonal-example", "--p1p1", "--curve", "x*z"}).code == 2);
    CHECK(run({"gti", "--delta", "-3"}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"verify", "--format", "bogus"}).code == 2);
}

TEST_CASE("budget exhaustion exits with 3") {
    auto p = write_temp("rrsing_curve2.ideal", "char 5\nvars x y z\nx*z\nz^3\n");
    CliRun r = run({"diagonal-example", "--curve", "x*z, z^3", "--char", "5", "--max-n", "6",
                    "--budget", "0.000001"});
    CHECK(r.code == 3);
}
