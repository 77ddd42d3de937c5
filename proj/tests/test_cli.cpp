#include <doctest.h>

#include <json.hpp>

#include "pbu/cli.hpp"

using namespace pbu::cli;
using nlohmann::json;

namespace {

RunConfig command(const std::string& name)
{
    RunConfig c;
    c.command = name;
    return c;
}

}  // namespace

TEST_CASE("homology report on the triangle circle")
{
    auto r = execute(command("homology"), R"({"pair": {"model": "circle", "n": 3}})");
    CHECK(r.status == ok);
    auto j = json::parse(r.report);
    CHECK(j["result"]["ranks"] == json{{"0", 1}, {"1", 1}});
    CHECK(j["version"] == version);
    CHECK(j["config"]["command"] == "homology");
    CHECK(j["result"].contains("hypotheses"));
}

TEST_CASE("explicit pairs take sub as indices into the simplex list")
{
    auto r = execute(command("homology"), R"({"pair": {"simplices": [[0, 1], [1, 2], [0, 2], [2]], "sub": [3]}})");
    auto j = json::parse(r.report);
    CHECK(j["result"]["ranks"] == json{{"0", 0}, {"1", 1}});
}

TEST_CASE("schema errors carry a location")
{
    auto expect_location = [](const std::string& cmd, const std::string& text, const std::string& loc) {
        try {
            execute(command(cmd), text);
            FAIL("no error");
        } catch (const InputError& e) {
            CHECK(e.location == loc);
        }
    };
    expect_location("homology", R"({"pair": {"model": "circle", "extra": 1}})", "/pair/extra");
    expect_location("homology", R"({"pair": {"model": "klein"}})", "/pair/model");
    expect_location("homology", R"({"pair": {"simplices": [[0, "a"]]}})", "/pair/simplices/0/1");
    expect_location("homology", R"({"pair": {"simplices": [[0, 1]], "sub": [4]}})", "/pair/sub/0");
    expect_location("bu-solve", R"({"family": {"name": "nope"}})", "/family/name");
    expect_location("nonsense", "{}", "command");
    CHECK_THROWS_AS(execute(command("homology"), "{\"pair\": "), InputError);
}

TEST_CASE("exit codes follow the verdicts")
{
    // A source sub that is not the preimage of the target sub.
    auto r = execute(command("essential"), R"({
        "source": {"simplices": [[0, 1], [1, 2], [0, 2]], "sub": []},
        "target": {"simplices": [[0, 1], [1, 2], [0, 2]], "sub": [0]},
        "vertex_map": [0, 1, 2]})");
    CHECK(r.status == hypothesis_violated);

    auto sq = execute(command("symsquare"), R"({"pair": {"model": "circle", "n": 3}, "class": [[0, 1]]})");
    CHECK(sq.status == hypothesis_violated);

    auto bu = execute(command("bu-solve"), R"({"w": {"kind": "interval", "res": 8}, "family": {"name": "sin"}})");
    CHECK(bu.status == ok);
    CHECK(bu.artifacts.count("csv"));
    CHECK(json::parse(bu.report)["result"]["essential"] == true);
}

TEST_CASE("corr payoffs and rationals")
{
    const std::string base = R"({"K": 2, "script_L": [[0], [1]], "payoff_box": [0, 1], "grid_res": 2,
        "construction": "close", "F": {"0": [[["1"], [0.5]]], "1": [[[1.0], [0.5]]]}})";
    auto r = execute(command("corr"), base);
    auto j = json::parse(r.report);
    CHECK(j["result"]["verdict"] == "essential");
    CHECK(j["result"]["label"].get<std::string>().rfind("EMPIRICAL", 0) == 0);

    std::string off_grid = base;
    off_grid.replace(off_grid.find("[0.5]]], \"1\""), 5, "[0.3]");
    CHECK_THROWS_AS(execute(command("corr"), off_grid), InputError);
}

TEST_CASE("overrides are recorded in the config")
{
    auto c = command("symsquare");
    c.res = 1;
    auto j = json::parse(execute(c, R"({"pair": {"model": "circle", "n": 3}})").report);
    CHECK(j["config"]["res"] == 1);
    CHECK(j["result"]["square_nonzero"] == true);
    CHECK(j["result"]["target_rank"] == 1);
}
