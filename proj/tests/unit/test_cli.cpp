#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = ulrich::cli::parse_and_dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text)
{
    std::string path = std::string(P_tmpdir) + "/" + name;
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST_CASE("line-coh")
{
    Run r = run({"line-coh", "--scroll", "1,2", "--pair", "2,2"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["command"] == "line-coh");
    CHECK(j["scroll"] == json::array({1, 2}));
    CHECK(j["result"]["h"] == json::array({12, 0, 0}));
    CHECK(run({"line-coh", "--scroll", "1,2", "--div", "2H"}).out == r.out);
}

TEST_CASE("omega-coh")
{
    Run r = run({"omega-coh", "--scroll", "1,1,1", "--p", "1", "--div", "2H"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    // O(2) boxed with Omega^1_{P^2}(2): 3 * 3
    CHECK(j["result"]["h"] == json::array({9, 0, 0, 0}));
    CHECK(j["result"]["sheaf"] == "Omega^1(2,2)");
}

TEST_CASE("classify")
{
    Run r = run({"classify", "--scroll", "1,2", "--type", "1,1"});
    REQUIRE(r.code == 0);
    json res = json::parse(r.out)["result"];
    CHECK(res["type"] == json::array({1, 1}));
    CHECK(res["rank"] == 2);
    CHECK(res["h0"] == 6);
    CHECK(res["c1"] == json({{"h", 1}, {"f", 1}}));
    CHECK(res["slope"] == "2/1");
}

TEST_CASE("verify suites")
{
    for (const char* suite : {"duality", "blocks", "homvanish", "chi-oracle"}) {
        Run r = run({"verify", "--suite", suite, "--scroll", "1,1,2"});
        CHECK(r.code == 0);
        CHECK(json::parse(r.out)["result"]["pass"] == true);
    }
    CHECK(run({"verify", "--suite", "nope", "--scroll", "1,1,2"}).code == 1);
}

TEST_CASE("enumerate and blocks")
{
    json types = json::parse(run({"enumerate", "--scroll", "1,1,2", "--rank", "1"}).out)["result"];
    REQUIRE(types.size() == 2);
    CHECK(types[0]["type"] == json::array({0, 0, 1}));
    CHECK(types[1]["type"] == json::array({1, 0, 0}));
    CHECK(json::parse(run({"enumerate", "--scroll", "1,1,2", "--h0", "8"}).out)["result"].size() == 4);
    json blocks = json::parse(run({"blocks", "--scroll", "1,1,2"}).out)["result"];
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[1]["h0"] == 8);
    CHECK(blocks[1]["ulrich"] == true);
}

TEST_CASE("beilinson formats agree")
{
    Run j = run({"beilinson", "--scroll", "1,2", "--type", "2,1"});
    Run md = run({"beilinson", "--scroll", "1,2", "--type", "2,1", "--format", "md"});
    Run tex = run({"beilinson", "--scroll", "1,2", "--type", "2,1", "--format", "latex"});
    REQUIRE(j.code == 0);
    REQUIRE(md.code == 0);
    REQUIRE(tex.code == 0);
    json e = json::parse(j.out)["result"]["entries"];
    CHECK(e[1][1] == 2);
    CHECK(e[2][2] == 1);
    CHECK(md.out.rfind("| F |", 0) == 0);
    CHECK(md.out.find("| 2 | 0 | 1 | 0 | 0 |") != std::string::npos);
    CHECK(md.out.find("| 1 | 0 | 0 | 2 | 0 |") != std::string::npos);
    CHECK(tex.out.find("\\begin{tabular}") == 0);
}

TEST_CASE("profiles")
{
    std::string path = write_temp("ulrich_cli_profile.json", R"({"n": 1, "entries": [{"j": 1, "q": 1, "h": 2}]})");
    Run r = run({"classify", "--scroll", "1,3", "--profile", path});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["result"]["type"] == json::array({2, 0}));
    std::string bad = write_temp("ulrich_cli_bad.json", R"({"n": 1, "entries": [{"j": 0, "q": 1, "h": 2}]})");
    CHECK(run({"classify", "--scroll", "1,3", "--profile", bad}).code == 3);
    std::string broken = write_temp("ulrich_cli_broken.json", "{");
    CHECK(run({"classify", "--scroll", "1,3", "--profile", broken}).code == 1);
}

TEST_CASE("veronese")
{
    Run r = run({"veronese", "--dim", "2", "--p", "1", "--k", "1"});
    REQUIRE(r.code == 0);
    json res = json::parse(r.out)["result"];
    CHECK(res["diagonal"] == json::array({1}));
    CHECK(res["duality"] == true);
    CHECK(run({"veronese", "--dim", "4", "--p", "1", "--k", "1"}).code == 1);
}

TEST_CASE("errors and determinism")
{
    CHECK(run({"line-coh", "--scroll", "0,2", "--pair", "1,1"}).code == 1);
    CHECK(run({"line-coh", "--scroll", "1,2", "--pair", "1,1", "--div", "H"}).code == 1);
    CHECK(run({"line-coh", "--scroll", "1,2"}).code == 1);
    CHECK(run({"line-coh", "--scroll", "1,2", "--div", "H+"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"classify", "--scroll", "1,2", "--type", "1,0,0"}).code == 1);
    Run help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("line-coh") != std::string::npos);
    Run a = run({"blocks", "--scroll", "2,2,3"}), b = run({"blocks", "--scroll", "2,2,3"});
    CHECK(a.out == b.out);
    Run md1 = run({"blocks", "--scroll", "2,2,3", "--format", "md"});
    CHECK(md1.out.find("| i |") != std::string::npos);
}
