#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "biexact/cli.hpp"

using namespace biexact;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_corpus(const std::string& name, const std::string& text)
{
    const auto p = std::filesystem::temp_directory_path() / ("biexact_" + name + ".txt");
    std::ofstream(p) << text;
    return p.string();
}

}  // namespace

TEST_CASE("decide prints the certificate")
{
    auto r = run({"decide", "--pair", "dqx-sy", "--q-symbolic", "--expr", "1/(x*y)", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"exact\":true,\"g\":\"q/((1-q)*x*y)\",\"h\":\"0\",\"pair\":\"dqx-sy\",\"qmode\":\"symbolic\"}\n");
}

TEST_CASE("decide prints a witness")
{
    auto r = run({"decide", "--pair", "dx-dy", "--expr", "1/(x+y)", "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["exact"] == false);
    CHECK(j["witness"]["kind"] == "mixed_denominator");
    CHECK(j["witness"]["d"] == "x+y");
    CHECK(!j.contains("timing_ms"));

    auto r2 = run({"decide", "--pair", "dx-dy", "--expr", "1/(x*y)"});
    CHECK(r2.out.find("not exact") == 0);
    CHECK(r2.out.find("non_summable_residue") != std::string::npos);
}

TEST_CASE("timing is opt-in")
{
    auto r = run({"decide", "--pair", "dx-dy", "--expr", "x", "--json", "--timing"});
    CHECK(nlohmann::json::parse(r.out).contains("timing_ms"));
}

TEST_CASE("input errors exit 2")
{
    auto r = run({"decide", "--pair", "dx-dy", "--expr", "1/(x+y"});
    CHECK(r.code == 2);
    CHECK(r.err.find("column 7") != std::string::npos);
    CHECK(run({"decide", "--pair", "dx-dy", "--expr", "q/x"}).code == 2);
    CHECK(run({"decide", "--pair", "dqx-dy", "--expr", "1/x"}).code == 2);
    CHECK(run({"decide", "--pair", "dx-dz", "--expr", "1/x"}).code == 2);
    CHECK(run({"decide", "--pair", "dx-dy", "--expr", "1/(y-y)"}).code == 2);
    CHECK(run({"decide", "--pair", "dqx-dy", "--q", "0", "--expr", "1/x"}).code == 2);
    CHECK(run({"decide", "--pair", "dqx-dy", "--q", "two", "--expr", "1/x"}).code == 2);
    CHECK(run({"decide", "--pair", "dqx-dy", "--q", "2", "--q-symbolic", "--expr", "1/x"}).code == 2);
    CHECK(run({"decide", "--expr", "1/x"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("rational and root-of-unity q")
{
    auto r = run({"decide", "--pair", "dqx-dy", "--q", "2", "--expr", "1/(x*y)", "--json"});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["exact"] == true);
    CHECK(j["g"] == "-2/(x*y)");
    CHECK(j["qmode"] == "rational:2");

    auto r2 = run({"decide", "--pair", "dqx-dy", "--q", "-1", "--expr", "x/y", "--json"});
    CHECK(nlohmann::json::parse(r2.out)["qmode"] == "root:2");
    auto r3 = run({"decide", "--pair", "dqx-dy", "--root-of-unity", "2", "--expr", "1/y", "--json"});
    CHECK(nlohmann::json::parse(r3.out)["exact"] == false);
}

TEST_CASE("reduce, residue and factor")
{
    auto r = run({"reduce", "--flavor", "hermite", "--expr", "1/(x+y)^2+1/y", "--json"});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["h"] == "-1/(x+y)");
    CHECK(j["terms"].size() == 1);
    CHECK(j["terms"][0]["d"] == "y");

    auto r2 = run({"reduce", "--flavor", "tau-rou", "--root-of-unity", "2", "--expr", "x/y", "--json"});
    CHECK(nlohmann::json::parse(r2.out)["c"] == "0");
    CHECK(run({"reduce", "--flavor", "tau-sy", "--expr", "x"}).code == 2);
    CHECK(run({"reduce", "--flavor", "smash", "--expr", "x"}).code == 2);

    auto r3 = run({"reduce", "--flavor", "phi-dy", "--pair", "dqx-dy", "--q-symbolic", "--expr", "1/(x*y)", "--json"});
    auto j3 = nlohmann::json::parse(r3.out);
    CHECK(j3["terms"].size() == 1);
    CHECK(j3["terms"][0]["d"] == "y");

    auto r4 = run({"residue", "--kind", "sy", "--at", "x+y", "--expr", "1/(x+y)+2/(x+y+3)", "--json"});
    CHECK(nlohmann::json::parse(r4.out)["residue"] == "3");
    auto r5 = run({"residue", "--kind", "dy", "--at", "x+y", "--expr", "1/(x+y)+2/(x+y+3)", "--json"});
    CHECK(nlohmann::json::parse(r5.out)["residue"] == "1");
    CHECK(run({"residue", "--kind", "dy", "--at", "x", "--expr", "1/x"}).code == 2);

    auto r6 = run({"factor", "--expr", "(x^2-y^2)/(x*y^2)", "--json"});
    auto f = nlohmann::json::parse(r6.out)["factors"];
    REQUIRE(f.size() == 4);
    CHECK(f[3]["p"] == "y");
    CHECK(f[3]["e"] == -2);
}

TEST_CASE("corpus exit code aggregates")
{
    const std::string good = "# fine\n"
                             "dx-dy | none | 1/(x+y) | not-exact | mixed_denominator\n"
                             "dqx-sy | symbolic | 1/(x*y) | exact\n"
                             "dx-dy | none | 1/(x+y | error\n";
    auto r = run({"corpus", temp_corpus("good", good)});
    CHECK(r.code == 0);
    CHECK(r.out.find("3 passed, 0 failed") != std::string::npos);

    // a seeded wrong expectation must fail the whole run
    const std::string bad = good + "dx-dy | none | 1/(x*y) | exact\n";
    auto r2 = run({"corpus", temp_corpus("bad", bad), "--threads", "3"});
    CHECK(r2.code == 1);
    CHECK(r2.out.find("3 passed, 1 failed") != std::string::npos);

    const std::string wrong_kind = "dx-dy | none | 1/(x*y) | not-exact | mixed_denominator\n";
    CHECK(run({"corpus", temp_corpus("kind", wrong_kind)}).code == 1);

    CHECK(run({"corpus", temp_corpus("malformed", "dx-dy | none | x\n")}).code == 2);
    CHECK(run({"corpus", "/nonexistent/corpus.txt"}).code == 2);

    auto j = nlohmann::json::parse(run({"corpus", temp_corpus("good", good), "--json"}).out);
    CHECK(j["passed"] == 3);
    CHECK(j["cases"][2]["got"] == "error");
}
