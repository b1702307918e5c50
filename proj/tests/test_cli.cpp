#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "tentlim/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

using namespace tentlim;
using json = nlohmann::json;

namespace {
struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = tentlim_run(args, out, err);
    return {code, out.str(), err.str()};
}
} // namespace

TEST_CASE("pinned scalar outputs") {
    auto r = cli({"kappa", "--slope", "3/2"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"kappa\":7}\n");

    r = cli({"distinguish", "--slope", "3/2", "--slope2", "3/2", "--max-depth", "40"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"result\":null}\n");

    r = cli({"distinguish", "--slope", "3/2", "--slope2", "7/4"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"result\":{\"n\":3,\"reason\":\"side-mismatch\"}}\n");

    r = cli({"count", "--slope", "3/2", "--k", "4", "--level", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"k\":4,\"level\":1,\"count\":2}\n");

    r = cli({"delta", "--slope", "3/2"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"delta\":\"1/6400\",\"kind\":\"orbit-gap\",\"index\":5}\n");

    r = cli({"chain", "--slope", "3/2", "--k", "1"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"k\":1,\"links\":4,\"mesh\":\"1/3\",\"boundaries\":[\"1/3\",\"1/2\",\"2/3\"]}\n");

    r = cli({"realize", "--slope", "3/2", "--pattern", "3,1,2"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"pattern\":[3,1,2],\"result\":{\"n\":3,\"lo\":\"17/36\",\"hi\":\"17/24\"}}\n");

    r = cli({"invariant", "--slope", "3/2", "--max-depth", "3"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "[{\"n\":2,\"pattern\":[2,1],\"side\":false},{\"n\":3,\"pattern\":[3,1,2],"
          "\"side\":true}]\n");
}

TEST_CASE("structured payloads parse and carry the right fields") {
    auto r = cli({"orbit", "--slope", "2", "--max-n", "4"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["kappa"] == 3);
    CHECK(j["preperiodic"]["index"] == 2);
    CHECK(j["preperiodic"]["period"] == 1);
    CHECK(j["points"].size() == 4);
    CHECK(j["points"][0]["value"] == "1");
    CHECK(j["points"][1]["value"] == "0");
    CHECK(j["points"][0]["side"] == true);

    r = cli({"pattern", "--slope", "2", "--depth", "2", "--lo", "0", "--hi", "1"});
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["pattern"] == json::array({1, 2, 1}));

    r = cli({"arcs", "--slope", "3/2", "--max-i", "4", "--depth", "4"});
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["arcs"].size() == 4);
    CHECK(j["arcs"][1]["lo"] == "1/2");
    CHECK(j["arcs"][1]["hi"] == "11/18");
    CHECK(j["salient"][3]["position"] == "1/2");

    r = cli({"symmetry", "--slope", "2", "--depth", "1", "--lo", "1/4", "--hi",
             "3/4", "--eps", "1/8"});
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["close"] == true);
    CHECK(j["margin"] == "-1/8");
    CHECK(j["witness"].size() == 3);
    CHECK(j["witness"][0] == json::array({"1/4", "3/4"}));

    r = cli({"realize", "--slope", "3/2", "--pattern", "9,9,9", "--max-n", "4"});
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["result"].is_null());
}

TEST_CASE("verify suites report and exit correctly") {
    auto r = cli({"verify", "--slope", "3/2", "--suite", "lemmas", "--max-n", "6",
                  "--max-i", "10"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["ok"] == true);
    CHECK(j["adjacent-violations"].empty());
    CHECK(j["lattice-failures"].empty());

    r = cli({"verify", "--slope", "2", "--suite", "completeness", "--k", "6"});
    CHECK(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["ok"] == true);
    CHECK(j["depth"] == 16);

    // truncated midpoint set must flag failures and flip the exit code
    r = cli({"verify", "--slope", "2", "--suite", "completeness", "--k", "6",
             "--midpoint-cap", "2"});
    CHECK(r.code == 1);
    j = json::parse(r.out);
    CHECK(j["ok"] == false);
    CHECK(!j["failures"].empty());

    r = cli({"verify", "--slope", "3/2", "--suite", "symmetry", "--max-n", "3",
             "--grid", "24"});
    CHECK(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["ok"] == true);
    CHECK(j["violations"].empty());
    CHECK(j["eps"] == "1/6400");

    r = cli({"verify", "--slope", "3/2", "--suite", "lemma12", "--max-j", "4"});
    CHECK(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["ok"] == true);
    CHECK(j["not-found"] == 0);
    CHECK(j["instances"].get<int>() >= 4);
}

TEST_CASE("exit codes") {
    CHECK(cli({}).code == 2);                               // no subcommand
    CHECK(cli({"kappa"}).code == 2);                        // missing --slope
    CHECK(cli({"kappa", "--slope", "5"}).code == 2);        // slope out of range
    CHECK(cli({"kappa", "--slope", "7/5"}).code == 2);      // renormalizable
    CHECK(cli({"kappa", "--slope", "x"}).code == 2);        // malformed
    CHECK(cli({"kappa", "--slope", "3/0"}).code == 2);      // zero denominator
    CHECK(cli({"bogus"}).code == 2);                        // unknown subcommand
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"kappa", "--slope", "3/2", "--format", "plotdata"}).code == 2);
    CHECK(cli({"verify", "--slope", "2", "--suite", "completeness"}).code == 2);
    CHECK(cli({"chain", "--slope", "3/2", "--k", "-1"}).code == 2);
    auto r = cli({"symmetry", "--slope", "3/2", "--depth", "1", "--lo", "1/2",
                  "--hi", "2/3", "--center", "3/4", "--eps", "1/8"});
    CHECK(r.code == 2); // center outside the window
    CHECK(r.err.find("tentlim:") == 0);
}

TEST_CASE("csv and plotdata views") {
    auto r = cli({"orbit", "--slope", "3/2", "--max-n", "3", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "i,value,side\n1,3/4,true\n2,3/8,false\n3,9/16,true\n");

    r = cli({"count", "--slope", "3/2", "--k", "2", "--level", "2", "--format", "csv"});
    CHECK(r.out == "k,level,count\n2,2,1\n");

    r = cli({"invariant", "--slope", "3/2", "--max-depth", "4", "--format", "csv"});
    CHECK(r.out == "n,side,pattern\n2,false,2 1\n3,true,3 1 2\n4,true,4 2 1 3\n");

    r = cli({"distinguish", "--slope", "3/2", "--slope2", "3/2", "--format", "csv"});
    CHECK(r.out == "n,reason\n");

    r = cli({"pattern", "--slope", "3/2", "--depth", "2", "--lo", "1/2", "--hi",
             "2/3", "--format", "plotdata"});
    CHECK(r.code == 0);
    CHECK(r.out == "0.5 0.375\n0.66666666666666663 0.75\n");

    r = cli({"chain", "--slope", "2", "--k", "1", "--format", "plotdata"});
    CHECK(r.out == "0 0.25\n1 0.5\n2 0.75\n");
}

TEST_CASE("output file and config file") {
    std::string path = "cli_artifact_tmp.json";
    auto r = cli({"kappa", "--slope", "3/2", "--output", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == "{\"kappa\":7}\n");
    std::remove(path.c_str());

    std::string conf = "cli_config_tmp.ini";
    {
        std::ofstream cf(conf);
        cf << "[kappa]\nslope=3/2\n";
    }
    r = cli({"kappa", "--config", conf});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"kappa\":7}\n");
    r = cli({"--config", conf, "kappa"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"kappa\":7}\n");
    std::remove(conf.c_str());
}

TEST_CASE("repeated runs are byte-identical") {
    std::vector<std::vector<std::string>> cmds{
        {"verify", "--slope", "3/2", "--suite", "symmetry", "--max-n", "3", "--grid", "24"},
        {"verify", "--slope", "3/2", "--suite", "lemmas", "--max-n", "5", "--max-i", "10"},
        {"verify", "--slope", "2", "--suite", "completeness", "--k", "8"},
        {"verify", "--slope", "3/2", "--suite", "lemma12", "--max-j", "4"},
        {"orbit", "--slope", "8/5", "--max-n", "12"},
        {"invariant", "--slope", "8/5", "--max-depth", "8"},
    };
    for (const auto& cmd : cmds) {
        auto r1 = cli(cmd);
        auto r2 = cli(cmd);
        CHECK(r1.code == r2.code);
        CHECK(r1.out == r2.out);
    }
}
