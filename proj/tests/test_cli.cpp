#include "doctest.h"

#include "plumbing/cli.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace plumbing;
using nlohmann::json;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = cli_run(std::move(args), in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("plumbcalc_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

const std::string kFamilyN3 = "vertex a e=-3 g=1\nvertex b e=-1 g=28\nedge a b\n";

} // namespace

TEST_CASE("check") {
    std::string path = write_temp("n3.pg", kFamilyN3);
    Run r = run({"check", "-i", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("m: 2\n") != std::string::npos);
    CHECK(r.out.find("h: 58\n") != std::string::npos);
    CHECK(r.out.find("negative_definite: yes\n") != std::string::npos);

    Run j = run({"check", "-i", "-", "--json"}, kFamilyN3);
    CHECK(j.code == 0);
    json doc = json::parse(j.out);
    CHECK(doc["m"] == 2);
    CHECK(doc["h"] == 58);
    CHECK(doc["chi_neighborhood"] == -55);
    CHECK(doc["negative_definite"] == true);
}

TEST_CASE("validation failures exit 1") {
    CHECK(run({"check", "-i", "-"}, "vertex a e=1 g=0\n").code == 1);
    CHECK(run({"check", "-i", "-"}, "vertex a e=-2 g=0\nedge a a\n").code == 1);
    Run missing = run({"check", "-i", "/nonexistent/graph.pg"});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("cannot open") != std::string::npos);
    CHECK(run({"openbook", "-i", "-", "--n", "a=3"}, kFamilyN3).code == 1);
    CHECK(run({"openbook", "-i", "-", "--n", "a=3,b=0"}, kFamilyN3).code == 1);
    CHECK(run({"family", "--s", "3", "--t", "87", "--N", "4"}).code == 1);
}

TEST_CASE("usage errors exit 64") {
    CHECK(run({}).code == 64);
    CHECK(run({"frobnicate"}).code == 64);
    CHECK(run({"check", "-i", "-", "--bogus"}, kFamilyN3).code == 64);
    CHECK(run({"check"}).code == 64);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("canonical and divisor") {
    Run c = run({"canonical", "-i", "-", "--json"}, kFamilyN3);
    REQUIRE(c.code == 0);
    json cj = json::parse(c.out);
    CHECK(cj["coefficients"] == json::array({"-29", "-84"}));
    CHECK(cj["k_squared"] == "-4707");

    Run d = run({"divisor", "-i", "-", "--json", "--k", "2"}, kFamilyN3);
    REQUIRE(d.code == 0);
    json dj = json::parse(d.out);
    CHECK(dj["divisor"] == json::array({30, 87}));
    CHECK(dj["binding"] == json::array({3, 57}));
    CHECK(dj["slack"] == json::array({0, 0}));
    CHECK(dj["scaled"]["divisor"] == json::array({60, 174}));
    CHECK(dj["scaled"]["condition_holds"] == true);
}

TEST_CASE("openbook") {
    Run r = run({"openbook", "-i", "-", "--n", "a=3,b=57", "--json"}, kFamilyN3);
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["scale"] == 1);
    CHECK(j["multiplicities"] == json::array({30, 87}));
    CHECK(j["verify_gluing"] == true);
    CHECK(j["edges"][0]["components"] == 3);
    CHECK(j["page"]["euler_characteristic"] == -9864);
    CHECK(j["page"]["euler_characteristic_source"] == "implementation-derived count");

    Run a1 = run({"openbook", "-i", "-", "--n", "a=1", "--k", "4", "--json"}, "vertex a e=-2 g=0\n");
    REQUIRE(a1.code == 0);
    CHECK(json::parse(a1.out)["multiplicities"] == json::array({2}));
    CHECK(run({"openbook", "-i", "-", "--n", "a=1", "--k", "3"}, "vertex a e=-2 g=0\n").code == 1);

    Run cert = run({"openbook", "-i", "-", "--certificate", "--json"}, kFamilyN3);
    REQUIRE(cert.code == 0);
    json cj = json::parse(cert.out);
    CHECK(cj["verdict"] == true);
    CHECK(cj["milnor_side"]["bindings"] == json::array({3, 57}));
    CHECK(cj["configuration_side"]["bindings"] == json::array({3, 57}));

    Run cyc = run({"openbook", "-i", "-", "--json"},
                  "vertex p e=-3 g=0\nvertex q e=-3 g=0\nvertex r e=-3 g=0\nedge p q\nedge q r\nedge p r\n");
    REQUIRE(cyc.code == 0);
    CHECK(json::parse(cyc.out)["cyclic_dual_graph"] == true);
}

TEST_CASE("family") {
    Run r = run({"family", "--s", "3", "--N", "5", "--json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["t"] == 117);
    CHECK(j["mu"] == 205347);
    CHECK(j["sigma"] == -86437);
    CHECK(j["p_g"] == 29816);
    CHECK(j["closed_form"]["match"] == true);

    Run text = run({"family", "--N", "3"});
    CHECK(text.code == 0);
    CHECK(text.out.find("mu: 9865\n") != std::string::npos);

    Run sweep = run({"family", "--sweep", "3..8", "--json"});
    REQUIRE(sweep.code == 0);
    json sj = json::parse(sweep.out);
    REQUIRE(sj["members"].size() == 4);
    CHECK(sj["members"][0]["N"] == 3);
    CHECK(sj["members"][3]["N"] == 8);
    CHECK(sj["skipped_N"] == json::array({4, 7}));

    CHECK(run({"family", "--s", "5"}).code == 1);
}

TEST_CASE("surgery") {
    Run r = run({"surgery", "--N", "3", "--chi", "1", "--sigma", "-100", "--json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["chi"] == 9922);
    CHECK(j["sigma"] == -5145);
    CHECK(j["c1_squared"] == 4409);
    CHECK(j["chi_h"] == "4777/4");
    CHECK(j["chi_h_integral"] == false);
    CHECK(j["bmy_defect"] == "25357/4");

    Run g = run({"surgery", "-i", "-", "--mu", "10", "--milnor-sigma", "-8", "--chi", "100", "--sigma", "-20", "--json"},
                "vertex a e=-1 g=1\n");
    REQUIRE(g.code == 0);
    json gj = json::parse(g.out);
    CHECK(gj["chi"] == 111);
    CHECK(gj["sigma"] == -27);

    CHECK(run({"surgery", "--N", "3"}).code == 1);
}

TEST_CASE("reports are byte-deterministic") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"openbook", "-i", "-", "--json"}, {"openbook", "-i", "-"}, {"divisor", "-i", "-"}, {"check", "-i", "-", "--json"}}) {
        Run a = run(args, kFamilyN3);
        Run b = run(args, kFamilyN3);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    Run s1 = run({"family", "--sweep", "3..12", "--json"});
    Run s2 = run({"family", "--sweep", "3..12", "--json"});
    CHECK(s1.out == s2.out);
}
