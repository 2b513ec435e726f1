#include "doctest.h"

#include "cli.hpp"
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    Run r;
    r.code = doflab::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

nlohmann::ordered_json parsed(const Run& r) { return nlohmann::ordered_json::parse(r.out); }

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("bounds") {
    const Run a = run({"bounds", "--k", "4", "--mt", "2", "--mr", "5"});
    REQUIRE(a.code == 0);
    CHECK(parsed(a)["decomposition"] == "10/7");
    CHECK(parsed(a)["counting"] == "7/5");
    CHECK(parsed(a)["status"] == "proven_decomposition");
    CHECK(parsed(run({"bounds", "--k", "4", "--mt", "8", "--mr", "21"}))["best_known"] == "168/29");
    CHECK(parsed(run({"bounds", "--k", "4", "--mt", "1", "--mr", "1"}))["decomposition"] == "1/2");
    CHECK(run({"bounds", "--k", "4", "--mt", "0", "--mr", "5"}).code == 2);
    CHECK(run({"bounds", "--mt", "2"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("chain examples") {
    const Run a = run({"chain", "--script", "ex3_3x8", "--seed", "11"});
    REQUIRE(a.code == 0);
    CHECK(parsed(a)["bound"] == "24/11");
    CHECK(parsed(a)["seed"] == 11);
    CHECK(run({"chain", "--script", "ex3_3x8", "--seed", "11"}).out == a.out);
    CHECK(parsed(run({"chain", "--script", "kuser_5_4_15", "--seed", "1"}))["bound"] == "60/19");
    CHECK(parsed(run({"chain", "--script", "five_to_one_2x5", "--seed", "1"}))["bound"] == "10/7");
    CHECK(parsed(run({"chain", "--script", "alg1", "--mt", "3", "--mr", "5"}))["bound"] == "15/8");
    CHECK(parsed(run({"chain", "--script", "alg2", "--mt", "2", "--mr", "5"}))["bound"] == "10/7");
    CHECK(run({"chain", "--script", "nope"}).code == 2);
    CHECK(run({"chain"}).code == 2);
    CHECK(run({"chain", "--script", "ex1_2x5", "--format", "xml"}).code == 2);
}

TEST_CASE("serial and parallel sweeps emit identical output") {
    const Run serial = run({"chain", "--script", "ex3_3x8", "--seed", "11", "--seeds", "6", "--jobs", "1"});
    const Run parallel = run({"chain", "--script", "ex3_3x8", "--seed", "11", "--seeds", "6", "--jobs", "4"});
    REQUIRE(serial.code == 0);
    CHECK(serial.out == parallel.out);
    CHECK(parsed(serial).size() == 6);
    const Run csv = run({"chain", "--script", "ex3_3x8", "--seeds", "3", "--format", "csv"});
    const auto rows = lines(csv.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "script,seed,bound,degraded,steps");
}

TEST_CASE("DOF_LAB_SEED sets the default seed") {
    ::setenv("DOF_LAB_SEED", "11", 1);
    const Run env = run({"chain", "--script", "ex3_3x8"});
    ::unsetenv("DOF_LAB_SEED");
    CHECK(env.out == run({"chain", "--script", "ex3_3x8", "--seed", "11"}).out);
    ::setenv("DOF_LAB_SEED", "x", 1);
    CHECK(run({"chain", "--script", "ex3_3x8"}).code == 2);
    ::unsetenv("DOF_LAB_SEED");
}

TEST_CASE("a degraded custom chain exits with 3") {
    const auto path = std::filesystem::temp_directory_path() / "doflab_degraded_script.json";
    {
        std::ofstream f(path);
        f << R"({"name":"thin","topology":"full_ic","K":4,"M_T":2,"M_R":5,)"
          << R"("steps":[{"rx":2,"genie":[],"target":1,"out":"A"},{"rx":3,"genie":[{"kind":"ref","id":"A"}]}]})";
    }
    const Run r = run({"chain", "--input", path.string()});
    std::filesystem::remove(path);
    CHECK(r.code == 3);
    CHECK(parsed(r)["degraded"] == true);
}

TEST_CASE("certify") {
    const Run empty = run({"certify", "--regime", "half", "--max", "4"});
    CHECK(empty.code == 0);
    CHECK(lines(empty.out) == std::vector<std::string>{"M,N,regime,a,steps,bound,pass"});
    const Run p3 = run({"certify", "--regime", "p3", "--max", "13"});
    CHECK(p3.code == 0);
    CHECK(lines(p3.out).size() == 3);
    CHECK(run({"certify", "--regime", "bogus"}).code == 2);
}

TEST_CASE("curve") {
    const Run r = run({"curve", "--k", "4", "--max", "8"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    CHECK(rows[0] == "gamma,counting_over_n,decomposition_over_n,dstar_over_n,best_over_n,status");
    bool saw38 = false, saw12 = false;
    for (const auto& row : rows) {
        if (row.rfind("3/8,", 0) == 0) {
            saw38 = true;
            std::vector<std::string> f;
            std::istringstream in(row);
            for (std::string cell; std::getline(in, cell, ',');)
                f.push_back(cell);
            CHECK(f[2] == "3/11");
            CHECK(f[3] == "3/11");
        }
        if (row.rfind("1/2,", 0) == 0) {
            saw12 = true;
            CHECK(row.find(",1/3,") != std::string::npos);
        }
    }
    CHECK(saw38);
    CHECK(saw12);
}

TEST_CASE("align and multilook") {
    const Run k = run({"align", "--k", "4", "--beta", "1", "--seed", "3"});
    CHECK(k.code == 0);
    CHECK(parsed(k)["report"]["pass"] == true);
    CHECK(run({"align", "--case", "4/9", "--seed", "2"}).code == 0);
    CHECK(run({"align", "--case", "7/9"}).code == 2);
    const Run m = run({"multilook", "--dims", "1,2,1,1,3,2", "--m", "3"});
    CHECK(m.code == 0);
    CHECK(parsed(m)["result"]["l_sigma"] == 3);
}

TEST_CASE("output file") {
    const auto path = std::filesystem::temp_directory_path() / "doflab_bounds_out.json";
    const Run r = run({"bounds", "--mt", "3", "--mr", "8", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    const auto j = nlohmann::ordered_json::parse(f);
    CHECK(j["decomposition"] == "24/11");
    std::filesystem::remove(path);
}
