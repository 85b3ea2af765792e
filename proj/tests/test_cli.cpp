#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "signedperm/cli.hpp"

using namespace signedperm;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("info") {
    const auto r = run({"info", "-2 3 1"});
    CHECK(r.code == cli::kExitTrue);
    CHECK(r.out.find("length: 3") != std::string::npos);
    CHECK(r.out.find("iota: -1 -3 2 0 -2 3 1") != std::string::npos);
    CHECK(run({"info", "1 1"}).code == cli::kExitUsage);
}

TEST_CASE("basic") {
    auto r = run({"basic", "2", "2", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("w(2,2,3): 1 -4 -3 2") != std::string::npos);
    CHECK(r.out.find("length: 9") != std::string::npos);
    r = run({"basic", "3", "2", "-2"});
    CHECK(r.out.find("4 -3 1 2") != std::string::npos);
    CHECK(r.out.find("inverse: (2,3,-1)") != std::string::npos);
    r = run({"basic", "3", "-1", "2", "--type", "a"});
    CHECK(r.out.find("-4 -3 -2 2 3 4 -1 0 1") != std::string::npos);
    r = run({"basic", "3", "4", "2", "--type", "a-small"});
    CHECK(r.out.find("1 3 4 5 2") != std::string::npos);
    CHECK(run({"basic", "0", "1", "1"}).code == cli::kExitUsage);
    CHECK(run({"basic", "1", "1"}).code == cli::kExitUsage);
}

TEST_CASE("diagram and ess") {
    auto r = run({"diagram", "-2 3 1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("-3 |  #  o  .") != std::string::npos);
    r = run({"diagram", "-2 3 1", "--format", "json"});
    CHECK(r.out.find("\"kind\": \"B\"") != std::string::npos);
    CHECK(run({"diagram", "-2 3 1", "--format", "png"}).code == cli::kExitUsage);
    r = run({"ess", "1 5 -4 -3 2"});
    CHECK(r.out == R"({"w":[1,5,-4,-3,2],"type":"B","essential":[{"k":3,"p":3,"q":-2},{"k":2,"p":3,"q":3}]})"
                   "\n");
    CHECK(run({"ess", "-2 3 1", "--type", "a"}).code == cli::kExitUsage);
}

TEST_CASE("sup and leq") {
    auto r = run({"sup", "--n", "3", "1,3,-1", "1,1,2"});
    CHECK(r.code == 0);
    CHECK(r.out == "-2 3 1\n");
    CHECK(run({"sup", "--n", "3"}).out == "1 2 3\n");
    CHECK(run({"sup", "--n", "3", "2,2,3"}).code == cli::kExitUsage);
    CHECK(run({"leq", "1 2", "-1 -2"}).code == cli::kExitTrue);
    r = run({"leq", "-1 -2", "1 2"});
    CHECK(r.code == cli::kExitFalse);
    CHECK(r.out == "false\n");
}

TEST_CASE("rwy") {
    const auto r = run({"rwy", "-2 3 1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("matches minimal elements not below: true") != std::string::npos);
}

TEST_CASE("verify is deterministic") {
    const auto a = run({"verify", "matrix-rank", "--n", "2", "--samples", "3", "--seed", "5"});
    const auto b = run({"verify", "matrix-rank", "--n", "2", "--samples", "3", "--seed", "5"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("suite matrix-rank: ok") != std::string::npos);
    CHECK(run({"verify", "nope"}).code == cli::kExitUsage);
    CHECK(run({"verify", "counts", "--n", "3"}).code == 0);
}

TEST_CASE("render reads a json board") {
    const std::string path = "signedperm_cli_test_board.json";
    {
        std::ofstream f(path);
        f << run({"diagram", "-2 3 1", "--format", "json"}).out;
    }
    const auto r = run({"render", path});
    CHECK(r.code == 0);
    CHECK(r.out == run({"diagram", "-2 3 1"}).out);
    std::remove(path.c_str());
    CHECK(run({"render", "does-not-exist.json"}).code == cli::kExitUsage);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run({"--help"}).code == cli::kExitTrue);
    CHECK_FALSE(run({"--help"}).out.empty());
}
