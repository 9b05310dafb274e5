// Drives the locdom executable end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#ifndef LOCDOM_CLI
#error "LOCDOM_CLI must point at the locdom executable"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
    int code = -1;
    std::string out;
};

Outcome sh(const std::string& args) {
    std::string cmd = std::string(LOCDOM_CLI) + " " + args + " 2>&1";
    Outcome o;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return o;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) o.out.append(buf, got);
    int status = pclose(p);
    o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return o;
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("locdom_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenerateRunAndVerify) {
    ASSERT_EQ(sh("gen --family gadgetGraft --n 12 --gadgets 1 -o " + path("g.txt")).code, 0);
    auto run = sh("run --alg B --control-fn linear:0 --graph " + path("g.txt") + " -o " + path("r.json"));
    ASSERT_EQ(run.code, 0) << run.out;
    std::ifstream in(path("r.json"));
    json r = json::parse(in);
    EXPECT_TRUE(r["dominating"].get<bool>());
    EXPECT_EQ(r["algorithm"]["config"]["T"].get<int>(), 5);
    auto v = sh("verify --planar --graph " + path("g.txt") + " --set " + path("r.json"));
    EXPECT_EQ(v.code, 0) << v.out;
    EXPECT_EQ(json::parse(v.out)["planar"].get<bool>(), false);
}

TEST_F(Cli, VerifyReportsNonDominatingSets) {
    write("p.txt", "4 3\n0 1\n1 2\n2 3\n");
    write("s.txt", "0\n");
    auto v = sh("verify --graph " + path("p.txt") + " --set " + path("s.txt"));
    EXPECT_EQ(v.code, 1);
    EXPECT_EQ(json::parse(v.out)["dominating"].get<bool>(), false);
    write("s2.txt", "[1, 2]");
    EXPECT_EQ(sh("verify --graph " + path("p.txt") + " --set " + path("s2.txt")).code, 0);
}

TEST_F(Cli, OracleBestAndAll) {
    write("p.txt", "4 3\n0 1\n1 2\n2 3\n");
    auto o = sh("oracle --best --all --graph " + path("p.txt"));
    ASSERT_EQ(o.code, 0) << o.out;
    json j = json::parse(o.out);
    EXPECT_EQ(j["mds_size"].get<int>(), 2);
    EXPECT_EQ(j["best"], json::parse("[1, 2]"));
    EXPECT_EQ(j["count"].get<int>(), 4);
}

TEST_F(Cli, ErrorsAreCategorized) {
    write("bad.txt", "3 2\n0 1\n");
    auto bad = sh("run --alg A --graph " + path("bad.txt"));
    EXPECT_EQ(bad.code, 2);
    EXPECT_EQ(json::parse(bad.out)["error"]["category"].get<std::string>(), "input");
    auto missing = sh("run --alg A --graph " + path("nope.txt"));
    EXPECT_EQ(missing.code, 5);
    EXPECT_EQ(json::parse(missing.out)["error"]["category"].get<std::string>(), "io");
    EXPECT_EQ(sh("gen --family hypercube").code, 2);
    EXPECT_EQ(sh("run --alg Z --graph x").code, 2);
}

TEST_F(Cli, MeasureIsDeterministic) {
    write("suite.json", R"({"name": "cli", "graphs": [{"family": "cycle", "n": 15},
        {"family": "randomPlanarTriangulation", "n": 12, "seed": 3, "replicas": 2}],
        "algorithms": ["A", "B"], "uniformity": {"samples_per_graph": 2}})");
    ASSERT_EQ(sh("measure --suite " + path("suite.json") + " -o " + path("a.csv")).code, 0);
    ASSERT_EQ(sh("measure --jobs 4 --suite " + path("suite.json") + " -o " + path("b.csv")).code, 0);
    auto slurp = [&](const std::string& f) {
        std::ifstream in(path(f));
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    EXPECT_EQ(slurp("a.csv"), slurp("b.csv"));
    EXPECT_NE(slurp("a.csv").find("cycle(n=15)"), std::string::npos);
}
