#include "cli.hpp"

#include <springer/io.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>

using namespace springer;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::initializer_list<std::string> args) {
    std::vector<std::string> store{"springer"};
    store.insert(store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : store) argv.push_back(s.data());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, FixedPointCount) {
    const auto r = run({"fixedpoints", "--n", "4", "--k", "2", "--a", "v^v^", "--b", "vv^^"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "count 2\n");
    const auto l = run({"fixedpoints", "--a", "v^v^", "--b", "vv^^", "--list"});
    EXPECT_NE(l.out.find("^v^v"), std::string::npos);
    EXPECT_NE(l.out.find("v^v^"), std::string::npos);
}

TEST(Cli, MultiplyRunningExample) {
    auto r = run({"multiply", "--alpha", "-1", "--left", "vv^^,v^v^", "--right", "v^v^,vv^^"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "x1 - x2\n");
    r = run({"multiply", "--alpha", "1", "--left", "vv^^,v^v^", "--right", "v^v^,vv^^"});
    EXPECT_EQ(r.out, "x1 + x2\n");
    r = run({"multiply", "--nested", "--left", "v^v^,vv^^", "--right", "vv^^,v^v^"});
    EXPECT_EQ(r.out, "-x1 - x3\n");
    r = run({"multiply", "--alpha", "1", "--left", "vv^^,v^v^", "--right", "v^v^,vv^^", "--format", "json"});
    EXPECT_EQ(json::parse(r.out).at("text"), "x1 + x2");
}

TEST(Cli, EnumerateStandard) {
    const auto r = run({"enumerate", "--n", "5", "--k", "2", "--standard"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out), 5u);
    EXPECT_EQ(lines(run({"enumerate", "--n", "4", "--k", "2"}).out), 6u);
    const auto j = json::parse(run({"enumerate", "--n", "4", "--k", "2", "--format", "json"}).out);
    ASSERT_EQ(j.size(), 6u);
    EXPECT_EQ(j[5].at("tableau"), "43/21");
}

TEST(Cli, CupAndGlue) {
    const auto c = run({"cup", "--weight", "v^v^"});
    EXPECT_EQ(c.code, 0);
    EXPECT_NE(c.out.find("\\_/ \\_/"), std::string::npos);
    const auto g = run({"glue", "--a", "v^v^", "--b", "vv^^"});
    EXPECT_NE(g.out.find("circles: 1"), std::string::npos);
    EXPECT_NE(g.out.find("lines: 0"), std::string::npos);
}

TEST(Cli, Cohomology) {
    const auto r = run({"cohomology", "--a", "v^v^", "--b", "vv^^"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("dimension: 2"), std::string::npos);
    EXPECT_NE(r.out.find("shifted: q + q^3"), std::string::npos);
    EXPECT_EQ(run({"cohomology", "--a", "^^vv", "--b", "v^^v"}).out, "empty\n");
    const auto t = json::parse(run({"cohomology", "--tableau", "43/21", "--format", "json"}).out);
    EXPECT_EQ(t.at("presentation").at("generators"), (std::vector<int>{1, 2}));
}

TEST(Cli, K0) {
    const auto r = run({"k0", "--n", "2", "--k", "1", "--format", "csv"});
    EXPECT_EQ(r.out, "weight,^v,v^\n^v,1,0\nv^,-1,1\n");
    const auto t = run({"k0", "--n", "4"});
    EXPECT_NE(t.out.find("determinant 1"), std::string::npos);
    EXPECT_NE(t.out.find("direction stated"), std::string::npos);
    const auto j = json::parse(run({"k0", "--n", "4", "--format", "json"}).out);
    EXPECT_EQ(j.at("weights").size(), 6u);
}

TEST(Cli, ChecksAndExitCodes) {
    EXPECT_EQ(run({"check", "--n", "4", "--k", "2", "--alpha", "1", "--what", "all"}).code, 0);
    const auto bad = run({"check", "--n", "4", "--k", "2", "--alpha", "-1", "--what", "associativity"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.out.find("associativity: FAIL"), std::string::npos);
    EXPECT_EQ(run({"check", "--n", "6", "--k", "3", "--alpha", "-1", "--what", "order"}).code, 2);
    EXPECT_EQ(run({"check", "--n", "5", "--k", "2", "--what", "nested"}).code, 0);
}

TEST(Cli, ErrorsNameTheArgument) {
    auto r = run({"cup", "--weight", "v^x"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("--weight"), std::string::npos);
    r = run({"enumerate", "--n", "3", "--k", "2"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("--k"), std::string::npos);
    r = run({"multiply", "--left", "vv^^,v^v^", "--right", "vv^^,v^v^"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("--right"), std::string::npos);
    r = run({"multiply", "--left", "vv^^,v^v^", "--right", "v^v^,vv^^", "--order", "3-4"});
    EXPECT_NE(r.err.find("--order"), std::string::npos);
    r = run({"fixedpoints", "--n", "4", "--a", "v^v", "--b", "vv^^"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("--a"), std::string::npos);
    EXPECT_EQ(run({"multiply", "--alpha", "2", "--left", "v^,v^", "--right", "v^,v^"}).code, 1);
    EXPECT_EQ(run({"nonsense"}).code, 1);
}

TEST(Cli, TableJsonRoundTrip) {
    for (const char* alpha : {"1", "-1"}) {
        const auto r = run({"table", "--n", "4", "--k", "2", "--alpha", alpha, "--format", "json"});
        ASSERT_EQ(r.code, 0);
        EXPECT_EQ(table_from_json(json::parse(r.out)), structure_table({4, 2}, std::stoi(alpha)));
    }
}

TEST(Cli, Deterministic) {
    const auto a = run({"table", "--n", "5", "--k", "2", "--alpha", "-1"});
    const auto b = run({"table", "--n", "5", "--k", "2", "--alpha", "-1"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
}

TEST(Cli, WritesOutFile) {
    const auto path = std::filesystem::temp_directory_path() / "springer_cli_out.csv";
    const auto r = run({"k0", "--n", "2", "--format", "csv", "--out", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), "weight,^v,v^\n^v,1,0\nv^,-1,1\n");
    std::filesystem::remove(path);
}
