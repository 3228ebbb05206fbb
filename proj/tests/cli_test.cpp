#include "yao/yao.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

namespace {

namespace fs = std::filesystem;
using yao::io::json;

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("yao_cli_test_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    int run(const std::string &args, const std::string &stdout_file = "out.txt") const {
        const std::string cmd = std::string(YAO_CLI_PATH) + " " + args + " > " + path(stdout_file) + " 2> " + path("err.txt");
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    std::string read(const std::string &name) const { return yao::io::read_file(path(name)); }

    void write(const std::string &name, const std::string &content) const { yao::io::write_file(path(name), content); }

    fs::path dir_;
};

TEST_F(Cli, BuildAndAnalyzeLowerBound) {
    write("pts.csv", yao::io::points_to_csv(yao::lower_bound_y5().points));
    ASSERT_EQ(run("build --input " + path("pts.csv") + " --k 5 --variant yao --output " + path("g.json")), 0);
    const auto g = yao::io::load_graph(path("g.json"));
    EXPECT_EQ(g.size(), 34u);
    EXPECT_EQ(run("analyze --graph " + path("g.json") + " --output " + path("r.json")), 0);
    const auto out = read("out.txt");
    EXPECT_NE(out.find("spanner under rho=3.7320508: yes"), std::string::npos) << out;
    EXPECT_NE(out.find("witness u - v"), std::string::npos) << out;
    const auto r = json::parse(read("r.json"));
    EXPECT_NEAR(r.at("max_ratio").get<double>(), 2.8766265012969177, 1e-9);
    EXPECT_TRUE(r.at("is_spanner").get<bool>());
}

TEST_F(Cli, SavedGraphAnalyzesLikeInMemory) {
    write("pts.json", "[[0,0],[1,0.2],[2,-0.3],[0.5,1.5],[3,2],[-1,1]]");
    ASSERT_EQ(run("build --input " + path("pts.json") + " --variant yaoyao -o " + path("g.json")), 0);
    ASSERT_EQ(run("analyze --graph " + path("g.json") + " --rho 100 --output " + path("a.json")), 0);
    ASSERT_EQ(run("analyze --input " + path("pts.json") + " --variant yaoyao --rho 100 --output " + path("b.json")), 0);
    EXPECT_EQ(read("a.json"), read("b.json"));
}

TEST_F(Cli, YaoYaoIsSubgraph) {
    write("pts.csv", yao::io::points_to_csv(yao::random_points(60, yao::Distribution::Clustered, 3)));
    ASSERT_EQ(run("build --input " + path("pts.csv") + " -o " + path("y.json")), 0);
    ASSERT_EQ(run("build --input " + path("pts.csv") + " --variant yaoyao -o " + path("yy.json")), 0);
    const auto y = yao::io::load_graph(path("y.json"));
    const auto yy = yao::io::load_graph(path("yy.json"));
    EXPECT_LT(yy.edges().size(), y.edges().size());
    for (const auto &e : yy.edges()) EXPECT_TRUE(y.has_edge(e.src, e.dst));
}

TEST_F(Cli, SinglePointBuild) {
    write("one.csv", "x,y\n4,5\n");
    ASSERT_EQ(run("build --input " + path("one.csv") + " -o " + path("g.json")), 0);
    EXPECT_TRUE(json::parse(read("g.json")).at("edges").empty());
}

TEST_F(Cli, TwoPointAnalyze) {
    write("two.csv", "x,y\n0,0\n1,0\n");
    ASSERT_EQ(run("analyze --input " + path("two.csv")), 0);
    EXPECT_NE(read("out.txt").find("stretch factor: 1 "), std::string::npos) << read("out.txt");
}

TEST_F(Cli, CorridorIsNotASpanner) {
    ASSERT_EQ(run("generate yy5 --levels 3 -o " + path("c.json")), 0);
    EXPECT_EQ(run("analyze --input " + path("c.json") + " --variant yaoyao --rho 3.74"), 2);
    EXPECT_NE(read("out.txt").find("spanner under rho=3.74: no"), std::string::npos) << read("out.txt");
}

TEST_F(Cli, DisconnectedGraphExitsTwo) {
    write("g.json", R"({"k":5,"variant":"custom","points":[[0,0],[1,0],[5,5]],"edges":[[0,1]]})");
    EXPECT_EQ(run("analyze --graph " + path("g.json")), 2);
    EXPECT_NE(read("out.txt").find("stretch factor: inf (unreachable pair #0 - #2)"), std::string::npos) << read("out.txt");
}

TEST_F(Cli, MalformedInput) {
    write("bad.csv", "x,y\n0,0\n1,zz\n");
    EXPECT_EQ(run("build --input " + path("bad.csv")), 65);
    EXPECT_NE(read("err.txt").find("bad.csv:3:"), std::string::npos) << read("err.txt");
    write("dup.csv", "x,y\n0,0\n1,1\n0,0\n");
    EXPECT_EQ(run("build --input " + path("dup.csv")), 65);
    EXPECT_NE(read("err.txt").find("duplicate"), std::string::npos) << read("err.txt");
    EXPECT_EQ(run("build --input " + path("missing.csv")), 74);
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run(""), 64);
    EXPECT_EQ(run("frobnicate"), 64);
    EXPECT_EQ(run("build"), 64);
    EXPECT_EQ(run("verify nonsense"), 64);
    EXPECT_EQ(run("analyze"), 64);
    EXPECT_EQ(run("build --input x.csv --k 1"), 64);
    EXPECT_EQ(run("--help"), 0);
}

TEST_F(Cli, VerifyConstantsAndProp1) {
    ASSERT_EQ(run("verify constants"), 0);
    const auto c = json::parse(read("out.txt"));
    EXPECT_LE(c.at(0).at("max_residual").get<double>(), 1e-12);
    ASSERT_EQ(run("verify prop1 --resolution 200 -o " + path("p.json")), 0);
    const auto p = json::parse(read("p.json"));
    EXPECT_LE(p.at(0).at("values").at("max_wz").get<double>(), 0.4641017 + 1e-9);
}

TEST_F(Cli, VerifyFailureExitsOne) {
    // a negative tolerance makes the equality cases count as violations
    EXPECT_EQ(run("verify prop1 --resolution 50 --tolerance -1e-3"), 1);
    EXPECT_NE(read("err.txt").find("alpha="), std::string::npos) << read("err.txt");
}

TEST_F(Cli, VerifyIsSeedReproducible) {
    ASSERT_EQ(run("verify induction --samples 20000 --seed 5", "a.txt"), 0);
    ASSERT_EQ(run("verify induction --samples 20000 --seed 5", "b.txt"), 0);
    EXPECT_EQ(read("a.txt"), read("b.txt"));
}

TEST_F(Cli, GenerateFormats) {
    ASSERT_EQ(run("generate lower-bound -o " + path("lb.json")), 0);
    const auto lb = yao::io::named_point_set_from_json(json::parse(read("lb.json")));
    EXPECT_EQ(lb.provenance, yao::Provenance::FixedTable);
    EXPECT_EQ(lb.points, yao::lower_bound_y5().points);
    ASSERT_EQ(run("generate random --n 25 --distribution annulus --seed 9 -o " + path("r.csv")), 0);
    EXPECT_EQ(yao::io::load_points(path("r.csv")), yao::random_points(25, yao::Distribution::Annulus, 9));
    ASSERT_EQ(run("generate yy5 --levels 2 --format csv"), 0);
    EXPECT_EQ(yao::io::parse_points(read("out.txt")), yao::yy5_unbounded_family(2).points);
}

TEST_F(Cli, Render) {
    ASSERT_EQ(run("generate yy5 -o " + path("c.json")), 0);
    ASSERT_EQ(run("render --input " + path("c.json") + " --variant yaoyao --cones --witness -o " + path("c.svg")), 0);
    const auto svg = read("c.svg");
    std::size_t cones = 0;
    for (auto pos = svg.find("class=\"cone\""); pos != std::string::npos; pos = svg.find("class=\"cone\"", pos + 1)) ++cones;
    EXPECT_EQ(cones, 60u);
    EXPECT_NE(svg.find("class=\"witness\""), std::string::npos);
}

}// namespace
