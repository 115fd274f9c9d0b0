#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + std::string(PULLBACK_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return r;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), int(buf.size()), p))
        r.out += buf.data();
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, TableOneText) {
    const auto r = run("tables --which 1 --k 12..22");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "-3694/3"));
    EXPECT_TRUE(contains(r.out, "370371188237525/2"));
}

TEST(Cli, TableOneCsv) {
    const auto r = run("tables --which 1 --k 12..22 --format csv");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "12,-3694/3,-50521/2\n"));
    EXPECT_TRUE(contains(r.out, "22,4577258092006/9,370371188237525/2\n"));
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 7);
}

TEST(Cli, TableTwo) {
    const auto r = run("tables --which 2 --k 12..22");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "alpha_12 = 2^31 * pi^33 / (3^6 * 5^3 * 7^3 * 11^2 * 13 * 17 * 19 * 23 * 691)"));
    EXPECT_TRUE(contains(r.out, "alpha_14 = 0"));
    EXPECT_TRUE(contains(r.out, "4409"));
}

TEST(Cli, OddWeightIsUsageError) {
    EXPECT_EQ(run("tables --which 2 --k 13").code, 2);
    EXPECT_EQ(run("alpha --k 13").code, 2);
    EXPECT_EQ(run("alpha --k 10").code, 2);
    EXPECT_EQ(run("alpha --k abc").code, 2);
    EXPECT_EQ(run("tables --which 3 --k 12").code, 2);
    EXPECT_EQ(run("nonsense").code, 2);
    EXPECT_EQ(run("").code, 2);
}

TEST(Cli, RangeSkipsOddWeights) {
    const auto r = run("alpha --k 13..17");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "alpha_14 = 0"));
    EXPECT_TRUE(contains(r.out, "alpha_16 = "));
    EXPECT_FALSE(contains(r.out, "alpha_15"));
}

TEST(Cli, AlphaBothAtFourteen) {
    const auto r = run("alpha --k 14 --route both");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "alpha_14 direct = 0\nalpha_14 pieces = 0\nEQUAL\n");
}

TEST(Cli, AlphaJson) {
    const auto r = run("alpha --k 12 --format json");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "\"pi_exp\": 33"));
    EXPECT_TRUE(contains(r.out, "\"route\": \"direct\""));
}

TEST(Cli, QExpansions) {
    EXPECT_EQ(run("qexp --form delta --terms 5").out, "0, 1, -24, 252, -1472\n");
    EXPECT_EQ(run("qexp --form theta1 --terms 4").out, "1, 4, 4, 0\n");
    EXPECT_EQ(run("qexp --form eisenstein --k 4 --terms 3").out, "1, 240, 2160\n");
    EXPECT_EQ(run("qexp --form theta2 --terms 4 --format csv").out, "1,6,0,6\n");
    EXPECT_EQ(run("qexp --form miller --k 24 --i 2 --terms 3").out, "0, 0, 1\n");
    EXPECT_EQ(run("qexp --form bogus --terms 3").code, 2);
    EXPECT_EQ(run("qexp --form eisenstein --terms 3").code, 2);
    EXPECT_EQ(run("qexp --form miller --k 24 --i 3").code, 2);
}

TEST(Cli, PrecisionFromEnvironment) {
    const auto r = run("qexp --form delta", "PULLBACK_LVALUES_PRECISION=4");
    EXPECT_EQ(r.out, "0, 1, -24, 252\n");
    EXPECT_EQ(run("qexp --form delta", "PULLBACK_LVALUES_PRECISION=zero").code, 2);
}

TEST(Cli, VerifyNumericReportsRelativeError) {
    const auto r = run("verify --suite numeric --k 12");
    EXPECT_TRUE(r.code == 0 || r.code == 1);
    EXPECT_TRUE(contains(r.out, "rel_err="));
    EXPECT_EQ(run("verify --suite numeric --k 13").code, 2);
}

TEST(Cli, CacheRoundTripAndCorruption) {
    const auto dir = std::filesystem::temp_directory_path() / "pullback_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "bernoulli.json").string();
    std::filesystem::remove(path);

    EXPECT_EQ(run("--cache " + path + " tables --which 1 --k 12").code, 0);
    ASSERT_TRUE(std::filesystem::exists(path));
    const auto cached = run("--cache " + path + " tables --which 1 --k 12..22 --format csv");
    EXPECT_EQ(cached.code, 0);
    EXPECT_EQ(cached.out, run("tables --which 1 --k 12..22 --format csv").out);

    // B_12 = -691/2730 replaced by a wrong value
    std::ofstream(path) << R"({"12": "-691/2731"})";
    EXPECT_EQ(run("--cache " + path + " verify --suite all").code, 1);

    std::ofstream(path) << "{not json";
    EXPECT_EQ(run("--cache " + path + " tables --which 1 --k 12").code, 2);
    std::filesystem::remove_all(dir);
}
