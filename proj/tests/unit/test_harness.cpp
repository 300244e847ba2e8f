#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "dynclust/generators.hpp"
#include "harness.hpp"
#include "json.hpp"

using namespace dynclust;
using namespace dynclust::harness;

namespace {

class HarnessTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("dynclust_harness_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::string write_stream(const std::string& name, const EdgeStream& s) {
        const auto path = dir_ / name;
        std::ofstream f(path);
        write_edge_stream(f, s);
        return path.string();
    }
    std::string write_text(const std::string& name, const std::string& text) {
        const auto path = dir_ / name;
        std::ofstream(path) << text;
        return path.string();
    }

    std::filesystem::path dir_;
};

std::vector<nlohmann::json> lines(const std::string& text) {
    std::vector<nlohmann::json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (!line.empty()) out.push_back(nlohmann::json::parse(line));
    }
    return out;
}

} // namespace

TEST_F(HarnessTest, VerifyScriptedStreamPasses) {
    RunConfig c;
    c.input = write_stream("s.txt", gnm_stream(40, 100, 20, 7));
    c.mode = Mode::kVerify;
    c.k = 2;
    c.oracle = true;
    std::ostringstream out, err;
    EXPECT_EQ(cmd_run(c, out, err), kExitOk) << err.str();
    const auto recs = lines(out.str());
    ASSERT_EQ(recs.size(), 100u);
    EXPECT_EQ(recs.back()["step"], 100);
    for (const auto& r : recs) {
        EXPECT_EQ(r["mode"], "verify");
        if (!r["ratio"].is_null()) EXPECT_LE(r["ratio"].get<double>(), 60.0);
    }
}

TEST_F(HarnessTest, MalformedLineExitsTwoWithLineNumber) {
    RunConfig c;
    c.input = write_text("bad.txt", "n 4\ne 0 1 1\ne 1 x 2\n");
    std::ostringstream out, err;
    EXPECT_EQ(cmd_run(c, out, err), kExitUsage);
    EXPECT_NE(err.str().find("line 3"), std::string::npos) << err.str();
}

TEST_F(HarnessTest, MissingFileAndBadParameters) {
    RunConfig c;
    c.input = (dir_ / "absent.txt").string();
    std::ostringstream out, err;
    EXPECT_EQ(cmd_run(c, out, err), kExitUsage);

    c.input = write_stream("s.txt", gnm_stream(10, 10, 5, 1));
    c.eps_red = 0.5;
    EXPECT_EQ(cmd_run(c, out, err), kExitUsage);
    c.eps_red = 0.25;
    c.lambda = 0;
    EXPECT_EQ(cmd_run(c, out, err), kExitUsage);
}

TEST_F(HarnessTest, OracleOverBudgetIsCapabilityError) {
    RunConfig c;
    c.input = write_stream("s.txt", gnm_stream(40, 60, 5, 1));
    c.k = 3;
    c.oracle = true;
    std::ostringstream out, err;
    EXPECT_EQ(cmd_run(c, out, err), kExitUsage);
}

TEST_F(HarnessTest, SchemaStableAcrossModes) {
    const auto input = write_stream("s.txt", gnm_stream(25, 40, 10, 3));
    std::set<std::string> keys;
    for (Mode m : {Mode::kIncremental, Mode::kStaticBaseline, Mode::kVerify}) {
        RunConfig c;
        c.input = input;
        c.mode = m;
        c.k = 2;
        std::ostringstream out, err;
        ASSERT_EQ(cmd_run(c, out, err), kExitOk) << err.str();
        const auto recs = lines(out.str());
        ASSERT_EQ(recs.size(), 40u);
        std::set<std::string> these;
        for (const auto& [key, value] : recs.front().items()) these.insert(key);
        if (keys.empty()) keys = these;
        EXPECT_EQ(these, keys) << mode_name(m);
    }
}

TEST_F(HarnessTest, BaselineFinalCostComparable) {
    const auto input = write_stream("s.txt", gnm_stream(30, 80, 10, 11));
    double finals[2];
    int j = 0;
    for (Mode m : {Mode::kIncremental, Mode::kStaticBaseline}) {
        RunConfig c;
        c.input = input;
        c.mode = m;
        c.k = 2;
        c.oracle = true;
        c.verify_cost = true;
        std::ostringstream out, err;
        ASSERT_EQ(cmd_run(c, out, err), kExitOk);
        const auto last = lines(out.str()).back();
        finals[j++] = last["cost_G"].get<double>();
        EXPECT_LE(last["cost_G"].get<double>(), 60.0 * last["opt"].get<double>());
    }
    EXPECT_GT(finals[0], 0.0);
    EXPECT_GT(finals[1], 0.0);
}

TEST_F(HarnessTest, MetricsFileIsAppended) {
    RunConfig c;
    c.input = write_stream("s.txt", gnm_stream(15, 20, 5, 2));
    c.out = (dir_ / "m.jsonl").string();
    std::ostringstream out, err;
    ASSERT_EQ(cmd_run(c, out, err), kExitOk);
    ASSERT_EQ(cmd_run(c, out, err), kExitOk);
    std::ifstream f(c.out);
    std::stringstream all;
    all << f.rdbuf();
    EXPECT_EQ(lines(all.str()).size(), 40u);
    EXPECT_TRUE(out.str().empty());
}

TEST_F(HarnessTest, BenchReport) {
    RunConfig c;
    c.input = write_stream("s.txt", gnm_stream(60, 300, 20, 5));
    c.mode = Mode::kBench;
    c.init_prefix = 200;
    c.baseline_every = 10;
    std::ostringstream out, err;
    ASSERT_EQ(cmd_run(c, out, err), kExitOk) << err.str();
    const auto rep = nlohmann::json::parse(out.str());
    EXPECT_EQ(rep["updates"], 100);
    EXPECT_EQ(rep["incremental"]["count"], 100);
    EXPECT_EQ(rep["baseline"]["count"], 10);
    EXPECT_EQ(rep["restarts"], rep["sigma_inc"]);
}

TEST_F(HarnessTest, BenchEmptyStream) {
    RunConfig c;
    c.input = write_text("empty.txt", "n 5\n");
    c.mode = Mode::kBench;
    std::ostringstream out, err;
    ASSERT_EQ(cmd_run(c, out, err), kExitOk) << err.str();
    const auto rep = nlohmann::json::parse(out.str());
    EXPECT_EQ(rep["updates"], 0);
    EXPECT_EQ(rep["incremental"]["count"], 0);
    EXPECT_EQ(rep["resampling_phases"], 0);
}

TEST_F(HarnessTest, InitPrefixBeyondStream) {
    RunConfig c;
    c.input = write_stream("s.txt", gnm_stream(10, 10, 5, 1));
    c.init_prefix = 11;
    std::ostringstream out, err;
    EXPECT_EQ(cmd_run(c, out, err), kExitUsage);
}

TEST(HarnessGenerate, KindsAndUnknown) {
    GenerateConfig g;
    g.n = 20;
    g.m = 30;
    for (const char* kind : {"gnp", "gnm", "two-cluster", "pa"}) {
        g.kind = kind;
        EXPECT_EQ(generate(g).n, 20u) << kind;
    }
    g.kind = "lattice";
    EXPECT_THROW(generate(g), std::invalid_argument);
}

TEST(HarnessMode, RoundTrip) {
    for (Mode m : {Mode::kIncremental, Mode::kStaticBaseline, Mode::kVerify, Mode::kBench}) {
        EXPECT_EQ(parse_mode(mode_name(m)), m);
    }
    EXPECT_THROW(parse_mode("fast"), std::invalid_argument);
}
