#include <gtest/gtest.h>

#include "dynclust/oracle.hpp"
#include "json.hpp"
#include "test_graphs.hpp"

namespace dynclust {
namespace {

using testing::unit_cycle;

TEST(BruteForce, CycleOneCenter) {
    const auto r = brute_force_opt(unit_cycle(4), 1, 1.0);
    EXPECT_EQ(r.opt, 4.0);
    EXPECT_EQ(r.enumerated, 4u);
}

TEST(BruteForce, CycleTwoCenters) {
    const auto r = brute_force_opt(unit_cycle(4), 2, 1.0);
    EXPECT_EQ(r.opt, 2.0);
    EXPECT_EQ(r.enumerated, 6u);
}

TEST(BruteForce, SquaredDistances) {
    // Path 0-1-2-3, one center at 1: 1 + 0 + 1 + 4.
    EXPECT_EQ(brute_force_opt(testing::unit_path(4), 1, 2.0).opt, 6.0);
}

TEST(BruteForce, EveryVertexACenter) { EXPECT_EQ(brute_force_opt(unit_cycle(5), 7, 1.0).opt, 0.0); }

TEST(BruteForce, Weighted) {
    const std::vector<double> wt{0, 0, 5, 0};
    const auto r = brute_force_opt(unit_cycle(4), 1, 1.0, wt);
    EXPECT_EQ(r.opt, 0.0);
    EXPECT_EQ(r.centers, (std::vector<VertexId>{2}));
}

TEST(BruteForce, InfeasibleIsInfinite) {
    auto g = testing::make_graph(4, {{0, 1, 1.0}, {2, 3, 1.0}});
    EXPECT_EQ(brute_force_opt(g, 1, 1.0).opt, kInfinity);
    EXPECT_EQ(brute_force_opt(g, 2, 1.0).opt, 2.0);
}

TEST(BruteForce, BudgetExceeded) {
    EXPECT_THROW(brute_force_opt(unit_cycle(31), 3, 1.0), CapabilityError);
    EXPECT_NO_THROW(brute_force_opt(unit_cycle(30), 3, 1.0));
}

TEST(Binomial, Values) {
    EXPECT_EQ(binomial(30, 3), 4060u);
    EXPECT_EQ(binomial(4, 2), 6u);
    EXPECT_EQ(binomial(3, 5), 0u);
}

TEST(Trials, ZeroTrialsIsVacuous) {
    const auto r = whp_trial_suite("nu-vs-mu", 0, 1);
    EXPECT_TRUE(r.vacuous);
    EXPECT_EQ(r.pass_fraction(), 1.0);
}

TEST(Trials, UnknownProperty) { EXPECT_THROW(whp_trial_suite("bogus", 1, 1), std::invalid_argument); }

TEST(Trials, NuVsMu) {
    const auto r = whp_trial_suite("nu-vs-mu", 20, 100);
    EXPECT_GE(r.pass_fraction(), 0.95);
}

TEST(Trials, CandidateSetSize) {
    const auto r = whp_trial_suite("candidate-set-size", 20, 100);
    EXPECT_GE(r.pass_fraction(), 0.95);
}

TEST(Trials, BicriteriaRatio) {
    const auto r = whp_trial_suite("bicriteria-ratio", 10, 100);
    EXPECT_GE(r.pass_fraction(), 0.95);
}

TEST(Trials, Deterministic) {
    const auto a = whp_trial_suite("nu-vs-mu", 5, 9);
    const auto b = whp_trial_suite("nu-vs-mu", 5, 9);
    EXPECT_EQ(a.to_json(), b.to_json());
    const auto j = nlohmann::json::parse(a.to_json());
    EXPECT_EQ(j["outcomes"].size(), 5u);
}

} // namespace
} // namespace dynclust
