#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "dynclust/kz_static.hpp"
#include "dynclust/oracle.hpp"

namespace dynclust {
namespace {

WeightedInstance unit_instance(std::size_t n, std::vector<WeightedEdge> edges, std::size_t k, double z = 1.0) {
    WeightedInstance inst;
    inst.num_nodes = n;
    inst.edges = std::move(edges);
    inst.weights.assign(n, 1.0);
    inst.k = k;
    inst.z = z;
    return inst;
}

WeightedInstance path3() { return unit_instance(3, {{0, 1, 1}, {1, 2, 1}}, 1); }

WeightedInstance cycle4(std::size_t k) { return unit_instance(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}}, k); }

WeightedInstance random_instance(std::size_t n, std::size_t k, double z, std::mt19937_64& rng) {
    WeightedInstance inst;
    inst.num_nodes = n;
    inst.k = k;
    inst.z = z;
    std::uniform_int_distribution<int> wt(0, 5);
    std::uniform_int_distribution<int> ew(1, 30);
    for (std::size_t x = 0; x < n; ++x) inst.weights.push_back(wt(rng));
    std::bernoulli_distribution coin(0.25);
    for (NodeId a = 0; a < n; ++a) {
        if (a > 0) inst.edges.push_back({a, static_cast<NodeId>(rng() % a), static_cast<double>(ew(rng))});
        for (NodeId b = a + 1; b < n; ++b) {
            if (coin(rng)) inst.edges.push_back({a, b, static_cast<double>(ew(rng))});
        }
    }
    return inst;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TEST(ValueWt, ZeroRadius) { EXPECT_EQ(value_wt(path3(), 1, 0.0), 0.0); }

TEST(ValueWt, MiddleOfPath) { EXPECT_EQ(value_wt(path3(), 1, 1.0), 3.0); }

TEST(ValueWt, LinearInWeights) {
    auto inst = path3();
    inst.weights = {2, 2, 2};
    EXPECT_EQ(value_wt(inst, 1, 1.0), 6.0);
    EXPECT_EQ(value_wt(inst, 0, 1.0), 4.0);
}

TEST(ValueWt, SandwichOnRandomBalls) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto inst = random_instance(12, 2, trial % 2 ? 2.0 : 1.0, rng);
        const auto dist = instance_distances(inst);
        const NodeId x = rng() % 12;
        const double r = static_cast<double>(rng() % 60);
        const double lambda = 5.0;
        double inner = 0.0;
        double outer = 0.0;
        for (NodeId y = 0; y < 12; ++y) {
            if (dist[x][y] <= r) inner += inst.weights[y];
            if (dist[x][y] <= lambda * r) outer += inst.weights[y];
        }
        const double v = value_wt(inst, x, r);
        EXPECT_LE(inner * std::pow(r, inst.z) / 3.0, v);
        EXPECT_LE(v, outer * 3.0 * std::pow(r, inst.z));
    }
}

TEST(SolveStatic, PathPicksMiddle) {
    const auto sol = solve_static(path3());
    ASSERT_EQ(sol.centers.size(), 1u);
    EXPECT_EQ(sol.centers[0], 1u);
    EXPECT_EQ(sol.cost, 2.0);
}

TEST(SolveStatic, CycleWithTwoCenters) { EXPECT_EQ(solve_static(cycle4(2)).cost, 2.0); }

TEST(SolveStatic, EnoughCentersForEveryNode) {
    const auto sol = solve_static(cycle4(4));
    EXPECT_EQ(sol.cost, 0.0);
    EXPECT_EQ(sol.centers.size(), 4u);
}

TEST(SolveStatic, MoreWeightedComponentsThanCenters) {
    auto inst = unit_instance(4, {{0, 1, 1}, {2, 3, 1}}, 1);
    const auto sol = solve_static(inst);
    EXPECT_TRUE(sol.infeasible);
    EXPECT_EQ(sol.cost, kInfinity);
}

TEST(SolveStatic, ZeroWeightComponentDoesNotCount) {
    auto inst = unit_instance(4, {{0, 1, 1}, {2, 3, 1}}, 1);
    inst.weights = {1, 1, 0, 0};
    const auto sol = solve_static(inst);
    EXPECT_FALSE(sol.infeasible);
    EXPECT_EQ(sol.cost, 1.0);
}

TEST(SolveStatic, WithinRatioOfBruteForce) {
    std::mt19937_64 rng(11);
    double worst = 1.0;
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 4 + rng() % 17;
        const std::size_t k = 1 + rng() % 3;
        auto inst = random_instance(n, k, trial % 2 ? 2.0 : 1.0, rng);
        const auto sol = solve_static(inst);
        const auto opt = brute_force_opt(instance_distances(inst), k, inst.z, inst.weights);
        ASSERT_LE(sol.centers.size(), k);
        EXPECT_GE(sol.cost, opt.opt * (1 - 1e-12));
        if (opt.opt > 0) worst = std::max(worst, sol.cost / opt.opt);
        if (opt.opt == 0) EXPECT_EQ(sol.cost, 0.0);
    }
    EXPECT_LE(worst, 5.0);
}

TEST(SolveStatic, GreedyAloneIsBounded) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t k = 1 + rng() % 3;
        auto inst = random_instance(14, k, 1.0, rng);
        SolverOptions opts;
        opts.local_search = false;
        const auto sol = solve_static(inst, opts);
        const auto opt = brute_force_opt(instance_distances(inst), k, 1.0, inst.weights);
        EXPECT_LE(sol.centers.size(), k);
        EXPECT_GE(sol.cost, opt.opt * (1 - 1e-12));
    }
}

TEST(SolveStatic, ScalingWeightsScalesCost) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto inst = random_instance(10, 2, 1.0, rng);
        auto doubled = inst;
        for (auto& w : doubled.weights) w *= 3;
        const auto a = brute_force_opt(instance_distances(inst), 2, 1.0, inst.weights);
        const auto b = brute_force_opt(instance_distances(doubled), 2, 1.0, doubled.weights);
        EXPECT_EQ(b.opt, 3 * a.opt);
        EXPECT_EQ(a.centers, b.centers);
        const auto sa = solve_static(inst);
        const auto sb = solve_static(doubled);
        EXPECT_EQ(sa.centers, sb.centers);
        EXPECT_DOUBLE_EQ(sb.cost, 3 * sa.cost);
    }
}

TEST(ImproveWithDistances, ArbitraryStartWithinRatio) {
    std::mt19937_64 rng(17);
    double worst = 1.0;
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 4 + rng() % 17;
        const std::size_t k = 1 + rng() % 3;
        auto inst = random_instance(n, k, trial % 2 ? 2.0 : 1.0, rng);
        const auto dist = instance_distances(inst);
        std::vector<NodeId> start;
        for (std::size_t j = 0; j < k; ++j) start.push_back(static_cast<NodeId>(rng() % n));
        const auto sol = improve_with_distances(dist, inst.weights, k, inst.z, start);
        const auto opt = brute_force_opt(dist, k, inst.z, inst.weights);
        ASSERT_EQ(sol.centers.size(), k);
        EXPECT_DOUBLE_EQ(sol.cost, instance_cost(dist, inst.weights, inst.z, sol.centers));
        if (opt.opt > 0) worst = std::max(worst, sol.cost / opt.opt);
    }
    EXPECT_LE(worst, 5.0);
}

TEST(ImproveWithDistances, StartIsCleanedAndToppedUp) {
    const auto inst = cycle4(2);
    const auto dist = instance_distances(inst);
    const NodeId start[] = {0, 0, 9};
    SolverOptions no_swaps;
    no_swaps.local_search = false;
    const auto sol = improve_with_distances(dist, inst.weights, 2, 1.0, start, no_swaps);
    // 2 is the only node at distance 2 from 0.
    EXPECT_EQ(sol.centers, (std::vector<NodeId>{0, 2}));
    EXPECT_EQ(sol.cost, 2.0);
}

TEST(ImproveWithDistances, LocalOptimumIsKept) {
    const auto inst = path3();
    const auto dist = instance_distances(inst);
    const NodeId start[] = {1};
    EXPECT_EQ(improve_with_distances(dist, inst.weights, 1, 1.0, start).centers, (std::vector<NodeId>{1}));
    const NodeId bad[] = {0};
    EXPECT_EQ(improve_with_distances(dist, inst.weights, 1, 1.0, bad).cost, 2.0);
    EXPECT_EQ(improve_with_distances(dist, inst.weights, 5, 1.0, bad).cost, 0.0);
}

TEST(ConnectComponents, ConnectedIsIdentity) {
    const auto padded = connect_components(cycle4(1));
    EXPECT_EQ(padded.instance.edges.size(), 4u);
    EXPECT_FALSE(padded.infeasible);
}

TEST(ConnectComponents, BridgeWeight) {
    auto inst = unit_instance(6, {{0, 1, 1}, {1, 2, 1}, {3, 4, 1}, {4, 5, 1}}, 2);
    const auto padded = connect_components(inst);
    ASSERT_EQ(padded.instance.edges.size(), 5u);
    const auto& bridge = padded.instance.edges.back();
    EXPECT_EQ(bridge.a, 0u);
    EXPECT_EQ(bridge.b, 3u);
    // N = 6, W = 1: 6 * (6 * 1) + 1
    EXPECT_EQ(bridge.w, 37.0);
    EXPECT_EQ(padded.weighted_components, 2u);
}

TEST(ConnectComponents, PaddedOptimumMatches) {
    auto inst = unit_instance(6, {{0, 1, 1}, {1, 2, 1}, {3, 4, 1}, {4, 5, 1}}, 2);
    const auto padded = connect_components(inst);
    const auto original = brute_force_opt(instance_distances(inst), 2, 1.0, inst.weights);
    const auto bridged = brute_force_opt(instance_distances(padded.instance), 2, 1.0, inst.weights);
    EXPECT_EQ(original.opt, 4.0);
    EXPECT_EQ(bridged.opt, 4.0);
    EXPECT_EQ(original.centers, bridged.centers);
    EXPECT_EQ(solve_static(inst).cost, 4.0);
}

TEST(InstanceJson, GoldenFile) {
    const auto inst = instance_from_json(read_file(std::string(DYNCLUST_TEST_DATA_DIR) + "/two_triangles.json"));
    EXPECT_EQ(inst.num_nodes, 6u);
    EXPECT_EQ(inst.edges.size(), 7u);
    EXPECT_EQ(inst.total_weight(), 9.0);
    const auto sol = solve_static(inst);
    EXPECT_EQ(sol.cost, 4.0);
    EXPECT_EQ(sol.centers, (std::vector<NodeId>{1, 4}));
}

TEST(InstanceJson, RoundTrip) {
    const auto inst = cycle4(2);
    const auto back = instance_from_json(instance_to_json(inst));
    EXPECT_EQ(back.num_nodes, 4u);
    EXPECT_EQ(back.edges.size(), 4u);
    EXPECT_EQ(back.k, 2u);
}

TEST(InstanceJson, RejectsMalformed) {
    EXPECT_THROW(instance_from_json("{\"nodes\": 3}"), std::invalid_argument);
    EXPECT_THROW(instance_from_json("not json"), std::invalid_argument);
    EXPECT_THROW(instance_from_json(R"({"nodes":[{"id":0,"weight":1}],"edges":[{"a":0,"b":1,"w":1}],"k":1,"z":1})"),
                 std::invalid_argument);
}

} // namespace
} // namespace dynclust
