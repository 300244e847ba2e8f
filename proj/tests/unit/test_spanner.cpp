#include <gtest/gtest.h>

#include <map>
#include <random>

#include "dynclust/spanner.hpp"

namespace dynclust {
namespace {

std::vector<WeightedEdge> complete_random(std::size_t n, std::mt19937_64& rng, int max_w = 100) {
    std::uniform_int_distribution<int> w(1, max_w);
    std::vector<WeightedEdge> out;
    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b) out.push_back({a, b, static_cast<double>(w(rng))});
    return out;
}

std::vector<std::vector<Distance>> apsp(std::size_t n, const std::vector<WeightedEdge>& edges) {
    WeightedInstance inst;
    inst.num_nodes = n;
    inst.edges = edges;
    inst.weights.assign(n, 1.0);
    return instance_distances(inst);
}

// Subgraph property and all-pairs stretch against the base edge set.
void expect_contract(const DynamicSpanner& sp, const std::map<std::pair<NodeId, NodeId>, Distance>& base) {
    std::vector<WeightedEdge> h;
    for (auto [ab, w] : base) h.push_back({ab.first, ab.second, w});
    const auto sub = sp.edges();
    for (const auto& e : sub) {
        const auto it = base.find({std::min(e.a, e.b), std::max(e.a, e.b)});
        ASSERT_NE(it, base.end());
        EXPECT_EQ(it->second, e.w);
    }
    const auto dh = apsp(sp.num_nodes(), h);
    const auto ds = apsp(sp.num_nodes(), sub);
    for (NodeId a = 0; a < sp.num_nodes(); ++a) {
        for (NodeId b = 0; b < sp.num_nodes(); ++b) {
            if (!is_finite(dh[a][b])) {
                EXPECT_FALSE(is_finite(ds[a][b]));
                continue;
            }
            ASSERT_LE(dh[a][b], ds[a][b]);
            ASSERT_LE(ds[a][b], sp.stretch_bound() * dh[a][b] * (1 + 1e-12)) << a << " " << b;
        }
    }
}

std::map<std::pair<NodeId, NodeId>, Distance> as_map(const std::vector<WeightedEdge>& edges) {
    std::map<std::pair<NodeId, NodeId>, Distance> out;
    for (const auto& e : edges) out[{std::min(e.a, e.b), std::max(e.a, e.b)}] = e.w;
    return out;
}

TEST(Spanner, TwoNodesKeepEverything) {
    const std::vector<WeightedEdge> edges{{0, 1, 7.0}};
    DynamicSpanner sp(2, edges);
    EXPECT_EQ(sp.num_edges(), 1u);
}

TEST(Spanner, LambdaOneKeepsEverything) {
    std::mt19937_64 rng(1);
    const auto edges = complete_random(12, rng);
    SpannerOptions opts;
    opts.lambda = 1;
    DynamicSpanner sp(12, edges, opts);
    EXPECT_EQ(sp.num_edges(), edges.size());
}

TEST(Spanner, StretchOnRandomInstances) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        std::mt19937_64 rng(seed);
        const auto edges = complete_random(32, rng);
        for (bool det : {false, true}) {
            for (std::size_t lambda : {2u, 3u}) {
                SpannerOptions opts;
                opts.lambda = lambda;
                opts.deterministic = det;
                opts.seed = seed;
                DynamicSpanner sp(32, edges, opts);
                expect_contract(sp, as_map(edges));
                EXPECT_LT(sp.num_edges(), edges.size());
                EXPECT_LE(sp.size_constant(32.0 * 100.0), 8.0);
            }
        }
    }
}

TEST(Spanner, ClassStableDecreaseChangesNothing) {
    // Class of 10 and 9.5 under base 1.25 is 10 (1.25^10 = 9.31).
    const std::vector<WeightedEdge> edges{{0, 1, 10.0}, {1, 2, 10.0}, {0, 2, 10.0}};
    SpannerOptions opts;
    opts.deterministic = true;
    DynamicSpanner sp(3, edges, opts);
    ASSERT_EQ(sp.num_edges(), 2u);
    EXPECT_TRUE(sp.decrease(1, 2, 9.5).empty());
    const auto d = sp.decrease(0, 1, 9.5);
    ASSERT_EQ(d.updated.size(), 1u);
    EXPECT_EQ(d.updated[0].w, 9.5);
}

TEST(Spanner, RejectsNonDecrease) {
    const std::vector<WeightedEdge> edges{{0, 1, 4.0}};
    DynamicSpanner sp(2, edges);
    EXPECT_THROW(sp.decrease(0, 1, 4.0), std::invalid_argument);
    EXPECT_THROW(sp.decrease(0, 1, 5.0), std::invalid_argument);
    EXPECT_THROW(sp.decrease(0, 0, 1.0), std::invalid_argument);
    EXPECT_THROW(sp.decrease(0, 1, 0.5), std::invalid_argument);
}

TEST(Spanner, DecreasesAcrossClasses) {
    for (bool det : {false, true}) {
        std::mt19937_64 rng(42);
        auto edges = complete_random(16, rng, 1000);
        SpannerOptions opts;
        opts.deterministic = det;
        DynamicSpanner sp(16, edges, opts);
        auto base = as_map(edges);
        for (int step = 0; step < 150; ++step) {
            auto it = base.begin();
            std::advance(it, static_cast<long>(rng() % base.size()));
            if (it->second <= 1.0) continue;
            const double w = std::max(1.0, std::floor(it->second * std::uniform_real_distribution<>(0.1, 0.95)(rng)));
            if (!(w < it->second)) continue;
            sp.decrease(it->first.first, it->first.second, w);
            it->second = w;
            expect_contract(sp, base);
        }
        EXPECT_EQ(sp.repeated_class_insertions(), 0u);
    }
}

TEST(Spanner, DecreaseInsertsAbsentPair) {
    const std::vector<WeightedEdge> edges{{0, 1, 4.0}};
    DynamicSpanner sp(3, edges);
    const auto d = sp.decrease(1, 2, 3.0);
    ASSERT_EQ(d.added.size(), 1u);
    EXPECT_EQ(sp.num_edges(), 2u);
}

TEST(Spanner, RestartOnLargerNodeSet) {
    std::mt19937_64 rng(9);
    auto edges = complete_random(10, rng);
    DynamicSpanner sp(10, edges);
    EXPECT_EQ(sp.restarts(), 0u);
    for (NodeId a = 0; a < 10; ++a) edges.push_back({a, 10, static_cast<double>(1 + rng() % 100)});
    sp.restart(11, edges);
    EXPECT_EQ(sp.restarts(), 1u);
    EXPECT_EQ(sp.num_nodes(), 11u);
    expect_contract(sp, as_map(edges));
    sp.restart(11, edges);
    EXPECT_EQ(sp.restarts(), 2u);
    expect_contract(sp, as_map(edges));
}

TEST(Spanner, DeterministicModeIsReproducible) {
    std::mt19937_64 rng(4);
    const auto edges = complete_random(20, rng);
    SpannerOptions opts;
    opts.seed = 77;
    DynamicSpanner a(20, edges, opts);
    DynamicSpanner b(20, edges, opts);
    EXPECT_EQ(a.num_edges(), b.num_edges());
    EXPECT_EQ(a.edges().size(), b.edges().size());
}

} // namespace
} // namespace dynclust
