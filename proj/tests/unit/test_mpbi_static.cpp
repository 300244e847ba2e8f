#include <gtest/gtest.h>

#include <cmath>

#include "dynclust/cost.hpp"
#include "dynclust/generators.hpp"
#include "dynclust/mpbi_static.hpp"
#include "json.hpp"
#include "test_graphs.hpp"

namespace dynclust {
namespace {

using testing::from_stream;
using testing::unit_cycle;
using testing::unit_path;

TEST(CoveringRadius, SourcesCoverThemselves) {
    auto g = unit_path(4);
    VertexSet S(4, {0, 1});
    EXPECT_EQ(smallest_covering_radius(g, S, VertexSet::full(4), 0.5, 0.1), 1.0);
}

TEST(CoveringRadius, PathNeedsOneHop) {
    auto g = unit_path(4);
    EXPECT_EQ(smallest_covering_radius(g, VertexSet(4, {0}), VertexSet::full(4), 0.5, 0.5), 1.0);
}

TEST(CoveringRadius, UnreachableMassIsInfinite) {
    auto g = testing::make_graph(6, {{0, 1, 1.0}, {3, 4, 1.0}});
    EXPECT_EQ(smallest_covering_radius(g, VertexSet(6, {0}), VertexSet::full(6), 0.5, 0.1), kInfinity);
}

TEST(CoveringRadius, RoundsUpToPower) {
    auto g = testing::make_graph(3, {{0, 1, 5.0}, {1, 2, 5.0}});
    // quota 2 of 3: second-smallest distance is 5 -> 1.5^4
    EXPECT_EQ(smallest_covering_radius(g, VertexSet(3, {0}), VertexSet::full(3), 0.5, 0.5), 5.0625);
}

TEST(NuStar, ZeroWhenSourcesSuffice) {
    auto g = unit_path(4);
    EXPECT_EQ(nu_star(g, VertexSet(4, {0, 1}), VertexSet::full(4), 0.5), 0.0);
}

TEST(NuStar, PathExample) {
    auto g = unit_path(4);
    EXPECT_EQ(nu_star(g, VertexSet(4, {0}), VertexSet::full(4), 0.5), 1.0);
}

TEST(NuStar, SandwichesRoundedRadius) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto g = from_stream(gnm_stream(30, 70, 50, seed));
        VertexSet S(30, {static_cast<VertexId>(seed % 30), static_cast<VertexId>((seed * 7) % 30)});
        const auto U = VertexSet::full(30) - VertexSet(30, {1, 2, 3});
        const double eps = 0.1;
        const Distance star = nu_star(g, S, U, 0.25);
        const Distance tilde = smallest_covering_radius(g, S, U, 0.25, eps);
        EXPECT_LE(star, tilde);
        // Powers start at (1+eps)^0 = 1, so a zero nu* still yields 1.
        EXPECT_LE(tilde, std::max(1.0, (1 + eps) * (1 + eps) * star));
    }
}

TEST(MuStar, ZeroWhenEveryVertexCanBeACenter) {
    auto g = unit_cycle(4);
    EXPECT_EQ(mu_star_bruteforce(g, VertexSet::full(4), 4, 1.0), 0.0);
    EXPECT_EQ(mu_star_bruteforce(g, VertexSet(4, {0, 2}), 2, 0.5), 0.0);
}

TEST(MuStar, FourCycle) {
    // From any vertex: 0, 1, 1, 2; half of U needs radius 1.
    EXPECT_EQ(mu_star_bruteforce(unit_cycle(4), VertexSet::full(4), 1, 0.5), 1.0);
}

TEST(MuStar, BudgetEnforced) {
    EXPECT_THROW(mu_star_bruteforce(unit_cycle(40), VertexSet::full(40), 3, 0.5, 1000), CapabilityError);
}

TEST(RunStatic, SmallGraphStopsAtLevelZero) {
    auto g = unit_path(10);
    MpbiParams p;
    auto run = run_static(g, p);
    EXPECT_EQ(run.t, 0u);
    EXPECT_EQ(run.S, VertexSet::full(10));
    EXPECT_EQ(assignment_cost(g, run.sigma, 1.0), 0.0);
    EXPECT_EQ(clustering_cost(g, run.S.to_vector(), 1.0), 0.0);
}

TEST(RunStatic, LevelBoundAt1024) {
    EXPECT_EQ(static_cast<int>(std::floor(level_bound(1024, 0.25))), 25);
    auto g = from_stream(gnm_stream(1024, 4096, 100, 5));
    MpbiParams p;
    auto run = run_static(g, p);
    EXPECT_LE(static_cast<double>(run.t), level_bound(1024, 0.25));
}

TEST(RunStatic, EmptyGraphReportsInfiniteOpt) {
    // About 40 sampled vertices cannot cover a quarter of 1000 at distance 0.
    DynGraph g(1000);
    MpbiParams p;
    auto run = run_static(g, p);
    EXPECT_TRUE(run.opt_infinite);
    EXPECT_EQ(run.t, 0u);
    EXPECT_EQ(run.S, VertexSet::full(1000));
}

void check_static_invariants(const DynGraph& g, const StaticRun& run, const MpbiParams& p) {
    const RadiusScale scale(p.eps);
    const auto n = g.num_vertices();
    ASSERT_EQ(run.levels.size(), run.t + 1);
    VertexSet seen(n);
    double bound = 0.0;
    for (std::size_t i = 0; i <= run.t; ++i) {
        const auto& l = run.levels[i];
        EXPECT_TRUE(l.B.is_subset_of(l.U));
        EXPECT_FALSE(seen.intersects(l.B));
        seen |= l.B;
        if (i > 0) {
            EXPECT_LE(run.levels[i - 1].nu, l.nu);
        }
        if (i < run.t) {
            const auto& next = run.levels[i + 1];
            EXPECT_EQ(next.U, l.U - l.B);
            EXPECT_LE(static_cast<double>(next.U.size()), (1 - p.beta) * static_cast<double>(l.U.size()) + 1e-9);
            if (i > 0) {
                EXPECT_EQ(l.nu, std::max(l.nu_tilde, run.levels[i - 1].nu));
            }
            const Distance radius = scale.value(l.nu);
            bound += static_cast<double>(l.B.size()) * cost_term(radius, p.z);
            l.B.for_each([&](VertexId v) {
                const VertexId c[] = {run.sigma[v]};
                EXPECT_LE(exact_distance(g, c, v), radius);
                EXPECT_TRUE(run.S.contains(run.sigma[v]));
            });
        } else {
            l.U.for_each([&](VertexId v) { EXPECT_EQ(run.sigma[v], v); });
        }
    }
    EXPECT_EQ(seen, VertexSet::full(n));
    EXPECT_LE(static_cast<double>(run.t), level_bound(n, p.beta));
    EXPECT_LE(clustering_cost(g, run.S.to_vector(), p.z), bound + 1e-9);
}

TEST(RunStatic, InvariantsOnRandomGraphs) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto g = from_stream(gnm_stream(300, 1500, 30, seed));
        MpbiParams p;
        p.k = 2;
        p.seed = seed;
        p.z = seed % 2 == 0 ? 2.0 : 1.0;
        auto run = run_static(g, p);
        ASSERT_FALSE(run.opt_infinite);
        EXPECT_GT(run.t, 0u);
        check_static_invariants(g, run, p);
    }
}

TEST(RunStatic, OriginalRadiiOptionSkipsClamp) {
    auto g = from_stream(gnm_stream(300, 1500, 30, 3));
    MpbiParams p;
    auto run = run_static(g, p, StaticOptions{false});
    for (std::size_t i = 0; i < run.t; ++i) EXPECT_EQ(run.levels[i].nu, run.levels[i].nu_tilde);
}

TEST(RunStatic, DeterministicForSeed) {
    auto g = from_stream(gnm_stream(200, 800, 30, 9));
    MpbiParams p;
    p.seed = 42;
    auto a = run_static(g, p);
    auto b = run_static(g, p);
    EXPECT_EQ(a.S, b.S);
    EXPECT_EQ(static_trace_json(a), static_trace_json(b));
}

TEST(RunStatic, TraceHasOneEntryPerLevel) {
    auto g = from_stream(gnm_stream(200, 800, 30, 9));
    auto run = run_static(g, MpbiParams{});
    auto trace = nlohmann::json::parse(static_trace_json(run));
    ASSERT_EQ(trace.size(), run.t + 1);
    EXPECT_EQ(trace[0]["U"], 200);
    EXPECT_TRUE(trace[0].contains("nu_tilde"));
}

TEST(MpbiParams, Validation) {
    MpbiParams p;
    EXPECT_NO_THROW(p.validate());
    p.alpha = 0.5;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = MpbiParams{};
    p.beta = 1.0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = MpbiParams{};
    p.k = 0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = MpbiParams{};
    p.z = 0.5;
    EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(BallQuota, ToleratesFloatingError) {
    EXPECT_EQ(ball_quota(0.25, 4), 1u);
    EXPECT_EQ(ball_quota(0.25, 5), 2u);
    EXPECT_EQ(ball_quota(0.1, 30), 3u);
    EXPECT_EQ(ball_quota(0.3, 10), 3u);
}

} // namespace
} // namespace dynclust
