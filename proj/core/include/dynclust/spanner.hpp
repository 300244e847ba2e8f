#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dynclust/kz_static.hpp"
#include "dynclust/radius.hpp"

namespace dynclust {

struct SpannerOptions {
    /// Stretch parameter; each weight class gets a (2 lambda - 1)-spanner.
    std::size_t lambda = 2;
    /// Base of the weight classes: class j holds weights in [(1+eps)^j, (1+eps)^{j+1}).
    double eps = 0.25;
    /// Greedy per-class construction instead of randomized clustering.
    bool deterministic = false;
    std::uint64_t seed = 1;

    /// Throws std::invalid_argument unless lambda >= 1 and eps > 0.
    void validate() const;
};

/// Edges of the spanner that appeared or changed weight.
struct SpannerDelta {
    std::vector<WeightedEdge> added;
    std::vector<WeightedEdge> updated;

    std::size_t size() const { return added.size() + updated.size(); }
    bool empty() const { return size() == 0; }
};

/// Spanner of a weighted graph H on nodes 0..num_nodes-1 under edge-weight
/// decreases. A decrease on an absent pair inserts it. Edge weights must be
/// at least 1.
///
/// Between restarts spanner edges are never dropped: a spanner edge whose
/// weight falls into a lighter class keeps its links in the old class and
/// joins the new one.
class DynamicSpanner {
public:
    DynamicSpanner(std::size_t num_nodes, std::span<const WeightedEdge> edges, const SpannerOptions& options = {});

    /// Throws std::invalid_argument unless w is below the current weight of
    /// (x, y) (any finite weight if the pair is absent) and at least 1.
    SpannerDelta decrease(NodeId x, NodeId y, Distance w);
    SpannerDelta decrease_batch(std::span<const WeightedEdge> batch);

    /// Fresh construction over a (possibly larger) node set.
    void restart(std::size_t num_nodes, std::span<const WeightedEdge> edges);

    std::vector<WeightedEdge> edges() const;
    std::size_t num_edges() const { return in_spanner_.size(); }
    std::size_t num_nodes() const { return num_nodes_; }
    /// Edges of H currently tracked.
    std::size_t num_base_edges() const { return weight_.size(); }
    std::size_t restarts() const { return restarts_; }
    std::size_t num_classes() const { return classes_.size(); }
    const SpannerOptions& options() const { return options_; }

    /// (2 lambda - 1)(1 + eps).
    double stretch_bound() const;
    /// |edges| / (|P|^{1+1/lambda} log(nW) log|P|) with logs base 2 and
    /// arguments clamped to at least 2.
    double size_constant(double nW) const;

    /// Times an (edge, class) pair was inserted again before a restart; the
    /// decrease-only workload keeps this at zero.
    std::size_t repeated_class_insertions() const { return repeated_class_insertions_; }

private:
    struct WeightClass {
        std::unordered_set<std::uint64_t> members;
        std::vector<std::vector<NodeId>> adjacency;
    };

    static std::uint64_t key(NodeId a, NodeId b);
    static NodeId first(std::uint64_t k) { return static_cast<NodeId>(k >> 32); }
    static NodeId second(std::uint64_t k) { return static_cast<NodeId>(k & 0xffffffffu); }

    void build_all();
    void build_class(std::int32_t c);
    std::vector<std::uint64_t> clustering_spanner(const std::vector<std::uint64_t>& sorted);
    std::vector<std::uint64_t> greedy_spanner(const std::vector<std::uint64_t>& sorted);
    bool within_hops(const std::vector<std::vector<NodeId>>& adjacency, NodeId from, NodeId to,
                     std::size_t hops) const;
    void link(WeightClass& cls, std::uint64_t k);
    void record_class_insertion(std::uint64_t k, std::int32_t c);

    std::size_t num_nodes_ = 0;
    SpannerOptions options_;
    RadiusScale scale_;
    std::mt19937_64 rng_;
    std::unordered_map<std::uint64_t, Distance> weight_;
    std::unordered_set<std::uint64_t> in_spanner_;
    std::map<std::int32_t, WeightClass> classes_;
    std::set<std::pair<std::uint64_t, std::int32_t>> class_history_;
    std::size_t restarts_ = 0;
    std::size_t repeated_class_insertions_ = 0;

    // Scratch for bounded BFS.
    mutable std::vector<std::uint32_t> seen_;
    mutable std::uint32_t stamp_ = 0;
};

} // namespace dynclust
