#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dynclust/graph.hpp"
#include "dynclust/types.hpp"
#include "dynclust/vertex_set.hpp"

namespace dynclust {

/// Incremental (1+eps)-approximate distances to a growing source set.
///
/// Internally keeps exact tentative distances (decrease-only Dijkstra with a
/// virtual super-source). The published estimate of a vertex is refreshed
/// only when it exceeds (1+eps) times the exact value, so
///
///   dist(v, S) <= estimate(v) <= (1+eps) * dist(v, S)
///
/// always holds and each estimate changes O(log_{1+eps} nW) times.
///
/// The oracle holds a reference to the graph; the graph must outlive it and
/// every edge must be inserted into the graph before insert_edge() is called.
class DistanceOracle {
public:
    /// Throws std::invalid_argument if `sources` is empty, contains an
    /// out-of-range id, or eps is outside (0, 1).
    DistanceOracle(const DynGraph& g, std::span<const VertexId> sources, double eps);

    double eps() const { return eps_; }
    const VertexSet& sources() const { return sources_; }

    Distance estimate(VertexId v) const { return published_[v]; }
    std::span<const Distance> estimates() const { return published_; }

    /// Source whose shortest path reaches v; dist(v, nearest(v)) <= estimate(v).
    /// kNoVertex while v is unreachable.
    VertexId nearest(VertexId v) const { return root_[v]; }

    /// Relax after (u, v, w) was added to the graph. Returns the vertices whose
    /// estimate decreased, in increasing id order.
    std::vector<VertexId> insert_edge(VertexId u, VertexId v, Distance w);

    /// Add sources. Already-present ids are ignored and counted.
    std::vector<VertexId> extend_sources(std::span<const VertexId> new_sources);

    /// Vertices reported by the most recent insert_edge/extend_sources call.
    const std::vector<VertexId>& last_changes() const { return last_changes_; }

    std::size_t ignored_sources() const { return ignored_sources_; }
    /// Total number of (vertex, update) estimate decreases since construction.
    std::size_t total_changes() const { return total_changes_; }

private:
    bool improves(Distance cand, VertexId cand_root, VertexId v) const;
    void propagate(std::vector<VertexId>& seeds);
    void publish(std::vector<VertexId>& touched);

    const DynGraph* graph_;
    double eps_;
    double slack_;
    VertexSet sources_;
    std::vector<Distance> exact_;
    std::vector<VertexId> root_;
    std::vector<Distance> published_;
    std::vector<VertexId> last_changes_;
    std::vector<std::uint8_t> touched_mark_;
    std::size_t ignored_sources_ = 0;
    std::size_t total_changes_ = 0;
};

} // namespace dynclust
