#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dynclust/types.hpp"

namespace dynclust {

struct Edge {
    VertexId to;
    Distance weight;
};

/// Handle returned by DynGraph::insert_edge; `index` is the 0-based position
/// of the insertion in the update sequence.
struct UpdateToken {
    std::uint64_t index;
};

/// Weighted undirected multigraph that only grows by edge insertions.
///
/// Weights must lie in [1, max(n,2)^kWeightExponent]; anything else is
/// rejected at ingest. Parallel edges are kept and distances use the lightest.
class DynGraph {
public:
    static constexpr int kWeightExponent = 4;

    explicit DynGraph(std::size_t n);

    std::size_t num_vertices() const { return adjacency_.size(); }
    /// Number of insertions performed so far (parallel edges counted).
    std::size_t num_insertions() const { return insertions_; }
    /// Running maximum edge weight; 1 while the graph has no edges.
    Distance max_weight() const { return max_weight_; }
    Distance weight_cap() const { return weight_cap_; }

    std::span<const Edge> neighbors(VertexId v) const { return adjacency_[v]; }
    std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

    UpdateToken insert_edge(VertexId u, VertexId v, Distance w);

    /// Throws std::invalid_argument if (u, v, w) would be rejected by insert_edge.
    void validate_edge(VertexId u, VertexId v, Distance w) const;

private:
    std::vector<std::vector<Edge>> adjacency_;
    std::size_t insertions_ = 0;
    Distance max_weight_ = 1.0;
    Distance weight_cap_;
};

/// Result of a multi-source Dijkstra run from a zero-weight super-source.
/// `nearest[v]` is the source reached first, ties broken by the lowest id.
struct ShortestPathForest {
    std::vector<Distance> dist;
    std::vector<VertexId> nearest;
};

ShortestPathForest multi_source_dijkstra(const DynGraph& g, std::span<const VertexId> sources);

/// Exact dist(v, S). Throws std::invalid_argument when `sources` is empty.
Distance exact_distance(const DynGraph& g, std::span<const VertexId> sources, VertexId v);

/// Exact dist(., S) for every vertex.
std::vector<Distance> exact_distances(const DynGraph& g, std::span<const VertexId> sources);

/// Full distance matrix via n Dijkstra runs.
std::vector<std::vector<Distance>> all_pairs_distances(const DynGraph& g);

/// Component label per vertex; labels are numbered by lowest member id.
std::vector<std::uint32_t> connected_components(const DynGraph& g);

} // namespace dynclust
