#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dynclust/types.hpp"

namespace dynclust {

using NodeId = std::uint32_t;

struct WeightedEdge {
    NodeId a;
    NodeId b;
    Distance w;
};

/// Vertex- and edge-weighted graph on nodes 0..num_nodes-1 with clustering
/// parameters. `weights[x]` is wt(x) (a nonnegative integer stored as double).
struct WeightedInstance {
    std::size_t num_nodes = 0;
    std::vector<WeightedEdge> edges;
    std::vector<double> weights;
    std::size_t k = 1;
    double z = 1.0;

    /// Throws std::invalid_argument on bad ids, non-positive edge weights,
    /// negative node weights, a weight vector of the wrong size, k < 1 or z < 1.
    void validate() const;
    double total_weight() const;
    Distance max_edge_weight() const;
};

struct Solution {
    std::vector<NodeId> centers;
    /// sum_x wt(x) * dist(x, centers)^z on the instance; infinity if some
    /// positive-weight node cannot reach a center.
    double cost = kInfinity;
    /// More positive-weight components than k: no finite solution exists.
    bool infeasible = false;
};

/// Exact shortest-path distances between all node pairs of the instance.
std::vector<std::vector<Distance>> instance_distances(const WeightedInstance& inst);

/// Single-source distances on the instance.
std::vector<Distance> instance_distances_from(const WeightedInstance& inst, NodeId source);

/// wt(Ball[x, r]) * r^z.
double value_wt(const WeightedInstance& inst, NodeId x, Distance r);

/// sum_x wt(x) * dist(x, centers)^z.
double instance_cost(const WeightedInstance& inst, std::span<const NodeId> centers);
double instance_cost(const std::vector<std::vector<Distance>>& dist, std::span<const double> weights, double z,
                     std::span<const NodeId> centers);

/// Component label per node, numbered by lowest member.
std::vector<std::uint32_t> instance_components(const WeightedInstance& inst);

struct PaddedInstance {
    WeightedInstance instance;
    std::size_t weighted_components = 0;
    bool infeasible = false;
    Distance padding_weight = 0.0;
};

/// Chains the components (in order of their lowest node) with edges of weight
/// N * (N * W) + 1, where N = max(num_nodes, total weight) and W is the
/// largest edge weight. Sets `infeasible` when more than k components carry
/// positive weight; the instance is padded regardless.
PaddedInstance connect_components(const WeightedInstance& inst);

struct SolverOptions {
    /// Separation factor of the greedy ball selection.
    double lambda = 5.0;
    bool local_search = true;
    std::size_t max_swap_rounds = 200;
};

/// Greedy ball-value seeding followed by weighted single-swap local search.
/// Disconnected instances with at most k weighted components are padded
/// first; with more the result is marked infeasible with infinite cost.
Solution solve_static(const WeightedInstance& inst, const SolverOptions& options = {});

/// Same, given precomputed all-pairs distances of a connected instance.
Solution solve_with_distances(const std::vector<std::vector<Distance>>& dist, std::span<const double> weights,
                              std::size_t k, double z, const SolverOptions& options = {});

/// Local search only, started from `start` (out-of-range and repeated nodes
/// dropped). A start with fewer than min(k, n) centers is topped up with the
/// node of largest weighted distance to the current centers.
Solution improve_with_distances(const std::vector<std::vector<Distance>>& dist, std::span<const double> weights,
                                std::size_t k, double z, std::span<const NodeId> start,
                                const SolverOptions& options = {});

std::string instance_to_json(const WeightedInstance& inst);
/// Throws std::invalid_argument on malformed input.
WeightedInstance instance_from_json(const std::string& text);

} // namespace dynclust
