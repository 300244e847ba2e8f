#include "dynclust/kz_static.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <utility>

#include "dynclust/cost.hpp"
#include "json.hpp"

namespace dynclust {
namespace {

using Adjacency = std::vector<std::vector<std::pair<NodeId, Distance>>>;

Adjacency build_adjacency(const WeightedInstance& inst) {
    Adjacency adj(inst.num_nodes);
    for (const auto& e : inst.edges) {
        adj[e.a].emplace_back(e.b, e.w);
        adj[e.b].emplace_back(e.a, e.w);
    }
    return adj;
}

std::vector<Distance> dijkstra(const Adjacency& adj, std::span<const NodeId> sources) {
    std::vector<Distance> dist(adj.size(), kInfinity);
    using Item = std::pair<Distance, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (NodeId s : sources) {
        dist[s] = 0.0;
        heap.emplace(0.0, s);
    }
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d != dist[u]) continue;
        for (auto [v, w] : adj[u]) {
            if (d + w < dist[v]) {
                dist[v] = d + w;
                heap.emplace(dist[v], v);
            }
        }
    }
    return dist;
}

/// Nodes sorted by distance from each node, with prefix weights, to answer
/// wt(Ball[x, r]) by binary search.
struct BallIndex {
    std::vector<std::vector<std::pair<Distance, NodeId>>> order;
    std::vector<std::vector<double>> prefix;

    BallIndex(const std::vector<std::vector<Distance>>& dist, std::span<const double> weights) {
        const std::size_t n = dist.size();
        order.resize(n);
        prefix.resize(n);
        for (NodeId x = 0; x < n; ++x) {
            auto& o = order[x];
            o.reserve(n);
            for (NodeId y = 0; y < n; ++y) {
                if (is_finite(dist[x][y])) o.emplace_back(dist[x][y], y);
            }
            std::sort(o.begin(), o.end());
            auto& p = prefix[x];
            p.resize(o.size());
            double acc = 0.0;
            for (std::size_t j = 0; j < o.size(); ++j) {
                acc += weights[o[j].second];
                p[j] = acc;
            }
        }
    }

    double ball_weight(NodeId x, Distance r) const {
        const auto& o = order[x];
        auto it = std::upper_bound(o.begin(), o.end(), std::pair{r, std::numeric_limits<NodeId>::max()});
        if (it == o.begin()) return 0.0;
        return prefix[x][static_cast<std::size_t>(it - o.begin()) - 1];
    }
};

std::vector<NodeId> greedy_seed(const std::vector<std::vector<Distance>>& dist, std::span<const double> weights,
                                std::size_t k, double z, double lambda) {
    const std::size_t n = dist.size();
    const BallIndex index(dist, weights);
    Distance min_positive = kInfinity;
    for (NodeId x = 0; x < n; ++x) {
        for (NodeId y = 0; y < n; ++y) {
            if (dist[x][y] > 0.0) min_positive = std::min(min_positive, dist[x][y]);
        }
    }

    std::vector<NodeId> centers;
    std::vector<std::uint8_t> is_center(n, 0);
    std::vector<Distance> to_centers(n, kInfinity);
    while (centers.size() < k) {
        double best_value = -1.0;
        NodeId best_x = 0;
        Distance best_r = 0.0;
        for (NodeId x = 0; x < n; ++x) {
            if (is_center[x]) continue;
            const Distance limit = centers.empty() ? kInfinity : to_centers[x] / lambda;
            const auto& o = index.order[x];
            for (std::size_t j = 0; j < o.size(); ++j) {
                const Distance r = o[j].first;
                if (r > limit) break;
                if (j + 1 < o.size() && o[j + 1].first == r) continue;
                const double value = index.prefix[x][j] * cost_term(r, z);
                if (value > best_value) {
                    best_value = value;
                    best_x = x;
                    best_r = r;
                }
            }
        }
        if (best_value <= 0.0) {
            // No ball carries value: take the weighted farthest node instead.
            double far = -1.0;
            for (NodeId x = 0; x < n; ++x) {
                if (is_center[x]) continue;
                const double score = weights[x] * (is_finite(to_centers[x]) ? to_centers[x] : 1e300);
                if (score > far) {
                    far = score;
                    best_x = x;
                }
            }
            best_r = 0.0;
        }

        // Walk down to the heaviest child ball until the radius is below
        // every positive distance.
        NodeId cur = best_x;
        Distance r = best_r;
        while (r / lambda >= min_positive) {
            const Distance child = r / lambda;
            NodeId next = cur;
            double heaviest = -1.0;
            for (const auto& [d, y] : index.order[cur]) {
                if (d > r) break;
                if (is_center[y]) continue;
                const double wb = index.ball_weight(y, child);
                if (wb > heaviest || (wb == heaviest && y < next)) {
                    heaviest = wb;
                    next = y;
                }
            }
            cur = next;
            r = child;
        }
        centers.push_back(cur);
        is_center[cur] = 1;
        for (NodeId v = 0; v < n; ++v) to_centers[v] = std::min(to_centers[v], dist[cur][v]);
    }
    return centers;
}

void local_search(const std::vector<std::vector<Distance>>& dist, std::span<const double> weights, double z,
                  std::vector<NodeId>& centers, std::size_t max_rounds) {
    const std::size_t n = dist.size();
    std::vector<std::uint8_t> is_center(n, 0);
    for (NodeId c : centers) is_center[c] = 1;

    std::vector<std::vector<double>> term(n, std::vector<double>(n));
    for (NodeId x = 0; x < n; ++x)
        for (NodeId y = 0; y < n; ++y) term[x][y] = cost_term(dist[x][y], z);

    std::vector<double> first(n);
    std::vector<double> second(n);
    std::vector<std::size_t> owner(n);
    auto refresh = [&] {
        double total = 0.0;
        for (NodeId v = 0; v < n; ++v) {
            first[v] = kInfinity;
            second[v] = kInfinity;
            owner[v] = 0;
            for (std::size_t j = 0; j < centers.size(); ++j) {
                const double d = term[centers[j]][v];
                if (d < first[v]) {
                    second[v] = first[v];
                    first[v] = d;
                    owner[v] = j;
                } else if (d < second[v]) {
                    second[v] = d;
                }
            }
            if (weights[v] > 0.0) total += weights[v] * first[v];
        }
        return total;
    };

    double current = refresh();
    for (std::size_t round = 0; round < max_rounds; ++round) {
        double best = current;
        std::size_t best_slot = 0;
        NodeId best_in = 0;
        bool found = false;
        for (std::size_t j = 0; j < centers.size(); ++j) {
            for (NodeId x = 0; x < n; ++x) {
                if (is_center[x]) continue;
                double total = 0.0;
                for (NodeId v = 0; v < n && total < best; ++v) {
                    if (weights[v] == 0.0) continue;
                    const double kept = owner[v] == j ? second[v] : first[v];
                    total += weights[v] * std::min(kept, term[x][v]);
                }
                // Require a relative gain so float noise cannot cycle.
                if (total < best && total < current * (1.0 - 1e-12)) {
                    best = total;
                    best_slot = j;
                    best_in = x;
                    found = true;
                }
            }
        }
        if (!found) break;
        is_center[centers[best_slot]] = 0;
        centers[best_slot] = best_in;
        is_center[best_in] = 1;
        current = refresh();
    }
}

} // namespace

void WeightedInstance::validate() const {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (!(z >= 1.0)) throw std::invalid_argument("z must be >= 1");
    if (weights.size() != num_nodes) throw std::invalid_argument("weights must have one entry per node");
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("node weights must be nonnegative");
    }
    for (const auto& e : edges) {
        if (e.a >= num_nodes || e.b >= num_nodes) throw std::invalid_argument("edge endpoint out of range");
        if (!(e.w > 0.0) || !std::isfinite(e.w)) throw std::invalid_argument("edge weights must be positive");
    }
}

double WeightedInstance::total_weight() const { return std::accumulate(weights.begin(), weights.end(), 0.0); }

Distance WeightedInstance::max_edge_weight() const {
    Distance w = 1.0;
    for (const auto& e : edges) w = std::max(w, e.w);
    return w;
}

std::vector<std::vector<Distance>> instance_distances(const WeightedInstance& inst) {
    const auto adj = build_adjacency(inst);
    std::vector<std::vector<Distance>> out(inst.num_nodes);
    for (NodeId x = 0; x < inst.num_nodes; ++x) {
        const NodeId src[] = {x};
        out[x] = dijkstra(adj, src);
    }
    return out;
}

std::vector<Distance> instance_distances_from(const WeightedInstance& inst, NodeId source) {
    const NodeId src[] = {source};
    return dijkstra(build_adjacency(inst), src);
}

double value_wt(const WeightedInstance& inst, NodeId x, Distance r) {
    if (!(r >= 0.0)) throw std::invalid_argument("radius must be nonnegative");
    const auto dist = instance_distances_from(inst, x);
    double ball = 0.0;
    for (NodeId y = 0; y < inst.num_nodes; ++y) {
        if (dist[y] <= r) ball += inst.weights[y];
    }
    return ball * cost_term(r, inst.z);
}

double instance_cost(const WeightedInstance& inst, std::span<const NodeId> centers) {
    if (centers.empty()) return inst.total_weight() > 0.0 ? kInfinity : 0.0;
    const auto dist = dijkstra(build_adjacency(inst), centers);
    double total = 0.0;
    for (NodeId x = 0; x < inst.num_nodes; ++x) {
        if (inst.weights[x] > 0.0) total += inst.weights[x] * cost_term(dist[x], inst.z);
    }
    return total;
}

double instance_cost(const std::vector<std::vector<Distance>>& dist, std::span<const double> weights, double z,
                     std::span<const NodeId> centers) {
    double total = 0.0;
    for (NodeId x = 0; x < dist.size(); ++x) {
        if (weights[x] == 0.0) continue;
        Distance d = kInfinity;
        for (NodeId c : centers) d = std::min(d, dist[c][x]);
        total += weights[x] * cost_term(d, z);
    }
    return total;
}

std::vector<std::uint32_t> instance_components(const WeightedInstance& inst) {
    constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
    const auto adj = build_adjacency(inst);
    std::vector<std::uint32_t> label(inst.num_nodes, kUnset);
    std::uint32_t next = 0;
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < inst.num_nodes; ++s) {
        if (label[s] != kUnset) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const NodeId u = stack.back();
            stack.pop_back();
            for (auto [v, w] : adj[u]) {
                if (label[v] == kUnset) {
                    label[v] = next;
                    stack.push_back(v);
                }
            }
        }
        ++next;
    }
    return label;
}

PaddedInstance connect_components(const WeightedInstance& inst) {
    inst.validate();
    PaddedInstance out{inst, 0, false, 0.0};
    const auto label = instance_components(inst);
    const std::uint32_t count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<NodeId> rep(count, std::numeric_limits<NodeId>::max());
    std::vector<std::uint8_t> weighted(count, 0);
    for (NodeId x = 0; x < inst.num_nodes; ++x) {
        rep[label[x]] = std::min(rep[label[x]], x);
        if (inst.weights[x] > 0.0) weighted[label[x]] = 1;
    }
    out.weighted_components = static_cast<std::size_t>(std::count(weighted.begin(), weighted.end(), 1));
    out.infeasible = out.weighted_components > inst.k;
    if (count <= 1) return out;
    const double big_n = std::max(static_cast<double>(inst.num_nodes), inst.total_weight());
    out.padding_weight = big_n * (big_n * inst.max_edge_weight()) + 1.0;
    for (std::uint32_t c = 1; c < count; ++c) out.instance.edges.push_back({rep[c - 1], rep[c], out.padding_weight});
    return out;
}

Solution solve_with_distances(const std::vector<std::vector<Distance>>& dist, std::span<const double> weights,
                              std::size_t k, double z, const SolverOptions& options) {
    const std::size_t n = dist.size();
    Solution sol;
    if (n == 0) {
        sol.cost = 0.0;
        return sol;
    }
    if (k >= n) {
        sol.centers.resize(n);
        std::iota(sol.centers.begin(), sol.centers.end(), NodeId{0});
    } else {
        sol.centers = greedy_seed(dist, weights, k, z, options.lambda);
        if (options.local_search) local_search(dist, weights, z, sol.centers, options.max_swap_rounds);
    }
    std::sort(sol.centers.begin(), sol.centers.end());
    sol.cost = instance_cost(dist, weights, z, sol.centers);
    return sol;
}

Solution improve_with_distances(const std::vector<std::vector<Distance>>& dist, std::span<const double> weights,
                                std::size_t k, double z, std::span<const NodeId> start,
                                const SolverOptions& options) {
    const std::size_t n = dist.size();
    if (k >= n) return solve_with_distances(dist, weights, k, z, options);
    Solution sol;
    std::vector<std::uint8_t> taken(n, 0);
    std::vector<Distance> to_centers(n, kInfinity);
    auto take = [&](NodeId c) {
        sol.centers.push_back(c);
        taken[c] = 1;
        for (NodeId v = 0; v < n; ++v) to_centers[v] = std::min(to_centers[v], dist[c][v]);
    };
    for (NodeId c : start) {
        if (c < n && !taken[c] && sol.centers.size() < k) take(c);
    }
    while (sol.centers.size() < k) {
        NodeId far = 0;
        double score = -1.0;
        for (NodeId v = 0; v < n; ++v) {
            if (taken[v]) continue;
            const double s = weights[v] * (is_finite(to_centers[v]) ? to_centers[v] : 1e300);
            if (s > score) {
                score = s;
                far = v;
            }
        }
        take(far);
    }
    if (options.local_search) local_search(dist, weights, z, sol.centers, options.max_swap_rounds);
    std::sort(sol.centers.begin(), sol.centers.end());
    sol.cost = instance_cost(dist, weights, z, sol.centers);
    return sol;
}

Solution solve_static(const WeightedInstance& inst, const SolverOptions& options) {
    inst.validate();
    auto padded = connect_components(inst);
    const bool disconnected = padded.instance.edges.size() != inst.edges.size();
    const auto dist = instance_distances(padded.instance);
    Solution sol = solve_with_distances(dist, inst.weights, inst.k, inst.z, options);
    if (disconnected) sol.cost = instance_cost(inst, sol.centers);
    if (padded.infeasible) {
        sol.infeasible = true;
        sol.cost = kInfinity;
    }
    return sol;
}

std::string instance_to_json(const WeightedInstance& inst) {
    nlohmann::json nodes = nlohmann::json::array();
    for (NodeId x = 0; x < inst.num_nodes; ++x) nodes.push_back({{"id", x}, {"weight", inst.weights[x]}});
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : inst.edges) edges.push_back({{"a", e.a}, {"b", e.b}, {"w", e.w}});
    return nlohmann::json{{"nodes", nodes}, {"edges", edges}, {"k", inst.k}, {"z", inst.z}}.dump(2);
}

WeightedInstance instance_from_json(const std::string& text) {
    WeightedInstance inst;
    try {
        const auto j = nlohmann::json::parse(text);
        const auto& nodes = j.at("nodes");
        inst.num_nodes = nodes.size();
        inst.weights.assign(inst.num_nodes, 0.0);
        for (const auto& node : nodes) {
            const auto id = node.at("id").get<std::size_t>();
            if (id >= inst.num_nodes) throw std::invalid_argument("node id out of range");
            inst.weights[id] = node.at("weight").get<double>();
        }
        for (const auto& e : j.at("edges")) {
            inst.edges.push_back({e.at("a").get<NodeId>(), e.at("b").get<NodeId>(), e.at("w").get<double>()});
        }
        inst.k = j.at("k").get<std::size_t>();
        inst.z = j.at("z").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed instance json: ") + e.what());
    }
    inst.validate();
    return inst;
}

} // namespace dynclust
