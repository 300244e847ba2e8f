#include "dynclust/graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <sstream>
#include <tuple>

namespace dynclust {

DynGraph::DynGraph(std::size_t n) {
    if (n == 0) throw std::invalid_argument("graph needs at least one vertex");
    adjacency_.resize(n);
    const double base = static_cast<double>(std::max<std::size_t>(n, 2));
    weight_cap_ = std::pow(base, kWeightExponent);
}

void DynGraph::validate_edge(VertexId u, VertexId v, Distance w) const {
    const auto n = num_vertices();
    if (u >= n || v >= n) {
        std::ostringstream msg;
        msg << "edge (" << u << ", " << v << ") references a vertex outside [0, " << n << ")";
        throw std::invalid_argument(msg.str());
    }
    if (u == v) {
        std::ostringstream msg;
        msg << "self-loop on vertex " << u;
        throw std::invalid_argument(msg.str());
    }
    if (!(w >= 1.0) || !(w <= weight_cap_)) {
        std::ostringstream msg;
        msg << "edge weight " << w << " outside [1, " << weight_cap_ << "]";
        throw std::invalid_argument(msg.str());
    }
}

UpdateToken DynGraph::insert_edge(VertexId u, VertexId v, Distance w) {
    validate_edge(u, v, w);
    adjacency_[u].push_back({v, w});
    adjacency_[v].push_back({u, w});
    max_weight_ = std::max(max_weight_, w);
    return UpdateToken{insertions_++};
}

ShortestPathForest multi_source_dijkstra(const DynGraph& g, std::span<const VertexId> sources) {
    const auto n = g.num_vertices();
    ShortestPathForest out{std::vector<Distance>(n, kInfinity), std::vector<VertexId>(n, kNoVertex)};

    // Keys are (distance, nearest source) so ties resolve to the lowest source id.
    using Item = std::tuple<Distance, VertexId, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (VertexId s : sources) {
        if (out.dist[s] > 0.0 || s < out.nearest[s]) {
            out.dist[s] = 0.0;
            out.nearest[s] = s;
            heap.emplace(0.0, s, s);
        }
    }
    while (!heap.empty()) {
        auto [d, root, u] = heap.top();
        heap.pop();
        if (d != out.dist[u] || root != out.nearest[u]) continue;
        for (const Edge& e : g.neighbors(u)) {
            const Distance nd = d + e.weight;
            if (nd < out.dist[e.to] || (nd == out.dist[e.to] && root < out.nearest[e.to])) {
                out.dist[e.to] = nd;
                out.nearest[e.to] = root;
                heap.emplace(nd, root, e.to);
            }
        }
    }
    return out;
}

std::vector<Distance> exact_distances(const DynGraph& g, std::span<const VertexId> sources) {
    if (sources.empty()) throw std::invalid_argument("source set must be nonempty");
    return multi_source_dijkstra(g, sources).dist;
}

Distance exact_distance(const DynGraph& g, std::span<const VertexId> sources, VertexId v) {
    if (v >= g.num_vertices()) throw std::invalid_argument("vertex out of range");
    return exact_distances(g, sources)[v];
}

std::vector<std::vector<Distance>> all_pairs_distances(const DynGraph& g) {
    std::vector<std::vector<Distance>> out;
    out.reserve(g.num_vertices());
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
        const VertexId src[] = {s};
        out.push_back(multi_source_dijkstra(g, src).dist);
    }
    return out;
}

std::vector<std::uint32_t> connected_components(const DynGraph& g) {
    constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
    const auto n = g.num_vertices();
    std::vector<std::uint32_t> label(n, kUnset);
    std::vector<VertexId> stack;
    std::uint32_t next = 0;
    for (VertexId s = 0; s < n; ++s) {
        if (label[s] != kUnset) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const VertexId u = stack.back();
            stack.pop_back();
            for (const Edge& e : g.neighbors(u)) {
                if (label[e.to] == kUnset) {
                    label[e.to] = next;
                    stack.push_back(e.to);
                }
            }
        }
        ++next;
    }
    return label;
}

} // namespace dynclust
