#include "dynclust/sssp.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <tuple>

#include "dynclust/log.hpp"

namespace dynclust {

DistanceOracle::DistanceOracle(const DynGraph& g, std::span<const VertexId> sources, double eps)
    : graph_(&g),
      eps_(eps),
      slack_(1.0 + eps),
      sources_(g.num_vertices()),
      exact_(g.num_vertices(), kInfinity),
      root_(g.num_vertices(), kNoVertex),
      published_(g.num_vertices(), kInfinity),
      touched_mark_(g.num_vertices(), 0) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("oracle eps must lie in (0, 1)");
    if (sources.empty()) throw std::invalid_argument("oracle needs a nonempty source set");
    for (VertexId s : sources) {
        if (s >= g.num_vertices()) throw std::invalid_argument("source id out of range");
    }
    auto forest = multi_source_dijkstra(g, sources);
    for (VertexId s : sources) sources_.insert(s);
    exact_ = std::move(forest.dist);
    root_ = std::move(forest.nearest);
    published_ = exact_;
}

bool DistanceOracle::improves(Distance cand, VertexId cand_root, VertexId v) const {
    return cand < exact_[v] || (cand == exact_[v] && cand_root < root_[v]);
}

void DistanceOracle::propagate(std::vector<VertexId>& seeds) {
    using Item = std::tuple<Distance, VertexId, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (VertexId v : seeds) heap.emplace(exact_[v], root_[v], v);
    while (!heap.empty()) {
        auto [d, root, u] = heap.top();
        heap.pop();
        if (d != exact_[u] || root != root_[u]) continue;
        for (const Edge& e : graph_->neighbors(u)) {
            const Distance nd = d + e.weight;
            if (improves(nd, root, e.to)) {
                exact_[e.to] = nd;
                root_[e.to] = root;
                seeds.push_back(e.to);
                heap.emplace(nd, root, e.to);
            }
        }
    }
}

void DistanceOracle::publish(std::vector<VertexId>& touched) {
    last_changes_.clear();
    for (VertexId v : touched) {
        if (touched_mark_[v]) continue;
        touched_mark_[v] = 1;
        if (published_[v] > slack_ * exact_[v]) {
            published_[v] = exact_[v];
            last_changes_.push_back(v);
        }
    }
    for (VertexId v : touched) touched_mark_[v] = 0;
    std::sort(last_changes_.begin(), last_changes_.end());
    total_changes_ += last_changes_.size();
}

std::vector<VertexId> DistanceOracle::insert_edge(VertexId u, VertexId v, Distance w) {
    std::vector<VertexId> touched;
    for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
        if (!is_finite(exact_[a])) continue;
        const Distance cand = exact_[a] + w;
        if (improves(cand, root_[a], b)) {
            exact_[b] = cand;
            root_[b] = root_[a];
            touched.push_back(b);
        }
    }
    if (!touched.empty()) propagate(touched);
    publish(touched);
    return last_changes_;
}

std::vector<VertexId> DistanceOracle::extend_sources(std::span<const VertexId> new_sources) {
    std::vector<VertexId> touched;
    for (VertexId s : new_sources) {
        if (s >= graph_->num_vertices()) throw std::invalid_argument("source id out of range");
        if (!sources_.insert(s)) {
            ++ignored_sources_;
            if (log_enabled(LogLevel::kDebug)) {
                log_message(LogLevel::kDebug, "extend_sources: vertex " + std::to_string(s) + " is already a source");
            }
            continue;
        }
        exact_[s] = 0.0;
        root_[s] = s;
        touched.push_back(s);
    }
    if (!touched.empty()) propagate(touched);
    publish(touched);
    return last_changes_;
}

} // namespace dynclust
