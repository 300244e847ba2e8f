#include "dynclust/spanner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dynclust {
namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

double log2_clamped(double x) { return std::log2(std::max(x, 2.0)); }

} // namespace

void SpannerOptions::validate() const {
    if (lambda < 1) throw std::invalid_argument("spanner lambda must be >= 1");
    if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("spanner eps must be positive");
}

std::uint64_t DynamicSpanner::key(NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

DynamicSpanner::DynamicSpanner(std::size_t num_nodes, std::span<const WeightedEdge> edges,
                               const SpannerOptions& options)
    : options_(options), scale_(options.eps), rng_(options.seed) {
    options_.validate();
    restart(num_nodes, edges);
    restarts_ = 0;
}

void DynamicSpanner::restart(std::size_t num_nodes, std::span<const WeightedEdge> edges) {
    num_nodes_ = num_nodes;
    weight_.clear();
    for (const auto& e : edges) {
        if (e.a >= num_nodes || e.b >= num_nodes || e.a == e.b) throw std::invalid_argument("bad spanner edge");
        if (!(e.w >= 1.0) || !std::isfinite(e.w)) throw std::invalid_argument("spanner weights must be >= 1");
        auto [it, fresh] = weight_.emplace(key(e.a, e.b), e.w);
        if (!fresh) it->second = std::min(it->second, e.w);
    }
    class_history_.clear();
    build_all();
    ++restarts_;
}

void DynamicSpanner::build_all() {
    in_spanner_.clear();
    classes_.clear();
    for (const auto& [k, w] : weight_) {
        const auto c = scale_.floor_exponent(w);
        classes_[c].members.insert(k);
        record_class_insertion(k, c);
    }
    for (auto& [c, cls] : classes_) build_class(c);
}

void DynamicSpanner::record_class_insertion(std::uint64_t k, std::int32_t c) {
    if (!class_history_.emplace(k, c).second) ++repeated_class_insertions_;
}

void DynamicSpanner::link(WeightClass& cls, std::uint64_t k) {
    cls.adjacency[first(k)].push_back(second(k));
    cls.adjacency[second(k)].push_back(first(k));
}

void DynamicSpanner::build_class(std::int32_t c) {
    auto& cls = classes_.at(c);
    std::vector<std::pair<Distance, std::uint64_t>> order;
    order.reserve(cls.members.size());
    for (std::uint64_t k : cls.members) order.emplace_back(weight_.at(k), k);
    std::sort(order.begin(), order.end());
    std::vector<std::uint64_t> sorted;
    sorted.reserve(order.size());
    for (const auto& [w, k] : order) sorted.push_back(k);
    const auto chosen = options_.deterministic ? greedy_spanner(sorted) : clustering_spanner(sorted);

    in_spanner_.insert(chosen.begin(), chosen.end());
    cls.adjacency.assign(num_nodes_, {});
    for (std::uint64_t k : chosen) link(cls, k);
}

std::vector<std::uint64_t> DynamicSpanner::greedy_spanner(const std::vector<std::uint64_t>& sorted) {
    std::vector<std::vector<NodeId>> adjacency(num_nodes_);
    std::vector<std::uint64_t> out;
    const std::size_t hops = 2 * options_.lambda - 1;
    for (std::uint64_t k : sorted) {
        if (within_hops(adjacency, first(k), second(k), hops)) continue;
        adjacency[first(k)].push_back(second(k));
        adjacency[second(k)].push_back(first(k));
        out.push_back(k);
    }
    return out;
}

// Cluster-based construction: lambda - 1 rounds of sampling clusters with
// probability n^{-1/lambda}, then one edge from every vertex to each
// neighbouring cluster. Edge order is the rank in `sorted`.
std::vector<std::uint64_t> DynamicSpanner::clustering_spanner(const std::vector<std::uint64_t>& sorted) {
    const std::size_t rounds = options_.lambda;
    if (rounds == 1 || sorted.empty()) return sorted;

    std::vector<std::uint32_t> local(num_nodes_, kNone);
    std::vector<NodeId> nodes;
    const std::size_t m = sorted.size();
    std::vector<std::uint32_t> ea(m);
    std::vector<std::uint32_t> eb(m);
    for (std::size_t j = 0; j < m; ++j) {
        for (NodeId x : {first(sorted[j]), second(sorted[j])}) {
            if (local[x] == kNone) {
                local[x] = static_cast<std::uint32_t>(nodes.size());
                nodes.push_back(x);
            }
        }
        ea[j] = local[first(sorted[j])];
        eb[j] = local[second(sorted[j])];
    }
    const std::size_t nv = nodes.size();
    std::vector<std::vector<std::uint32_t>> incident(nv);
    for (std::uint32_t j = 0; j < m; ++j) {
        incident[ea[j]].push_back(j);
        incident[eb[j]].push_back(j);
    }
    auto other = [&](std::uint32_t j, std::uint32_t v) { return ea[j] == v ? eb[j] : ea[j]; };

    std::vector<std::uint8_t> alive(m, 1);
    std::vector<std::uint8_t> added(m, 0);
    std::vector<std::uint32_t> cluster(nv);
    for (std::uint32_t v = 0; v < nv; ++v) cluster[v] = v;
    const double p = std::pow(static_cast<double>(nv), -1.0 / static_cast<double>(rounds));
    std::bernoulli_distribution coin(p);

    // Lightest alive edge from v into each neighbouring cluster, by cluster id.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> best;
    auto lightest_per_cluster = [&](std::uint32_t v) {
        best.clear();
        for (std::uint32_t j : incident[v]) {
            if (!alive[j]) continue;
            const std::uint32_t c = cluster[other(j, v)];
            if (c == kNone || c == cluster[v]) continue;
            best.emplace_back(c, j);
        }
        std::sort(best.begin(), best.end());
        best.erase(std::unique(best.begin(), best.end(), [](auto a, auto b) { return a.first == b.first; }),
                   best.end());
    };
    auto discard_into = [&](std::uint32_t v, std::uint32_t c) {
        for (std::uint32_t j : incident[v]) {
            if (alive[j] && cluster[other(j, v)] == c) alive[j] = 0;
        }
    };

    for (std::size_t round = 1; round < rounds; ++round) {
        std::vector<std::uint8_t> active(nv, 0);
        for (std::uint32_t v = 0; v < nv; ++v) {
            if (cluster[v] != kNone) active[cluster[v]] = 1;
        }
        std::vector<std::uint8_t> sampled(nv, 0);
        for (std::uint32_t c = 0; c < nv; ++c) {
            if (active[c]) sampled[c] = coin(rng_) ? 1 : 0;
        }
        std::vector<std::uint32_t> next = cluster;
        for (std::uint32_t v = 0; v < nv; ++v) {
            if (cluster[v] == kNone || sampled[cluster[v]]) continue;
            lightest_per_cluster(v);
            std::uint32_t join = kNone;
            for (auto [c, j] : best) {
                if (sampled[c] && (join == kNone || j < join)) join = j;
            }
            if (join != kNone) {
                const std::uint32_t target = cluster[other(join, v)];
                added[join] = 1;
                next[v] = target;
                for (auto [c, j] : best) {
                    if (j < join) {
                        added[j] = 1;
                        discard_into(v, c);
                    }
                }
                discard_into(v, target);
            } else {
                for (auto [c, j] : best) {
                    added[j] = 1;
                    discard_into(v, c);
                }
                next[v] = kNone;
            }
        }
        cluster = std::move(next);
        for (std::uint32_t j = 0; j < m; ++j) {
            if (!alive[j]) continue;
            if (cluster[ea[j]] == kNone || cluster[eb[j]] == kNone || cluster[ea[j]] == cluster[eb[j]]) alive[j] = 0;
        }
    }
    for (std::uint32_t v = 0; v < nv; ++v) {
        lightest_per_cluster(v);
        for (auto [c, j] : best) added[j] = 1;
    }

    std::vector<std::uint64_t> out;
    for (std::uint32_t j = 0; j < m; ++j) {
        if (added[j]) out.push_back(sorted[j]);
    }
    return out;
}

bool DynamicSpanner::within_hops(const std::vector<std::vector<NodeId>>& adjacency, NodeId from, NodeId to,
                                 std::size_t hops) const {
    if (from == to) return true;
    if (seen_.size() < adjacency.size()) seen_.assign(adjacency.size(), 0);
    if (++stamp_ == 0) {
        std::fill(seen_.begin(), seen_.end(), 0);
        stamp_ = 1;
    }
    std::vector<NodeId> frontier{from};
    std::vector<NodeId> next;
    seen_[from] = stamp_;
    for (std::size_t depth = 0; depth < hops && !frontier.empty(); ++depth) {
        next.clear();
        for (NodeId u : frontier) {
            for (NodeId v : adjacency[u]) {
                if (v == to) return true;
                if (seen_[v] == stamp_) continue;
                seen_[v] = stamp_;
                next.push_back(v);
            }
        }
        frontier.swap(next);
    }
    return false;
}

SpannerDelta DynamicSpanner::decrease(NodeId x, NodeId y, Distance w) {
    if (x >= num_nodes_ || y >= num_nodes_ || x == y) throw std::invalid_argument("bad spanner edge");
    if (!(w >= 1.0) || !std::isfinite(w)) throw std::invalid_argument("spanner weights must be >= 1");
    const std::uint64_t k = key(x, y);
    SpannerDelta delta;
    const auto it = weight_.find(k);
    const std::int32_t to = scale_.floor_exponent(w);
    if (it != weight_.end()) {
        if (!(w < it->second)) throw std::invalid_argument("spanner update does not decrease the weight");
        const std::int32_t from = scale_.floor_exponent(it->second);
        const bool member = in_spanner_.count(k) > 0;
        if (from == to) {
            it->second = w;
            if (member) delta.updated.push_back({first(k), second(k), w});
            return delta;
        }
        auto& old_class = classes_.at(from);
        old_class.members.erase(k);
        if (old_class.members.empty()) classes_.erase(from);
        it->second = w;
        if (member) {
            // The edge stays in the spanner with its lower weight, so every
            // path of its former class through it only got shorter. It also
            // serves the new class.
            auto& cls = classes_[to];
            if (cls.adjacency.size() != num_nodes_) cls.adjacency.resize(num_nodes_);
            cls.members.insert(k);
            record_class_insertion(k, to);
            link(cls, k);
            delta.updated.push_back({first(k), second(k), w});
            return delta;
        }
    } else {
        weight_.emplace(k, w);
    }

    auto& cls = classes_[to];
    if (cls.adjacency.size() != num_nodes_) cls.adjacency.resize(num_nodes_);
    cls.members.insert(k);
    record_class_insertion(k, to);
    if (!within_hops(cls.adjacency, first(k), second(k), 2 * options_.lambda - 1)) {
        link(cls, k);
        in_spanner_.insert(k);
        delta.added.push_back({first(k), second(k), w});
    }
    return delta;
}

SpannerDelta DynamicSpanner::decrease_batch(std::span<const WeightedEdge> batch) {
    SpannerDelta out;
    for (const auto& e : batch) {
        auto d = decrease(e.a, e.b, e.w);
        out.added.insert(out.added.end(), d.added.begin(), d.added.end());
        out.updated.insert(out.updated.end(), d.updated.begin(), d.updated.end());
    }
    return out;
}

std::vector<WeightedEdge> DynamicSpanner::edges() const {
    std::vector<std::uint64_t> keys(in_spanner_.begin(), in_spanner_.end());
    std::sort(keys.begin(), keys.end());
    std::vector<WeightedEdge> out;
    out.reserve(keys.size());
    for (std::uint64_t k : keys) out.push_back({first(k), second(k), weight_.at(k)});
    return out;
}

double DynamicSpanner::stretch_bound() const {
    return static_cast<double>(2 * options_.lambda - 1) * (1.0 + options_.eps);
}

double DynamicSpanner::size_constant(double nW) const {
    const double p = static_cast<double>(num_nodes_);
    const double denom = std::pow(std::max(p, 1.0), 1.0 + 1.0 / static_cast<double>(options_.lambda)) *
                         log2_clamped(nW) * log2_clamped(p);
    return static_cast<double>(num_edges()) / denom;
}

} // namespace dynclust
