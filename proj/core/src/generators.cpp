#include "dynclust/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

namespace dynclust {
namespace {

void require_vertices(std::size_t n) {
    if (n == 0) throw std::invalid_argument("generator needs n >= 1");
}

// Keep weights inside what DynGraph accepts for this n.
std::uint32_t clamp_weight(std::size_t n, std::uint32_t max_weight) {
    const double cap = std::pow(static_cast<double>(std::max<std::size_t>(n, 2)), 4);
    return static_cast<std::uint32_t>(std::min<double>(std::max<std::uint32_t>(max_weight, 1), cap));
}

double draw_weight(std::mt19937_64& rng, std::uint32_t max_weight) {
    std::uniform_int_distribution<std::uint32_t> dist(1, std::max<std::uint32_t>(max_weight, 1));
    return static_cast<double>(dist(rng));
}

} // namespace

EdgeStream gnp_stream(std::size_t n, double p, std::uint32_t max_weight, std::uint64_t seed) {
    require_vertices(n);
    max_weight = clamp_weight(n, max_weight);
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution keep(p);
    EdgeStream out{n, {}};
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (keep(rng)) out.edges.push_back({u, v, 0.0});
        }
    }
    std::shuffle(out.edges.begin(), out.edges.end(), rng);
    for (auto& e : out.edges) e.w = draw_weight(rng, max_weight);
    return out;
}

EdgeStream gnm_stream(std::size_t n, std::size_t m, std::uint32_t max_weight, std::uint64_t seed) {
    require_vertices(n);
    max_weight = clamp_weight(n, max_weight);
    const std::size_t pairs = n * (n - 1) / 2;
    m = std::min(m, pairs);
    std::mt19937_64 rng(seed);
    EdgeStream out{n, {}};
    out.edges.reserve(m);
    if (m * 2 > pairs) {
        std::vector<std::pair<VertexId, VertexId>> all;
        all.reserve(pairs);
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v) all.emplace_back(u, v);
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(m);
        for (auto [u, v] : all) out.edges.push_back({u, v, draw_weight(rng, max_weight)});
        return out;
    }
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
    std::set<std::pair<VertexId, VertexId>> seen;
    while (out.edges.size() < m) {
        VertexId u = pick(rng);
        VertexId v = pick(rng);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (!seen.emplace(u, v).second) continue;
        out.edges.push_back({u, v, draw_weight(rng, max_weight)});
    }
    return out;
}

EdgeStream two_cluster_stream(std::size_t n, std::size_t m, std::uint32_t max_weight, std::uint64_t seed) {
    require_vertices(n);
    max_weight = clamp_weight(n, max_weight);
    std::mt19937_64 rng(seed);
    EdgeStream out{n, {}};
    if (n < 2) return out;
    const std::uint32_t heavy = std::max<std::uint32_t>(max_weight, 2);
    const std::size_t half = n / 2;
    auto in_cluster = [&](int c) {
        const std::size_t lo = c == 0 ? 0 : half;
        const std::size_t hi = c == 0 ? half : n;
        std::uniform_int_distribution<std::size_t> d(lo, hi - 1);
        return std::pair{d, hi - lo};
    };

    // Phase 1: heavy spanning paths inside each half.
    for (int c = 0; c < 2 && out.edges.size() < m; ++c) {
        const std::size_t lo = c == 0 ? 0 : half;
        const std::size_t hi = c == 0 ? half : n;
        for (std::size_t v = lo + 1; v < hi && out.edges.size() < m; ++v) {
            out.edges.push_back({static_cast<VertexId>(v - 1), static_cast<VertexId>(v), static_cast<double>(heavy)});
        }
    }

    // Phase 2: intra-cluster shortcuts whose weight shrinks over time; then
    // phase 3: bridges between the halves, also shrinking.
    const std::size_t remaining = m > out.edges.size() ? m - out.edges.size() : 0;
    const std::size_t shortcuts = remaining - remaining / 4;
    for (std::size_t j = 0; j < remaining; ++j) {
        const bool bridge = j >= shortcuts;
        const std::size_t span = bridge ? remaining - shortcuts : shortcuts;
        const std::size_t pos = bridge ? j - shortcuts : j;
        const double frac = span > 1 ? static_cast<double>(pos) / static_cast<double>(span - 1) : 1.0;
        const double w = std::max(1.0, std::round(heavy * (1.0 - frac)));
        VertexId u = 0;
        VertexId v = 0;
        if (bridge) {
            if (half == 0 || half == n) continue;
            auto [d0, s0] = in_cluster(0);
            auto [d1, s1] = in_cluster(1);
            u = static_cast<VertexId>(d0(rng));
            v = static_cast<VertexId>(d1(rng));
        } else {
            const int c = (half >= 2 && (n - half < 2 || j % 2 == 0)) ? 0 : 1;
            auto [d, size] = in_cluster(c);
            if (size < 2) continue;
            do {
                u = static_cast<VertexId>(d(rng));
                v = static_cast<VertexId>(d(rng));
            } while (u == v);
        }
        out.edges.push_back({u, v, w});
    }
    return out;
}

EdgeStream preferential_attachment_stream(std::size_t n, std::size_t per_vertex, std::uint32_t max_weight,
                                          std::uint64_t seed) {
    require_vertices(n);
    max_weight = clamp_weight(n, max_weight);
    if (per_vertex == 0) throw std::invalid_argument("per_vertex must be >= 1");
    std::mt19937_64 rng(seed);
    EdgeStream out{n, {}};
    std::vector<VertexId> endpoints;  // each vertex appears once per incident edge
    for (VertexId v = 1; v < n; ++v) {
        std::set<VertexId> chosen;
        const std::size_t want = std::min<std::size_t>(per_vertex, v);
        while (chosen.size() < want) {
            VertexId target;
            if (endpoints.empty()) {
                target = std::uniform_int_distribution<VertexId>(0, v - 1)(rng);
            } else {
                target = endpoints[std::uniform_int_distribution<std::size_t>(0, endpoints.size() - 1)(rng)];
            }
            chosen.insert(target);
        }
        for (VertexId t : chosen) {
            out.edges.push_back({t, v, draw_weight(rng, max_weight)});
            endpoints.push_back(t);
            endpoints.push_back(v);
        }
    }
    return out;
}

} // namespace dynclust
