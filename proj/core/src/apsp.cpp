#include "dynclust/apsp.hpp"

#include <algorithm>

namespace dynclust {

IncrementalApsp::IncrementalApsp(const DynGraph& g) : n_(g.num_vertices()), d_(n_ * n_, kInfinity) {
    for (VertexId s = 0; s < n_; ++s) {
        const VertexId src[] = {s};
        const auto dist = multi_source_dijkstra(g, src).dist;
        std::copy(dist.begin(), dist.end(), d_.begin() + static_cast<std::ptrdiff_t>(s * n_));
    }
}

void IncrementalApsp::insert_edge(VertexId u, VertexId v, Distance w) {
    const std::vector<Distance> du(row(u), row(u) + n_);
    const std::vector<Distance> dv(row(v), row(v) + n_);
    for (std::size_t a = 0; a < n_; ++a) {
        const Distance via_u = du[a] + w;
        const Distance via_v = dv[a] + w;
        if (!is_finite(via_u) && !is_finite(via_v)) continue;
        Distance* out = d_.data() + a * n_;
        for (std::size_t b = 0; b < n_; ++b) {
            out[b] = std::min({out[b], via_u + dv[b], via_v + du[b]});
        }
    }
}

Distance IncrementalApsp::to_set(std::span<const VertexId> sources, VertexId v) const {
    Distance best = kInfinity;
    for (VertexId s : sources) best = std::min(best, (*this)(s, v));
    return best;
}

std::vector<std::vector<Distance>> IncrementalApsp::to_matrix() const {
    std::vector<std::vector<Distance>> out(n_);
    for (std::size_t a = 0; a < n_; ++a) out[a].assign(row(static_cast<VertexId>(a)), row(static_cast<VertexId>(a)) + n_);
    return out;
}

} // namespace dynclust
