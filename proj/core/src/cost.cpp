#include "dynclust/cost.hpp"

#include <cmath>
#include <stdexcept>

namespace dynclust {

double cost_term(Distance d, double z) {
    if (!is_finite(d)) return kInfinity;
    if (z == 1.0) return d;
    if (z == 2.0) return d * d;
    return std::pow(d, z);
}

double clustering_cost(const DynGraph& g, std::span<const VertexId> centers, double z,
                       std::span<const double> weights) {
    if (!weights.empty() && weights.size() != g.num_vertices()) {
        throw std::invalid_argument("weight vector size must equal vertex count");
    }
    if (centers.empty()) return kInfinity;
    const auto dist = exact_distances(g, centers);
    double total = 0.0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const double wt = weights.empty() ? 1.0 : weights[v];
        if (wt == 0.0) continue;
        total += wt * cost_term(dist[v], z);
    }
    return total;
}

double assignment_cost(const DynGraph& g, const Assignment& sigma, double z) {
    double total = 0.0;
    const auto image = sigma.image();
    image.for_each([&](VertexId s) {
        const VertexId src[] = {s};
        const auto dist = exact_distances(g, src);
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            if (sigma[v] == s) total += cost_term(dist[v], z);
        }
    });
    return total;
}

} // namespace dynclust
