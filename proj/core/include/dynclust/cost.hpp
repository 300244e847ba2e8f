#pragma once

#include <span>

#include "dynclust/assignment.hpp"
#include "dynclust/graph.hpp"

namespace dynclust {

/// d^z, with infinity preserved.
double cost_term(Distance d, double z);

/// sum_v wt(v) * dist(v, centers)^z using exact distances in g. `weights`
/// defaults to 1 per vertex. Infinity if some positive-weight vertex cannot
/// reach a center, or if `centers` is empty.
double clustering_cost(const DynGraph& g, std::span<const VertexId> centers, double z,
                       std::span<const double> weights = {});

/// sum_v dist(v, sigma(v))^z using exact distances in g.
double assignment_cost(const DynGraph& g, const Assignment& sigma, double z);

} // namespace dynclust
