#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dynclust/assignment.hpp"
#include "dynclust/graph.hpp"
#include "dynclust/params.hpp"
#include "dynclust/radius.hpp"
#include "dynclust/vertex_set.hpp"

namespace dynclust {

/// Smallest (1+eps)^j whose ball around the sources covers at least
/// ceil(beta |U|) members of U, given per-vertex distances to the sources.
/// Returns the infinite radius when no finite one suffices. U must be nonempty.
PowerRadius smallest_covering_radius(std::span<const Distance> dist_to_sources, const VertexSet& U, double beta,
                                     const RadiusScale& scale);

/// Same, using exact distances from S in g. Returns the radius value.
Distance smallest_covering_radius(const DynGraph& g, const VertexSet& S, const VertexSet& U, double beta,
                                  double eps);

/// Minimum real r with |Ball[S, r] cap U| >= beta |U| (exact distances).
/// Infinity when the sources cannot reach enough of U.
Distance nu_star(const DynGraph& g, const VertexSet& S, const VertexSet& U, double beta);
Distance nu_star(std::span<const Distance> dist_to_sources, const VertexSet& U, double beta);

/// Minimum mu such that some X with |X| <= k has |Ball[X, mu] cap U| >= gamma |U|
/// and |U \ Ball(X, mu)| >= (1 - gamma)|U|. Exhaustive over subsets; throws
/// CapabilityError when more than `budget` subsets would be enumerated.
Distance mu_star_bruteforce(const DynGraph& g, const VertexSet& U, std::size_t k, double gamma,
                            std::size_t budget = 200000);
Distance mu_star_bruteforce(const std::vector<std::vector<Distance>>& apsp, const VertexSet& U, std::size_t k,
                            double gamma, std::size_t budget = 200000);

struct StaticLevel {
    VertexSet U;
    VertexSet S;
    PowerRadius nu_tilde;
    PowerRadius nu;
    VertexSet B;
};

struct StaticRun {
    std::vector<StaticLevel> levels;
    std::size_t t = 0;
    VertexSet S;
    Assignment sigma;
    /// Some level had no finite covering radius; the remaining vertices were
    /// made their own centers at level t.
    bool opt_infinite = false;
    double eps = 0.1;
};

struct StaticOptions {
    /// Clamp each radius to at least the previous one. Off gives the original
    /// per-level radii for comparison.
    bool monotone_radii = true;
};

/// One leveled sampling pass with exact distances. Throws std::invalid_argument
/// on invalid params.
StaticRun run_static(const DynGraph& g, const MpbiParams& p, StaticOptions options = {});

/// Per-level JSON trace: [{"level", "U", "S", "nu_tilde", "nu", "B"}, ...].
std::string static_trace_json(const StaticRun& run);

} // namespace dynclust
