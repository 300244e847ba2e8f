#pragma once

#include <cstdint>

#include "dynclust/edge_stream.hpp"

namespace dynclust {

/// Erdos-Renyi G(n, p) edges in random insertion order with integer weights
/// drawn uniformly from [1, max_weight].
EdgeStream gnp_stream(std::size_t n, double p, std::uint32_t max_weight, std::uint64_t seed);

/// G(n, m): m distinct uniformly random pairs, random order, uniform weights.
/// m is clamped to n(n-1)/2.
EdgeStream gnm_stream(std::size_t n, std::size_t m, std::uint32_t max_weight, std::uint64_t seed);

/// Two halves wired internally with heavy edges first, then progressively
/// lighter intra-cluster shortcuts, then bridges between the halves. Designed
/// to force repeated radius decreases. Produces exactly m insertions.
EdgeStream two_cluster_stream(std::size_t n, std::size_t m, std::uint32_t max_weight, std::uint64_t seed);

/// Preferential attachment: each new vertex attaches `per_vertex` edges to
/// endpoints chosen proportionally to degree; weights uniform in [1, max_weight].
EdgeStream preferential_attachment_stream(std::size_t n, std::size_t per_vertex, std::uint32_t max_weight,
                                          std::uint64_t seed);

} // namespace dynclust
