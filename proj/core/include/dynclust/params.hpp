#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dynclust {

/// Parameters of the leveled sampling process.
struct MpbiParams {
    double alpha = 4.0;
    double beta = 0.25;
    double eps = 0.1;
    double z = 1.0;
    std::size_t k = 1;
    std::uint64_t seed = 1;

    /// Throws std::invalid_argument unless alpha >= 1, 0 < beta < 1,
    /// 0 < eps < 1, z >= 1 and k >= 1.
    void validate() const;
};

/// log2(max(n, 2)).
double log_n(std::size_t n);

/// alpha * k * log n: levels keep sampling while |U_i| exceeds this.
double sampling_threshold(const MpbiParams& p, std::size_t n);

/// ceil(beta * size), tolerant to floating error in beta * size.
std::size_t ball_quota(double beta, std::size_t size);

/// log n / log(1 / (1 - beta)) + 1, the bound on the last level index.
double level_bound(std::size_t n, double beta);

/// Sizes |U_0|, |U_1|, ... produced by repeatedly removing ceil(beta |U_i|)
/// while |U_i| > threshold. The last entry is |U_t|.
std::vector<std::size_t> expected_level_sizes(const MpbiParams& p, std::size_t n);

} // namespace dynclust
