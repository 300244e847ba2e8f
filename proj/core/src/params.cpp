#include "dynclust/params.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dynclust {

void MpbiParams::validate() const {
    if (!(alpha >= 1.0) || !std::isfinite(alpha)) throw std::invalid_argument("alpha must be >= 1");
    if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("beta must lie in (0, 1)");
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
    if (!(z >= 1.0) || !std::isfinite(z)) throw std::invalid_argument("z must be >= 1");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
}

double log_n(std::size_t n) { return std::log2(static_cast<double>(std::max<std::size_t>(n, 2))); }

double sampling_threshold(const MpbiParams& p, std::size_t n) {
    return p.alpha * static_cast<double>(p.k) * log_n(n);
}

std::size_t ball_quota(double beta, std::size_t size) {
    const double raw = beta * static_cast<double>(size);
    return static_cast<std::size_t>(std::ceil(raw - 1e-9));
}

double level_bound(std::size_t n, double beta) { return log_n(n) / std::log2(1.0 / (1.0 - beta)) + 1.0; }

std::vector<std::size_t> expected_level_sizes(const MpbiParams& p, std::size_t n) {
    const double threshold = sampling_threshold(p, n);
    std::vector<std::size_t> sizes{n};
    while (static_cast<double>(sizes.back()) > threshold) {
        sizes.push_back(sizes.back() - ball_quota(p.beta, sizes.back()));
    }
    return sizes;
}

} // namespace dynclust
