#include "dynclust/radius.hpp"

#include <cmath>
#include <stdexcept>

namespace dynclust {

RadiusScale::RadiusScale(double eps) : eps_(eps), base_(1.0 + eps), log_base_(std::log1p(eps)) {
    if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("eps must be positive");
}

Distance RadiusScale::value(PowerRadius r) const {
    if (r.is_infinite()) return kInfinity;
    return std::pow(base_, r.exponent());
}

PowerRadius RadiusScale::round_up(Distance x) const {
    if (!is_finite(x)) return PowerRadius::infinite();
    if (x <= 1.0) return PowerRadius(0);
    auto j = static_cast<std::int32_t>(std::ceil(std::log(x) / log_base_));
    // log() rounding can be off by one in either direction; settle against pow().
    while (std::pow(base_, j) < x) ++j;
    while (j > 0 && std::pow(base_, j - 1) >= x) --j;
    return PowerRadius(j);
}

std::int32_t RadiusScale::floor_exponent(Distance x) const {
    if (x < 1.0) throw std::invalid_argument("weight below 1 has no class");
    auto j = static_cast<std::int32_t>(std::floor(std::log(x) / log_base_));
    while (j > 0 && std::pow(base_, j) > x) --j;
    while (std::pow(base_, j + 1) <= x) ++j;
    return j;
}

double round_up_pow(double x, double eps) {
    if (!(x > 0.0)) throw std::invalid_argument("round_up_pow needs x > 0");
    const RadiusScale scale(eps);
    return scale.value(scale.round_up(x));
}

} // namespace dynclust
