#pragma once

#include <compare>
#include <cstdint>
#include <limits>

#include "dynclust/types.hpp"

namespace dynclust {

/// A radius restricted to the grid {(1+eps)^j : j >= 0} plus +infinity.
///
/// Stored as the integer exponent so that "is a power of (1+eps)" holds by
/// construction and comparisons are exact.
class PowerRadius {
public:
    static constexpr std::int32_t kInfiniteExponent = std::numeric_limits<std::int32_t>::max();

    constexpr PowerRadius() = default;
    constexpr explicit PowerRadius(std::int32_t exponent) : exponent_(exponent) {}

    static constexpr PowerRadius infinite() { return PowerRadius(kInfiniteExponent); }

    constexpr std::int32_t exponent() const { return exponent_; }
    constexpr bool is_infinite() const { return exponent_ == kInfiniteExponent; }

    friend constexpr auto operator<=>(PowerRadius, PowerRadius) = default;

private:
    std::int32_t exponent_ = 0;
};

/// Converts between real values and PowerRadius for a fixed eps.
class RadiusScale {
public:
    /// Throws std::invalid_argument unless 0 < eps.
    explicit RadiusScale(double eps);

    double eps() const { return eps_; }
    double base() const { return base_; }

    /// (1+eps)^j, or +infinity for the infinite radius.
    Distance value(PowerRadius r) const;

    /// Smallest (1+eps)^j with j >= 0 that is >= x. Values x <= 1 (including
    /// 0) map to exponent 0; +infinity maps to the infinite radius.
    PowerRadius round_up(Distance x) const;

    /// floor(log_{1+eps} x) for x >= 1; the weight class of x.
    std::int32_t floor_exponent(Distance x) const;

private:
    double eps_;
    double base_;
    double log_base_;
};

/// Smallest (1+eps)^j, j >= 0 integer, with (1+eps)^j >= x.
/// Throws std::invalid_argument if x <= 0 or eps <= 0.
double round_up_pow(double x, double eps);

} // namespace dynclust
