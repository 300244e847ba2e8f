#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace dynclust {

/// Dense vertex index in [0, n).
using VertexId = std::uint32_t;

/// Edge weights and (approximate) distances.
using Distance = double;

inline constexpr Distance kInfinity = std::numeric_limits<Distance>::infinity();
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

inline bool is_finite(Distance d) { return d < kInfinity; }

/// Raised when an exhaustive diagnostic would exceed its enumeration budget.
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a maintained structural invariant is found broken. These are
/// never expected to fire; they surface bugs instead of silently continuing.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace dynclust
