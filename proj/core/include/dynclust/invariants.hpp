#pragma once

#include <string>
#include <vector>

#include "dynclust/apsp.hpp"
#include "dynclust/mpbi_incremental.hpp"

namespace dynclust {

struct Violation {
    std::string invariant;
    std::string detail;
};

/// Tracks the bicriteria state across updates and reports every broken
/// structural law. Call check() once after construction and after every
/// handle_insertion().
class BicriteriaChecker {
public:
    explicit BicriteriaChecker(const IncrementalBicriteria& state);

    /// Radii, cardinality, level bound and set laws. With `exact` given, also
    /// dist(v, sigma(v)) <= nu_i for every v in U_i \ U_{i+1}. With `report`
    /// given, also that no level both decreased and holds leaked vertices.
    std::vector<Violation> check(const IncrementalBicriteria& state, const IncrementalApsp* exact = nullptr,
                                 const UpdateReport* report = nullptr);

    /// Radii-level checks only (properties 1-3), for cheap per-update use.
    std::vector<Violation> check_radii(const IncrementalBicriteria& state) const;

private:
    std::vector<PowerRadius> prev_radii_;
    std::vector<std::size_t> expected_sizes_;
    VertexSet prev_candidates_;
    bool first_ = true;
};

/// dist(v, S) <= estimate(v) <= (1+eps) dist(v, S) for all v, plus
/// nearest(v) in S when the estimate is finite.
std::vector<Violation> check_oracle_sandwich(const DistanceOracle& oracle, const IncrementalApsp& exact);

std::string format_violations(const std::vector<Violation>& violations, std::size_t limit = 10);

} // namespace dynclust
