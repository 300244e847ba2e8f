#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dynclust/graph.hpp"
#include "dynclust/kz_static.hpp"
#include "dynclust/params.hpp"

namespace dynclust {

/// C(30, 3): the default enumeration budget in subsets.
inline constexpr std::size_t kDefaultOracleBudget = 4060;

struct OracleReport {
    /// Infinity when no k centers reach every positive-weight vertex.
    double opt = 0.0;
    std::vector<VertexId> centers;
    std::size_t enumerated = 0;

    std::string to_json() const;
};

/// Exact minimum over center sets of size at most k of
/// sum_v wt(v) * dist(v, X)^z. `weights` defaults to 1 per vertex. Throws
/// CapabilityError when C(n, min(k, n)) exceeds `budget`.
OracleReport brute_force_opt(const std::vector<std::vector<Distance>>& dist, std::size_t k, double z,
                             std::span<const double> weights = {}, std::size_t budget = kDefaultOracleBudget);
OracleReport brute_force_opt(const DynGraph& g, std::size_t k, double z, std::span<const double> weights = {},
                             std::size_t budget = kDefaultOracleBudget);

/// Static recompute: leveled sampling from scratch, then the static solver
/// on the complete instance over S = image(sigma) with exact distances and
/// weights |sigma^{-1}(s)|.
struct BaselineResult {
    std::vector<VertexId> centers;
    std::size_t candidates = 0;
    double cost_instance = kInfinity;
    double cost_graph = kInfinity;
    bool infeasible = false;
    bool opt_infinite = false;
};

BaselineResult static_recompute(const DynGraph& g, const MpbiParams& p, const SolverOptions& solver = {});

/// Binomial coefficient saturating at SIZE_MAX.
std::size_t binomial(std::size_t n, std::size_t r);

struct TrialOutcome {
    std::uint64_t seed = 0;
    bool pass = false;
    /// Measured quantity and the bound it was compared against.
    double value = 0.0;
    double bound = 0.0;
};

struct TrialReport {
    std::string property;
    std::size_t trials = 0;
    std::size_t passed = 0;
    /// Zero trials: reported as a pass but flagged.
    bool vacuous = false;
    std::vector<std::uint64_t> failing_seeds;
    std::vector<TrialOutcome> outcomes;

    double pass_fraction() const;
    std::string to_json() const;
};

struct TrialOptions {
    /// Parameters of each trial's leveled sampling; the seed is overridden
    /// per trial.
    MpbiParams params{};
    double gamma = 0.5;
    /// Ceiling for the bicriteria-ratio property.
    double ratio_ceiling = 60.0;
};

/// Property ids: "nu-vs-mu", "candidate-set-size", "bicriteria-ratio". Trial j
/// uses seed + j. Throws std::invalid_argument for an unknown id.
TrialReport whp_trial_suite(std::string_view property, std::size_t trials, std::uint64_t seed,
                            const TrialOptions& options = {});

} // namespace dynclust
