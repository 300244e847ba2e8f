#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dynclust/assignment.hpp"
#include "dynclust/graph.hpp"
#include "dynclust/params.hpp"
#include "dynclust/radius.hpp"
#include "dynclust/sssp.hpp"
#include "dynclust/vertex_set.hpp"

namespace dynclust {

struct LevelState {
    VertexSet U;
    VertexSet S;
    PowerRadius nu;
    VertexSet B;
    VertexSet Z;
    /// Absent while S is empty (all estimates are then infinite).
    std::optional<DistanceOracle> oracle;
};

struct UpdateReport {
    std::uint64_t index = 0;
    /// Smallest level whose radius decreased; empty if none did.
    std::optional<std::size_t> first_decrease_level;
    bool resampled = false;
    std::vector<std::size_t> decreased_levels;
    /// Radius values per level, +infinity where undefined.
    std::vector<Distance> radii;
    std::size_t candidates = 0;
    std::size_t t = 0;
    /// Vertices sampled because they received their first edge.
    std::size_t lazily_sampled = 0;

    std::string to_json() const;
};

/// Sigma modifications of one update: new preimage counts for every center
/// whose count changed, and centers that entered sigma's image for the first
/// time ever.
struct SigmaBatch {
    std::vector<std::pair<VertexId, std::size_t>> counts;
    std::vector<VertexId> new_centers;

    bool empty() const { return counts.empty() && new_centers.empty(); }
};

/// Leveled candidate sets with per-level approximate distance oracles,
/// maintained under edge insertions.
///
/// The graph is held by reference. Callers insert each edge into the graph
/// first and then call handle_insertion() with the same edge.
class IncrementalBicriteria {
public:
    /// Builds the initial levels. Throws std::invalid_argument on bad params.
    IncrementalBicriteria(const DynGraph& g, const MpbiParams& p);

    UpdateReport handle_insertion(VertexId u, VertexId v, Distance w);

    /// Smallest power radius whose estimate ball covers the quota of U_i.
    PowerRadius covering_radius(std::size_t i) const;
    /// max(nu_tilde_i, nu_{i-1}) with the current oracle of level i.
    PowerRadius valid_radius(std::size_t i) const;

    const MpbiParams& params() const { return params_; }
    const RadiusScale& scale() const { return scale_; }
    const std::vector<LevelState>& levels() const { return levels_; }
    std::size_t t() const { return levels_.size() - 1; }

    /// Union of all candidate sets and the self centers.
    const VertexSet& candidates() const { return candidates_; }
    /// Vertices that were unreachable from their level's sample while that
    /// level's radius was infinite; each was assigned to itself.
    const VertexSet& self_centers() const { return self_centers_; }
    const Assignment& assignment() const { return sigma_; }
    /// Temporary leaking set; empty between updates.
    const VertexSet& pending_leak() const { return leak_; }

    /// Some level has an infinite radius, i.e. no finite solution with k
    /// centers covers the graph.
    bool opt_infinite() const;

    /// Every vertex that has ever been in sigma's image.
    const VertexSet& sigma_max() const { return sigma_max_; }
    /// Sigma modifications made by the last handle_insertion().
    const SigmaBatch& sigma_change_feed() const { return last_batch_; }

    std::size_t updates() const { return updates_; }
    std::size_t resampling_phases() const { return resampling_phases_; }
    std::size_t sigma_inc() const { return sigma_inc_; }
    const std::vector<std::size_t>& radius_decreases() const { return radius_decreases_; }
    std::size_t total_radius_decreases() const;

private:
    VertexSet ball(std::size_t i, PowerRadius r) const;
    void rebuild_oracle(std::size_t i);
    void sample_into(std::size_t i);
    void assign_ball(std::size_t i);
    void update_radius_decrease(std::size_t i, PowerRadius nu_hat, UpdateReport& report);
    void finalize_last_level(std::size_t t);
    void lazy_sample(VertexId x, UpdateReport& report);
    void set_sigma(VertexId v, VertexId center);
    SigmaBatch collect_batch();

    const DynGraph* graph_;
    MpbiParams params_;
    RadiusScale scale_;
    double threshold_;
    std::mt19937_64 rng_;

    std::vector<LevelState> levels_;
    VertexSet candidates_;
    Assignment sigma_;
    VertexSet leak_;
    VertexSet self_centers_;
    VertexSet sigma_max_;

    std::vector<VertexId> sigma_before_;
    std::vector<VertexId> sigma_touched_;
    std::vector<std::uint8_t> sigma_touched_mark_;
    SigmaBatch last_batch_;

    std::size_t updates_ = 0;
    std::size_t resampling_phases_ = 0;
    std::size_t sigma_inc_ = 0;
    std::vector<std::size_t> radius_decreases_;
};

} // namespace dynclust
