#include "dynclust/mpbi_incremental.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dynclust/log.hpp"
#include "dynclust/mpbi_static.hpp"
#include "json.hpp"

namespace dynclust {

std::string UpdateReport::to_json() const {
    nlohmann::json radii_json = nlohmann::json::array();
    for (Distance r : radii) {
        if (is_finite(r)) {
            radii_json.push_back(r);
        } else {
            radii_json.push_back(nullptr);
        }
    }
    nlohmann::json out = {{"insertion", index},
                          {"first_decrease_level", nullptr},
                          {"resampled", resampled},
                          {"decreased_levels", decreased_levels},
                          {"radii", std::move(radii_json)},
                          {"S_size", candidates},
                          {"t", t},
                          {"lazily_sampled", lazily_sampled}};
    if (first_decrease_level) out["first_decrease_level"] = *first_decrease_level;
    return out.dump();
}

IncrementalBicriteria::IncrementalBicriteria(const DynGraph& g, const MpbiParams& p)
    : graph_(&g), params_(p), scale_(p.eps), threshold_(0.0), rng_(p.seed) {
    params_.validate();
    const std::size_t n = g.num_vertices();
    threshold_ = sampling_threshold(params_, n);
    candidates_ = VertexSet(n);
    sigma_ = Assignment(n);
    leak_ = VertexSet(n);
    self_centers_ = VertexSet(n);
    sigma_touched_mark_.assign(n, 0);

    VertexSet U = VertexSet::full(n);
    std::size_t i = 0;
    while (static_cast<double>(U.size()) > threshold_) {
        levels_.push_back(LevelState{U, VertexSet(n), PowerRadius::infinite(), VertexSet(n), VertexSet(n), {}});
        sample_into(i);
        rebuild_oracle(i);
        auto& level = levels_[i];
        level.nu = valid_radius(i);
        level.B = retain(ball(i, level.nu), ball_quota(params_.beta, level.U.size()));
        assign_ball(i);
        U -= level.B;
        ++i;
    }
    levels_.push_back(LevelState{U, VertexSet(n), PowerRadius(0), VertexSet(n), VertexSet(n), {}});
    finalize_last_level(i);

    sigma_max_ = sigma_.image();
    sigma_touched_.clear();
    sigma_before_.clear();
    std::fill(sigma_touched_mark_.begin(), sigma_touched_mark_.end(), 0);
    radius_decreases_.assign(levels_.size(), 0);
}

bool IncrementalBicriteria::opt_infinite() const {
    for (std::size_t i = 0; i < t(); ++i) {
        if (levels_[i].nu.is_infinite()) return true;
    }
    return false;
}

std::size_t IncrementalBicriteria::total_radius_decreases() const {
    return std::accumulate(radius_decreases_.begin(), radius_decreases_.end(), std::size_t{0});
}

PowerRadius IncrementalBicriteria::covering_radius(std::size_t i) const {
    const auto& level = levels_[i];
    if (!level.oracle) return PowerRadius::infinite();
    return smallest_covering_radius(level.oracle->estimates(), level.U, params_.beta, scale_);
}

PowerRadius IncrementalBicriteria::valid_radius(std::size_t i) const {
    const PowerRadius tilde = covering_radius(i);
    if (i == 0) return tilde;
    return std::max(tilde, levels_[i - 1].nu);
}

VertexSet IncrementalBicriteria::ball(std::size_t i, PowerRadius r) const {
    const auto& level = levels_[i];
    if (r.is_infinite()) return level.U;
    VertexSet out(level.U.universe());
    if (!level.oracle) return out;
    const Distance radius = scale_.value(r);
    level.U.for_each([&](VertexId v) {
        if (level.oracle->estimate(v) <= radius) out.insert(v);
    });
    return out;
}

void IncrementalBicriteria::rebuild_oracle(std::size_t i) {
    auto& level = levels_[i];
    if (level.S.empty()) {
        level.oracle.reset();
        return;
    }
    const auto src = level.S.to_vector();
    level.oracle.emplace(*graph_, src, params_.eps);
}

void IncrementalBicriteria::sample_into(std::size_t i) {
    auto& level = levels_[i];
    const double prob = std::min(threshold_ / static_cast<double>(level.U.size()), 1.0);
    std::bernoulli_distribution coin(prob);
    level.U.for_each([&](VertexId v) {
        // Isolated vertices are not sampled; they become eligible on their first edge.
        if (graph_->degree(v) > 0 && coin(rng_)) level.S.insert(v);
    });
    candidates_ |= level.S;
}

void IncrementalBicriteria::assign_ball(std::size_t i) {
    auto& level = levels_[i];
    // Members the oracle cannot reach exist only under an infinite radius.
    // They become their own centers, outside the sampled S_i, so the level
    // radius keeps reflecting the sample alone.
    level.B.for_each([&](VertexId v) {
        if (level.oracle && is_finite(level.oracle->estimate(v))) {
            set_sigma(v, level.oracle->nearest(v));
        } else {
            self_centers_.insert(v);
            candidates_.insert(v);
            set_sigma(v, v);
        }
    });
}

void IncrementalBicriteria::update_radius_decrease(std::size_t i, PowerRadius nu_hat, UpdateReport& report) {
    auto& level = levels_[i];
    level.nu = nu_hat;
    const VertexSet previous_ball = level.B;
    level.B = retain(ball(i, nu_hat), ball_quota(params_.beta, level.U.size()));
    assign_ball(i);
    leak_ |= level.Z;
    leak_ |= previous_ball - level.B;
    level.Z.clear();
    if (i < radius_decreases_.size()) ++radius_decreases_[i];
    report.decreased_levels.push_back(i);
}

void IncrementalBicriteria::finalize_last_level(std::size_t t) {
    auto& last = levels_[t];
    // S_t accumulates so that S never loses a vertex that sigma may point to.
    last.S |= last.U;
    last.B = last.U;
    last.Z.clear();
    last.oracle.reset();
    last.nu = t > 0 ? levels_[t - 1].nu : PowerRadius(0);
    leak_.clear();
    last.U.for_each([&](VertexId v) { set_sigma(v, v); });
    candidates_ |= last.S;
}

void IncrementalBicriteria::lazy_sample(VertexId x, UpdateReport& report) {
    for (std::size_t i = 0; i < t(); ++i) {
        auto& level = levels_[i];
        if (!level.U.contains(x) || level.S.contains(x)) continue;
        const double prob = std::min(threshold_ / static_cast<double>(level.U.size()), 1.0);
        if (!std::bernoulli_distribution(prob)(rng_)) continue;
        level.S.insert(x);
        candidates_.insert(x);
        const VertexId src[] = {x};
        if (level.oracle) {
            level.oracle->extend_sources(src);
        } else {
            level.oracle.emplace(*graph_, src, params_.eps);
        }
        ++report.lazily_sampled;
    }
}

void IncrementalBicriteria::set_sigma(VertexId v, VertexId center) {
    if (sigma_[v] == center) return;
    if (!sigma_touched_mark_[v]) {
        sigma_touched_mark_[v] = 1;
        sigma_touched_.push_back(v);
        sigma_before_.push_back(sigma_[v]);
    }
    sigma_.assign(v, center);
}

SigmaBatch IncrementalBicriteria::collect_batch() {
    SigmaBatch batch;
    std::vector<VertexId> centers;
    for (std::size_t j = 0; j < sigma_touched_.size(); ++j) {
        const VertexId v = sigma_touched_[j];
        sigma_touched_mark_[v] = 0;
        if (sigma_before_[j] == sigma_[v]) continue;
        centers.push_back(sigma_before_[j]);
        centers.push_back(sigma_[v]);
    }
    sigma_touched_.clear();
    sigma_before_.clear();
    std::sort(centers.begin(), centers.end());
    centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
    for (VertexId c : centers) {
        batch.counts.emplace_back(c, sigma_.count(c));
        if (sigma_.count(c) > 0 && sigma_max_.insert(c)) batch.new_centers.push_back(c);
    }
    if (!batch.new_centers.empty()) ++sigma_inc_;
    return batch;
}

UpdateReport IncrementalBicriteria::handle_insertion(VertexId u, VertexId v, Distance w) {
    UpdateReport report;
    report.index = updates_++;
    const std::size_t old_t = t();

    for (std::size_t i = 0; i < old_t; ++i) {
        if (levels_[i].oracle) levels_[i].oracle->insert_edge(u, v, w);
    }
    for (VertexId x : {u, v}) {
        if (graph_->degree(x) == 1) lazy_sample(x, report);
    }

    // First level whose valid radius dropped below its current radius.
    std::size_t first = 0;
    PowerRadius nu_hat;
    for (; first < old_t; ++first) {
        nu_hat = valid_radius(first);
        if (nu_hat < levels_[first].nu) break;
    }

    if (first < old_t) {
        report.first_decrease_level = first;
        report.resampled = true;
        ++resampling_phases_;
        leak_.clear();
        update_radius_decrease(first, nu_hat, report);
        VertexSet U = levels_[first].U - levels_[first].B;
        std::size_t i = first + 1;
        while (static_cast<double>(U.size()) > threshold_) {
            if (i + 1 == levels_.size()) {
                // The former last level becomes a sampling level with an undefined radius.
                levels_[i].nu = PowerRadius::infinite();
                levels_.push_back(LevelState{U, VertexSet(U.universe()), PowerRadius(0), VertexSet(U.universe()),
                                             VertexSet(U.universe()), {}});
                radius_decreases_.push_back(0);
            }
            auto& level = levels_[i];
            level.U = U;
            sample_into(i);
            rebuild_oracle(i);
            nu_hat = valid_radius(i);
            if (nu_hat < level.nu) {
                update_radius_decrease(i, nu_hat, report);
            } else {
                level.B &= U;
                level.Z &= U;
                const std::size_t quota = ball_quota(params_.beta, U.size());
                const std::size_t used = level.B.size() + level.Z.size();
                if (used > quota) {
                    throw InvariantViolation("level " + std::to_string(i) + ": ball and leak exceed the quota");
                }
                const VertexSet available = leak_ & U;
                if (available.size() < quota - used) {
                    throw InvariantViolation("level " + std::to_string(i) + ": leaking set cannot fill the quota");
                }
                const VertexSet parked = retain(available, quota - used);
                level.Z |= parked;
                level.Z &= U;
                leak_ -= parked;
            }
            U -= level.B | level.Z;
            leak_ &= U;
            ++i;
        }
        if (levels_.size() > i + 1) {
            log_message(LogLevel::kWarn, "resampling phase ended above the previous last level");
            levels_.resize(i + 1);
        } else if (levels_.size() == i) {
            levels_.push_back(LevelState{U, VertexSet(U.universe()), PowerRadius(0), VertexSet(U.universe()),
                                         VertexSet(U.universe()), {}});
        }
        levels_[i].U = U;
        finalize_last_level(i);
        if (radius_decreases_.size() < levels_.size()) radius_decreases_.resize(levels_.size(), 0);
    }

    last_batch_ = collect_batch();
    report.t = t();
    report.candidates = candidates_.size();
    report.radii.reserve(levels_.size());
    for (const auto& level : levels_) report.radii.push_back(scale_.value(level.nu));
    return report;
}

} // namespace dynclust
