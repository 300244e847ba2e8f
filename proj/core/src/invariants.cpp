#include "dynclust/invariants.hpp"

#include <cmath>
#include <sstream>

namespace dynclust {
namespace {

void add(std::vector<Violation>& out, const char* name, const std::string& detail) {
    out.push_back({name, detail});
}

std::string level_str(std::size_t i) { return "level " + std::to_string(i); }

} // namespace

BicriteriaChecker::BicriteriaChecker(const IncrementalBicriteria& state)
    : expected_sizes_(expected_level_sizes(state.params(), state.assignment().size())),
      prev_candidates_(state.candidates().universe()) {}

std::vector<Violation> BicriteriaChecker::check_radii(const IncrementalBicriteria& state) const {
    std::vector<Violation> out;
    const auto& levels = state.levels();
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const PowerRadius r = levels[i].nu;
        if (!r.is_infinite() && r.exponent() < 0) {
            add(out, "radius_is_power", level_str(i) + " has negative exponent");
        }
        if (!first_ && i < prev_radii_.size() && prev_radii_[i] < r) {
            add(out, "radius_non_increasing", level_str(i) + " radius increased");
        }
        if (i > 0 && r < levels[i - 1].nu) {
            add(out, "radius_monotone_in_level", level_str(i) + " radius below level " + std::to_string(i - 1));
        }
    }
    return out;
}

std::vector<Violation> BicriteriaChecker::check(const IncrementalBicriteria& state, const IncrementalApsp* exact,
                                                const UpdateReport* report) {
    auto out = check_radii(state);
    const auto& levels = state.levels();
    const std::size_t t = state.t();
    const std::size_t n = state.assignment().size();
    const double beta = state.params().beta;

    if (levels.size() != expected_sizes_.size()) {
        add(out, "cardinality", "level count " + std::to_string(levels.size()) + " expected " +
                                    std::to_string(expected_sizes_.size()));
    }
    if (static_cast<double>(t) > level_bound(n, beta)) add(out, "level_bound", "t = " + std::to_string(t));

    VertexSet union_s = state.self_centers();
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const auto& l = levels[i];
        union_s |= l.S;
        if (i < expected_sizes_.size() && l.U.size() != expected_sizes_[i]) {
            add(out, "cardinality", level_str(i) + " |U| = " + std::to_string(l.U.size()) + " expected " +
                                        std::to_string(expected_sizes_[i]));
        }
        if (!l.B.is_subset_of(l.U)) add(out, "ball_in_execution_set", level_str(i));
        if (!l.Z.is_subset_of(l.U)) add(out, "leak_in_execution_set", level_str(i));
        if (l.B.intersects(l.Z)) add(out, "ball_leak_disjoint", level_str(i));
        if (i < t) {
            if (l.B.size() + l.Z.size() != ball_quota(beta, l.U.size())) {
                add(out, "quota", level_str(i) + " |B|+|Z| = " + std::to_string(l.B.size() + l.Z.size()));
            }
            if (levels[i + 1].U != l.U - (l.B | l.Z)) add(out, "level_partition", level_str(i));
            if (report != nullptr && !l.Z.empty()) {
                for (std::size_t d : report->decreased_levels) {
                    if (d == i) add(out, "leak_without_decrease", level_str(i) + " decreased yet holds leaked vertices");
                }
            }
        } else {
            if (l.B != l.U || !l.Z.empty()) add(out, "last_level_reset", level_str(i));
            if (!l.U.is_subset_of(l.S)) add(out, "last_level_reset", "U_t not inside S_t");
        }
    }
    if (!state.pending_leak().empty()) add(out, "leak_empty_between_updates", std::to_string(state.pending_leak().size()));
    if (union_s != state.candidates()) add(out, "candidates_union", "S differs from union of S_i and self centers");
    if (!prev_candidates_.is_subset_of(state.candidates())) add(out, "candidates_grow", "a candidate was removed");

    const auto& sigma = state.assignment();
    std::size_t total = 0;
    for (VertexId s = 0; s < n; ++s) {
        total += sigma.count(s);
        if (sigma.count(s) > 0 && !state.candidates().contains(s)) {
            add(out, "sigma_image_in_candidates", "center " + std::to_string(s));
        }
    }
    if (total != n) add(out, "sigma_total", "preimage counts sum to " + std::to_string(total));

    if (exact != nullptr) {
        for (std::size_t i = 0; i <= t; ++i) {
            const auto& l = levels[i];
            const Distance radius = state.scale().value(l.nu);
            const VertexSet settled = i < t ? l.U - levels[i + 1].U : l.U;
            settled.for_each([&](VertexId v) {
                if (i == t) {
                    if (sigma[v] != v) add(out, "assignment_cost", "vertex " + std::to_string(v) + " at last level");
                    return;
                }
                const Distance d = (*exact)(v, sigma[v]);
                if (!(d <= radius)) {
                    std::ostringstream msg;
                    msg << "vertex " << v << " at " << level_str(i) << ": dist " << d << " > nu " << radius;
                    add(out, "assignment_cost", msg.str());
                }
            });
        }
    }

    prev_radii_.clear();
    for (const auto& l : levels) prev_radii_.push_back(l.nu);
    prev_candidates_ = state.candidates();
    first_ = false;
    return out;
}

std::vector<Violation> check_oracle_sandwich(const DistanceOracle& oracle, const IncrementalApsp& exact) {
    std::vector<Violation> out;
    const auto src = oracle.sources().to_vector();
    const double slack = 1.0 + oracle.eps();
    for (VertexId v = 0; v < exact.size(); ++v) {
        const Distance d = exact.to_set(src, v);
        const Distance est = oracle.estimate(v);
        if (!(d <= est) || !(est <= slack * d)) {
            std::ostringstream msg;
            msg << "vertex " << v << ": exact " << d << " estimate " << est;
            add(out, "sssp_sandwich", msg.str());
        }
        if (is_finite(est) && !oracle.sources().contains(oracle.nearest(v))) {
            add(out, "sssp_nearest_in_sources", "vertex " + std::to_string(v));
        }
    }
    return out;
}

std::string format_violations(const std::vector<Violation>& violations, std::size_t limit) {
    std::ostringstream out;
    for (std::size_t i = 0; i < violations.size() && i < limit; ++i) {
        out << violations[i].invariant << ": " << violations[i].detail << '\n';
    }
    if (violations.size() > limit) out << "... " << violations.size() - limit << " more\n";
    return out.str();
}

} // namespace dynclust
