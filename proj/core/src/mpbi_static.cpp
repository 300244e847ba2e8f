#include "dynclust/mpbi_static.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "dynclust/log.hpp"
#include "json.hpp"

namespace dynclust {
namespace {

Distance quota_distance(std::span<const Distance> dist, const VertexSet& U, std::size_t quota) {
    std::vector<Distance> vals;
    vals.reserve(U.size());
    U.for_each([&](VertexId v) { vals.push_back(dist[v]); });
    auto nth = vals.begin() + static_cast<std::ptrdiff_t>(quota - 1);
    std::nth_element(vals.begin(), nth, vals.end());
    return *nth;
}

double binomial(std::size_t n, std::size_t r) {
    double out = 1.0;
    for (std::size_t i = 1; i <= r; ++i) out = out * static_cast<double>(n - r + i) / static_cast<double>(i);
    return out;
}

nlohmann::json radius_json(const RadiusScale& scale, PowerRadius r) {
    if (r.is_infinite()) return nullptr;
    return scale.value(r);
}

} // namespace

PowerRadius smallest_covering_radius(std::span<const Distance> dist_to_sources, const VertexSet& U, double beta,
                                     const RadiusScale& scale) {
    if (U.empty()) throw std::invalid_argument("execution set must be nonempty");
    return scale.round_up(quota_distance(dist_to_sources, U, ball_quota(beta, U.size())));
}

Distance smallest_covering_radius(const DynGraph& g, const VertexSet& S, const VertexSet& U, double beta,
                                  double eps) {
    const RadiusScale scale(eps);
    const auto src = S.to_vector();
    return scale.value(smallest_covering_radius(exact_distances(g, src), U, beta, scale));
}

Distance nu_star(std::span<const Distance> dist_to_sources, const VertexSet& U, double beta) {
    if (U.empty()) throw std::invalid_argument("execution set must be nonempty");
    return quota_distance(dist_to_sources, U, ball_quota(beta, U.size()));
}

Distance nu_star(const DynGraph& g, const VertexSet& S, const VertexSet& U, double beta) {
    const auto src = S.to_vector();
    return nu_star(exact_distances(g, src), U, beta);
}

Distance mu_star_bruteforce(const std::vector<std::vector<Distance>>& apsp, const VertexSet& U, std::size_t k,
                            double gamma, std::size_t budget) {
    if (U.empty()) throw std::invalid_argument("execution set must be nonempty");
    const std::size_t n = apsp.size();
    const std::size_t max_size = std::min(k, n);
    double subsets = 0.0;
    for (std::size_t s = 1; s <= max_size; ++s) subsets += binomial(n, s);
    if (subsets > static_cast<double>(budget)) {
        throw CapabilityError("mu* enumeration needs " + std::to_string(static_cast<long long>(subsets)) +
                              " subsets, budget is " + std::to_string(budget));
    }
    const std::size_t quota = ball_quota(gamma, U.size());
    const auto members = U.to_vector();
    std::vector<Distance> best_to(members.size());
    std::vector<Distance> scratch(members.size());
    Distance best = kInfinity;

    for (std::size_t size = 1; size <= max_size; ++size) {
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            for (std::size_t j = 0; j < members.size(); ++j) {
                Distance d = kInfinity;
                for (std::size_t x : idx) d = std::min(d, apsp[x][members[j]]);
                scratch[j] = d;
            }
            auto nth = scratch.begin() + static_cast<std::ptrdiff_t>(quota - 1);
            std::nth_element(scratch.begin(), nth, scratch.end());
            best = std::min(best, *nth);

            std::size_t pos = size;
            while (pos > 0 && idx[pos - 1] == n - size + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return best;
}

Distance mu_star_bruteforce(const DynGraph& g, const VertexSet& U, std::size_t k, double gamma, std::size_t budget) {
    return mu_star_bruteforce(all_pairs_distances(g), U, k, gamma, budget);
}

StaticRun run_static(const DynGraph& g, const MpbiParams& p, StaticOptions options) {
    p.validate();
    const std::size_t n = g.num_vertices();
    const RadiusScale scale(p.eps);
    const double threshold = sampling_threshold(p, n);
    std::mt19937_64 rng(p.seed);

    StaticRun run;
    run.eps = p.eps;
    run.S = VertexSet(n);
    run.sigma = Assignment(n);
    VertexSet U = VertexSet::full(n);
    std::optional<PowerRadius> prev;

    while (static_cast<double>(U.size()) > threshold) {
        StaticLevel level{U, VertexSet(n), PowerRadius(), PowerRadius(), VertexSet(n)};
        const double prob = std::min(threshold / static_cast<double>(U.size()), 1.0);
        std::bernoulli_distribution coin(prob);
        while (level.S.empty()) {
            U.for_each([&](VertexId v) {
                if (coin(rng)) level.S.insert(v);
            });
        }
        const auto src = level.S.to_vector();
        const auto forest = multi_source_dijkstra(g, src);
        level.nu_tilde = smallest_covering_radius(forest.dist, U, p.beta, scale);
        if (level.nu_tilde.is_infinite()) {
            run.opt_infinite = true;
            log_message(LogLevel::kInfo, "run_static: no finite covering radius, OPT is infinite");
            break;
        }
        level.nu = (options.monotone_radii && prev) ? std::max(level.nu_tilde, *prev) : level.nu_tilde;
        const Distance radius = scale.value(level.nu);
        U.for_each([&](VertexId v) {
            if (forest.dist[v] <= radius) {
                level.B.insert(v);
                run.sigma.assign(v, forest.nearest[v]);
            }
        });
        run.S |= level.S;
        U -= level.B;
        prev = level.nu;
        run.levels.push_back(std::move(level));
    }

    StaticLevel last{U, U, PowerRadius(), prev.value_or(PowerRadius(0)), U};
    last.nu_tilde = last.nu;
    U.for_each([&](VertexId v) { run.sigma.assign(v, v); });
    run.S |= U;
    run.t = run.levels.size();
    run.levels.push_back(std::move(last));
    return run;
}

std::string static_trace_json(const StaticRun& run) {
    const RadiusScale scale(run.eps);
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < run.levels.size(); ++i) {
        const auto& l = run.levels[i];
        out.push_back({{"level", i},
                       {"U", l.U.size()},
                       {"S", l.S.size()},
                       {"nu_tilde", radius_json(scale, l.nu_tilde)},
                       {"nu", radius_json(scale, l.nu)},
                       {"B", l.B.size()}});
    }
    return out.dump();
}

} // namespace dynclust
