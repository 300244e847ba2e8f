#include "dynclust/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "dynclust/cost.hpp"
#include "dynclust/edge_stream.hpp"
#include "dynclust/generators.hpp"
#include "dynclust/mpbi_static.hpp"
#include "json.hpp"

namespace dynclust {
namespace {

nlohmann::json finite_or_null(double x) {
    if (x < kInfinity && x > -kInfinity) return x;
    return nullptr;
}

/// a / b with 0/0 = 0 and x/0 = infinity.
double ratio(double a, double b) {
    if (a == 0.0) return 0.0;
    if (b == 0.0) return kInfinity;
    return a / b;
}

TrialOutcome nu_vs_mu_trial(std::uint64_t seed, const TrialOptions& options) {
    const auto g = build_graph(gnm_stream(40, 120, 20, seed));
    MpbiParams p = options.params;
    p.seed = seed;
    const auto run = run_static(g, p);
    const auto apsp = all_pairs_distances(g);
    TrialOutcome out{seed, true, 0.0, 1.0};
    for (std::size_t i = 0; i < run.t; ++i) {
        const auto& level = run.levels[i];
        const auto dist = exact_distances(g, level.S.to_vector());
        const Distance nu = nu_star(dist, level.U, p.beta);
        const Distance mu = mu_star_bruteforce(apsp, level.U, p.k, options.gamma);
        out.value = std::max(out.value, ratio(nu, 2.0 * mu));
    }
    out.pass = out.value <= out.bound;
    return out;
}

TrialOutcome candidate_size_trial(std::uint64_t seed, const TrialOptions& options) {
    const std::size_t n = 200;
    const auto g = build_graph(gnm_stream(n, 600, 100, seed));
    MpbiParams p = options.params;
    p.seed = seed;
    const auto run = run_static(g, p);
    TrialOutcome out{seed, true, 0.0, 11.0 * p.alpha * static_cast<double>(p.k) * log_n(n)};
    for (std::size_t i = 0; i < run.t; ++i) {
        out.value = std::max(out.value, static_cast<double>(run.levels[i].S.size()));
    }
    out.pass = out.value <= out.bound;
    return out;
}

TrialOutcome bicriteria_ratio_trial(std::uint64_t seed, const TrialOptions& options) {
    const auto g = build_graph(gnm_stream(30, 60, 20, seed));
    MpbiParams p = options.params;
    p.seed = seed;
    const auto run = run_static(g, p);
    const auto apsp = all_pairs_distances(g);
    double cost = 0.0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) cost += cost_term(apsp[v][run.sigma[v]], p.z);
    const auto opt = brute_force_opt(apsp, p.k, p.z);
    TrialOutcome out{seed, true, ratio(cost, opt.opt), options.ratio_ceiling};
    out.pass = out.value <= out.bound;
    return out;
}

} // namespace

std::size_t binomial(std::size_t n, std::size_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    std::size_t out = 1;
    for (std::size_t j = 1; j <= r; ++j) {
        // out * (n - r + j) / j stays integral at every step.
        const std::size_t num = n - r + j;
        if (out > std::numeric_limits<std::size_t>::max() / num) return std::numeric_limits<std::size_t>::max();
        out = out * num / j;
    }
    return out;
}

OracleReport brute_force_opt(const std::vector<std::vector<Distance>>& dist, std::size_t k, double z,
                             std::span<const double> weights, std::size_t budget) {
    const std::size_t n = dist.size();
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (!weights.empty() && weights.size() != n) throw std::invalid_argument("one weight per vertex required");
    OracleReport report;
    if (n == 0) return report;
    const std::size_t r = std::min(k, n);
    if (binomial(n, r) > budget) {
        throw CapabilityError("brute force over C(" + std::to_string(n) + ", " + std::to_string(r) +
                              ") subsets exceeds the budget of " + std::to_string(budget));
    }

    std::vector<double> term(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) term[a * n + b] = cost_term(dist[a][b], z);

    // Supersets never cost more, so subsets of size exactly min(k, n) suffice.
    std::vector<VertexId> pick(r);
    for (std::size_t j = 0; j < r; ++j) pick[j] = static_cast<VertexId>(j);
    report.opt = kInfinity;
    while (true) {
        ++report.enumerated;
        double cost = 0.0;
        for (std::size_t v = 0; v < n && cost < report.opt; ++v) {
            const double wt = weights.empty() ? 1.0 : weights[v];
            if (wt == 0.0) continue;
            double best = kInfinity;
            for (VertexId c : pick) best = std::min(best, term[c * n + v]);
            cost += wt * best;
        }
        if (report.centers.empty() || cost < report.opt) {
            report.opt = cost;
            report.centers = pick;
        }
        std::size_t j = r;
        while (j > 0 && pick[j - 1] == n - r + j - 1) --j;
        if (j == 0) break;
        ++pick[j - 1];
        for (std::size_t q = j; q < r; ++q) pick[q] = pick[q - 1] + 1;
    }
    return report;
}

OracleReport brute_force_opt(const DynGraph& g, std::size_t k, double z, std::span<const double> weights,
                             std::size_t budget) {
    const std::size_t r = std::min(k, g.num_vertices());
    if (binomial(g.num_vertices(), r) > budget) {
        throw CapabilityError("brute force over C(" + std::to_string(g.num_vertices()) + ", " + std::to_string(r) +
                              ") subsets exceeds the budget of " + std::to_string(budget));
    }
    return brute_force_opt(all_pairs_distances(g), k, z, weights, budget);
}

BaselineResult static_recompute(const DynGraph& g, const MpbiParams& p, const SolverOptions& solver) {
    BaselineResult out;
    const auto run = run_static(g, p);
    const auto nodes = run.sigma.image().to_vector();
    out.candidates = run.S.size();
    out.opt_infinite = run.opt_infinite;

    const std::size_t m = nodes.size();
    std::vector<double> weights(m);
    std::vector<std::vector<Distance>> dist(m, std::vector<Distance>(m));
    bool connected = true;
    for (std::size_t a = 0; a < m; ++a) {
        weights[a] = static_cast<double>(run.sigma.count(nodes[a]));
        const VertexId src[] = {nodes[a]};
        const auto row = exact_distances(g, src);
        for (std::size_t b = 0; b < m; ++b) {
            dist[a][b] = row[nodes[b]];
            if (!is_finite(dist[a][b])) connected = false;
        }
    }

    Solution sol;
    if (connected) {
        sol = solve_with_distances(dist, weights, p.k, p.z, solver);
    } else {
        WeightedInstance inst;
        inst.num_nodes = m;
        inst.weights = weights;
        inst.k = p.k;
        inst.z = p.z;
        for (NodeId a = 0; a < m; ++a)
            for (NodeId b = a + 1; b < m; ++b)
                if (is_finite(dist[a][b])) inst.edges.push_back({a, b, dist[a][b]});
        sol = solve_static(inst, solver);
    }
    out.cost_instance = sol.cost;
    out.infeasible = sol.infeasible;
    for (NodeId c : sol.centers) out.centers.push_back(nodes[c]);
    std::sort(out.centers.begin(), out.centers.end());
    out.cost_graph = clustering_cost(g, out.centers, p.z);
    return out;
}

std::string OracleReport::to_json() const {
    return nlohmann::json{{"opt", finite_or_null(opt)}, {"centers", centers}, {"enumerated", enumerated}}.dump();
}

double TrialReport::pass_fraction() const {
    if (trials == 0) return 1.0;
    return static_cast<double>(passed) / static_cast<double>(trials);
}

std::string TrialReport::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& o : outcomes) {
        rows.push_back({{"seed", o.seed}, {"pass", o.pass}, {"value", finite_or_null(o.value)}, {"bound", o.bound}});
    }
    return nlohmann::json{{"property", property},
                          {"trials", trials},
                          {"passed", passed},
                          {"pass_fraction", pass_fraction()},
                          {"vacuous", vacuous},
                          {"failing_seeds", failing_seeds},
                          {"outcomes", rows}}
        .dump();
}

TrialReport whp_trial_suite(std::string_view property, std::size_t trials, std::uint64_t seed,
                            const TrialOptions& options) {
    TrialOutcome (*trial)(std::uint64_t, const TrialOptions&) = nullptr;
    if (property == "nu-vs-mu") {
        trial = nu_vs_mu_trial;
    } else if (property == "candidate-set-size") {
        trial = candidate_size_trial;
    } else if (property == "bicriteria-ratio") {
        trial = bicriteria_ratio_trial;
    } else {
        throw std::invalid_argument("unknown trial property: " + std::string(property));
    }
    options.params.validate();

    TrialReport report;
    report.property = std::string(property);
    report.trials = trials;
    report.vacuous = trials == 0;
    for (std::size_t j = 0; j < trials; ++j) {
        const auto outcome = trial(seed + j, options);
        if (outcome.pass) {
            ++report.passed;
        } else {
            report.failing_seeds.push_back(outcome.seed);
        }
        report.outcomes.push_back(outcome);
    }
    return report;
}

} // namespace dynclust
