#include "dynclust/reduction.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "dynclust/cost.hpp"
#include "dynclust/oracle.hpp"
#include "json.hpp"

namespace dynclust {
namespace {

nlohmann::json finite_or_null(std::optional<double> x) {
    if (!x || !is_finite(*x)) return nullptr;
    return *x;
}

} // namespace

void ReductionOptions::validate() const {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (!(z >= 1.0)) throw std::invalid_argument("z must be >= 1");
    if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("reduction eps must lie in (0, 1/2)");
    if (lambda < 1) throw std::invalid_argument("spanner lambda must be >= 1");
    if (recompute_every < 1) throw std::invalid_argument("recompute period must be >= 1");
}

std::uint64_t ReductionState::key(NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

ReductionState::ReductionState(const DynGraph& g, const IncrementalBicriteria& bicriteria,
                               const ReductionOptions& options)
    : graph_(&g), options_(options), scale_(options.eps) {
    options_.validate();
    node_of_.assign(g.num_vertices(), kNoVertex);
    bicriteria.sigma_max().for_each([&](VertexId c) { add_center(c); });
    for (NodeId a = 0; a < centers_.size(); ++a) {
        weights_[a] = static_cast<double>(bicriteria.assignment().count(centers_[a]));
    }
    const auto edges = instance_edges();
    spanner_ = std::make_unique<DynamicSpanner>(centers_.size(), edges, spanner_options());
    solve();
}

SpannerOptions ReductionState::spanner_options() const {
    SpannerOptions sp;
    sp.lambda = options_.lambda;
    sp.eps = options_.eps;
    sp.deterministic = options_.deterministic_spanner;
    sp.seed = options_.seed;
    return sp;
}

void ReductionState::add_center(VertexId c) {
    const auto node = static_cast<NodeId>(centers_.size());
    centers_.push_back(c);
    node_of_[c] = node;
    weights_.push_back(0.0);
    const VertexId src[] = {c};
    auto oracle = std::make_unique<DistanceOracle>(*graph_, src, options_.eps);
    for (NodeId a = 0; a < node; ++a) {
        const Distance d = std::min(oracle->estimate(centers_[a]), oracles_[a]->estimate(c));
        if (is_finite(d)) weight_[key(a, node)] = scale_.value(scale_.round_up(d));
    }
    oracles_.push_back(std::move(oracle));
}

Distance ReductionState::instance_weight(NodeId a, NodeId b) const {
    const auto it = weight_.find(key(a, b));
    return it == weight_.end() ? kInfinity : it->second;
}

std::vector<WeightedEdge> ReductionState::instance_edges() const {
    std::vector<WeightedEdge> out;
    out.reserve(weight_.size());
    for (const auto& [k, w] : weight_) {
        out.push_back({static_cast<NodeId>(k >> 32), static_cast<NodeId>(k & 0xffffffffu), w});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.a != y.a ? x.a < y.a : x.b < y.b; });
    return out;
}

void ReductionState::apply_assignment_modifications(const SigmaBatch& batch) {
    bool grew = false;
    for (VertexId c : batch.new_centers) {
        if (node_of_[c] != kNoVertex) continue;
        add_center(c);
        grew = true;
    }
    for (auto [c, count] : batch.counts) {
        const VertexId node = node_of_[c];
        if (node == kNoVertex) {
            if (count > 0) throw InvariantViolation("sigma batch assigns to a vertex outside the center set");
            continue;
        }
        if (weights_[node] != static_cast<double>(count)) inputs_changed_ = true;
        weights_[node] = static_cast<double>(count);
    }
    if (grew) rebuild_spanner();
}

void ReductionState::rebuild_spanner() {
    const auto edges = instance_edges();
    spanner_->restart(centers_.size(), edges);
    dist_valid_ = false;
    inputs_changed_ = true;
}

void ReductionState::relax(const WeightedEdge& e) {
    auto& d = spanner_dist_;
    const std::size_t p = d.size();
    if (!(e.w < d[e.a][e.b])) return;
    const std::vector<Distance> via_a = d[e.a];
    const std::vector<Distance> via_b = d[e.b];
    for (std::size_t i = 0; i < p; ++i) {
        const Distance to_a = via_a[i];
        const Distance to_b = via_b[i];
        if (!is_finite(to_a) && !is_finite(to_b)) continue;
        auto& row = d[i];
        for (std::size_t j = 0; j < p; ++j) {
            const Distance cand = std::min(to_a + e.w + via_b[j], to_b + e.w + via_a[j]);
            if (cand < row[j]) row[j] = cand;
        }
    }
}

void ReductionState::absorb(const SpannerDelta& delta) {
    if (delta.empty()) return;
    inputs_changed_ = true;
    if (!dist_valid_) return;
    for (const auto& e : delta.added) relax(e);
    for (const auto& e : delta.updated) relax(e);
}

std::size_t ReductionState::apply_edge_insertion(VertexId u, VertexId v, Distance w) {
    std::vector<std::vector<VertexId>> changed(oracles_.size());
    for (NodeId a = 0; a < oracles_.size(); ++a) changed[a] = oracles_[a]->insert_edge(u, v, w);

    std::size_t delta = 0;
    std::vector<std::uint64_t> pairs;
    for (NodeId a = 0; a < oracles_.size(); ++a) {
        for (VertexId y : changed[a]) {
            const VertexId b = node_of_[y];
            if (b == kNoVertex || b == a) continue;
            if (oracles_[a]->estimate(y) < instance_weight(a, b) / (1.0 + options_.eps)) {
                ++delta;
                pairs.push_back(key(a, b));
            }
        }
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    std::vector<WeightedEdge> batch;
    for (std::uint64_t k : pairs) {
        const auto a = static_cast<NodeId>(k >> 32);
        const auto b = static_cast<NodeId>(k & 0xffffffffu);
        const Distance d = std::min(oracles_[a]->estimate(centers_[b]), oracles_[b]->estimate(centers_[a]));
        const Distance rounded = scale_.value(scale_.round_up(d));
        if (!(rounded < instance_weight(a, b))) continue;
        weight_[k] = rounded;
        batch.push_back({a, b, rounded});
    }
    if (!batch.empty()) absorb(spanner_->decrease_batch(batch));
    last_delta_ = delta;
    delta_volume_ += delta;
    return delta;
}

WeightedInstance ReductionState::spanner_instance() const {
    WeightedInstance inst;
    inst.num_nodes = centers_.size();
    inst.edges = spanner_->edges();
    inst.weights = weights_;
    inst.k = options_.k;
    inst.z = options_.z;
    return inst;
}

const Solution& ReductionState::solve() {
    ++solves_;
    since_solve_ = 0;
    if (!inputs_changed_ && solver_runs_ > 0) return solution_;
    const auto inst = spanner_instance();
    bool fresh = solver_runs_ == 0 || !options_.warm_start;
    if (!dist_valid_) {
        spanner_dist_ = instance_distances(inst);
        dist_valid_ = true;
        fresh = true;
    }
    bool connected = true;
    for (const auto& row : spanner_dist_) {
        if (std::any_of(row.begin(), row.end(), [](Distance d) { return !is_finite(d); })) {
            connected = false;
            break;
        }
    }
    if (!connected) {
        solution_ = solve_static(inst, options_.solver);
    } else if (fresh || solution_.infeasible) {
        solution_ = solve_with_distances(spanner_dist_, weights_, options_.k, options_.z, options_.solver);
    } else {
        solution_ = improve_with_distances(spanner_dist_, weights_, options_.k, options_.z, solution_.centers,
                                           options_.solver);
    }
    ++solver_runs_;
    inputs_changed_ = false;
    return solution_;
}

bool ReductionState::maybe_solve() {
    if (++since_solve_ < options_.recompute_every) return false;
    solve();
    return true;
}

std::vector<VertexId> ReductionState::solution_vertices() const {
    std::vector<VertexId> out;
    out.reserve(solution_.centers.size());
    for (NodeId c : solution_.centers) out.push_back(centers_[c]);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<double> StepRecord::ratio() const {
    if (!cost_graph || !opt) return std::nullopt;
    if (*cost_graph == *opt) return 1.0;
    if (*opt == 0.0) return kInfinity;
    return *cost_graph / *opt;
}

std::string StepRecord::to_json(const std::string& mode) const {
    nlohmann::json out = {{"step", step},
                          {"mode", mode},
                          {"S_size", candidates},
                          {"P_size", centers},
                          {"sigma_inc", sigma_inc},
                          {"restarts", restarts},
                          {"delta_S", delta},
                          {"spanner_edges", spanner_edges},
                          {"C_size", solution_size},
                          {"cost_H", finite_or_null(cost_instance)},
                          {"cost_G", finite_or_null(cost_graph)},
                          {"opt", finite_or_null(opt)},
                          {"ratio", finite_or_null(ratio())},
                          {"resampled", resampled},
                          {"opt_infinite", opt_infinite},
                          {"infeasible", infeasible},
                          {"solved", solved},
                          {"micros", micros}};
    return out.dump();
}

Pipeline::Pipeline(DynGraph initial, const PipelineOptions& options) : options_(options) {
    options_.reduction.k = options_.bicriteria.k;
    options_.reduction.z = options_.bicriteria.z;
    graph_ = std::make_unique<DynGraph>(std::move(initial));
    bicriteria_ = std::make_unique<IncrementalBicriteria>(*graph_, options_.bicriteria);
    reduction_ = std::make_unique<ReductionState>(*graph_, *bicriteria_, options_.reduction);
    if (options_.oracle || options_.check_invariants) apsp_ = std::make_unique<IncrementalApsp>(*graph_);
    if (options_.check_invariants) {
        checker_ = std::make_unique<BicriteriaChecker>(*bicriteria_);
        check();
    }
}

Pipeline::~Pipeline() = default;

StepRecord Pipeline::step(VertexId u, VertexId v, Distance w) {
    graph_->insert_edge(u, v, w);
    if (apsp_) apsp_->insert_edge(u, v, w);
    const auto start = std::chrono::steady_clock::now();
    last_report_ = bicriteria_->handle_insertion(u, v, w);
    reduction_->apply_assignment_modifications(bicriteria_->sigma_change_feed());
    reduction_->apply_edge_insertion(u, v, w);
    const bool solved = reduction_->maybe_solve();
    const auto stop = std::chrono::steady_clock::now();
    auto rec = record(++steps_, solved);
    rec.micros = std::chrono::duration<double, std::micro>(stop - start).count();
    rec.resampled = last_report_.resampled;
    if (checker_) check();
    return rec;
}

StepRecord Pipeline::snapshot() { return record(steps_, true); }

StepRecord Pipeline::record(std::uint64_t step, bool solved) {
    StepRecord rec;
    rec.step = step;
    rec.candidates = bicriteria_->candidates().size();
    rec.centers = reduction_->num_nodes();
    rec.sigma_inc = bicriteria_->sigma_inc();
    rec.restarts = reduction_->restarts();
    rec.delta = reduction_->last_delta();
    rec.spanner_edges = reduction_->spanner().num_edges();
    rec.solution_size = reduction_->solution().centers.size();
    rec.cost_instance = reduction_->solution().cost;
    rec.opt_infinite = bicriteria_->opt_infinite();
    rec.infeasible = reduction_->solution().infeasible;
    rec.solved = solved;
    const double z = options_.bicriteria.z;
    if (options_.verify_cost) {
        const auto centers = solution();
        rec.cost_graph = clustering_cost(*graph_, centers, z);
    }
    if (options_.oracle) {
        rec.opt = brute_force_opt(apsp_->to_matrix(), options_.bicriteria.k, z, {}, options_.oracle_budget).opt;
    }
    return rec;
}

void Pipeline::check() {
    auto found = checker_->check(*bicriteria_, apsp_.get(), steps_ > 0 ? &last_report_ : nullptr);
    auto more = check_reduction(*reduction_, *apsp_, previous_weights_, &bicriteria_->assignment());
    found.insert(found.end(), more.begin(), more.end());
    for (auto& v : found) {
        v.detail = "step " + std::to_string(steps_) + ": " + v.detail;
        violations_.push_back(std::move(v));
    }
}

std::vector<Violation> check_reduction(const ReductionState& state, const IncrementalApsp& exact,
                                       std::unordered_map<std::uint64_t, Distance>& previous,
                                       const Assignment* sigma) {
    std::vector<Violation> out;
    const auto& centers = state.centers();
    const std::size_t p = centers.size();
    const double eps = state.options().eps;
    const RadiusScale scale(eps);
    const double tol = 1.0 + 1e-9;

    double total = 0.0;
    for (double w : state.weights()) total += w;
    if (total != static_cast<double>(exact.size())) {
        out.push_back({"weight_conservation", "sum of weights " + std::to_string(total) + " != n"});
    }
    if (sigma) {
        for (NodeId a = 0; a < p; ++a) {
            if (state.weights()[a] != static_cast<double>(sigma->count(centers[a]))) {
                out.push_back({"weight_is_preimage", "node " + std::to_string(a)});
            }
        }
        for (VertexId v = 0; v < sigma->size(); ++v) {
            if (state.node_of((*sigma)[v]) == kNoVertex) {
                out.push_back({"image_in_centers", "sigma(" + std::to_string(v) + ") is not a node"});
            }
        }
    }

    for (NodeId a = 0; a < p; ++a) {
        for (NodeId b = a + 1; b < p; ++b) {
            const Distance w = state.instance_weight(a, b);
            const Distance d = exact(centers[a], centers[b]);
            const std::uint64_t k = (static_cast<std::uint64_t>(a) << 32) | b;
            if (!is_finite(w)) {
                if (is_finite(d)) out.push_back({"instance_weight", "pair " + std::to_string(a) + "," +
                                                                        std::to_string(b) + " missing"});
                continue;
            }
            if (scale.value(scale.round_up(w)) != w) {
                out.push_back({"instance_weight_power", "pair weight " + std::to_string(w)});
            }
            if (w < d || w > (1 + eps) * (1 + eps) * d * tol) {
                out.push_back({"instance_weight", "pair " + std::to_string(a) + "," + std::to_string(b) + ": " +
                                                      std::to_string(w) + " vs dist " + std::to_string(d)});
            }
            const auto it = previous.find(k);
            if (it != previous.end() && w > it->second) {
                out.push_back({"instance_weight_monotone", "pair weight increased"});
            }
            previous[k] = w;
        }
    }

    const auto dh = instance_distances(state.spanner_instance());
    const double bound = (1 + eps) * (1 + eps) * state.spanner().stretch_bound();
    for (NodeId a = 0; a < p; ++a) {
        for (NodeId b = a + 1; b < p; ++b) {
            const Distance d = exact(centers[a], centers[b]);
            if (!is_finite(d)) continue;
            if (dh[a][b] < d / tol || dh[a][b] > bound * d * tol) {
                out.push_back({"spanner_sandwich", "pair " + std::to_string(a) + "," + std::to_string(b) + ": " +
                                                       std::to_string(dh[a][b]) + " vs dist " + std::to_string(d)});
            }
        }
    }
    if (state.solution().centers.size() > state.options().k) {
        out.push_back({"solution_size", std::to_string(state.solution().centers.size()) + " centers"});
    }
    return out;
}

} // namespace dynclust
