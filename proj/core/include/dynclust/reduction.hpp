#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dynclust/apsp.hpp"
#include "dynclust/graph.hpp"
#include "dynclust/invariants.hpp"
#include "dynclust/kz_static.hpp"
#include "dynclust/mpbi_incremental.hpp"
#include "dynclust/spanner.hpp"
#include "dynclust/sssp.hpp"

namespace dynclust {

struct ReductionOptions {
    std::size_t k = 1;
    double z = 1.0;
    /// Oracle accuracy and rounding base of the instance weights, in (0, 1/2).
    double eps = 0.25;
    std::size_t lambda = 2;
    bool deterministic_spanner = false;
    std::uint64_t seed = 1;
    SolverOptions solver{};
    /// Re-solve only every q-th update. Values above 1 depart from
    /// re-solving after every update and exist for benchmarking.
    std::size_t recompute_every = 1;
    /// Between spanner restarts, re-solve by local search from the previous
    /// centers instead of seeding from scratch.
    bool warm_start = true;

    void validate() const;
};

/// Weighted instance over the centers S = sigma_max(V): per-center distance
/// oracles, rounded symmetric weights, vertex weights |sigma^{-1}(s)|, a
/// spanner of it, and the current solution on the spanner.
///
/// Node j of the instance is vertex centers()[j]; nodes are numbered in
/// order of arrival.
class ReductionState {
public:
    /// The graph and bicriteria state are held by reference. Nodes start as
    /// sigma_max(V) of `bicriteria`.
    ReductionState(const DynGraph& g, const IncrementalBicriteria& bicriteria, const ReductionOptions& options);

    /// Weight updates and new centers from one sigma batch. Restarts the
    /// spanner when the center set grew.
    void apply_assignment_modifications(const SigmaBatch& batch);
    /// Forwards (u, v, w), already in the graph, to every center oracle and
    /// pushes the resulting weight decreases to the spanner. Returns |Delta_S|.
    std::size_t apply_edge_insertion(VertexId u, VertexId v, Distance w);
    /// Re-solves on the spanner (unconditionally).
    const Solution& solve();
    /// Re-solves when the recompute period is due; returns whether it did.
    bool maybe_solve();

    const ReductionOptions& options() const { return options_; }
    std::size_t num_nodes() const { return centers_.size(); }
    const std::vector<VertexId>& centers() const { return centers_; }
    /// Instance node of vertex v, or kNoVertex.
    VertexId node_of(VertexId v) const { return node_of_[v]; }
    const std::vector<double>& weights() const { return weights_; }
    /// Current instance weight of the pair, +infinity when absent.
    Distance instance_weight(NodeId a, NodeId b) const;
    std::vector<WeightedEdge> instance_edges() const;
    const DynamicSpanner& spanner() const { return *spanner_; }
    const DistanceOracle& oracle(NodeId a) const { return *oracles_[a]; }

    const Solution& solution() const { return solution_; }
    /// Solution centers as graph vertices.
    std::vector<VertexId> solution_vertices() const;
    WeightedInstance spanner_instance() const;

    std::size_t restarts() const { return spanner_->restarts(); }
    std::size_t last_delta() const { return last_delta_; }
    std::size_t delta_volume() const { return delta_volume_; }
    std::size_t solves() const { return solves_; }
    /// Solves that actually ran the solver; the rest found distances and
    /// weights unchanged and kept the previous (identical) solution.
    std::size_t solver_runs() const { return solver_runs_; }

private:
    static std::uint64_t key(NodeId a, NodeId b);
    void add_center(VertexId c);
    void rebuild_spanner();
    void relax(const WeightedEdge& e);
    void absorb(const SpannerDelta& delta);
    SpannerOptions spanner_options() const;

    const DynGraph* graph_;
    ReductionOptions options_;
    RadiusScale scale_;
    std::vector<VertexId> centers_;
    std::vector<VertexId> node_of_;
    std::vector<double> weights_;
    std::vector<std::unique_ptr<DistanceOracle>> oracles_;
    std::unordered_map<std::uint64_t, Distance> weight_;
    std::unique_ptr<DynamicSpanner> spanner_;
    Solution solution_;
    std::size_t last_delta_ = 0;
    std::size_t delta_volume_ = 0;
    std::size_t solves_ = 0;
    std::size_t solver_runs_ = 0;
    std::size_t since_solve_ = 0;

    // All-pairs distances on the spanner, kept current under additions and
    // decreases; restarts invalidate them.
    std::vector<std::vector<Distance>> spanner_dist_;
    bool dist_valid_ = false;
    bool inputs_changed_ = true;
};

/// One line of the per-update metrics stream.
struct StepRecord {
    std::uint64_t step = 0;
    std::size_t candidates = 0;
    std::size_t centers = 0;
    std::size_t sigma_inc = 0;
    std::size_t restarts = 0;
    std::size_t delta = 0;
    std::size_t spanner_edges = 0;
    std::size_t solution_size = 0;
    double cost_instance = kInfinity;
    std::optional<double> cost_graph;
    std::optional<double> opt;
    bool resampled = false;
    bool opt_infinite = false;
    bool infeasible = false;
    bool solved = false;
    double micros = 0.0;

    std::optional<double> ratio() const;
    std::string to_json(const std::string& mode) const;
};

struct PipelineOptions {
    MpbiParams bicriteria{};
    ReductionOptions reduction{};
    /// Exact cost of the solution in G after every step.
    bool verify_cost = false;
    /// Exhaustive optimum after every step (small graphs only).
    bool oracle = false;
    std::size_t oracle_budget = 4060;
    /// Structural checks after every step; violations are collected.
    bool check_invariants = false;
};

/// Bicriteria layer plus reduction over a graph the pipeline owns.
class Pipeline {
public:
    /// Starts from `initial` (possibly with edges). k and z of the reduction
    /// are taken from the bicriteria params.
    Pipeline(DynGraph initial, const PipelineOptions& options);
    ~Pipeline();
    Pipeline(const Pipeline&) = delete;
    Pipeline& operator=(const Pipeline&) = delete;

    /// Inserts (u, v, w) and runs both layers. Throws std::invalid_argument
    /// for edges the graph rejects.
    StepRecord step(VertexId u, VertexId v, Distance w);
    /// Record describing the state right after construction (step 0 baseline).
    StepRecord snapshot();

    const DynGraph& graph() const { return *graph_; }
    const IncrementalBicriteria& bicriteria() const { return *bicriteria_; }
    const ReductionState& reduction() const { return *reduction_; }
    std::vector<VertexId> solution() const { return reduction_->solution_vertices(); }
    const std::vector<Violation>& violations() const { return violations_; }
    const UpdateReport& last_report() const { return last_report_; }

private:
    StepRecord record(std::uint64_t step, bool solved);
    void check();

    PipelineOptions options_;
    std::unique_ptr<DynGraph> graph_;
    std::unique_ptr<IncrementalBicriteria> bicriteria_;
    std::unique_ptr<ReductionState> reduction_;
    std::unique_ptr<IncrementalApsp> apsp_;
    std::unique_ptr<BicriteriaChecker> checker_;
    std::unordered_map<std::uint64_t, Distance> previous_weights_;
    std::vector<Violation> violations_;
    UpdateReport last_report_;
    std::uint64_t steps_ = 0;
};

/// Reduction-level laws: sum of weights equals n, weights are powers of
/// (1+eps), instance weights never below graph distances, spanner distances
/// within (1+eps)^2 times the stretch bound of graph distances, |C| <= k,
/// and per-pair weights non-increasing against `previous` (updated in place).
/// With `sigma` given, also wt(s) = |sigma^{-1}(s)| and image(sigma) within
/// the nodes.
std::vector<Violation> check_reduction(const ReductionState& state, const IncrementalApsp& exact,
                                       std::unordered_map<std::uint64_t, Distance>& previous,
                                       const Assignment* sigma = nullptr);

} // namespace dynclust
