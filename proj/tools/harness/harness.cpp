#include "harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "dynclust/apsp.hpp"
#include "dynclust/cost.hpp"
#include "dynclust/generators.hpp"
#include "dynclust/log.hpp"
#include "dynclust/oracle.hpp"
#include "json.hpp"

namespace dynclust::harness {
namespace {

using Clock = std::chrono::steady_clock;

double micros_since(Clock::time_point start) {
    return std::chrono::duration<double, std::micro>(Clock::now() - start).count();
}

double percentile(std::vector<double> xs, double q) {
    if (xs.empty()) return 0.0;
    std::sort(xs.begin(), xs.end());
    const auto idx = static_cast<std::size_t>(std::ceil(q * static_cast<double>(xs.size())));
    return xs[std::min(xs.size() - 1, idx == 0 ? 0 : idx - 1)];
}

nlohmann::json timing_json(const std::vector<double>& us) {
    double total = 0.0;
    for (double x : us) total += x;
    return {{"count", us.size()},
            {"total_ms", total / 1000.0},
            {"mean_us", us.empty() ? 0.0 : total / static_cast<double>(us.size())},
            {"p50_us", percentile(us, 0.5)},
            {"p90_us", percentile(us, 0.9)},
            {"p99_us", percentile(us, 0.99)},
            {"max_us", percentile(us, 1.0)}};
}

/// log_{1+eps}(max(nW, 2)).
double log_eps(double nW, double eps) { return std::log(std::max(nW, 2.0)) / std::log1p(eps); }

int run_pipeline(const RunConfig& config, const EdgeStream& stream, std::ostream& sink, std::ostream& err) {
    auto options = config.pipeline_options();
    const bool verify = config.mode == Mode::kVerify;
    options.check_invariants = verify;
    options.verify_cost = config.verify_cost || verify;
    Pipeline pipe(build_graph(stream, config.init_prefix), options);
    const std::string mode = mode_name(config.mode);
    for (std::size_t j = config.init_prefix; j < stream.edges.size(); ++j) {
        const auto& e = stream.edges[j];
        const auto rec = pipe.step(e.u, e.v, e.w);
        if (log_enabled(LogLevel::kTrace)) log_message(LogLevel::kTrace, pipe.last_report().to_json());
        sink << rec.to_json(mode) << '\n';
    }
    if (verify && !pipe.violations().empty()) {
        err << "invariant violations: " << pipe.violations().size() << '\n'
            << format_violations(pipe.violations()) << '\n';
        return kExitViolation;
    }
    return kExitOk;
}

int run_baseline(const RunConfig& config, const EdgeStream& stream, std::ostream& sink) {
    auto g = build_graph(stream, config.init_prefix);
    const auto options = config.pipeline_options();
    std::unique_ptr<IncrementalApsp> apsp;
    if (config.oracle) apsp = std::make_unique<IncrementalApsp>(g);
    for (std::size_t j = config.init_prefix; j < stream.edges.size(); ++j) {
        const auto& e = stream.edges[j];
        g.insert_edge(e.u, e.v, e.w);
        if (apsp) apsp->insert_edge(e.u, e.v, e.w);
        const auto start = Clock::now();
        const auto res = static_recompute(g, options.bicriteria, options.reduction.solver);
        StepRecord rec;
        rec.micros = micros_since(start);
        rec.step = j - config.init_prefix + 1;
        rec.candidates = res.candidates;
        rec.solution_size = res.centers.size();
        rec.cost_instance = res.cost_instance;
        rec.cost_graph = res.cost_graph;
        rec.opt_infinite = res.opt_infinite;
        rec.infeasible = res.infeasible;
        rec.solved = true;
        if (apsp) rec.opt = brute_force_opt(apsp->to_matrix(), config.k, config.z).opt;
        sink << rec.to_json("static-baseline") << '\n';
    }
    return kExitOk;
}

int run_bench(const RunConfig& config, const EdgeStream& stream, std::ostream* sink, std::ostream& out) {
    auto options = config.pipeline_options();
    Pipeline pipe(build_graph(stream, config.init_prefix), options);
    auto baseline_graph = build_graph(stream, config.init_prefix);
    std::vector<double> incremental;
    std::vector<double> baseline;
    double last_cost_incremental = kInfinity;
    double last_cost_baseline = kInfinity;
    const std::size_t updates = stream.edges.size() - config.init_prefix;
    for (std::size_t j = config.init_prefix; j < stream.edges.size(); ++j) {
        const auto& e = stream.edges[j];
        const auto rec = pipe.step(e.u, e.v, e.w);
        incremental.push_back(rec.micros);
        if (sink) *sink << rec.to_json("bench") << '\n';
        baseline_graph.insert_edge(e.u, e.v, e.w);
        const std::size_t index = j - config.init_prefix;
        if (index % config.baseline_every == config.baseline_every - 1 || j + 1 == stream.edges.size()) {
            const auto start = Clock::now();
            const auto res = static_recompute(baseline_graph, options.bicriteria, options.reduction.solver);
            baseline.push_back(micros_since(start));
            if (j + 1 == stream.edges.size()) last_cost_baseline = res.cost_graph;
        }
    }
    if (updates > 0) last_cost_incremental = clustering_cost(pipe.graph(), pipe.solution(), config.z);

    const auto& bic = pipe.bicriteria();
    const double n = static_cast<double>(stream.n);
    const double nW = n * pipe.graph().max_weight();
    const double scale = std::log2(std::max(n, 2.0)) * log_eps(nW, config.eps);
    double incremental_total = 0.0;
    for (double x : incremental) incremental_total += x;
    double baseline_mean = 0.0;
    for (double x : baseline) baseline_mean += x;
    if (!baseline.empty()) baseline_mean /= static_cast<double>(baseline.size());
    const double baseline_estimate = baseline_mean * static_cast<double>(updates);

    auto finite = [](double x) -> nlohmann::json {
        if (is_finite(x)) return x;
        return nullptr;
    };
    nlohmann::json report = {
        {"mode", "bench"},
        {"n", stream.n},
        {"updates", updates},
        {"init_prefix", config.init_prefix},
        {"recompute_every", config.recompute_every},
        {"baseline_every", config.baseline_every},
        {"incremental", timing_json(incremental)},
        {"baseline", timing_json(baseline)},
        {"baseline_estimated_total_ms", baseline_estimate / 1000.0},
        {"speedup", incremental_total > 0.0 ? baseline_estimate / incremental_total : 0.0},
        {"resampling_phases", bic.resampling_phases()},
        {"sigma_inc", bic.sigma_inc()},
        {"restarts", pipe.reduction().restarts()},
        {"phase_constant", static_cast<double>(bic.resampling_phases()) / scale},
        {"sigma_constant", static_cast<double>(bic.sigma_inc()) / scale},
        {"S_size", bic.candidates().size()},
        {"P_size", pipe.reduction().num_nodes()},
        {"final_cost_incremental", finite(last_cost_incremental)},
        {"final_cost_baseline", finite(last_cost_baseline)},
    };
    out << report.dump() << '\n';
    return kExitOk;
}

} // namespace

Mode parse_mode(const std::string& name) {
    if (name == "incremental") return Mode::kIncremental;
    if (name == "static-baseline") return Mode::kStaticBaseline;
    if (name == "verify") return Mode::kVerify;
    if (name == "bench") return Mode::kBench;
    throw std::invalid_argument("unknown mode: " + name);
}

std::string mode_name(Mode mode) {
    switch (mode) {
    case Mode::kIncremental:
        return "incremental";
    case Mode::kStaticBaseline:
        return "static-baseline";
    case Mode::kVerify:
        return "verify";
    case Mode::kBench:
        return "bench";
    }
    return "unknown";
}

void RunConfig::validate() const {
    pipeline_options().bicriteria.validate();
    pipeline_options().reduction.validate();
    if (baseline_every < 1) throw std::invalid_argument("baseline period must be >= 1");
}

PipelineOptions RunConfig::pipeline_options() const {
    PipelineOptions o;
    o.bicriteria.alpha = alpha;
    o.bicriteria.beta = beta;
    o.bicriteria.eps = eps;
    o.bicriteria.z = z;
    o.bicriteria.k = k;
    o.bicriteria.seed = seed;
    o.reduction.k = k;
    o.reduction.z = z;
    o.reduction.eps = eps_red;
    o.reduction.lambda = lambda;
    o.reduction.seed = seed;
    o.reduction.deterministic_spanner = deterministic_spanner;
    o.reduction.recompute_every = recompute_every;
    o.oracle = oracle;
    o.verify_cost = verify_cost;
    return o;
}

int run_stream(const RunConfig& config, const EdgeStream& stream, std::ostream& out, std::ostream& err) {
    try {
        config.validate();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (config.init_prefix > stream.edges.size()) {
        err << "error: init prefix " << config.init_prefix << " exceeds the " << stream.edges.size()
            << " insertions of the stream\n";
        return kExitUsage;
    }

    std::ofstream file;
    if (!config.out.empty()) {
        file.open(config.out, std::ios::app);
        if (!file) {
            err << "error: cannot open " << config.out << " for writing\n";
            return kExitUsage;
        }
    }
    std::ostream& sink = config.out.empty() ? out : file;

    try {
        switch (config.mode) {
        case Mode::kIncremental:
        case Mode::kVerify:
            return run_pipeline(config, stream, sink, err);
        case Mode::kStaticBaseline:
            return run_baseline(config, stream, sink);
        case Mode::kBench:
            return run_bench(config, stream, config.out.empty() ? nullptr : &file, out);
        }
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << '\n';
        return kExitViolation;
    } catch (const CapabilityError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    EdgeStream stream;
    try {
        stream = read_edge_stream(config.input);
    } catch (const StreamParseError& e) {
        err << "error: " << config.input << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return run_stream(config, stream, out, err);
}

EdgeStream generate(const GenerateConfig& c) {
    if (c.kind == "gnp") return gnp_stream(c.n, c.p, c.max_weight, c.seed);
    if (c.kind == "gnm") return gnm_stream(c.n, c.m, c.max_weight, c.seed);
    if (c.kind == "two-cluster") return two_cluster_stream(c.n, c.m, c.max_weight, c.seed);
    if (c.kind == "pa") return preferential_attachment_stream(c.n, c.per_vertex, c.max_weight, c.seed);
    throw std::invalid_argument("unknown generator: " + c.kind);
}

} // namespace dynclust::harness
