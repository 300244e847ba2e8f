#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "dynclust/edge_stream.hpp"
#include "dynclust/reduction.hpp"

namespace dynclust::harness {

enum class Mode { kIncremental, kStaticBaseline, kVerify, kBench };

/// Parses incremental, static-baseline, verify or bench. Throws
/// std::invalid_argument otherwise.
Mode parse_mode(const std::string& name);
std::string mode_name(Mode mode);

struct RunConfig {
    std::string input;
    Mode mode = Mode::kIncremental;
    std::size_t k = 1;
    double z = 1.0;
    double alpha = 4.0;
    double beta = 0.25;
    double eps = 0.1;
    double eps_red = 0.25;
    std::size_t lambda = 2;
    std::uint64_t seed = 1;
    bool oracle = false;
    bool verify_cost = false;
    /// Metrics destination; standard output when empty.
    std::string out;
    /// Insertions applied before the first tracked update.
    std::size_t init_prefix = 0;
    /// Re-solve every q-th update (q > 1 departs from the per-update rule).
    std::size_t recompute_every = 1;
    /// Bench: time the static baseline on every s-th update only.
    std::size_t baseline_every = 1;
    bool deterministic_spanner = false;

    /// Throws std::invalid_argument on out-of-range parameters.
    void validate() const;
    PipelineOptions pipeline_options() const;
};

/// Exit codes of cmd_run.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs the configured mode over the stream at config.input. Errors go to
/// `err`; metrics lines go to config.out or `out`.
int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Same, over an already parsed stream.
int run_stream(const RunConfig& config, const EdgeStream& stream, std::ostream& out, std::ostream& err);

struct GenerateConfig {
    std::string kind = "gnm";
    std::size_t n = 100;
    std::size_t m = 300;
    double p = 0.05;
    std::size_t per_vertex = 2;
    std::uint32_t max_weight = 100;
    std::uint64_t seed = 1;
};

/// kind is gnp, gnm, two-cluster or pa. Throws std::invalid_argument otherwise.
EdgeStream generate(const GenerateConfig& config);

} // namespace dynclust::harness
