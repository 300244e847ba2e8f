#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "dynclust/oracle.hpp"
#include "harness.hpp"

namespace h = dynclust::harness;

int main(int argc, char** argv) {
    CLI::App app{"Incremental (k,z)-clustering on edge-insertion streams"};
    app.require_subcommand(1);

    h::RunConfig run;
    std::string mode = "incremental";
    auto* run_cmd = app.add_subcommand("run", "Run a mode over an edge stream");
    run_cmd->add_option("--mode", mode, "incremental, static-baseline, verify or bench")
        ->check(CLI::IsMember({"incremental", "static-baseline", "verify", "bench"}));
    run_cmd->add_option("--input", run.input, "Edge stream file")->required();
    run_cmd->add_option("--k", run.k, "Number of centers")->required();
    run_cmd->add_option("--z", run.z, "Distance exponent")->required();
    run_cmd->add_option("--alpha", run.alpha, "Sampling multiplier")->capture_default_str();
    run_cmd->add_option("--beta", run.beta, "Ball fraction per level")->capture_default_str();
    run_cmd->add_option("--eps", run.eps, "Bicriteria radius base")->capture_default_str();
    run_cmd->add_option("--eps-red", run.eps_red, "Reduction oracle accuracy")->capture_default_str();
    run_cmd->add_option("--lambda", run.lambda, "Spanner stretch parameter")->capture_default_str();
    run_cmd->add_option("--seed", run.seed, "Random seed")->capture_default_str();
    run_cmd->add_flag("--oracle", run.oracle, "Exhaustive optimum per update (small graphs)");
    run_cmd->add_flag("--verify-cost", run.verify_cost, "Exact cost of the solution in G per update");
    run_cmd->add_option("--out", run.out, "Append metrics lines here instead of stdout");
    run_cmd->add_option("--init-prefix", run.init_prefix, "Insertions applied before tracking starts");
    run_cmd->add_option("--recompute-every", run.recompute_every, "Re-solve every q-th update")
        ->capture_default_str();
    run_cmd->add_option("--baseline-every", run.baseline_every, "Bench: time the baseline every s-th update")
        ->capture_default_str();
    run_cmd->add_flag("--deterministic-spanner", run.deterministic_spanner, "Greedy per-class spanner");

    h::GenerateConfig gen;
    std::string gen_out;
    auto* gen_cmd = app.add_subcommand("generate", "Write a synthetic edge stream");
    gen_cmd->add_option("--kind", gen.kind, "gnp, gnm, two-cluster or pa")
        ->check(CLI::IsMember({"gnp", "gnm", "two-cluster", "pa"}))
        ->capture_default_str();
    gen_cmd->add_option("--n", gen.n, "Vertices")->capture_default_str();
    gen_cmd->add_option("--m", gen.m, "Insertions (gnm, two-cluster)")->capture_default_str();
    gen_cmd->add_option("--p", gen.p, "Edge probability (gnp)")->capture_default_str();
    gen_cmd->add_option("--per-vertex", gen.per_vertex, "Edges per new vertex (pa)")->capture_default_str();
    gen_cmd->add_option("--max-weight", gen.max_weight, "Largest edge weight")->capture_default_str();
    gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
    gen_cmd->add_option("--out", gen_out, "Output file (stdout if omitted)");

    std::string property;
    std::size_t trials = 200;
    std::uint64_t trial_seed = 1;
    auto* trials_cmd = app.add_subcommand("trials", "Seeded trials of a probabilistic property");
    trials_cmd->add_option("--property", property, "nu-vs-mu, candidate-set-size or bicriteria-ratio")->required();
    trials_cmd->add_option("--trials", trials)->capture_default_str();
    trials_cmd->add_option("--seed", trial_seed)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : h::kExitUsage;
    }

    if (*run_cmd) {
        run.mode = h::parse_mode(mode);
        return h::cmd_run(run, std::cout, std::cerr);
    }
    if (*gen_cmd) {
        const auto stream = h::generate(gen);
        if (gen_out.empty()) {
            dynclust::write_edge_stream(std::cout, stream);
        } else {
            std::ofstream out(gen_out);
            if (!out) {
                std::cerr << "error: cannot open " << gen_out << '\n';
                return h::kExitUsage;
            }
            dynclust::write_edge_stream(out, stream);
        }
        return 0;
    }
    try {
        const auto report = dynclust::whp_trial_suite(property, trials, trial_seed);
        std::cout << report.to_json() << '\n';
        return report.pass_fraction() >= 0.95 ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return h::kExitUsage;
    }
}
