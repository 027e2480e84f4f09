// Command-line front end: generates or ingests a dataset, computes its
// skyline and optionally the grid-resistance indicator under a chosen
// partitioning strategy, and emits run reports. The operating parameters
// accept comma-separated lists; the full cross-product is run, one report
// per combination.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skypar/harness.hpp"

int main(int argc, char** argv) {
    CLI::App app{"skyline and grid-resistance benchmark"};

    std::string dataset_path;
    std::string gen_name;
    std::vector<std::string> strategy_names;
    std::string format_name = "csv";
    std::string out_path;
    skypar::SweepConfig sweep;
    skypar::ExperimentConfig& cfg = sweep.base;
    int cap = 25;

    auto* dataset_opt =
        app.add_option("--dataset", dataset_path, "CSV dataset file (header + numeric rows)");
    auto* gen_opt = app.add_option("--gen", gen_name, "generate a synthetic dataset: uni|ant")
                        ->check(CLI::IsMember({"uni", "ant"}));
    dataset_opt->excludes(gen_opt);
    app.add_option("--n", sweep.n_values, "generated tuple count (list sweeps)")
        ->delimiter(',')
        ->default_str("1000000");
    app.add_option("--d", sweep.dim_values, "generated dimension count (list sweeps)")
        ->delimiter(',')
        ->check(CLI::PositiveNumber)
        ->default_str("3");
    app.add_option("--seed", cfg.seed, "base seed; instance i uses seed+i")
        ->capture_default_str();
    app.add_option("--strategy", strategy_names,
                   "partitioning: none|grid|angular|sliced (list sweeps)")
        ->delimiter(',')
        ->check(CLI::IsMember({"none", "grid", "angular", "sliced"}))
        ->default_str("none");
    app.add_option("--partitions", sweep.partition_targets,
                   "target partition count (grid/angular use the closest feasible; list sweeps)")
        ->delimiter(',')
        ->check(CLI::PositiveNumber)
        ->default_str("16");
    app.add_option("--reps", sweep.rep_counts,
                   "representative tuples for pre-filtering (list sweeps)")
        ->delimiter(',')
        ->check(CLI::NonNegativeNumber)
        ->default_str("0");
    app.add_option("--cores", sweep.core_budgets,
                   "core budget for the parallel phase (list sweeps)")
        ->delimiter(',')
        ->check(CLI::PositiveNumber)
        ->default_str("16");
    app.add_option("--cap", cap, "ceiling for the grid interval bound")
        ->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    app.add_option("--repeat", cfg.repetitions, "instances to generate and average")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("--normalize", cfg.normalize_input, "min-max scale each attribute to [0,1]");
    app.add_option("--out", out_path, "report file (stdout when omitted)");
    app.add_option("--format", format_name, "report format: csv|jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}))
        ->capture_default_str();
    app.add_option("--mode", cfg.mode, "skyline: stop after the dataset skyline; gres: full scan")
        ->check(CLI::IsMember({"skyline", "gres"}))
        ->capture_default_str();
    app.add_flag("--oracle", cfg.oracle_check,
                 "cross-check results against the brute-force reference (small inputs only)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!dataset_path.empty()) cfg.dataset_path = dataset_path;
        if (!gen_name.empty()) cfg.gen = skypar::distribution_from_name(gen_name);
        if (!cfg.dataset_path && !cfg.gen)
            throw std::runtime_error("one of --dataset and --gen is required");
        for (const std::string& name : strategy_names)
            sweep.strategies.push_back(skypar::strategy_from_name(name));
        cfg.format = skypar::report_format_from_name(format_name);
        cfg.cap = cap;
        if (!out_path.empty()) cfg.out_path = out_path;

        std::vector<skypar::RunReport> reports = skypar::run_sweep(sweep);
        if (!cfg.out_path) std::cout << skypar::serialize_reports(reports, cfg.format);
        for (const skypar::RunReport& report : reports)
            std::cerr << report.dataset << " " << report.strategy << " p=" << report.partitions
                      << " rep=" << report.rep_requested << " cores=" << report.cores
                      << ": skyline size " << report.skyline_size << ", simulated cost "
                      << report.simulated_cost << " over " << report.instances
                      << " instance(s)\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
