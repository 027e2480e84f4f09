/**
 * @file harness.hpp
 * @brief Experiment pipeline: dataset ingestion or generation, min-max
 *        normalization, the skyline / grid-resistance runs, and report
 *        emission.
 *
 * Dataset files are plain UTF-8 CSV: a header line, comma separators,
 * decimal-point doubles, one tuple per row, no negative values. Width is
 * the header's column count; tuple ids follow row order.
 */

#ifndef SKYPAR_HARNESS_HPP
#define SKYPAR_HARNESS_HPP

#include <iosfwd>
#include <optional>

#include "skypar/datagen.hpp"
#include "skypar/gres.hpp"
#include "skypar/metrics.hpp"

namespace skypar {

Relation read_dataset_csv(std::istream& in, const std::string& name);
Relation load_dataset_csv(const std::string& path);

/// Writes the dataset CSV format; values in shortest round-trip form, so
/// reading the file back reproduces the relation exactly.
void write_dataset_csv(const Relation& r, std::ostream& out);

/// Per-attribute min-max scaling to [0,1]; constant attributes map to 0.
Relation normalize(const Relation& r);

struct ExperimentConfig {
    std::optional<std::string> dataset_path; // exactly one of these
    std::optional<Distribution> gen;         // two must be set
    std::size_t n = 1'000'000;               // generated tuple count
    int dims = 3;
    std::uint64_t seed = 1;

    Strategy strategy = Strategy::None;
    long long target_partitions = 16;
    int rep_count = 0;
    int cores = 16;
    std::optional<int> cap = 25; // nullopt = exact interval bound
    int repetitions = 1;         // instance i uses seed + i
    bool normalize_input = false;
    std::string mode = "gres"; // "skyline" | "gres"

    /// Cross-check results against the brute-force references; refuses
    /// inputs beyond kOracleMaxN tuples / kOracleMaxSkyline skyline tuples.
    bool oracle_check = false;

    std::optional<std::string> out_path; // report written here when set
    ReportFormat format = ReportFormat::Csv;
};

inline constexpr std::size_t kOracleMaxN = 2000;
inline constexpr std::size_t kOracleMaxSkyline = 600;

/// Runs the full pipeline, repetitions times: load or generate, normalize
/// if asked, dataset skyline, then (mode "gres") the resistance scan over
/// it; aggregates the per-instance reports and writes the result to
/// out_path when set. Wall-clock fields are zeroed in the returned report
/// so report files stay byte-reproducible; timings are still available
/// from the phase metrics of the underlying calls (see the bench tool).
RunReport run_experiment(const ExperimentConfig& cfg);

/// A sweep varies any of the operating parameters; the cross-product of
/// all listed values is run, one report per combination. Empty vectors
/// fall back to the base config's value.
struct SweepConfig {
    ExperimentConfig base;
    std::vector<std::size_t> n_values;
    std::vector<int> dim_values;
    std::vector<Strategy> strategies;
    std::vector<long long> partition_targets;
    std::vector<int> rep_counts;
    std::vector<int> core_budgets;
};

/// Expands the cross-product in a fixed order (n, dims, strategy,
/// partitions, reps, cores; later fields vary fastest). Output paths are
/// cleared on the expanded configs; run_sweep owns the writing.
std::vector<ExperimentConfig> expand_sweep(const SweepConfig& sweep);

/// Runs every combination and writes all reports to base.out_path (one
/// CSV table or one JSONL line per report).
std::vector<RunReport> run_sweep(const SweepConfig& sweep);

} // namespace skypar

#endif // SKYPAR_HARNESS_HPP
