/**
 * @file metrics.hpp
 * @brief Run reports: per-iteration dominance-test records, derived
 *        simulated parallel cost, aggregation over repeated instances, and
 *        lossless CSV / JSON-lines serialization.
 *
 * The simulated cost of a run is sum over iterations of
 * parallel_max * ceil(partitions/cores), plus the sum of final-phase
 * tests: a hardware-independent proxy for a parallel execution where the
 * heaviest partition paces each wave of tasks.
 *
 * CSV is a long format: one line per iteration record with the config and
 * totals repeated, so a report with no records serializes to a header-only
 * file. JSON-lines holds one complete report per line and round-trips any
 * report. All doubles are printed in shortest round-trip form.
 */

#ifndef SKYPAR_METRICS_HPP
#define SKYPAR_METRICS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace skypar {

enum class ReportFormat { Csv, JsonLines };

ReportFormat report_format_from_name(const std::string& name);

/// One record of the indicator scan: the heaviest partition's tests and
/// the merge-phase tests at one interval count. A whole-dataset skyline
/// run (mode "skyline") is represented as a single record with
/// intervals == 0.
struct ReportRow {
    int intervals = 0;
    double parallel_max = 0;
    double final_tests = 0;
    bool operator==(const ReportRow&) const = default;
};

struct RunReport {
    // config echo
    std::string dataset; // "uni", "ant", or the input file name
    std::string mode;    // "skyline" | "gres"
    std::uint64_t n = 0;
    int dims = 0;
    std::string strategy;
    int slices = 1;
    long long partitions = 1;
    int rep_requested = 0;
    int cores = 1;
    int cap = 0; // 0 = uncapped
    bool normalized = false;
    std::uint64_t seed = 0;

    int instances = 1; // how many single runs this report averages
    int g_max = 0;     // interval bound of the scan; 0 in skyline mode

    // results (doubles: averaging produces fractional values)
    double skyline_size = 0;
    double rep_effective = 0;
    double rep_tests = 0;
    double input_parallel_max = 0; // dataset-skyline phase, heaviest partition
    double input_final_tests = 0;  // dataset-skyline phase, merge
    std::vector<ReportRow> rows;
    double parallel_max_sum = 0;
    double final_sum = 0;
    double simulated_cost = 0;
    double wall_parallel_ms = 0;
    double wall_total_ms = 0;
    std::map<int, double> resistance_hist; // denominator -> tuple count

    bool operator==(const RunReport&) const = default;
};

/// ceil(partitions / cores), the wave count of the simulated execution.
long long report_scale_factor(const RunReport& r);

/// Canonical recomputation of the simulated cost from the records.
double simulated_cost_from_rows(const std::vector<ReportRow>& rows, long long scale_factor);

/// Arithmetic mean over reports that share every config field except the
/// seed (g_max and the record interval sequence must also agree). Records
/// and histogram buckets are averaged position- and bucket-wise; totals
/// are then recomputed from the averaged records so that the sum
/// invariants keep holding exactly. `instances` accumulates.
RunReport aggregate_reports(const std::vector<RunReport>& reports);

std::string serialize_report(const RunReport& report, ReportFormat format);
std::string serialize_reports(const std::vector<RunReport>& reports, ReportFormat format);
std::vector<RunReport> parse_reports(const std::string& text, ReportFormat format);

} // namespace skypar

#endif // SKYPAR_METRICS_HPP
