// Benchmark comparing the serial reference skyline (plain SFS, one core)
// against the partitioned OpenMP path for each strategy, on the dataset
// skyline and on the full grid-resistance scan. Reports dominance-test
// counts next to measured wall times.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skypar/datagen.hpp"
#include "skypar/gres.hpp"
#include "skypar/harness.hpp"

using namespace skypar;

namespace {

struct Line {
    std::string label;
    std::uint64_t parallel_max = 0;
    std::uint64_t final_tests = 0;
    std::uint64_t simulated_cost = 0;
    double wall_ms = 0;
};

void print_table(const char* title, const std::vector<Line>& lines) {
    std::printf("%s\n", title);
    std::printf("  %-10s %15s %15s %15s %12s %9s\n", "strategy", "parallel_max",
                "final_tests", "simulated", "wall_ms", "speedup");
    double base = lines.empty() ? 0.0 : lines.front().wall_ms;
    for (const Line& l : lines)
        std::printf("  %-10s %15llu %15llu %15llu %12.2f %8.2fx\n", l.label.c_str(),
                    static_cast<unsigned long long>(l.parallel_max),
                    static_cast<unsigned long long>(l.final_tests),
                    static_cast<unsigned long long>(l.simulated_cost), l.wall_ms,
                    l.wall_ms > 0 ? base / l.wall_ms : 0.0);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"compare the serial skyline reference with the partitioned OpenMP path"};
    std::size_t n = 100000;
    int dims = 3;
    std::string gen_name = "ant";
    std::uint64_t seed = 1;
    long long partitions = 16;
    int cores = 16;
    int cap = 25;
    std::size_t reps = 0;

    app.add_option("--n", n)->capture_default_str();
    app.add_option("--d", dims)->capture_default_str();
    app.add_option("--gen", gen_name)->check(CLI::IsMember({"uni", "ant"}))
        ->capture_default_str();
    app.add_option("--seed", seed)->capture_default_str();
    app.add_option("--partitions", partitions)->capture_default_str();
    app.add_option("--cores", cores)->capture_default_str();
    app.add_option("--cap", cap)->capture_default_str();
    app.add_option("--reps", reps)->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    try {
        Relation data = generate(GenSpec{n, dims, distribution_from_name(gen_name), seed});
        std::printf("dataset %s n=%zu d=%d, partitions=%lld cores=%d cap=%d reps=%zu\n\n",
                    gen_name.c_str(), n, dims, partitions, cores, cap, reps);

        // serial reference first, then each OpenMP strategy
        std::vector<Line> sky_lines;
        Relation skyline;
        {
            auto t0 = std::chrono::steady_clock::now();
            DominanceCounter c;
            skyline = skyline_sfs(data, c);
            double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
            sky_lines.push_back({"serial", c.count, 0, c.count, ms});
        }
        for (Strategy s : {Strategy::None, Strategy::Grid, Strategy::Angular, Strategy::Sliced}) {
            PartitionPlan plan = make_plan(s, partitions, dims);
            DominanceCounter rc;
            RepresentativeSet rset = select_representatives(data, reps, sum_score, rc);
            ParallelSkylineResult r = parallel_skyline(data, plan, rset, cores);
            sky_lines.push_back({strategy_name(s), r.metrics.parallel_max,
                                 r.metrics.final_tests, r.metrics.simulated_cost,
                                 r.metrics.wall_total_ms});
        }
        std::printf("dataset skyline: %zu tuples\n", skyline.size());
        print_table("phase: skyline of the full dataset", sky_lines);

        std::vector<Line> gres_lines;
        for (Strategy s : {Strategy::None, Strategy::Grid, Strategy::Angular, Strategy::Sliced}) {
            PartitionPlan plan = make_plan(s, partitions, dims);
            int run_cores = s == Strategy::None ? 1 : cores;
            GridResistanceResult g = grid_resistance(skyline, plan, reps, run_cores, cap);
            gres_lines.push_back({s == Strategy::None ? "serial" : strategy_name(s),
                                  g.metrics.parallel_max_sum, g.metrics.final_sum,
                                  g.metrics.simulated_cost, g.metrics.wall_total_ms});
        }
        std::printf("\n");
        print_table("phase: grid-resistance scan over the skyline", gres_lines);
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
