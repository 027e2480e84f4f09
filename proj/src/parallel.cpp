#include "skypar/parallel.hpp"

#include <atomic>
#include <chrono>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace skypar {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

} // namespace

ParallelSkylineResult parallel_skyline(const Relation& r, const PartitionPlan& plan,
                                       const RepresentativeSet& reps, int cores) {
    if (cores < 1) throw std::invalid_argument("parallel_skyline: cores must be >= 1");
    const auto t_start = Clock::now();
    const long long p = plan.partitions;

    std::vector<long long> pids = assign_partitions(r, plan);

    // Grid: cells dominated by a non-empty cell never enter phase 1.
    std::vector<bool> keep(r.size(), true);
    if (plan.strategy == Strategy::Grid && !r.empty()) {
        std::map<GridCell, std::size_t> occupancy;
        std::vector<GridCell> cells(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) {
            cells[i] = grid_cell(r.tuples[i], plan.slices);
            ++occupancy[cells[i]];
        }
        std::set<GridCell> survivors = prune_grid_dominated(occupancy);
        for (std::size_t i = 0; i < r.size(); ++i)
            keep[i] = survivors.count(cells[i]) > 0;
    }

    std::vector<Relation> parts(p, Relation(r.dims));
    std::uint64_t entered = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!keep[i]) continue;
        parts[pids[i]].tuples.push_back(r.tuples[i]);
        ++entered;
    }

    // phase 1: local skylines, bounded by the core budget
    std::vector<DominanceCounter> counters(p);
    std::vector<Relation> locals(p, Relation(r.dims));
    std::atomic<int> in_flight{0};
    std::atomic<int> high_water{0};

    const auto t_parallel = Clock::now();
    [[maybe_unused]] const int threads =
        static_cast<int>(std::min<long long>(cores, std::max<long long>(p, 1)));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (long long pid = 0; pid < p; ++pid) {
        int running = in_flight.fetch_add(1, std::memory_order_relaxed) + 1;
        int seen = high_water.load(std::memory_order_relaxed);
        while (running > seen &&
               !high_water.compare_exchange_weak(seen, running, std::memory_order_relaxed)) {
        }
        Relation filtered = filter_with_representatives(parts[pid], reps, counters[pid]);
        locals[pid] = skyline_sfs(filtered, counters[pid]);
        in_flight.fetch_sub(1, std::memory_order_relaxed);
    }
    const double wall_parallel = ms_since(t_parallel);

    // phase 2: sequential skyline of the union, ascending partition id
    Relation merged(r.dims);
    for (long long pid = 0; pid < p; ++pid)
        for (Tuple& t : locals[pid].tuples) merged.tuples.push_back(std::move(t));

    ParallelSkylineResult result;
    DominanceCounter final_counter;
    result.metrics.tuples_into_final = merged.size();
    result.skyline = skyline_sfs(merged, final_counter);

    PhaseMetrics& m = result.metrics;
    m.per_partition_tests.reserve(p);
    for (const DominanceCounter& pc : counters) {
        m.per_partition_tests.push_back(pc.count);
        if (pc.count > m.parallel_max) m.parallel_max = pc.count;
    }
    m.final_tests = final_counter.count;
    m.cores = cores;
    m.scale_factor = (p + cores - 1) / cores;
    m.simulated_cost = m.parallel_max * static_cast<std::uint64_t>(m.scale_factor) + m.final_tests;
    m.max_concurrent = high_water.load();
    m.tuples_into_parallel = entered;
    m.wall_parallel_ms = wall_parallel;
    m.wall_total_ms = ms_since(t_start);
    return result;
}

} // namespace skypar
