/**
 * @file parallel.hpp
 * @brief Two-phase partitioned skyline: local skylines in parallel under a
 *        core budget, then one sequential merge pass, with exact
 *        dominance-test accounting per phase.
 *
 * Counting is deterministic by construction: every partition task owns its
 * counter, partitions are filled in input order, and the merge consumes
 * local skylines in ascending partition id. The core budget and the thread
 * schedule can only change wall time, never a count.
 */

#ifndef SKYPAR_PARALLEL_HPP
#define SKYPAR_PARALLEL_HPP

#include "skypar/core.hpp"
#include "skypar/partition.hpp"

namespace skypar {

/// Cost breakdown of one two-phase run.
struct PhaseMetrics {
    std::vector<std::uint64_t> per_partition_tests; // one entry per partition
    std::uint64_t parallel_max = 0;                 // max over per_partition_tests
    std::uint64_t final_tests = 0;                  // merge-phase tests
    int cores = 1;
    long long scale_factor = 1;       // ceil(partitions / cores)
    std::uint64_t simulated_cost = 0; // parallel_max * scale_factor + final_tests
    double wall_parallel_ms = 0.0;
    double wall_total_ms = 0.0;
    int max_concurrent = 0;                 // high-water mark of running tasks
    std::uint64_t tuples_into_parallel = 0; // after grid pruning
    std::uint64_t tuples_into_final = 0;    // union of local skylines
};

struct ParallelSkylineResult {
    Relation skyline;
    PhaseMetrics metrics;
};

/// Computes the skyline of r with the given plan. Phase 1 partitions r
/// (dropping grid-dominated cells first under Grid), filters each partition
/// with the representatives, and runs a local SFS skyline per partition
/// with at most `cores` partitions in flight at once. Phase 2 runs one
/// sequential SFS over the union of the local skylines.
ParallelSkylineResult parallel_skyline(const Relation& r, const PartitionPlan& plan,
                                       const RepresentativeSet& reps, int cores);

} // namespace skypar

#endif // SKYPAR_PARALLEL_HPP
