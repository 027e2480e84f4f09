/**
 * @file gres.hpp
 * @brief Grid projection and the grid-resistance indicator.
 *
 * Grid resistance measures how coarse a value quantization a skyline tuple
 * survives: snapping every tuple to a grid with g intervals per dimension
 * collapses nearby values and can create new dominance. The indicator of a
 * tuple is the smallest 1/g at which its projection becomes dominated, or
 * 1 if that never happens. Only interval counts up to an input-dependent
 * bound can create new dominance, so the scan runs from that bound down
 * to 2, recording the first g at which each tuple's projection exits.
 */

#ifndef SKYPAR_GRES_HPP
#define SKYPAR_GRES_HPP

#include <map>
#include <optional>

#include "skypar/parallel.hpp"

namespace skypar {

/// Snaps every value of t down to the lowest corner of its grid cell:
/// floor(v * intervals) / intervals. Ids are preserved.
Tuple snap_to_grid(const Tuple& t, int intervals);

Relation snap_relation(const Relation& r, int intervals);

/// Largest interval count worth testing: floor(1 / gap) where gap is the
/// smallest non-zero same-attribute difference between any two tuples;
/// finer grids cannot collapse distinct values. Clamped by cap when given.
/// Throws if every attribute is constant, or if the bound overflows the
/// integer range and no cap is set.
int max_grid_intervals(const Relation& r, std::optional<int> cap);

/// Cost of one interval count in the resistance scan.
struct IterationCost {
    int intervals = 0;
    std::uint64_t parallel_max = 0;
    std::uint64_t final_tests = 0;
};

/// Accumulated accounting over the whole scan. Representative-selection
/// tests are reported on their own, outside both phases.
struct ResistanceMetrics {
    int g_max = 1;
    long long scale_factor = 1;
    std::vector<IterationCost> iterations; // descending interval counts
    std::uint64_t parallel_max_sum = 0;
    std::uint64_t final_sum = 0;
    std::uint64_t simulated_cost = 0; // sum of per-iteration parallel_max*scale + final
    std::uint64_t rep_tests = 0;
    double rep_effective_mean = 0.0; // mean surviving representatives per iteration
    double wall_parallel_ms = 0.0;
    double wall_total_ms = 0.0;
};

struct GridResistanceResult {
    /// Tuple id -> resistance denominator: 1 when the tuple never exits,
    /// otherwise the largest interval count g (in [2, g_max]) whose grid
    /// collapses it; the indicator value is 1/denominator.
    std::map<std::int64_t, int> denominators;
    ResistanceMetrics metrics;
};

/// Runs the descending-g scan over a skyline. Each iteration computes the
/// skyline of the projected relation through parallel_skyline with the
/// given plan; representatives are re-selected from each projection when
/// rep_count > 0. The input must itself be a skyline (no member dominates
/// another); builds without NDEBUG verify this and throw on violation.
/// The result map does not depend on plan, rep_count or cores.
GridResistanceResult grid_resistance(const Relation& skyline, const PartitionPlan& plan,
                                     std::size_t rep_count, int cores,
                                     std::optional<int> cap);

} // namespace skypar

#endif // SKYPAR_GRES_HPP
