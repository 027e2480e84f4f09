/**
 * @file partition.hpp
 * @brief Data-partitioning strategies for the parallel skyline phase:
 *        grid cells, angular slices over hyperspherical coordinates, and
 *        equi-numerous slices over one sort dimension; plus cell-level
 *        dominance pruning and representative selection/filtering.
 */

#ifndef SKYPAR_PARTITION_HPP
#define SKYPAR_PARTITION_HPP

#include <compare>
#include <map>
#include <set>
#include <vector>

#include "skypar/core.hpp"

namespace skypar {

enum class Strategy { None, Grid, Angular, Sliced };

const char* strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

/// How tuples map to partitions.
///  - None:    1 partition.
///  - Grid:    slices^dims partitions, one per grid cell.
///  - Angular: slices^(dims-1) partitions over the angular coordinates.
///  - Sliced:  any partition count, equi-numerous by sort rank.
struct PartitionPlan {
    Strategy strategy = Strategy::None;
    int slices = 1;            // per-dimension slice count (Grid/Angular)
    long long partitions = 1;  // actual partition count
    int dims = 0;
};

/// Builds a plan for a target partition count. Grid and Angular cannot hit
/// every target: the slice count whose resulting partition count is closest
/// to the target is used, requiring more than one partition; at equal
/// distance the smaller slice count wins. Sliced takes the target as-is.
PartitionPlan make_plan(Strategy strategy, long long target_partitions, int dims);

/// Grid coordinates of a cell, 1-based in [1, slices] per dimension.
struct GridCell {
    std::vector<int> coords;
    auto operator<=>(const GridCell&) const = default;
};

/// Cell containing t on a grid with `slices` intervals per dimension.
/// Values must lie in [0,1]; a value of exactly 1 lands in the top cell.
GridCell grid_cell(const Tuple& t, int slices);

/// Partition id of t under Grid: sum over dimensions of the 0-based cell
/// index times slices^dimension.
long long assign_grid(const Tuple& t, int slices);

long long cell_partition_id(const GridCell& cell, int slices);

/// True iff a's coordinates are strictly smaller than b's in every
/// dimension. All tuples of a then dominate all tuples of b.
bool grid_dominates(const GridCell& a, const GridCell& b);

/// Given cell occupancy, returns the cells that are NOT grid-dominated by
/// any non-empty cell. Tuples in the discarded cells cannot be skyline
/// members and are dropped before the parallel phase.
std::set<GridCell> prune_grid_dominated(const std::map<GridCell, std::size_t>& occupancy);

/// Hyperspherical view of a tuple in the first orthant: radius plus
/// dims-1 angles in [0, pi/2]. angles[i] = atan2(|t[i+1..]|, t[i]).
struct Hyperspherical {
    double radius = 0.0;
    std::vector<double> angles;
};

Hyperspherical to_hyperspherical(const Tuple& t);

/// Partition id of t under Angular: grid partitioning applied to the
/// angular coordinates, each angle range [0, pi/2] cut into `slices`.
/// The all-zero tuple has no defined angles and goes to partition 0.
long long assign_angular(const Tuple& t, int slices);

/// Partition id under Sliced for the tuple of 1-based `rank` in the sort
/// order: floor((rank-1) * partitions / n).
long long assign_sliced(std::int64_t rank, long long partitions, std::int64_t n);

/// Partition id per tuple, in input order, for any strategy. Every tuple
/// receives exactly one id in [0, plan.partitions). Sliced ranks tuples by
/// (first attribute, id) ascending.
std::vector<long long> assign_partitions(const Relation& r, const PartitionPlan& plan);

/// Globally strong tuples shared across partitions to prune local work.
/// Members never dominate each other; their count can be below the
/// requested k because dominated picks are discarded.
struct RepresentativeSet {
    std::vector<Tuple> tuples;
    std::size_t requested = 0;

    std::size_t effective() const { return tuples.size(); }
};

/// Top-k selection with a bounded max-heap: the first k tuples seed the
/// heap, every later tuple replaces the root when it scores lower.
/// Dominated picks are then discarded (tests counted into c).
RepresentativeSet select_representatives(const Relation& r, std::size_t k,
                                         const ScoreFn& f, DominanceCounter& c);

/// Same result via an O(N) selection algorithm that pivots the k lowest
/// scores to the front, then sorts just those k.
RepresentativeSet select_representatives_quickselect(const Relation& r, std::size_t k,
                                                     const ScoreFn& f, DominanceCounter& c);

/// Removes from part every tuple dominated by some representative,
/// counting one test per (representative, tuple) comparison made.
Relation filter_with_representatives(const Relation& part, const RepresentativeSet& reps,
                                     DominanceCounter& c);

} // namespace skypar

#endif // SKYPAR_PARTITION_HPP
