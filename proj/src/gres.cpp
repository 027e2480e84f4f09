#include "skypar/gres.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <unordered_set>

namespace skypar {

namespace {

// Smallest non-zero same-attribute gap, or nullopt if all attributes are
// constant. Sorting per attribute finds it in O(d N log N).
std::optional<double> min_positive_gap(const Relation& r) {
    double min_gap = std::numeric_limits<double>::infinity();
    std::vector<double> column(r.size());
    for (std::size_t j = 0; j < r.dims; ++j) {
        for (std::size_t i = 0; i < r.size(); ++i) column[i] = r.tuples[i].values[j];
        std::sort(column.begin(), column.end());
        for (std::size_t i = 1; i < column.size(); ++i) {
            double gap = column[i] - column[i - 1];
            if (gap > 0.0 && gap < min_gap) min_gap = gap;
        }
    }
    if (!std::isfinite(min_gap)) return std::nullopt;
    return min_gap;
}

int intervals_from_gap(double gap, std::optional<int> cap) {
    if (cap && 1.0 / gap >= static_cast<double>(*cap)) return *cap;
    double bound = std::floor(1.0 / gap);
    if (bound > static_cast<double>(std::numeric_limits<int>::max()))
        throw std::invalid_argument(
            "max_grid_intervals: bound overflows the integer range; set a cap");
    return static_cast<int>(bound);
}

} // namespace

Tuple snap_to_grid(const Tuple& t, int intervals) {
    if (intervals < 1) throw std::invalid_argument("snap_to_grid: intervals must be >= 1");
    Tuple out;
    out.id = t.id;
    out.values.reserve(t.values.size());
    for (double v : t.values) out.values.push_back(std::floor(v * intervals) / intervals);
    return out;
}

Relation snap_relation(const Relation& r, int intervals) {
    Relation out(r.dims);
    out.tuples.reserve(r.size());
    for (const Tuple& t : r.tuples) out.tuples.push_back(snap_to_grid(t, intervals));
    return out;
}

int max_grid_intervals(const Relation& r, std::optional<int> cap) {
    std::optional<double> gap = min_positive_gap(r);
    if (!gap)
        throw std::invalid_argument(
            "max_grid_intervals: undefined, all tuples are identical on every attribute");
    return intervals_from_gap(*gap, cap);
}

GridResistanceResult grid_resistance(const Relation& skyline, const PartitionPlan& plan,
                                     std::size_t rep_count, int cores,
                                     std::optional<int> cap) {
    if (cores < 1) throw std::invalid_argument("grid_resistance: cores must be >= 1");

#ifndef NDEBUG
    {
        DominanceCounter probe;
        for (const Tuple& a : skyline.tuples)
            for (const Tuple& b : skyline.tuples)
                if (dominates(a, b, probe))
                    throw std::invalid_argument(
                        "grid_resistance: input is not a skyline (tuple " +
                        std::to_string(a.id) + " dominates tuple " + std::to_string(b.id) + ")");
    }
#endif

    GridResistanceResult result;
    ResistanceMetrics& m = result.metrics;
    m.scale_factor = (plan.partitions + cores - 1) / cores;
    if (skyline.empty()) return result;

    const auto t_start = std::chrono::steady_clock::now();

    std::optional<double> gap = min_positive_gap(skyline);
    m.g_max = gap ? intervals_from_gap(*gap, cap) : 1;

    double effective_sum = 0.0;
    for (int g = m.g_max; g >= 2; --g) {
        Relation projected = snap_relation(skyline, g);

        DominanceCounter rep_counter;
        RepresentativeSet reps =
            select_representatives(projected, rep_count, sum_score, rep_counter);
        m.rep_tests += rep_counter.count;
        effective_sum += static_cast<double>(reps.effective());

        ParallelSkylineResult round = parallel_skyline(projected, plan, reps, cores);

        m.iterations.push_back({g, round.metrics.parallel_max, round.metrics.final_tests});
        m.parallel_max_sum += round.metrics.parallel_max;
        m.final_sum += round.metrics.final_tests;
        m.simulated_cost += round.metrics.simulated_cost;
        m.wall_parallel_ms += round.metrics.wall_parallel_ms;

        // a tuple exits at the largest g that ejects its projection, so
        // only record ids with no verdict yet
        std::unordered_set<std::int64_t> surviving;
        surviving.reserve(round.skyline.size() * 2);
        for (const Tuple& t : round.skyline.tuples) surviving.insert(t.id);
        for (const Tuple& t : skyline.tuples)
            if (!surviving.count(t.id) && !result.denominators.count(t.id))
                result.denominators.emplace(t.id, g);
    }

    for (const Tuple& t : skyline.tuples)
        result.denominators.emplace(t.id, 1); // never exited

    if (!m.iterations.empty())
        m.rep_effective_mean = effective_sum / static_cast<double>(m.iterations.size());
    m.wall_total_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t_start)
                          .count();
    return result;
}

} // namespace skypar
