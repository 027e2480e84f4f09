#include "skypar/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

namespace skypar {

namespace {

constexpr long long kMaxPartitions = 1 << 20;
constexpr double kPi = 3.14159265358979323846;

long long ipow(long long base, int exp) {
    long long v = 1;
    for (int i = 0; i < exp; ++i) {
        v *= base;
        if (v > kMaxPartitions) return kMaxPartitions + 1;
    }
    return v;
}

// Smallest m >= 2 whose partition count m^exp is closest to the target;
// ties go to the smaller m.
int closest_slices(long long target, int exp) {
    int m = 2;
    while (ipow(m + 1, exp) <= target) ++m;
    long long lo = ipow(m, exp), hi = ipow(m + 1, exp);
    return (target - lo <= hi - target) ? m : m + 1;
}

} // namespace

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::None: return "none";
        case Strategy::Grid: return "grid";
        case Strategy::Angular: return "angular";
        case Strategy::Sliced: return "sliced";
    }
    return "?";
}

Strategy strategy_from_name(const std::string& name) {
    if (name == "none") return Strategy::None;
    if (name == "grid") return Strategy::Grid;
    if (name == "angular") return Strategy::Angular;
    if (name == "sliced") return Strategy::Sliced;
    throw std::invalid_argument("unknown strategy: " + name);
}

PartitionPlan make_plan(Strategy strategy, long long target_partitions, int dims) {
    if (dims < 1) throw std::invalid_argument("make_plan: dims must be >= 1");
    if (target_partitions < 1 || target_partitions > kMaxPartitions)
        throw std::invalid_argument("make_plan: target partition count must be in [1, " +
                                    std::to_string(kMaxPartitions) + "]");

    PartitionPlan plan;
    plan.strategy = strategy;
    plan.dims = dims;
    switch (strategy) {
        case Strategy::None:
            break;
        case Strategy::Grid:
            plan.slices = closest_slices(target_partitions, dims);
            plan.partitions = ipow(plan.slices, dims);
            break;
        case Strategy::Angular:
            if (dims < 2)
                throw std::invalid_argument("make_plan: angular partitioning needs dims >= 2");
            plan.slices = closest_slices(target_partitions, dims - 1);
            plan.partitions = ipow(plan.slices, dims - 1);
            break;
        case Strategy::Sliced:
            plan.partitions = target_partitions;
            break;
    }
    if (plan.partitions > kMaxPartitions)
        throw std::invalid_argument("make_plan: partition count exceeds " +
                                    std::to_string(kMaxPartitions));
    return plan;
}

GridCell grid_cell(const Tuple& t, int slices) {
    if (slices < 1) throw std::invalid_argument("grid_cell: slices must be >= 1");
    GridCell cell;
    cell.coords.reserve(t.values.size());
    for (std::size_t j = 0; j < t.values.size(); ++j) {
        double v = t.values[j];
        if (v < 0.0 || v > 1.0)
            throw std::invalid_argument(
                "grid_cell: value " + std::to_string(v) + " in attribute " +
                std::to_string(j + 1) + " outside [0,1]; normalize the data first");
        int idx = static_cast<int>(v * slices); // 0-based slice index
        if (idx >= slices) idx = slices - 1;    // v == 1.0 lands in the top cell
        cell.coords.push_back(idx + 1);
    }
    return cell;
}

long long cell_partition_id(const GridCell& cell, int slices) {
    long long id = 0, weight = 1;
    for (int c : cell.coords) {
        id += static_cast<long long>(c - 1) * weight;
        weight *= slices;
    }
    return id;
}

long long assign_grid(const Tuple& t, int slices) {
    return cell_partition_id(grid_cell(t, slices), slices);
}

bool grid_dominates(const GridCell& a, const GridCell& b) {
    if (a.coords.size() != b.coords.size())
        throw std::invalid_argument("grid_dominates: dimensionality mismatch");
    for (std::size_t j = 0; j < a.coords.size(); ++j)
        if (a.coords[j] >= b.coords[j]) return false;
    return true;
}

std::set<GridCell> prune_grid_dominated(const std::map<GridCell, std::size_t>& occupancy) {
    std::set<GridCell> survivors;
    for (const auto& [cell, count] : occupancy) {
        (void)count;
        bool pruned = false;
        for (const auto& [other, other_count] : occupancy) {
            if (other_count > 0 && grid_dominates(other, cell)) {
                pruned = true;
                break;
            }
        }
        if (!pruned) survivors.insert(cell);
    }
    return survivors;
}

Hyperspherical to_hyperspherical(const Tuple& t) {
    const std::size_t d = t.values.size();
    if (d < 2)
        throw std::invalid_argument("to_hyperspherical: needs at least 2 dimensions");
    // tail[i] = euclidean norm of values[i..d)
    std::vector<double> tail(d + 1, 0.0);
    for (std::size_t i = d; i-- > 0;)
        tail[i] = tail[i + 1] + t.values[i] * t.values[i];
    Hyperspherical h;
    h.radius = std::sqrt(tail[0]);
    h.angles.reserve(d - 1);
    for (std::size_t i = 0; i + 1 < d; ++i)
        h.angles.push_back(std::atan2(std::sqrt(tail[i + 1]), t.values[i]));
    return h;
}

long long assign_angular(const Tuple& t, int slices) {
    if (slices < 1) throw std::invalid_argument("assign_angular: slices must be >= 1");
    bool all_zero = true;
    for (double v : t.values)
        if (v != 0.0) {
            all_zero = false;
            break;
        }
    if (all_zero) return 0; // angles undefined at the origin

    Hyperspherical h = to_hyperspherical(t);
    long long id = 0, weight = 1;
    for (double angle : h.angles) {
        int idx = static_cast<int>((2.0 * angle / kPi) * slices);
        if (idx >= slices) idx = slices - 1; // angle == pi/2 boundary
        id += static_cast<long long>(idx) * weight;
        weight *= slices;
    }
    return id;
}

long long assign_sliced(std::int64_t rank, long long partitions, std::int64_t n) {
    if (rank < 1 || rank > n)
        throw std::invalid_argument("assign_sliced: rank " + std::to_string(rank) +
                                    " outside [1, " + std::to_string(n) + "]");
    return (rank - 1) * partitions / n;
}

std::vector<long long> assign_partitions(const Relation& r, const PartitionPlan& plan) {
    std::vector<long long> ids(r.size(), 0);
    switch (plan.strategy) {
        case Strategy::None:
            break;
        case Strategy::Grid:
            for (std::size_t i = 0; i < r.size(); ++i)
                ids[i] = assign_grid(r.tuples[i], plan.slices);
            break;
        case Strategy::Angular:
            for (std::size_t i = 0; i < r.size(); ++i)
                ids[i] = assign_angular(r.tuples[i], plan.slices);
            break;
        case Strategy::Sliced: {
            std::vector<std::size_t> order(r.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                double va = r.tuples[a].values.empty() ? 0.0 : r.tuples[a].values[0];
                double vb = r.tuples[b].values.empty() ? 0.0 : r.tuples[b].values[0];
                if (va != vb) return va < vb;
                return r.tuples[a].id < r.tuples[b].id;
            });
            for (std::size_t pos = 0; pos < order.size(); ++pos)
                ids[order[pos]] = assign_sliced(static_cast<std::int64_t>(pos) + 1,
                                                plan.partitions,
                                                static_cast<std::int64_t>(r.size()));
            break;
        }
    }
    return ids;
}

namespace {

// score-then-id total order shared by both selection procedures
struct ScoredRef {
    double score;
    std::int64_t id;
    std::size_t index;

    bool before(const ScoredRef& o) const {
        if (score != o.score) return score < o.score;
        return id < o.id;
    }
};

RepresentativeSet finish_selection(const Relation& r, std::vector<ScoredRef> picked,
                                   std::size_t k, DominanceCounter& c) {
    std::sort(picked.begin(), picked.end(),
              [](const ScoredRef& a, const ScoredRef& b) { return a.before(b); });
    RepresentativeSet reps;
    reps.requested = k;
    // discard picks dominated by other picks; they add no pruning power
    for (std::size_t i = 0; i < picked.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < picked.size() && !dominated; ++j) {
            if (j == i) continue;
            dominated = dominates(r.tuples[picked[j].index], r.tuples[picked[i].index], c);
        }
        if (!dominated) reps.tuples.push_back(r.tuples[picked[i].index]);
    }
    return reps;
}

} // namespace

RepresentativeSet select_representatives(const Relation& r, std::size_t k,
                                         const ScoreFn& f, DominanceCounter& c) {
    if (k == 0) return RepresentativeSet{};
    // max-heap on (score, id): the root is the worst of the k kept so far
    auto heap_less = [](const ScoredRef& a, const ScoredRef& b) { return a.before(b); };
    std::priority_queue<ScoredRef, std::vector<ScoredRef>, decltype(heap_less)> heap(heap_less);
    for (std::size_t i = 0; i < r.size(); ++i) {
        ScoredRef ref{f(r.tuples[i]), r.tuples[i].id, i};
        if (heap.size() < k) {
            heap.push(ref);
        } else if (ref.before(heap.top())) {
            heap.pop();
            heap.push(ref);
        }
    }
    std::vector<ScoredRef> picked;
    picked.reserve(heap.size());
    while (!heap.empty()) {
        picked.push_back(heap.top());
        heap.pop();
    }
    return finish_selection(r, std::move(picked), k, c);
}

RepresentativeSet select_representatives_quickselect(const Relation& r, std::size_t k,
                                                     const ScoreFn& f, DominanceCounter& c) {
    if (k == 0) return RepresentativeSet{};
    std::vector<ScoredRef> refs;
    refs.reserve(r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        refs.push_back(ScoredRef{f(r.tuples[i]), r.tuples[i].id, i});
    if (k < refs.size())
        std::nth_element(refs.begin(), refs.begin() + k, refs.end(),
                         [](const ScoredRef& a, const ScoredRef& b) { return a.before(b); });
    refs.resize(std::min(k, refs.size()));
    return finish_selection(r, std::move(refs), k, c);
}

Relation filter_with_representatives(const Relation& part, const RepresentativeSet& reps,
                                     DominanceCounter& c) {
    if (reps.tuples.empty()) return part;
    Relation out(part.dims);
    for (const Tuple& t : part.tuples) {
        bool dominated = false;
        for (const Tuple& rep : reps.tuples) {
            if (dominates(rep, t, c)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.tuples.push_back(t);
    }
    return out;
}

} // namespace skypar
