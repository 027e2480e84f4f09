/**
 * @file core.hpp
 * @brief Tuples, relations, instrumented dominance tests and the
 *        sequential skyline algorithms (block-nested-loop and
 *        sort-filter-skyline).
 *
 * Convention throughout: attribute values are non-negative and
 * smaller-is-better. A tuple dominates another when it is <= on every
 * attribute and < on at least one.
 */

#ifndef SKYPAR_CORE_HPP
#define SKYPAR_CORE_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skypar {

/// One data point: a fixed-arity vector of non-negative values plus a
/// stable id that survives projection, partitioning and filtering.
struct Tuple {
    std::vector<double> values;
    std::int64_t id = 0;
};

/// An ordered collection of tuples over a shared attribute count.
/// `dims` is kept explicitly so empty relations still carry their schema.
struct Relation {
    std::size_t dims = 0;
    std::vector<Tuple> tuples;

    Relation() = default;
    explicit Relation(std::size_t d) : dims(d) {}

    std::size_t size() const { return tuples.size(); }
    bool empty() const { return tuples.empty(); }

    /// Appends a tuple, enforcing arity and non-negativity.
    void add(Tuple t);
};

/// Counts dominance tests. Every call of dominates() increments exactly
/// one counter by exactly 1; callers own one counter per task and sum
/// after the task completes, so no counter is ever shared across threads.
struct DominanceCounter {
    std::uint64_t count = 0;
};

/// True iff t is <= s on every attribute and < on at least one.
/// Counts as one dominance test regardless of outcome or early exit.
inline bool dominates(const Tuple& t, const Tuple& s, DominanceCounter& c) {
    if (t.values.size() != s.values.size())
        throw std::invalid_argument("dominates: arity mismatch (" +
                                    std::to_string(t.values.size()) + " vs " +
                                    std::to_string(s.values.size()) + ")");
    ++c.count;
    bool strict = false;
    for (std::size_t i = 0; i < t.values.size(); ++i) {
        if (t.values[i] > s.values[i]) return false;
        if (t.values[i] < s.values[i]) strict = true;
    }
    return strict;
}

/// Monotone scoring function used for SFS ordering and representative
/// selection. Lower scores are preferred.
using ScoreFn = std::function<double(const Tuple&)>;

/// Sum of attribute values: the cheapest strictly monotone score.
double sum_score(const Tuple& t);

/// Block-nested-loop skyline. Returns exactly the non-dominated tuples,
/// ids preserved; tuples with identical value vectors are all retained.
Relation skyline_bnl(const Relation& r, DominanceCounter& c);

/// Sort-filter-skyline: sorts by (sum of values, id) ascending so no tuple
/// can be dominated by a later one, then window-filters. Same result set
/// as skyline_bnl; output follows the sorted order.
Relation skyline_sfs(const Relation& r, DominanceCounter& c);

} // namespace skypar

#endif // SKYPAR_CORE_HPP
