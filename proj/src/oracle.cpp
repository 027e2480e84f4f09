#include "skypar/oracle.hpp"

#include <cmath>
#include <limits>

namespace skypar {

namespace {

// Local copies of the primitives under test, kept deliberately separate
// from the library implementations.

bool bf_dominates(const Tuple& a, const Tuple& b) {
    bool strict = false;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        if (a.values[i] > b.values[i]) return false;
        if (a.values[i] < b.values[i]) strict = true;
    }
    return strict;
}

double bf_snap(double v, int g) { return std::floor(v * g) / g; }

Tuple bf_project(const Tuple& t, int g) {
    Tuple p;
    p.id = t.id;
    p.values.reserve(t.values.size());
    for (double v : t.values) p.values.push_back(bf_snap(v, g));
    return p;
}

} // namespace

Relation skyline_bruteforce(const Relation& r) {
    Relation out(r.dims);
    for (const Tuple& t : r.tuples) {
        bool dominated = false;
        for (const Tuple& s : r.tuples) {
            if (bf_dominates(s, t)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.tuples.push_back(t);
    }
    return out;
}

int grid_resistance_bruteforce(const Tuple& t, const Relation& r,
                               std::optional<int> cap) {
    // min non-zero same-attribute gap, all pairs
    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < r.size(); ++a)
        for (std::size_t b = a + 1; b < r.size(); ++b)
            for (std::size_t j = 0; j < r.dims; ++j) {
                double gap = std::fabs(r.tuples[a].values[j] - r.tuples[b].values[j]);
                if (gap > 0.0 && gap < min_gap) min_gap = gap;
            }

    int g_max;
    if (!std::isfinite(min_gap)) {
        g_max = 1; // no distinct values anywhere: nothing can ever collapse
    } else if (cap && 1.0 / min_gap >= static_cast<double>(*cap)) {
        g_max = *cap;
    } else if (1.0 / min_gap > 1e6) {
        throw std::invalid_argument(
            "grid_resistance_bruteforce: uncapped interval bound too large "
            "to enumerate; pass a cap");
    } else {
        g_max = static_cast<int>(std::floor(1.0 / min_gap));
    }

    int best = 1;
    for (int g = 2; g <= g_max; ++g) {
        Tuple pt = bf_project(t, g);
        bool dominated = false;
        for (const Tuple& s : r.tuples) {
            if (bf_dominates(bf_project(s, g), pt)) {
                dominated = true;
                break;
            }
        }
        if (dominated) best = g; // larger g means smaller 1/g; keep scanning
    }
    return best;
}

} // namespace skypar
