#include "skypar/core.hpp"

#include <algorithm>
#include <numeric>

namespace skypar {

void Relation::add(Tuple t) {
    if (t.values.size() != dims)
        throw std::invalid_argument("Relation::add: tuple arity " +
                                    std::to_string(t.values.size()) +
                                    " does not match relation width " +
                                    std::to_string(dims));
    for (double v : t.values)
        if (v < 0.0)
            throw std::invalid_argument("Relation::add: negative value in tuple id " +
                                        std::to_string(t.id));
    tuples.push_back(std::move(t));
}

double sum_score(const Tuple& t) {
    return std::accumulate(t.values.begin(), t.values.end(), 0.0);
}

Relation skyline_bnl(const Relation& r, DominanceCounter& c) {
    Relation out(r.dims);
    auto& window = out.tuples;
    for (const Tuple& t : r.tuples) {
        bool dominated = false;
        for (std::size_t w = 0; w < window.size();) {
            if (dominates(window[w], t, c)) {
                dominated = true;
                break;
            }
            if (dominates(t, window[w], c)) {
                // drop the dominated window entry, keep scanning
                if (w + 1 != window.size()) window[w] = std::move(window.back());
                window.pop_back();
            } else {
                ++w;
            }
        }
        if (!dominated) window.push_back(t);
    }
    return out;
}

Relation skyline_sfs(const Relation& r, DominanceCounter& c) {
    std::vector<std::size_t> order(r.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> score(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) score[i] = sum_score(r.tuples[i]);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (score[a] != score[b]) return score[a] < score[b];
        return r.tuples[a].id < r.tuples[b].id;
    });

    Relation out(r.dims);
    auto& window = out.tuples;
    for (std::size_t i : order) {
        const Tuple& t = r.tuples[i];
        bool dominated = false;
        // window entries sort before t, so t cannot dominate any of them
        for (const Tuple& w : window) {
            if (dominates(w, t, c)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) window.push_back(t);
    }
    return out;
}

} // namespace skypar
