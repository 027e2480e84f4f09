#include "skypar/datagen.hpp"

#include <cmath>
#include <random>

namespace skypar {

namespace {

// [0,1) from the top 53 bits; exact arithmetic, portable across libms
double next_unit(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

std::size_t next_index(std::mt19937_64& eng, std::size_t n) { return eng() % n; }

// approximate standard normal as a sum of 12 units minus 6; uses only
// additions, so the result is bit-stable everywhere
double next_normal(std::mt19937_64& eng) {
    double s = 0.0;
    for (int i = 0; i < 12; ++i) s += next_unit(eng);
    return s - 6.0;
}

const double kBelowOne = std::nextafter(1.0, 0.0);

double clamp_unit(double v) { return std::min(std::max(v, 0.0), kBelowOne); }

} // namespace

const char* distribution_name(Distribution d) {
    return d == Distribution::Uniform ? "uni" : "ant";
}

Distribution distribution_from_name(const std::string& name) {
    if (name == "uni") return Distribution::Uniform;
    if (name == "ant") return Distribution::Anticorrelated;
    throw std::invalid_argument("unknown distribution: " + name + " (expected uni|ant)");
}

Relation gen_uniform(const GenSpec& spec) {
    if (spec.dims < 1) throw std::invalid_argument("gen_uniform: dims must be >= 1");
    std::mt19937_64 eng(spec.seed);
    Relation r(spec.dims);
    r.tuples.reserve(spec.count);
    for (std::size_t i = 0; i < spec.count; ++i) {
        Tuple t;
        t.id = static_cast<std::int64_t>(i);
        t.values.reserve(spec.dims);
        for (int j = 0; j < spec.dims; ++j) t.values.push_back(next_unit(eng));
        r.tuples.push_back(std::move(t));
    }
    return r;
}

Relation gen_anticorrelated(const GenSpec& spec) {
    if (spec.dims < 1) throw std::invalid_argument("gen_anticorrelated: dims must be >= 1");
    const int d = spec.dims;
    std::mt19937_64 eng(spec.seed);
    Relation r(d);
    r.tuples.reserve(spec.count);
    std::vector<double> coords(d);
    for (std::size_t i = 0; i < spec.count; ++i) {
        // plane offset: Normal(d/2, sd = d/64), clamped to the feasible range;
        // the band must stay narrow or the skyline collapses to a few
        // low-sum tuples
        double plane = 0.5 * d + 0.015625 * d * next_normal(eng);
        plane = std::min(std::max(plane, 0.0), static_cast<double>(d));
        for (int j = 0; j < d; ++j) coords[j] = plane / d;
        if (d > 1) {
            // spread along the plane: move random amounts between pairs,
            // keeping the sum and the [0,1) box
            for (int step = 0; step < 4 * d; ++step) {
                std::size_t from = next_index(eng, d);
                std::size_t to = next_index(eng, d - 1);
                if (to >= from) ++to;
                double amount =
                    next_unit(eng) * std::min(coords[from], kBelowOne - coords[to]);
                coords[from] -= amount;
                coords[to] += amount;
            }
        }
        Tuple t;
        t.id = static_cast<std::int64_t>(i);
        t.values.reserve(d);
        for (int j = 0; j < d; ++j) t.values.push_back(clamp_unit(coords[j]));
        r.tuples.push_back(std::move(t));
    }
    return r;
}

Relation generate(const GenSpec& spec) {
    return spec.dist == Distribution::Uniform ? gen_uniform(spec) : gen_anticorrelated(spec);
}

} // namespace skypar
