#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "skypar/core.hpp"
#include "skypar/datagen.hpp"
#include "skypar/harness.hpp"

using namespace skypar;

TEST_SUITE_BEGIN("datagen");

namespace {

double column_mean(const Relation& r, std::size_t j) {
    double s = 0;
    for (const Tuple& t : r.tuples) s += t.values[j];
    return s / static_cast<double>(r.size());
}

double pearson(const Relation& r, std::size_t a, std::size_t b) {
    double ma = column_mean(r, a), mb = column_mean(r, b);
    double cov = 0, va = 0, vb = 0;
    for (const Tuple& t : r.tuples) {
        double da = t.values[a] - ma, db = t.values[b] - mb;
        cov += da * db;
        va += da * da;
        vb += db * db;
    }
    return cov / std::sqrt(va * vb);
}

std::string to_bytes(const Relation& r) {
    std::ostringstream os;
    write_dataset_csv(r, os);
    return os.str();
}

} // namespace

TEST_CASE("the engine and its unit mapping are pinned") {
    // the standard fixes this engine's output sequence; the 10000th draw
    // is the classic reference value
    std::mt19937_64 eng(5489u);
    std::uint64_t x = 0;
    for (int i = 0; i < 10000; ++i) x = eng();
    CHECK(x == 9981545732273789042ull);

    std::mt19937_64 one(1);
    double unit = static_cast<double>(one() >> 11) * 0x1.0p-53;
    CHECK(unit >= 0.0);
    CHECK(unit < 1.0);
    // first tuple of a seeded generation never changes
    Relation r = gen_uniform(GenSpec{1, 2, Distribution::Uniform, 1});
    CHECK(r.tuples[0].values[0] == unit);
}

TEST_CASE("empty and deterministic generation") {
    GenSpec spec{0, 2, Distribution::Uniform, 9};
    CHECK(gen_uniform(spec).size() == 0);

    GenSpec u{5000, 3, Distribution::Uniform, 12345};
    CHECK(to_bytes(gen_uniform(u)) == to_bytes(gen_uniform(u)));
    GenSpec a{5000, 3, Distribution::Anticorrelated, 12345};
    CHECK(to_bytes(gen_anticorrelated(a)) == to_bytes(gen_anticorrelated(a)));
    CHECK(to_bytes(gen_uniform(u)) != to_bytes(gen_anticorrelated(a)));
}

TEST_CASE("all generated values lie in [0,1)") {
    for (Distribution dist : {Distribution::Uniform, Distribution::Anticorrelated}) {
        Relation r = generate(GenSpec{20000, 4, dist, 7});
        for (const Tuple& t : r.tuples)
            for (double v : t.values) {
                CHECK(v >= 0.0);
                CHECK(v < 1.0);
            }
    }
}

TEST_CASE("uniform columns have the expected mean") {
    Relation r = gen_uniform(GenSpec{100000, 2, Distribution::Uniform, 21});
    for (std::size_t j = 0; j < 2; ++j) {
        double m = column_mean(r, j);
        CHECK(m > 0.49);
        CHECK(m < 0.51);
    }
}

TEST_CASE("anticorrelated columns are negatively correlated") {
    Relation r = gen_anticorrelated(GenSpec{100000, 2, Distribution::Anticorrelated, 22});
    CHECK(pearson(r, 0, 1) < -0.3);
}

TEST_CASE("anticorrelated skylines dwarf uniform ones") {
    DominanceCounter c;
    Relation uni = gen_uniform(GenSpec{100000, 2, Distribution::Uniform, 23});
    Relation ant = gen_anticorrelated(GenSpec{100000, 2, Distribution::Anticorrelated, 23});
    std::size_t uni_sky = skyline_sfs(uni, c).size();
    std::size_t ant_sky = skyline_sfs(ant, c).size();
    CHECK(ant_sky >= 10 * uni_sky);
}

TEST_CASE("anticorrelated skylines grow with dimensionality") {
    DominanceCounter c;
    std::size_t last = 0;
    for (int d : {2, 3, 4}) {
        Relation r = gen_anticorrelated(GenSpec{20000, d, Distribution::Anticorrelated, 24});
        std::size_t sky = skyline_sfs(r, c).size();
        CHECK(sky > last);
        last = sky;
    }
}

TEST_SUITE_END();
