#include <doctest.h>

#include "skypar/oracle.hpp"
#include "skypar/parallel.hpp"
#include "test_util.hpp"

using namespace skypar;
using testutil::ids_of;
using testutil::random_relation;

TEST_SUITE_BEGIN("parallel");

namespace {

ParallelSkylineResult run(const Relation& r, Strategy s, long long target, int cores,
                          std::size_t reps = 0) {
    PartitionPlan plan = make_plan(s, target, static_cast<int>(r.dims));
    DominanceCounter rc;
    RepresentativeSet rset = select_representatives(r, reps, sum_score, rc);
    return parallel_skyline(r, plan, rset, cores);
}

} // namespace

TEST_CASE("single-partition plan counts like one sequential run") {
    std::mt19937_64 rng(61);
    Relation r = random_relation(rng, 300, 3);
    DominanceCounter c;
    Relation ref = skyline_sfs(r, c);

    ParallelSkylineResult res = run(r, Strategy::None, 1, 1);
    CHECK(ids_of(res.skyline) == ids_of(ref));
    REQUIRE(res.metrics.per_partition_tests.size() == 1);
    CHECK(res.metrics.per_partition_tests[0] == c.count);
    CHECK(res.metrics.parallel_max == c.count);

    // the merge phase re-filters the local skyline itself
    DominanceCounter c2;
    skyline_sfs(ref, c2);
    CHECK(res.metrics.final_tests == c2.count);
    CHECK(res.metrics.scale_factor == 1);
    CHECK(res.metrics.simulated_cost == c.count + c2.count);
}

TEST_CASE("sliced output matches the brute-force reference") {
    std::mt19937_64 rng(67);
    Relation r = random_relation(rng, 200, 2);
    ParallelSkylineResult res = run(r, Strategy::Sliced, 4, 2);
    CHECK(ids_of(res.skyline) == ids_of(skyline_bruteforce(r)));
}

TEST_CASE("an all-zero tuple dominates everything under grid pruning") {
    std::mt19937_64 rng(71);
    Relation r = random_relation(rng, 150, 2);
    for (Tuple& t : r.tuples)
        for (double& v : t.values) v = 0.02 + v * 0.97; // keep strictly positive
    r.add(Tuple{{0.0, 0.0}, 999});

    ParallelSkylineResult res = run(r, Strategy::Grid, 4, 2);
    REQUIRE(res.skyline.size() == 1);
    CHECK(res.skyline.tuples[0].id == 999);
    // cells grid-dominated by the origin cell never entered phase 1
    CHECK(res.metrics.tuples_into_parallel < r.size());
}

TEST_CASE("every strategy and budget reproduces the brute-force skyline") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t n = 100 + rng() % 1901; // up to 2000
        std::size_t d = 2 + rng() % 3;
        Relation r = random_relation(rng, n, d, trial % 2 == 0);
        std::vector<std::int64_t> expect = ids_of(skyline_bruteforce(r));
        for (Strategy s :
             {Strategy::None, Strategy::Grid, Strategy::Angular, Strategy::Sliced}) {
            ParallelSkylineResult res = run(r, s, 16, 4, trial % 3 == 0 ? 10 : 0);
            CHECK(ids_of(res.skyline) == expect);
        }
    }
}

TEST_CASE("the final skyline does not depend on the representative count") {
    std::mt19937_64 rng(97);
    Relation r = random_relation(rng, 600, 3, true);
    std::vector<std::int64_t> expect = ids_of(skyline_bruteforce(r));
    for (Strategy s : {Strategy::None, Strategy::Grid, Strategy::Angular, Strategy::Sliced})
        for (std::size_t k : {0u, 1u, 10u, 100u}) {
            ParallelSkylineResult res = run(r, s, 16, 4, k);
            CHECK(ids_of(res.skyline) == expect);
        }
}

TEST_CASE("counts are deterministic and independent of the core budget") {
    std::mt19937_64 rng(79);
    Relation r = random_relation(rng, 800, 3);
    ParallelSkylineResult base = run(r, Strategy::Sliced, 16, 1);
    for (int cores : {2, 8}) {
        ParallelSkylineResult res = run(r, Strategy::Sliced, 16, cores);
        CHECK(res.metrics.per_partition_tests == base.metrics.per_partition_tests);
        CHECK(res.metrics.final_tests == base.metrics.final_tests);
        CHECK(ids_of(res.skyline) == ids_of(base.skyline));
    }
    ParallelSkylineResult again = run(r, Strategy::Sliced, 16, 8);
    CHECK(again.metrics.per_partition_tests == base.metrics.per_partition_tests);
}

TEST_CASE("the core budget bounds concurrent partition tasks") {
    std::mt19937_64 rng(83);
    Relation r = random_relation(rng, 4000, 3);
    for (int cores : {1, 2, 4}) {
        ParallelSkylineResult res = run(r, Strategy::Sliced, 32, cores);
        CHECK(res.metrics.max_concurrent >= 1);
        CHECK(res.metrics.max_concurrent <= cores);
    }
}

TEST_CASE("phase sizes never exceed the input") {
    std::mt19937_64 rng(89);
    Relation r = random_relation(rng, 600, 3, true);
    for (Strategy s : {Strategy::None, Strategy::Grid, Strategy::Angular, Strategy::Sliced}) {
        ParallelSkylineResult res = run(r, s, 16, 4);
        CHECK(res.metrics.tuples_into_parallel <= r.size());
        CHECK(res.metrics.tuples_into_final <= res.metrics.tuples_into_parallel);
        CHECK(res.metrics.wall_parallel_ms <= res.metrics.wall_total_ms);
        CHECK(res.metrics.parallel_max ==
              *std::max_element(res.metrics.per_partition_tests.begin(),
                                res.metrics.per_partition_tests.end()));
    }
}

TEST_CASE("empty input stays empty under every strategy") {
    Relation r(3);
    for (Strategy s : {Strategy::None, Strategy::Grid, Strategy::Angular, Strategy::Sliced}) {
        ParallelSkylineResult res = run(r, s, 4, 2);
        CHECK(res.skyline.size() == 0);
        CHECK(res.metrics.parallel_max == 0);
        CHECK(res.metrics.final_tests == 0);
    }
}

TEST_SUITE_END();
