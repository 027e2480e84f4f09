#include <doctest.h>

#include <cmath>

#include "skypar/oracle.hpp"
#include "skypar/partition.hpp"
#include "test_util.hpp"

using namespace skypar;
using testutil::ids_of;
using testutil::make_relation;
using testutil::random_relation;

TEST_SUITE_BEGIN("partition");

TEST_CASE("grid assignment follows the cell formula") {
    CHECK(assign_grid(Tuple{{0.0, 0.0}, 0}, 3) == 0);
    CHECK(assign_grid(Tuple{{0.5, 0.5}, 0}, 3) == 4); // floor(1.5)*1 + floor(1.5)*3
    CHECK(assign_grid(Tuple{{1.0, 1.0}, 0}, 3) == 8); // 1.0 clamps into the top cell
    CHECK_THROWS_AS(assign_grid(Tuple{{1.2, 0.0}, 0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(assign_grid(Tuple{{-0.1, 0.0}, 0}, 3), std::invalid_argument);
}

TEST_CASE("grid dominance of cells") {
    GridCell a{{1, 1}}, b{{2, 2}}, c{{1, 2}}, d{{2, 2}};
    CHECK(grid_dominates(a, b));
    CHECK_FALSE(grid_dominates(c, d)); // equality in one dimension is not enough
    CHECK_FALSE(grid_dominates(b, d)); // irreflexive
}

TEST_CASE("pruning keeps exactly the cells no non-empty cell grid-dominates") {
    std::map<GridCell, std::size_t> occ;
    occ[GridCell{{1, 1}}] = 3;
    CHECK(prune_grid_dominated(occ) == std::set<GridCell>{GridCell{{1, 1}}});

    occ[GridCell{{2, 2}}] = 1;
    auto survivors = prune_grid_dominated(occ);
    CHECK(survivors.count(GridCell{{1, 1}}) == 1);
    CHECK(survivors.count(GridCell{{2, 2}}) == 0);
}

TEST_CASE("pruning matches an all-pairs filter on random occupancy") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        std::map<GridCell, std::size_t> occ;
        for (int c0 = 1; c0 <= 3; ++c0)
            for (int c1 = 1; c1 <= 3; ++c1)
                if (rng() % 2) occ[GridCell{{c0, c1}}] = rng() % 3; // zero counts too
        auto survivors = prune_grid_dominated(occ);
        for (const auto& [cell, count] : occ) {
            bool expect_pruned = false;
            for (const auto& [other, ocount] : occ)
                if (ocount > 0 && grid_dominates(other, cell)) expect_pruned = true;
            CHECK(survivors.count(cell) == (expect_pruned ? 0u : 1u));
        }
    }
}

TEST_CASE("angular ids for 2d tuples") {
    CHECK(assign_angular(Tuple{{0.7, 0.0}, 0}, 4) == 0); // on-axis angle 0
    CHECK(assign_angular(Tuple{{0.3, 0.3}, 0}, 4) == 2); // diagonal, floor(0.5*4)
    CHECK(assign_angular(Tuple{{0.0, 0.4}, 0}, 4) == 3); // angle pi/2 clamps to top slice
    CHECK(assign_angular(Tuple{{0.0, 0.0}, 0}, 4) == 0); // all-zero convention
}

TEST_CASE("angular ids stay in range and the transform round-trips") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 300; ++trial) {
        Relation r = random_relation(rng, 1, 3);
        const Tuple& t = r.tuples[0];
        long long pid = assign_angular(t, 2);
        CHECK(pid >= 0);
        CHECK(pid < 4); // slices^(d-1)

        Hyperspherical h = to_hyperspherical(t);
        for (double a : h.angles) {
            CHECK(a >= 0.0);
            CHECK(a <= std::acos(-1.0) / 2 + 1e-12);
        }
        // reconstruct cartesian values from radius and angles
        double sin_prod = 1.0;
        for (std::size_t i = 0; i < t.values.size(); ++i) {
            double v = h.radius * sin_prod;
            if (i + 1 < t.values.size()) v *= std::cos(h.angles[i]);
            if (i < h.angles.size()) sin_prod *= std::sin(h.angles[i]);
            CHECK(std::fabs(v - t.values[i]) < 1e-9);
        }
    }
}

TEST_CASE("sliced ids from rank") {
    CHECK(assign_sliced(1, 16, 1000) == 0);
    CHECK(assign_sliced(1000, 16, 1000) == 15);
    CHECK_THROWS_AS(assign_sliced(0, 16, 1000), std::invalid_argument);
}

TEST_CASE("sliced partitions are balanced within one tuple") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        std::int64_t n = 1 + rng() % 5000;
        long long p = 1 + rng() % 128;
        std::vector<std::int64_t> sizes(p, 0);
        for (std::int64_t rank = 1; rank <= n; ++rank) ++sizes[assign_sliced(rank, p, n)];
        auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
        CHECK(*hi - *lo <= 1);
    }
}

TEST_CASE("plans hit the closest feasible partition count") {
    PartitionPlan grid = make_plan(Strategy::Grid, 16, 3);
    CHECK(grid.slices == 2); // 8 is closer to 16 than 27
    CHECK(grid.partitions == 8);

    PartitionPlan grid2 = make_plan(Strategy::Grid, 16, 2);
    CHECK(grid2.slices == 4);
    CHECK(grid2.partitions == 16);

    PartitionPlan ang = make_plan(Strategy::Angular, 16, 3);
    CHECK(ang.slices == 4);
    CHECK(ang.partitions == 16);

    PartitionPlan sliced = make_plan(Strategy::Sliced, 7, 5);
    CHECK(sliced.partitions == 7);

    PartitionPlan none = make_plan(Strategy::None, 99, 3);
    CHECK(none.partitions == 1);

    // more than one partition is required: slices never drop below 2
    CHECK(make_plan(Strategy::Grid, 1, 2).partitions == 4);
    CHECK_THROWS_AS(make_plan(Strategy::Angular, 4, 1), std::invalid_argument);
}

TEST_CASE("every strategy assigns exactly one in-range id per tuple") {
    std::mt19937_64 rng(37);
    Relation r = random_relation(rng, 500, 3);
    for (Strategy s : {Strategy::None, Strategy::Grid, Strategy::Angular, Strategy::Sliced}) {
        PartitionPlan plan = make_plan(s, 16, 3);
        std::vector<long long> pids = assign_partitions(r, plan);
        REQUIRE(pids.size() == r.size());
        for (long long pid : pids) {
            CHECK(pid >= 0);
            CHECK(pid < plan.partitions);
        }
    }
}

TEST_CASE("grid-dominated cells contain no skyline tuple") {
    std::mt19937_64 rng(41);
    for (int m = 2; m <= 4; ++m)
        for (std::size_t d = 2; d <= 3; ++d)
            for (int trial = 0; trial < 10; ++trial) {
                Relation r = random_relation(rng, 120, d);
                std::map<GridCell, std::size_t> occ;
                for (const Tuple& t : r.tuples) ++occ[grid_cell(t, m)];
                auto survivors = prune_grid_dominated(occ);
                Relation sky = skyline_bruteforce(r);
                for (const Tuple& t : sky.tuples)
                    CHECK(survivors.count(grid_cell(t, m)) == 1);
            }
}

TEST_CASE("representative selection: degenerate ks") {
    std::mt19937_64 rng(43);
    Relation r = random_relation(rng, 100, 2);
    DominanceCounter c;
    CHECK(select_representatives(r, 0, sum_score, c).effective() == 0);

    RepresentativeSet one = select_representatives(r, 1, sum_score, c);
    REQUIRE(one.effective() == 1);
    double best = sum_score(one.tuples[0]);
    for (const Tuple& t : r.tuples) CHECK(best <= sum_score(t));

    // k beyond N returns the whole relation, minus dominated members
    RepresentativeSet all = select_representatives(r, 500, sum_score, c);
    CHECK(all.requested == 500);
    CHECK(all.effective() <= r.size());
}

TEST_CASE("heap and quickselect selection agree with a full-sort reference") {
    std::mt19937_64 rng(47);
    Relation r = random_relation(rng, 1000, 3, true);
    for (std::size_t k : {1u, 10u, 100u}) {
        DominanceCounter c1, c2, c3;
        RepresentativeSet heap = select_representatives(r, k, sum_score, c1);
        RepresentativeSet qsel = select_representatives_quickselect(r, k, sum_score, c2);
        CHECK(heap.tuples.size() == qsel.tuples.size());
        for (std::size_t i = 0; i < heap.tuples.size(); ++i)
            CHECK(heap.tuples[i].id == qsel.tuples[i].id);

        // reference: full sort by (score, id), take k, drop dominated
        std::vector<const Tuple*> sorted;
        for (const Tuple& t : r.tuples) sorted.push_back(&t);
        std::sort(sorted.begin(), sorted.end(), [](const Tuple* a, const Tuple* b) {
            double sa = sum_score(*a), sb = sum_score(*b);
            if (sa != sb) return sa < sb;
            return a->id < b->id;
        });
        sorted.resize(std::min(k, sorted.size()));
        std::vector<std::int64_t> expect;
        for (const Tuple* t : sorted) {
            bool dominated = false;
            for (const Tuple* o : sorted)
                if (o != t && dominates(*o, *t, c3)) dominated = true;
            if (!dominated) expect.push_back(t->id);
        }
        std::vector<std::int64_t> got;
        for (const Tuple& t : heap.tuples) got.push_back(t.id);
        CHECK(got == expect);

        // no member may dominate another
        DominanceCounter probe;
        for (const Tuple& a : heap.tuples)
            for (const Tuple& b : heap.tuples) CHECK_FALSE(dominates(a, b, probe));
        CHECK(heap.effective() <= k);
    }
}

TEST_CASE("representative filtering") {
    std::mt19937_64 rng(53);
    Relation part = random_relation(rng, 200, 2);
    DominanceCounter c;

    SUBCASE("empty set filters nothing") {
        Relation out = filter_with_representatives(part, RepresentativeSet{}, c);
        CHECK(ids_of(out) == ids_of(part));
        CHECK(c.count == 0);
    }

    SUBCASE("an origin representative removes every strictly positive tuple") {
        RepresentativeSet reps;
        reps.requested = 1;
        reps.tuples.push_back(Tuple{{0.0, 0.0}, -1});
        Relation strictly_positive(2);
        for (std::size_t i = 0; i < part.size(); ++i)
            strictly_positive.add(Tuple{{part.tuples[i].values[0] + 0.001,
                                         part.tuples[i].values[1] + 0.001},
                                        part.tuples[i].id});
        CHECK(filter_with_representatives(strictly_positive, reps, c).size() == 0);
    }

    SUBCASE("random filter matches the all-pairs reference") {
        Relation others = random_relation(rng, 20, 2);
        DominanceCounter cr;
        RepresentativeSet reps = select_representatives(others, 5, sum_score, cr);
        Relation out = filter_with_representatives(part, reps, c);
        std::vector<std::int64_t> expect;
        DominanceCounter cx;
        for (const Tuple& t : part.tuples) {
            bool dominated = false;
            for (const Tuple& rep : reps.tuples)
                if (dominates(rep, t, cx)) dominated = true;
            if (!dominated) expect.push_back(t.id);
        }
        CHECK(ids_of(out) == expect);
    }
}

TEST_SUITE_END();
