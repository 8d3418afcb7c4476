#include <doctest.h>

#include <algorithm>
#include <set>

#include "dmst/active_forest.hpp"
#include "forest_harness.hpp"

using namespace dmst;

namespace {

// Heaps are indexed by target; origins are the node ids passed to the forest.
struct Fixture {
    explicit Fixture(std::vector<Edge> e, Vertex n = 6) : edges(std::move(e)), dsu(n), forest(n, edges, dsu) {}
    std::vector<Edge> edges;
    ContractionDsu dsu;
    ActiveForest forest;
};

std::set<Vertex> as_set(const std::vector<Vertex>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("insert then query") {
    Fixture f({{0, 0, 7}, {0, 0, 4}, {0, 3, 1}});
    f.forest.insert(1, 0);
    const auto one = f.forest.query_min(0);
    REQUIRE(one.has_value());
    CHECK(one->edge == 0);
    CHECK(one->origin == 1);
    CHECK(one->cost == 7);

    f.forest.insert(2, 1);
    CHECK(f.forest.query_min(0)->cost == 4);
    CHECK_FALSE(f.forest.query_min(3).has_value());
    CHECK_FALSE(f.forest.query_min(5).has_value());
}

TEST_CASE("query on an empty heap") {
    Fixture f({});
    CHECK_FALSE(f.forest.query_min(0).has_value());
}

TEST_CASE("replace re-keys in place") {
    Fixture f({{0, 0, 9}, {0, 0, 2}});
    f.forest.insert(1, 0);
    f.forest.replace(1, 1);
    const auto got = f.forest.query_min(0);
    CHECK(got->cost == 2);
    CHECK(got->edge == 1);
}

TEST_CASE("replace moves a leaf to another heap") {
    Fixture f({{0, 0, 5}, {0, 3, 6}});
    f.forest.insert(1, 0);
    f.forest.replace(1, 1);
    CHECK_FALSE(f.forest.query_min(0).has_value());
    CHECK(f.forest.query_min(3)->edge == 1);
}

TEST_CASE("a moved subtree hides its child until the parent is deleted") {
    // Nodes 1 (cost 1) and 2 (cost 5) in heap 0; consolidation links 2 under 1.
    Fixture f({{0, 0, 1}, {0, 0, 5}, {0, 3, 7}});
    f.forest.insert(1, 0);
    f.forest.insert(2, 1);
    CHECK(f.forest.query_min(0)->origin == 1);
    REQUIRE(f.forest.parent(2) == 1);

    // Moving 1 to heap 3 takes 2 along although 2's home is still heap 0.
    f.forest.replace(1, 2);
    CHECK(f.forest.root_list(3) == std::vector<Vertex>{1});
    CHECK(f.forest.root_list(0).empty());
    CHECK(f.forest.parent(2) == 1);
    CHECK(f.forest.home(2) == 0);

    // Deleting 1 sends 2 back to heap 0, not to heap 3.
    f.forest.remove(1);
    CHECK(f.forest.root_list(0) == std::vector<Vertex>{2});
    CHECK(f.forest.root_list(3).empty());
    const auto got = f.forest.query_min(0);
    REQUIRE(got.has_value());
    CHECK(got->origin == 2);
    CHECK(got->cost == 5);
    CHECK_FALSE(f.forest.query_min(3).has_value());
}

TEST_CASE("query consolidates and displaced nodes are sent home") {
    Fixture f({{0, 0, 1}, {0, 0, 5}, {0, 3, 7}, {0, 3, 2}});
    f.forest.insert(1, 0);
    f.forest.insert(2, 1);
    f.forest.query_min(0);  // 2 under 1
    f.forest.replace(1, 2);
    f.forest.insert(3, 3);
    // Heap 3: roots 1 (cost 7, child 2 of home 0) and 3 (cost 2).
    const auto got = f.forest.query_min(3);
    CHECK(got->origin == 3);
    CHECK(f.forest.parent(2) == 1);
    // Removing 1 puts 2 back in heap 0.
    f.forest.remove(1);
    CHECK(f.forest.query_min(0)->origin == 2);
}

TEST_CASE("deleting a root promotes its children in their home heap") {
    Fixture f({{0, 0, 1}, {0, 0, 2}, {0, 0, 3}, {0, 0, 4}});
    for (Vertex i = 0; i < 4; ++i) f.forest.insert(i + 1, i);
    CHECK(f.forest.query_min(0)->origin == 1);
    // One binomial tree of rank 2: 1 -> {2, 3 -> {4}}
    CHECK(f.forest.root_list(0) == std::vector<Vertex>{1});
    CHECK(f.forest.rank(1) == 2);
    f.forest.remove(1);
    CHECK(as_set(f.forest.root_list(0)) == std::set<Vertex>{2, 3});
    CHECK(f.forest.query_min(0)->origin == 2);
}

TEST_CASE("delete the only node") {
    Fixture f({{0, 0, 1}});
    f.forest.insert(1, 0);
    f.forest.remove(1);
    CHECK_FALSE(f.forest.has_active(1));
    CHECK_FALSE(f.forest.query_min(0).has_value());
}

TEST_CASE("merge") {
    SUBCASE("with an empty heap") {
        Fixture f({{0, 0, 3}});
        f.forest.insert(1, 0);
        f.dsu.join(0, 3);
        f.forest.merge_front(0, 3);
        CHECK(f.forest.query_min(f.dsu.find(0))->cost == 3);
    }
    SUBCASE("two singletons") {
        Fixture f({{0, 0, 3}, {0, 3, 5}});
        f.forest.insert(1, 0);
        f.forest.insert(2, 1);
        f.dsu.join(3, 0);
        f.forest.merge_front(3, 0);
        const Vertex rep = f.dsu.find(0);
        CHECK(f.forest.query_min(rep)->cost == 3);
        const Vertex other = rep == 0 ? 3 : 0;
        CHECK(f.forest.root_list(other).empty());
    }
    SUBCASE("needs joined vertices") {
        Fixture f({});
        CHECK_THROWS_AS(f.forest.merge_front(0, 3), std::logic_error);
    }
}

TEST_CASE("draining a merged heap gives the sorted union") {
    SplitMix64 rng(8);
    for (int round = 0; round < 300; ++round) {
        constexpr Vertex n = 24;
        std::vector<Edge> edges;
        std::vector<std::pair<Weight, EdgeId>> expected;
        for (Vertex x = 0; x < n; ++x) {
            const Vertex target = rng.below(2) == 0 ? 0 : 1;
            edges.push_back({x, target, rng.uniform(-5, 5)});
        }
        Fixture f(edges, n);
        for (Vertex x = 0; x < n; ++x) {
            if (rng.below(3) == 0) continue;
            f.forest.insert(x, x);
            expected.push_back({edges[x].weight, x});
            if (rng.below(4) == 0) f.forest.query_min(edges[x].target);
        }
        std::sort(expected.begin(), expected.end());
        f.dsu.join(0, 1);
        f.forest.merge_front(0, 1);
        const Vertex rep = f.dsu.find(0);
        std::vector<std::pair<Weight, EdgeId>> drained;
        while (auto top = f.forest.query_min(rep)) {
            drained.push_back({top->cost, top->edge});
            f.forest.remove(top->origin);
        }
        CHECK(drained == expected);
    }
}

TEST_CASE("consolidation leaves distinct root ranks") {
    Fixture f({{0, 0, 5}, {0, 0, 3}, {0, 0, 9}});
    for (Vertex i = 0; i < 3; ++i) f.forest.insert(i + 1, i);
    CHECK(f.forest.query_min(0)->cost == 3);
    std::set<std::int32_t> ranks;
    for (const Vertex r : f.forest.root_list(0)) ranks.insert(f.forest.rank(r));
    CHECK(ranks.size() == f.forest.root_list(0).size());
}

TEST_CASE("precondition violations throw") {
    Fixture f({{0, 0, 5}, {0, 3, 3}});
    f.forest.set_closeness([](Vertex v) { return std::int64_t{v}; });
    CHECK_THROWS_AS(f.forest.remove(1), std::logic_error);
    CHECK_THROWS_AS(f.forest.replace(1, 0), std::logic_error);
    f.forest.insert(1, 1);
    CHECK_THROWS_AS(f.forest.insert(1, 0), std::logic_error);
    // heap 0 is farther than heap 3
    CHECK_THROWS_AS(f.forest.replace(1, 0), std::logic_error);
}

TEST_CASE("random operation sequences") {
    testing::ForestSequenceStats stats;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const std::string failure = testing::run_forest_sequence(seed, 200, &stats);
        INFO("seed " << seed);
        REQUIRE(failure.empty());
    }
    CHECK(stats.queries > 10000);
}
