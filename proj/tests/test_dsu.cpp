#include <doctest.h>

#include <set>

#include "dmst/dsu.hpp"
#include "dmst/rng.hpp"

using namespace dmst;

TEST_CASE("plain dsu basics") {
    PlainDsu d(3);
    CHECK(d.find(2) == 2);
    d.join(0, 1);
    CHECK(d.find(0) == d.find(1));
    d.join(1, 2);
    CHECK(d.find(0) == d.find(2));
    CHECK(d.find(1) == d.find(2));
    CHECK(d.set_size(2) == 3);
}

TEST_CASE("self join is a no-op") {
    PlainDsu d(2);
    CHECK(d.join(0, 0) == 0);
    CHECK(d.find(1) == 1);
    CHECK(d.set_size(0) == 1);

    ContractionDsu c(2);
    c.add_offset(0, 4);
    CHECK(c.join(0, 0) == 0);
    CHECK(c.offset(0) == 4);
}

TEST_CASE("union by size keeps the larger root") {
    PlainDsu d(4);
    d.join(1, 2);
    d.join(1, 3);
    const Vertex big = d.find(1);
    CHECK(d.join(0, 3) == big);

    ContractionDsu c(4);
    c.join(1, 2);
    c.join(1, 3);
    const Vertex cbig = c.find(1);
    CHECK(c.join(0, 3) == cbig);
}

TEST_CASE("n-1 joins give one set") {
    SplitMix64 rng(3);
    constexpr Vertex n = 200;
    PlainDsu d(n);
    int joins = 0;
    while (joins < n - 1) {
        const auto a = static_cast<Vertex>(rng.below(n));
        const auto b = static_cast<Vertex>(rng.below(n));
        if (!d.same(a, b)) {
            d.join(a, b);
            ++joins;
        }
    }
    std::set<Vertex> reps;
    for (Vertex v = 0; v < n; ++v) reps.insert(d.find(v));
    CHECK(reps.size() == 1);
}

TEST_CASE("offsets: direct cases") {
    ContractionDsu c(3);
    const Edge into0{1, 0, 10};
    c.add_offset(0, 0);
    CHECK(c.current_cost(into0) == 10);
    c.add_offset(0, -3);
    CHECK(c.current_cost(into0) == 7);
}

TEST_CASE("offsets survive a join") {
    ContractionDsu c(2);
    const Edge into_r{1, 0, 20};
    const Edge into_s{0, 1, 30};
    c.add_offset(0, -1);
    c.add_offset(0, -1);
    c.join(0, 1);
    CHECK(c.current_cost(into_r) == 18);
    CHECK(c.current_cost(into_s) == 30);
    // same when the fresh set wins the representative
    ContractionDsu d(2);
    d.add_offset(0, -1);
    d.add_offset(0, -1);
    d.join(1, 0);
    CHECK(d.current_cost(into_r) == 18);
    CHECK(d.current_cost(into_s) == 30);
}

TEST_CASE("add_offset needs a representative") {
    ContractionDsu c(2);
    const Vertex r = c.join(0, 1);
    CHECK_THROWS_AS(c.add_offset(1 - r, 1), std::logic_error);
}

TEST_CASE("offsets match a shadow model under random operations") {
    // Shadow: explicit member lists and one accumulated offset per vertex.
    SplitMix64 rng(11);
    for (int round = 0; round < 200; ++round) {
        const auto n = static_cast<Vertex>(rng.uniform(1, 40));
        ContractionDsu c(n);
        std::vector<Vertex> set_of(n);
        std::vector<Weight> shadow(n, 0);
        for (Vertex v = 0; v < n; ++v) set_of[v] = v;
        for (int op = 0; op < 200; ++op) {
            const auto a = static_cast<Vertex>(rng.below(n));
            const auto b = static_cast<Vertex>(rng.below(n));
            switch (rng.below(3)) {
                case 0: {
                    c.join(a, b);
                    const Vertex from = set_of[b];
                    for (Vertex v = 0; v < n; ++v) {
                        if (set_of[v] == from) set_of[v] = set_of[a];
                    }
                    break;
                }
                case 1: {
                    const Weight delta = rng.uniform(-100, 100);
                    c.add_offset(c.find(a), delta);
                    for (Vertex v = 0; v < n; ++v) {
                        if (set_of[v] == set_of[a]) shadow[v] += delta;
                    }
                    break;
                }
                default:
                    CHECK(c.find(c.find(a)) == c.find(a));
                    break;
            }
            for (Vertex v = 0; v < n; ++v) {
                REQUIRE(c.offset(v) == shadow[v]);
                REQUIRE((c.find(v) == c.find(a)) == (set_of[v] == set_of[a]));
            }
        }
    }
}

TEST_CASE("path compression keeps find cheap") {
    constexpr Vertex n = 100000;
    constexpr int ops = 1000000;
    SplitMix64 rng(99);
    ContractionDsu c(n);
    for (int i = 0; i < ops; ++i) {
        const auto a = static_cast<Vertex>(rng.below(n));
        const auto b = static_cast<Vertex>(rng.below(n));
        if (i % 10 == 0) {
            c.join(a, b);
        } else {
            c.find(a);
        }
    }
    CHECK(c.path_visits() <= 4ULL * ops);
}
