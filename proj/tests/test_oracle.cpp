#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "balanced/instances.hpp"
#include "balanced/oracle.hpp"
#include "balanced/solver.hpp"
#include "balanced/witness.hpp"
#include "test_util.hpp"

using namespace balanced;

TEST_CASE("shortest balanced walks on tiny instances") {
    Instance neutral(DirectedGraph(2, {{0, 1}, {1, 0}}), 0, 1);
    CHECK(oracle::shortest_balanced(neutral, 1) == 1);

    Instance forward(DirectedGraph(2, {{0, 1}}), 0, 1);
    CHECK_FALSE(oracle::shortest_balanced(forward, 64).has_value());

    Instance self(DirectedGraph(1, {}), 0, 0);
    CHECK(oracle::shortest_balanced(self, 1) == 0);
}

TEST_CASE("figure1 minimum is the path plus the laps") {
    CHECK(oracle::shortest_balanced(instances::gen_figure1(8), 64) == 20);
}

TEST_CASE("growing the bound never hurts") {
    std::mt19937 rng(15);
    for (int iter = 0; iter < 200; ++iter) {
        Instance instance = testutil::random_instance(rng, 8);
        long long bound = 1 + rng() % 20;
        auto narrow = oracle::shortest_balanced(instance, bound);
        auto wide = oracle::shortest_balanced(instance, bound + 7);
        if (narrow) {
            REQUIRE(wide.has_value());
            CHECK(*wide <= *narrow);
        }
    }
}

TEST_CASE("reconstructed walks match the reported minimum and verify") {
    std::mt19937 rng(16);
    int found = 0;
    while (found < 100) {
        Instance instance = testutil::random_instance(rng, 10);
        long long bound = oracle::default_bound(instance.graph.vertex_count());
        auto length = oracle::shortest_balanced(instance, bound);
        auto walk = oracle::shortest_balanced_walk(instance, bound);
        CHECK(length.has_value() == walk.has_value());
        if (!walk) continue;
        CHECK(static_cast<long long>(walk->size()) - 1 == *length);
        WalkReport report = verify_walk(instance, *walk);
        CHECK(report.valid);
        CHECK(report.balanced);
        CHECK(report.endpoints_ok);
        // every prefix respects the bound
        ClassifiedView view(instance.graph);
        long long prefix = 0;
        for (std::size_t i = 0; i + 1 < walk->size(); ++i) {
            prefix += view.weight((*walk)[i], (*walk)[i + 1]);
            CHECK(std::abs(prefix) <= bound);
        }
        ++found;
    }
}

TEST_CASE("per-target distances agree with single-target searches") {
    std::mt19937 rng(19);
    for (int iter = 0; iter < 50; ++iter) {
        Instance instance = testutil::random_instance(rng, 8);
        long long bound = oracle::default_bound(instance.graph.vertex_count());
        auto distances = oracle::balanced_distances(instance.graph, instance.s, bound);
        for (Vertex t = 0; t < instance.graph.vertex_count(); ++t) {
            Instance retargeted(instance.graph, instance.s, t);
            CHECK(oracle::shortest_balanced(retargeted, bound) == distances[t]);
        }
    }
}

TEST_CASE("existence agrees with the decision procedure on random instances") {
    std::mt19937 rng(52);
    for (int iter = 0; iter < 10'000; ++iter) {
        Instance instance = testutil::random_instance(rng, 8);
        int n = instance.graph.vertex_count();
        bool yes = decide_balanced(instance).yes;
        bool found = oracle::shortest_balanced(instance, oracle::default_bound(n)).has_value();
        if (yes && !found)
            found = oracle::shortest_balanced(instance, oracle::escalated_bound(n)).has_value();
        CHECK(yes == found);
    }
}

TEST_CASE("state budget overruns raise a resource error") {
    Instance instance = instances::gen_figure1(8);
    oracle::Limits limits;
    limits.state_cap = 100;
    CHECK_THROWS_AS(oracle::shortest_balanced(instance, 1000, limits), ResourceLimitError);
    CHECK_THROWS_AS(oracle::shortest_balanced(instance, 0), std::invalid_argument);
}
