#include "doctest.h"
#include "onep/solver.hpp"

using namespace onep;

TEST_CASE("planar graphs are YES with zero crossings") {
    auto v = decide_1planar(complete_graph(4));
    CHECK(v.status == Status::YES);
    CHECK(v.stats.crossings_used == 0);
    REQUIRE(v.witness);
    CHECK(verify_ok(*v.witness, 1));
}

TEST_CASE("K5 needs exactly one crossing") {
    auto v = decide_1planar(complete_graph(5));
    REQUIRE(v.status == Status::YES);
    CHECK(v.stats.crossings_used == 1);
    CHECK(verify_ok(*v.witness, 1));
}

TEST_CASE("K33 is 1-planar") {
    auto v = decide_1planar(complete_bipartite(3, 3));
    REQUIRE(v.status == Status::YES);
    CHECK(v.stats.crossings_used == 1);
    CHECK(verify_ok(*v.witness, 1));
}

TEST_CASE("K6 is 1-planar with three crossings") {
    auto v = decide_1planar(complete_graph(6));
    REQUIRE(v.status == Status::YES);
    CHECK(v.stats.crossings_used == 3);
    CHECK(verify_ok(*v.witness, 1));
}

TEST_CASE("K7 rejected by the edge bound") {
    auto v = decide_1planar(complete_graph(7));
    CHECK(v.status == Status::NO);
    CHECK(v.stats.nodes == 0);
}

TEST_CASE("proper 1-immersions exclude the plane embedding") {
    auto v = decide_proper_1immersion(complete_graph(4));
    REQUIRE(v.status == Status::YES);
    CHECK(v.stats.crossings_used == 1);
    CHECK(verify_ok(*v.witness, 1));

    auto c5 = decide_proper_1immersion(cycle_graph(5));
    REQUIRE(c5.status == Status::YES);
    CHECK(c5.stats.crossings_used == 1);
}

TEST_CASE("determinism across worker counts") {
    SolverBudget b1, b8;
    b1.jobs = 1;
    b8.jobs = 8;
    auto v1 = decide_1planar(complete_graph(6), b1);
    auto v8 = decide_1planar(complete_graph(6), b8);
    REQUIRE(v1.status == Status::YES);
    REQUIRE(v8.status == Status::YES);
    CHECK(serialize_immersion(*v1.witness) == serialize_immersion(*v8.witness));
}

TEST_CASE("restricted candidate search") {
    Graph k5 = complete_graph(5);
    int e02 = k5.find_edge(0, 2), e13 = k5.find_edge(1, 3);
    auto v = decide_with_candidates(k5, {{e02, e13}}, 1, 1);
    REQUIRE(v.status == Status::YES);
    CHECK(verify_ok(*v.witness, 1));

    // empty candidate set cannot fix K5
    auto w = decide_with_candidates(k5, {}, 0, 0);
    CHECK(w.status == Status::NO);
}

TEST_CASE("witness restricts to deletions (monotonicity spot check)") {
    Graph k6 = complete_graph(6);
    auto v = decide_1planar(k6);
    REQUIRE(v.status == Status::YES);
    for (int e = 0; e < k6.m(); e += 5) {
        auto ve = decide_1planar(delete_edge(k6, e));
        CHECK(ve.status == Status::YES);
    }
}

TEST_CASE("mn_check on K6: not MN because K6 itself is 1-planar") {
    auto rep = mn_check(complete_graph(6));
    CHECK(rep.graph_status == Status::YES);
    CHECK_FALSE(rep.confirmed);
}

TEST_CASE("timeout is a first-class verdict") {
    SolverBudget tiny;
    tiny.node_limit = 5;
    tiny.time_limit_seconds = 60;
    Graph k6 = complete_graph(6);
    auto v = decide_1planar(k6, tiny);
    CHECK(v.status == Status::TIMEOUT);
}
