#include "doctest.h"
#include "onep/graph.hpp"

#include <stdexcept>

using namespace onep;

TEST_CASE("build validates input") {
    Graph tri = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(tri.m() == 3);
    CHECK_THROWS_AS(build_graph(3, {{0, 1}, {0, 1}}), std::invalid_argument);
    Graph multi = build_graph(3, {{0, 1}, {0, 1}}, true);
    CHECK(multi.m() == 2);
    CHECK_THROWS_AS(build_graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("delete_edge shifts ids") {
    Graph tri = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    Graph p = delete_edge(tri, 0);
    CHECK(p.m() == 2);
    CHECK(p.endpoints(0) == std::pair<int, int>{1, 2});
    CHECK(p.endpoints(1) == std::pair<int, int>{2, 0});
    CHECK_THROWS_AS(delete_edge(tri, 3), std::invalid_argument);

    Graph k7e3 = complete_graph(7);
    // remove a triangle on {4,5,6}
    for (auto [u, v] : {std::pair<int, int>{4, 5}, {4, 6}, {5, 6}}) k7e3 = delete_edge(k7e3, k7e3.find_edge(u, v));
    CHECK(k7e3.m() == 18);
    CHECK(delete_edge(k7e3, 0).m() == 17);

    Graph multi = build_graph(2, {{0, 1}, {0, 1}}, true);
    CHECK(delete_edge(multi, 0).m() == 1);
}

TEST_CASE("multiply_edges") {
    Graph tri = complete_graph(3);
    Graph t2 = multiply_edges(tri, 2);
    CHECK(t2.n == 3);
    CHECK(t2.m() == 6);
    CHECK(t2.multigraph);
    // copies of edge i occupy ids 2i, 2i+1
    CHECK(t2.endpoints(0) == tri.endpoints(0));
    CHECK(t2.endpoints(1) == tri.endpoints(0));

    Graph t1 = multiply_edges(tri, 1);
    CHECK(t1.m() == 3);
    CHECK_FALSE(t1.multigraph);

    CHECK(multiply_edges(complete_graph(4), 3).m() == 18);
    CHECK_THROWS_AS(multiply_edges(tri, 0), std::invalid_argument);

    // degree sequence scales by k
    auto d1 = complete_graph(4).degrees();
    auto d3 = multiply_edges(complete_graph(4), 3).degrees();
    for (size_t i = 0; i < d1.size(); ++i) CHECK(d3[i] == 3 * d1[i]);
}

TEST_CASE("parse and serialize round-trip") {
    Graph tri = parse_graph("c a comment\np graph 3 3\ne 1 2\ne 2 3\ne 3 1\n");
    CHECK(tri.n == 3);
    CHECK(tri.m() == 3);
    CHECK(tri.endpoints(0) == std::pair<int, int>{0, 1});

    Graph k6 = complete_graph(6);
    Graph back = parse_graph(serialize_graph(k6));
    CHECK(back.n == k6.n);
    CHECK(back.edges == k6.edges);

    CHECK_THROWS_AS(parse_graph("p graph 3 1\ne 1 4\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("e 1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("p graph 3 2\ne 1 2\n"), std::invalid_argument);

    Graph multi = build_graph(3, {{0, 1}, {0, 1}}, true);
    Graph mback = parse_graph(serialize_graph(multi));
    CHECK(mback.multigraph);
    CHECK(mback.edges == multi.edges);
}

TEST_CASE("helpers") {
    CHECK(complete_graph(7).m() == 21);
    CHECK(complete_bipartite(3, 3).m() == 9);
    CHECK(cycle_graph(5).m() == 5);
    CHECK(path_graph(4).m() == 3);
    CHECK(cycle_graph(5).is_connected());
}
