#include "doctest.h"
#include "onep/immersion.hpp"

#include <stdexcept>

using namespace onep;

TEST_CASE("planarize counts and errors") {
    Graph k5 = complete_graph(5);
    int e02 = k5.find_edge(0, 2), e13 = k5.find_edge(1, 3);
    auto pl = planarize(k5, {{std::min(e02, e13), std::max(e02, e13)}},
                        order_from_crossings(k5, {{std::min(e02, e13), std::max(e02, e13)}}));
    CHECK(pl.graph.n == 6);   // n + 1
    CHECK(pl.graph.m() == 12);  // m + 2
    CHECK(pl.graph.degrees()[5] == 4);

    // empty crossing set: planarization is the graph itself
    auto pl0 = planarize(k5, {}, order_from_crossings(k5, {}));
    CHECK(pl0.graph.n == 5);
    CHECK(pl0.graph.edges == k5.edges);

    // adjacent pair rejected
    int e01 = k5.find_edge(0, 1), e03 = k5.find_edge(0, 3);
    CHECK_THROWS_AS(planarize(k5, {{e01, e03}}, order_from_crossings(k5, {{e01, e03}})),
                    std::invalid_argument);
    // duplicate pair rejected
    std::vector<std::pair<EdgeId, EdgeId>> dup{{e02, e13}, {e02, e13}};
    CHECK_THROWS_AS(planarize(k5, dup, order_from_crossings(k5, dup)), std::invalid_argument);
    // inconsistent order rejected
    auto ord = order_from_crossings(k5, {{e02, e13}});
    ord[static_cast<size_t>(e02)].clear();
    CHECK_THROWS_AS(planarize(k5, {{e02, e13}}, ord), std::invalid_argument);
}

TEST_CASE("make_immersion produces verified K5 witness") {
    Graph k5 = complete_graph(5);
    int e02 = k5.find_edge(0, 2), e13 = k5.find_edge(1, 3);
    auto imm = make_immersion(k5, {{std::min(e02, e13), std::max(e02, e13)}});
    REQUIRE(imm.has_value());
    CHECK(verify_ok(*imm, 1));
    CHECK(verify_ok(*imm, 2));  // monotone in k

    auto bad = verify(*imm, 1);
    CHECK(bad.empty());
}

TEST_CASE("verify flags violations as data") {
    Graph k5 = complete_graph(5);
    int e02 = k5.find_edge(0, 2), e13 = k5.find_edge(1, 3), e24 = k5.find_edge(2, 4);
    (void)e24;
    auto imm = make_immersion(k5, {{std::min(e02, e13), std::max(e02, e13)}});
    REQUIRE(imm);

    SUBCASE("structure violation") {
        Immersion broken = *imm;
        broken.crossings.push_back(broken.crossings[0]);
        broken.order = order_from_crossings(broken.base, broken.crossings);
        auto v = verify(broken, 1);
        REQUIRE_FALSE(v.empty());
        CHECK(v[0].code == "structure");
    }
    SUBCASE("euler violation") {
        Immersion broken = *imm;
        // swap two entries in an original vertex's rotation: generically ruins planarity
        auto& ring = broken.rotation.at[0];
        REQUIRE(ring.size() == 4);
        std::swap(ring[0], ring[1]);
        auto v = verify(broken, 1);
        REQUIRE_FALSE(v.empty());
        bool has_euler = false;
        for (auto& viol : v) has_euler |= viol.code == "euler";
        CHECK(has_euler);
    }
    SUBCASE("alternation violation") {
        Immersion broken = *imm;
        auto& ring = broken.rotation.at[5];  // the dummy
        REQUIRE(ring.size() == 4);
        std::swap(ring[1], ring[2]);  // e,f,e,f -> e,e,f,f
        auto v = verify(broken, 1);
        bool has_alt = false;
        for (auto& viol : v) has_alt |= viol.code == "alternation";
        CHECK(has_alt);
    }
}

TEST_CASE("crossing count bound vs k") {
    // C6 with two crossings on one edge: 0-3 crosses 1-5 and 2-4
    Graph g = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}, {1, 5}, {2, 4}});
    int e03 = g.find_edge(0, 3), e15 = g.find_edge(1, 5), e24 = g.find_edge(2, 4);
    std::vector<std::pair<EdgeId, EdgeId>> cr{{std::min(e03, e15), std::max(e03, e15)},
                                              {std::min(e03, e24), std::max(e03, e24)}};
    auto imm = make_immersion(g, cr);
    REQUIRE(imm);
    CHECK(verify_ok(*imm, 2));
    auto v1 = verify(*imm, 1);
    bool has_count = false;
    for (auto& viol : v1) has_count |= viol.code == "crossing-count";
    CHECK(has_count);
}

TEST_CASE("bounds") {
    CHECK(crossing_lower_bound(complete_graph(5)) == 1);
    CHECK(crossing_lower_bound(complete_graph(6)) == 3);
    CHECK(crossing_lower_bound(complete_graph(4)) == 0);
    CHECK(edge_bound_reject(complete_graph(7)));
    CHECK_FALSE(edge_bound_reject(complete_graph(6)));
    CHECK_FALSE(edge_bound_reject(cycle_graph(8)));
}

TEST_CASE("certificate round-trip") {
    Graph k5 = complete_graph(5);
    int e02 = k5.find_edge(0, 2), e13 = k5.find_edge(1, 3);
    auto imm = make_immersion(k5, {{std::min(e02, e13), std::max(e02, e13)}});
    REQUIRE(imm);
    auto text = serialize_immersion(*imm);
    auto back = parse_immersion(text);
    CHECK(back.base.edges == imm->base.edges);
    CHECK(back.crossings == imm->crossings);
    CHECK(back.order == imm->order);
    CHECK(back.rotation.at == imm->rotation.at);
    CHECK(verify_ok(back, 1));
    CHECK(serialize_immersion(back) == text);
}

TEST_CASE("multi-crossing order and serialization") {
    // path 0-1 subdividable scenario with an edge crossed twice
    Graph g = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}, {1, 5}, {2, 4}});
    int e03 = g.find_edge(0, 3), e15 = g.find_edge(1, 5), e24 = g.find_edge(2, 4);
    std::vector<std::pair<EdgeId, EdgeId>> cr{{std::min(e03, e15), std::max(e03, e15)},
                                              {std::min(e03, e24), std::max(e03, e24)}};
    auto imm = make_immersion(g, cr);
    REQUIRE(imm);
    auto text = serialize_immersion(*imm);
    CHECK(text.find("o ") != std::string::npos);
    auto back = parse_immersion(text);
    CHECK(verify_ok(back, 2));
}
