#include "doctest.h"
#include "onep/embedding.hpp"
#include "onep/graph.hpp"

#include <set>

using namespace onep;

namespace {

Graph cube() {
    return build_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                           {4, 5}, {5, 6}, {6, 7}, {7, 4},
                           {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

Graph octahedron() {
    // K_{2,2,2}: vertices 0-5, antipodal pairs (0,1),(2,3),(4,5)
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            if ((i / 2) == (j / 2)) continue;
            es.emplace_back(i, j);
        }
    return build_graph(6, es);
}

}  // namespace

TEST_CASE("planarity basics") {
    auto k4 = complete_graph(4);
    auto rot = planar_embed(k4);
    REQUIRE(rot.has_value());
    auto fs = face_traversal(k4, *rot);
    CHECK(fs.faces.size() == 4);
    CHECK(is_plane_embedding(k4, *rot));

    CHECK_FALSE(is_planar(complete_graph(5)));
    CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
    CHECK(is_planar(cube()));
    CHECK(is_planar(octahedron()));
}

TEST_CASE("face traversal counts") {
    Graph tri = complete_graph(3);
    auto rot = planar_embed(tri);
    REQUIRE(rot);
    CHECK(face_traversal(tri, *rot).faces.size() == 2);

    Graph q3 = cube();
    auto rq = planar_embed(q3);
    REQUIRE(rq);
    CHECK(face_traversal(q3, *rq).faces.size() == 6);  // Euler: 8 - 12 + F = 2

    // malformed rotation: drop one end
    RotationSystem broken = *rq;
    broken.at[0].pop_back();
    CHECK_THROWS(face_traversal(q3, broken));
}

TEST_CASE("multigraph embedding") {
    Graph banana = build_graph(2, {{0, 1}, {0, 1}, {0, 1}}, true);
    auto rot = planar_embed(banana);
    REQUIRE(rot);
    CHECK(is_plane_embedding(banana, *rot));
    CHECK(face_traversal(banana, *rot).faces.size() == 3);
}

TEST_CASE("disconnected embedding") {
    Graph two = build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    auto rot = planar_embed(two);
    REQUIRE(rot);
    CHECK(is_plane_embedding(two, *rot));
}

TEST_CASE("is_peripheral") {
    Graph q3 = cube();
    CHECK(is_peripheral(q3, {0, 1, 2, 3}));  // facial 4-cycle; complement is a 4-cycle
    CHECK_FALSE(is_peripheral(complete_graph(4), {0, 1, 2, 3}));  // chords

    // octahedron equator is not induced
    Graph oct = octahedron();
    // find a 6-cycle through all vertices: 0-2-1-3-?? — instead check a triangle: peripheral
    CHECK(is_peripheral(oct, {0, 2, 4}));
    CHECK_THROWS(is_peripheral(q3, {0, 1, 2}));  // not a cycle
    // removing everything leaves the empty graph: non-peripheral by convention
    CHECK_FALSE(is_peripheral(complete_graph(3), {0, 1, 2}));
}

TEST_CASE("short cycles") {
    auto tris = enumerate_short_cycles(complete_graph(4), 3);
    CHECK(tris.size() == 4);
    auto oct_tris = enumerate_short_cycles(octahedron(), 3);
    CHECK(oct_tris.size() == 8);
    CHECK(enumerate_short_cycles(cycle_graph(5), 4).empty());
    auto c4s = enumerate_short_cycles(cube(), 4);
    CHECK(c4s.size() == 6 + 0);  // exactly the six faces
    auto k4all = enumerate_short_cycles(complete_graph(4), 4);
    CHECK(k4all.size() == 4 + 3);  // four triangles, three 4-cycles
}

TEST_CASE("edge disjoint connectivity") {
    Graph k5 = complete_graph(5);
    CHECK(edge_disjoint_connectivity(k5, 0, 1, {}) == 4);
    Graph p4 = path_graph(4);
    CHECK(edge_disjoint_connectivity(p4, 0, 3, {}) == 1);
    CHECK(edge_disjoint_connectivity(k5, 0, 1, {4}) == 3);
    CHECK_THROWS(edge_disjoint_connectivity(k5, 2, 2, {}));

    // brute-force min-cut cross-check on small graphs: cube s-t cut = 3
    CHECK(edge_disjoint_connectivity(cube(), 0, 6, {}) == 3);
}

TEST_CASE("k-connectivity") {
    CHECK(is_k_connected(complete_graph(4), 3));
    CHECK(is_k_connected(octahedron(), 3));
    CHECK_FALSE(is_k_connected(cycle_graph(6), 3));
    CHECK(is_k_connected(cycle_graph(6), 2));
    CHECK_FALSE(is_k_connected(path_graph(3), 2));
}

TEST_CASE("rotation file round-trip") {
    Graph q3 = cube();
    auto rot = planar_embed(q3);
    REQUIRE(rot);
    auto text = serialize_rotation(q3, *rot);
    auto back = parse_rotation(q3, text);
    CHECK(back.at == rot->at);
}
