#include <stdexcept>

#include "onep/families.hpp"

namespace onep {

UGraph gen_U_graph(int n) {
    if (n < 6) throw std::invalid_argument("gen_U_graph: n must be >= 6");
    auto id = [n](int ring, int j) { return ring * n + ((j % n) + n) % n; };
    std::vector<std::pair<int, int>> edges;
    // ring edges: ring 0 is the outer boundary cycle
    for (int r = 0; r < 4; ++r)
        for (int j = 0; j < n; ++j) edges.emplace_back(id(r, j), id(r, j + 1));
    // spokes
    for (int r = 0; r < 3; ++r)
        for (int j = 0; j < n; ++j) edges.emplace_back(id(r, j), id(r + 1, j));
    // crossed diagonals per cell
    std::vector<std::pair<EdgeId, EdgeId>> crossings;
    for (int r = 0; r < 3; ++r)
        for (int j = 0; j < n; ++j) {
            int d1 = static_cast<int>(edges.size());
            edges.emplace_back(id(r, j), id(r + 1, j + 1));
            int d2 = static_cast<int>(edges.size());
            edges.emplace_back(id(r, j + 1), id(r + 1, j));
            crossings.emplace_back(d1, d2);
        }
    UGraph out;
    out.graph = build_graph(4 * n, std::move(edges));
    for (int j = 0; j < n; ++j) out.boundary.push_back(j);
    auto imm = make_immersion(out.graph, crossings);
    if (!imm) throw std::logic_error("U-graph companion immersion failed to embed");
    out.immersion = std::move(*imm);
    return out;
}

GridJoin gen_grid_join(const UGraph& u1, const UGraph& u2, int gridtype, int pos1, int pos2) {
    if (gridtype != 1 && gridtype != 2) throw std::invalid_argument("gen_grid_join: gridtype must be 1 or 2");
    int n1 = static_cast<int>(u1.boundary.size());
    int n2 = static_cast<int>(u2.boundary.size());
    if (n1 < 7 || n2 < 7) throw std::invalid_argument("gen_grid_join: boundary cycle shorter than 7");
    if (pos1 < 0 || pos1 >= n1 || pos2 < 0 || pos2 >= n2)
        throw std::invalid_argument("gen_grid_join: window start out of range");

    int off = u1.graph.n;
    std::vector<std::pair<int, int>> edges = u1.graph.edges;
    for (auto& [a, b] : u2.graph.edges) edges.emplace_back(a + off, b + off);
    int m1 = u1.graph.m();

    // windows face each other, so the second one is traversed in reverse
    std::vector<int> w1(7), w2(7);
    for (int i = 0; i < 7; ++i) {
        w1[static_cast<size_t>(i)] = u1.boundary[static_cast<size_t>((pos1 + i) % n1)];
        w2[static_cast<size_t>(i)] = u2.boundary[static_cast<size_t>((pos2 + (6 - i)) % n2)] + off;
    }

    GridJoin out;
    int next_vertex = u1.graph.n + u2.graph.n;
    std::vector<int> middles;
    for (int i = 0; i < 7; ++i) {
        if (gridtype == 1) {
            edges.emplace_back(w1[static_cast<size_t>(i)], w2[static_cast<size_t>(i)]);
            out.basic_paths.push_back({w1[static_cast<size_t>(i)], w2[static_cast<size_t>(i)]});
        } else {
            int mid = next_vertex++;
            middles.push_back(mid);
            edges.emplace_back(w1[static_cast<size_t>(i)], mid);
            edges.emplace_back(mid, w2[static_cast<size_t>(i)]);
            out.basic_paths.push_back({w1[static_cast<size_t>(i)], mid, w2[static_cast<size_t>(i)]});
        }
    }
    if (gridtype == 2)
        for (int i = 0; i + 1 < 7; ++i) edges.emplace_back(middles[static_cast<size_t>(i)], middles[static_cast<size_t>(i + 1)]);

    out.graph = build_graph(next_vertex, std::move(edges));
    out.boundary1 = u1.boundary;
    for (int v : u2.boundary) out.boundary2.push_back(v + off);

    std::vector<std::pair<EdgeId, EdgeId>> crossings = u1.immersion.crossings;
    for (auto& [e, f] : u2.immersion.crossings) crossings.emplace_back(e + m1, f + m1);
    auto imm = make_immersion(out.graph, crossings);
    if (!imm) throw std::logic_error("grid join companion immersion failed to embed");
    out.immersion = std::move(*imm);
    return out;
}

}  // namespace onep
