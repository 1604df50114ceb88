#include <algorithm>
#include <map>
#include <stdexcept>

#include "onep/families.hpp"
#include "onep/pn.hpp"

namespace onep {

EmbeddedGraph gen_H_n(int n) {
    if (n < 3) throw std::invalid_argument("gen_H_n: n must be >= 3");
    std::vector<std::pair<int, int>> edges;
    auto id = [n](int row, int col) { return row * n + ((col % n) + n) % n; };
    for (int row = 0; row < 3; ++row)
        for (int j = 0; j < n; ++j) edges.emplace_back(id(row, j), id(row, j + 1));
    for (int j = 0; j < n; ++j) edges.emplace_back(id(0, j), id(1, j));
    for (int j = 0; j < n; ++j) edges.emplace_back(id(1, j), id(2, j));
    EmbeddedGraph out;
    out.graph = build_graph(3 * n, std::move(edges));
    auto rot = planar_embed(out.graph);
    if (!rot) throw std::logic_error("P_3 x C_n must be planar");
    out.rotation = *rot;
    return out;
}

Graph gen_medial_extension(const EmbeddedGraph& host, const std::map<int, int>& diagonal_choice) {
    const Graph& h = host.graph;
    auto rep = check_H_class(h, host.rotation);
    if (!rep.all_pass())
        throw std::invalid_argument("gen_medial_extension: host is not in class H: " + rep.to_text());

    auto deg = h.degrees();
    auto inc = h.incident_edges();
    std::vector<std::pair<int, int>> edges;
    for (int w = 0; w < h.n; ++w) {
        if (deg[static_cast<size_t>(w)] == 3) {
            std::vector<int> es = inc[static_cast<size_t>(w)];
            std::sort(es.begin(), es.end());
            edges.emplace_back(es[0], es[1]);
            edges.emplace_back(es[0], es[2]);
            edges.emplace_back(es[1], es[2]);
        } else {
            // cyclic order of the four incident edges around w
            std::vector<int> cyc;
            for (int end : host.rotation.at[static_cast<size_t>(w)]) cyc.push_back(end / 2);
            // start at the smallest edge id so the output is reproducible
            size_t start = static_cast<size_t>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
            std::rotate(cyc.begin(), cyc.begin() + static_cast<long>(start), cyc.end());
            for (int k = 0; k < 4; ++k) edges.emplace_back(cyc[static_cast<size_t>(k)], cyc[static_cast<size_t>((k + 1) % 4)]);
            auto it = diagonal_choice.find(w);
            if (it == diagonal_choice.end())
                throw std::invalid_argument("gen_medial_extension: no diagonal chosen for 4-valent vertex " +
                                            std::to_string(w + 1));
            int x = it->second;
            auto pos = std::find(cyc.begin(), cyc.end(), x);
            if (pos == cyc.end())
                throw std::invalid_argument("gen_medial_extension: diagonal edge not incident to its vertex");
            int opposite = cyc[static_cast<size_t>((pos - cyc.begin() + 2) % 4)];
            edges.emplace_back(x, opposite);
        }
    }
    return build_graph(h.m(), std::move(edges));
}

Graph gen_G_n(int n) {
    if (n < 6) throw std::invalid_argument("gen_G_n: n must be >= 6");
    EmbeddedGraph h = gen_H_n(n);
    // diagonals pair the two row-1 ring edges at every 4-valent vertex
    std::map<int, int> diag;
    for (int j = 0; j < n; ++j) {
        int w = n + j;  // row 1, column j
        int ring = h.graph.find_edge(w, n + (j + 1) % n);
        diag[w] = ring;
    }
    return gen_medial_extension(h, diag);
}

}  // namespace onep
