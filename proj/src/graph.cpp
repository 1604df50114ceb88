#include "onep/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace onep {

bool Graph::has_edge(int u, int v) const { return find_edge(u, v) >= 0; }

int Graph::find_edge(int u, int v) const {
    for (int e = 0; e < m(); ++e) {
        auto [a, b] = edges[static_cast<size_t>(e)];
        if ((a == u && b == v) || (a == v && b == u)) return e;
    }
    return -1;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (auto& [u, v] : edges) {
        deg[static_cast<size_t>(u)]++;
        deg[static_cast<size_t>(v)]++;
    }
    return deg;
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (auto& [u, v] : edges) {
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    return adj;
}

std::vector<std::vector<int>> Graph::incident_edges() const {
    std::vector<std::vector<int>> inc(static_cast<size_t>(n));
    for (int e = 0; e < m(); ++e) {
        auto [u, v] = edges[static_cast<size_t>(e)];
        inc[static_cast<size_t>(u)].push_back(e);
        inc[static_cast<size_t>(v)].push_back(e);
    }
    return inc;
}

bool Graph::is_connected() const {
    if (n == 0) return true;
    auto adj = adjacency();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<size_t>(v)])
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                count++;
                stack.push_back(w);
            }
    }
    return count == n;
}

Graph build_graph(int n, std::vector<std::pair<int, int>> edges, bool multigraph) {
    if (n < 0) throw std::invalid_argument("build_graph: negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("build_graph: endpoint out of range");
        if (u == v) throw std::invalid_argument("build_graph: self-loop rejected");
        if (!multigraph) {
            auto key = std::minmax(u, v);
            if (!seen.insert(key).second)
                throw std::invalid_argument("build_graph: duplicate edge in simple graph");
        }
    }
    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    g.multigraph = multigraph;
    return g;
}

Graph delete_edge(const Graph& g, EdgeId e) {
    if (e < 0 || e >= g.m()) throw std::invalid_argument("delete_edge: invalid EdgeId");
    Graph out = g;
    out.edges.erase(out.edges.begin() + e);
    return out;
}

Graph multiply_edges(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("multiply_edges: k must be >= 1");
    if (g.multigraph) throw std::invalid_argument("multiply_edges: input must be simple");
    Graph out;
    out.n = g.n;
    out.multigraph = k > 1;
    out.edges.reserve(g.edges.size() * static_cast<size_t>(k));
    for (auto& e : g.edges)
        for (int i = 0; i < k; ++i) out.edges.push_back(e);
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> remap(static_cast<size_t>(g.n), -1);
    for (size_t i = 0; i < vertices.size(); ++i) remap[static_cast<size_t>(vertices[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (auto& [u, v] : g.edges) {
        int a = remap[static_cast<size_t>(u)], b = remap[static_cast<size_t>(v)];
        if (a >= 0 && b >= 0) edges.emplace_back(a, b);
    }
    return build_graph(static_cast<int>(vertices.size()), std::move(edges), g.multigraph);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p graph " << g.n << " " << g.m() << (g.multigraph ? " multi" : "") << "\n";
    for (auto& [u, v] : g.edges) out << "e " << (u + 1) << " " << (v + 1) << "\n";
    return out.str();
}

Graph parse_graph(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    bool multi = false;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::string kind;
            ls >> kind >> n >> m;
            if (!ls || kind != "graph" || n < 0 || m < 0)
                throw std::invalid_argument("parse_graph: malformed header: " + line);
            std::string flag;
            if (ls >> flag) {
                if (flag == "multi")
                    multi = true;
                else
                    throw std::invalid_argument("parse_graph: unknown header flag: " + flag);
            }
        } else if (tag == "e") {
            if (n < 0) throw std::invalid_argument("parse_graph: edge before header");
            int u, v;
            ls >> u >> v;
            if (!ls) throw std::invalid_argument("parse_graph: malformed edge line: " + line);
            if (u < 1 || u > n || v < 1 || v > n)
                throw std::invalid_argument("parse_graph: endpoint out of range: " + line);
            edges.emplace_back(u - 1, v - 1);
        } else if (tag == "r" || tag == "x" || tag == "o") {
            break;  // start of an embedded rotation/certificate block; not ours
        } else {
            throw std::invalid_argument("parse_graph: unknown line: " + line);
        }
    }
    if (n < 0) throw std::invalid_argument("parse_graph: missing header");
    if (static_cast<int>(edges.size()) != m)
        throw std::invalid_argument("parse_graph: edge count mismatch");
    return build_graph(n, std::move(edges), multi);
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return parse_graph(in);
}

void save_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph file: " + path);
    out << serialize_graph(g);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return build_graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return build_graph(a + b, std::move(edges));
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return build_graph(n, std::move(edges));
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return build_graph(n, std::move(edges));
}

}  // namespace onep
