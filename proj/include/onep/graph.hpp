#ifndef ONEP_GRAPH_HPP
#define ONEP_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace onep {

// Finite labeled graph or multigraph. Vertices are 0..n-1, edges are kept in
// input order and addressed by their position in `edges` (EdgeId). Self-loops
// are never allowed; parallel edges only when `multigraph` is set.
// Graphs are immutable values after construction: all operations below return
// new graphs.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    bool multigraph = false;

    int m() const { return static_cast<int>(edges.size()); }

    // Endpoints of edge e as stored. The first endpoint is the designated
    // one used by immersion certificates for crossing order.
    std::pair<int, int> endpoints(int e) const { return edges[static_cast<size_t>(e)]; }

    bool has_edge(int u, int v) const;
    int find_edge(int u, int v) const;  // smallest EdgeId with these endpoints, -1 if absent

    std::vector<int> degrees() const;
    std::vector<std::vector<int>> adjacency() const;             // neighbor lists (with multiplicity)
    std::vector<std::vector<int>> incident_edges() const;        // edge ids per vertex

    bool is_connected() const;
    bool is_simple() const { return !multigraph; }
};

using EdgeId = int;

// Builds a graph, validating endpoints, self-loops and duplicate edges.
// Throws std::invalid_argument on violation.
Graph build_graph(int n, std::vector<std::pair<int, int>> edges, bool multigraph = false);

// Edge removed; EdgeIds above e shift down by one (document: id j > e becomes j-1).
Graph delete_edge(const Graph& g, EdgeId e);

// Every edge replaced by k parallel copies; copies of edge i occupy ids k*i..k*i+k-1.
// Requires a simple input graph and k >= 1.
Graph multiply_edges(const Graph& g, int k);

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// --- file format -----------------------------------------------------------
// Line oriented text:
//   c <comment>
//   p graph <n> <m> [multi]
//   e <u> <v>          (1-indexed, one line per edge, in EdgeId order)
std::string serialize_graph(const Graph& g);
Graph parse_graph(const std::string& text);
Graph parse_graph(std::istream& in);
Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path);

// Small helpers used all over the generators and tests.
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);

}  // namespace onep

#endif
