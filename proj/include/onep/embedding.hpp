#ifndef ONEP_EMBEDDING_HPP
#define ONEP_EMBEDDING_HPP

#include <optional>
#include <string>
#include <vector>

#include "onep/graph.hpp"

namespace onep {

// Cyclic order of edge-ends at each vertex. An edge-end is encoded as
// 2*EdgeId + side, side 0 when the vertex is the stored first endpoint.
// Parallel edges therefore have distinguishable ends.
struct RotationSystem {
    std::vector<std::vector<int>> at;  // one cyclic sequence per vertex

    static int end_of(const Graph& g, EdgeId e, int vertex);
    static int end_vertex(const Graph& g, int end);  // vertex this end sits at
    static EdgeId edge_of(int end) { return end / 2; }
};

struct FaceSet {
    // Each face is a closed walk of directed edges (EdgeId, direction),
    // direction 0 = first->second.
    std::vector<std::vector<std::pair<int, int>>> faces;
    std::optional<int> outer_face;
    int euler_value = 0;  // V - E + F summed check value for connected graphs
};

// Planarity via Boyer-Myrvold (rotation extracted on success). Accepts
// multigraphs (parallel edges are subdivided internally) and disconnected
// inputs (per-component results merged).
std::optional<RotationSystem> planar_embed(const Graph& g);
bool is_planar(const Graph& g);

// Face traversal of a rotation system; throws on malformed rotations.
FaceSet face_traversal(const Graph& g, const RotationSystem& rot);

// True iff rot is a plane embedding: V - E + F = 2 on every connected component.
bool is_plane_embedding(const Graph& g, const RotationSystem& rot);

// C given as a vertex sequence (closed implicitly). True iff C is an induced
// cycle and G - V(C) is connected and nonempty.
bool is_peripheral(const Graph& g, const std::vector<int>& cycle);

// All cycles of length 3 (and 4 when maxlen = 4), each listed once.
std::vector<std::vector<int>> enumerate_short_cycles(const Graph& g, int maxlen);

// Maximum number of pairwise edge-disjoint s-t paths in G - forbidden
// (unit-capacity max-flow).
int edge_disjoint_connectivity(const Graph& g, int s, int t, const std::vector<int>& forbidden);

bool is_k_connected(const Graph& g, int k);  // vertex connectivity >= k

std::vector<int> component_ids(const Graph& g);

// Rotation file block: one line per vertex, `r <v>: <e1> <e2> ...` with
// 1-indexed vertex and edge ids (ends resolved by position for parallels).
std::string serialize_rotation(const Graph& g, const RotationSystem& rot);
RotationSystem parse_rotation(const Graph& g, const std::string& text);

}  // namespace onep

#endif
