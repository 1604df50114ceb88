#ifndef ONEP_REDUCTION_HPP
#define ONEP_REDUCTION_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "onep/embedding.hpp"
#include "onep/graph.hpp"
#include "onep/immersion.hpp"

namespace onep {

// Coloring of the source graph with colors a, b, c (0, 1, 2).
struct Coloring {
    std::vector<int> color;  // per source vertex, values 0..2
    void validate(const Graph& source) const;
};

Coloring parse_coloring(const std::string& text, const Graph& source);
std::string serialize_coloring(const Coloring& col);

// One corridor of a vertex-block: everything attached for a single incident
// source edge. Slots are vertex ids in gbar.
struct Corridor {
    int source_edge = -1;
    // per label h = a,b,c: visitor anchors s,t on the U-ring, visitor middle,
    // tent ring feet r1,r2, tent apex x (the labeled boundary vertex)
    std::array<int, 3> s, t, vis_mid, r1, r2, apex;
    std::array<int, 2> tent_edges_a, tent_edges_b, tent_edges_c;  // gbar EdgeIds
    std::array<int, 2> visitor_edges_a, visitor_edges_b, visitor_edges_c;
    int tent_edge(int h, int i) const {
        return h == 0 ? tent_edges_a[static_cast<size_t>(i)]
                      : h == 1 ? tent_edges_b[static_cast<size_t>(i)]
                               : tent_edges_c[static_cast<size_t>(i)];
    }
    int visitor_edge(int h, int i) const {
        return h == 0 ? visitor_edges_a[static_cast<size_t>(i)]
                      : h == 1 ? visitor_edges_b[static_cast<size_t>(i)]
                               : visitor_edges_c[static_cast<size_t>(i)];
    }
};

struct BlockMeta {
    int source_vertex = -1;
    std::vector<int> u_boundary;            // ring-0 vertices of U(v), cyclic
    std::vector<int> block_vertices;        // every vertex belonging to B(v)
    std::vector<int> boundary_labeled;      // the 3k tent apexes, clockwise
    std::vector<Corridor> corridors;        // in rotation order of v
    // selector zone
    std::array<int, 3> sel_alpha, sel_omega;
    std::array<std::vector<int>, 3> sel_path;   // 33-path vertex sequences
    std::array<std::vector<int>, 3> sel_edges;  // their gbar EdgeIds in order
    std::vector<int> blocking0, blocking1;      // vertex sequences
    std::vector<int> blocking0_edges, blocking1_edges;
};

struct PendingTriple {
    int source_edge = -1;
    // per label: path x_v - p - q - x_w and its three gbar EdgeIds
    std::array<std::array<int, 4>, 3> path;
    std::array<std::array<int, 3>, 3> edges;
};

struct FaceMeta {
    std::vector<int> corner_vertices;  // source vertices around the face walk
    std::vector<int> u_boundary;
};

struct ReductionArtifact {
    Graph source;
    RotationSystem source_rotation;
    int k = 1;
    Graph gbar;                // for k >= 2 this is the k-fold multigraph
    Graph gbar_base;           // the k = 1 graph the lift came from
    int g1_vertices = 0;       // G^(1) occupies vertices 0..g1_vertices-1
    int g1_edges = 0;          // ... and edges 0..g1_edges-1 of gbar_base
    std::vector<std::pair<EdgeId, EdgeId>> base_crossings;  // U-cell crossings
    std::vector<BlockMeta> blocks;      // per source vertex
    std::vector<FaceMeta> faces;        // per face of the source embedding
    std::vector<PendingTriple> pendings;  // per source edge

    Graph g1() const;                  // the G^(1) skeleton
    Immersion base_immersion() const;  // its certificate (U-cell crossings only)
};

// Builds the hardness instance for a connected plane source graph with all
// degrees 3 or 4. Throws on degree violations or a nonplanar rotation.
ReductionArtifact build_reduction(const Graph& source, const RotationSystem& rot);

// Assembles the witness 1-immersion from a proper 3-coloring; throws on an
// improper coloring, naming the clashing pending triple.
Immersion build_witness(const ReductionArtifact& art, const Coloring& col);

// Reads the coloring back from a verified 1-immersion of gbar: per block, the
// family whose 33-path crosses the (1)-blocking path. Throws if some block has
// zero or several activated families, or if the immersion does not verify.
Coloring extract_coloring(const ReductionArtifact& art, const Immersion& imm);

// The k-lift: every edge of gbar becomes k parallel edges, every base crossing
// a k x k crossing grid. k = 1 delegates to the plain construction.
ReductionArtifact build_reduction_k(const Graph& source, const RotationSystem& rot, int k);
Immersion build_witness_k(const ReductionArtifact& art, const Coloring& col);

// Structured text mapping gadget vertices back to source elements.
std::string serialize_reduction_meta(const ReductionArtifact& art);

}  // namespace onep

#endif
