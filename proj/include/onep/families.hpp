#ifndef ONEP_FAMILIES_HPP
#define ONEP_FAMILIES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "onep/embedding.hpp"
#include "onep/graph.hpp"
#include "onep/immersion.hpp"

namespace onep {

// ---------------------------------------------------------------------------
// Links and chains (the K_{3,3}-based MN construction)
//
// The three link types are stored as explicit transcription tables.  Local
// vertex order is (z, zbar, internals...); z and zbar are the end vertices.
//
//   A-link   4 vertices z,zbar,v,w; edges zv zw zbar-v zbar-w vw.
//            Free cycles: (z,v,w) and (zbar,v,w), cores z and zbar.
//   B-link   5 vertices z,zbar,u,v,w; edges zv zw zbar-v zbar-u zbar-w uv uw.
//            Free cycle: the 4-cycle (z,v,u,w), core z.  Middle edge: zbar-u.
//            The variant link mirrors the roles of z and zbar.
//   base     5 vertices z,zbar,u,v,w; edges zv zw zbar-u zbar-v zbar-w uv uw vw.
//            Free cycle: the 3-cycle (z,v,w), core z.  zbar is the chain end
//            carrying three link edges (it sits at an Omega(i) vertex).
// ---------------------------------------------------------------------------

enum class LinkKind { A, B, Base };

struct LinkInfo {
    LinkKind kind;
    bool mirrored = false;       // B-link variant of Fig 2.2(e)
    int z = -1, zbar = -1;       // global vertex ids of the link's core ends
    std::vector<int> internals;  // global ids of the non-core vertices
    std::vector<int> edge_ids;   // global EdgeIds of the link, in table order
    // free cycles as (core vertex, vertex cycle, core-adjacent edge pair)
    struct FreeCycle {
        int core;
        std::vector<int> cycle;
        std::pair<int, int> core_adjacent;
    };
    std::vector<FreeCycle> free_cycles;
    std::optional<int> middle_edge;  // B-links only
};

struct LinkGraph {
    Graph graph;
    LinkInfo info;  // for the standalone link, z = 0, zbar = 1
};

// The exact labeled link graphs with marked end vertices and free cycles.
LinkGraph gen_link(LinkKind kind);

struct ChainSpec {
    std::vector<int> a_lengths;               // three ints >= 2
    std::vector<int> b_lengths;               // three ints >= 2
    std::vector<std::vector<int>> b_variants; // per B-chain: increasing subset of 1..len-2
    void validate() const;
};

struct ChainInfo {
    LinkKind kind;            // A or B (the chain type; the last link is a base link)
    int length = 0;
    std::vector<int> cores;   // v(0)..v(n)
    std::vector<LinkInfo> links;
};

struct ChainGraph {
    Graph graph;
    ChainInfo info;
};

// A- or B-chain of the given length; variant positions mirror the B-links at
// those indices (1-based, at most length-2 per the construction).
ChainGraph gen_chain(LinkKind kind, int length, const std::vector<int>& variants = {});

struct ChainGraphInfo {
    int A = -1, B = -1, Omega = -1;
    std::vector<int> base_vertices;  // Omega(1..3)
    std::vector<int> omega_edges;    // the three Omega edges
    std::vector<ChainInfo> a_chains; // from A to Omega(i)
    std::vector<ChainInfo> b_chains; // from B to Omega(i)
};

struct ChainGraphResult {
    Graph graph;
    ChainGraphInfo info;
};

// K_{3,3} with the three edges at one vertex replaced by A-chains and the
// three edges at the other vertex of its class replaced by B-chains.
ChainGraphResult gen_chain_graph(const ChainSpec& spec);

// A verified 1-immersion of (chain graph - e); throws if e is invalid.
Immersion immersion_of_deleted_edge(const ChainGraphResult& g, EdgeId e);

// ---------------------------------------------------------------------------
// PN-graph families: H_n, medial extensions, G_n
// ---------------------------------------------------------------------------

struct EmbeddedGraph {
    Graph graph;
    RotationSystem rotation;
};

// Cartesian product P_3 x C_n (n >= 3): rows 0..2, columns 0..n-1,
// vertex id = row * n + column.
EmbeddedGraph gen_H_n(int n);

// Medial extension of an H-class host: one vertex per host edge, a triangle
// per 3-valent host vertex, a diagonal-augmented quadrilateral per 4-valent
// host vertex. diagonal_choice maps each 4-valent host vertex to one of its
// incident edges; the diagonal pairs that edge's medial vertex with the
// rotation-opposite one. Host membership in class H is checked and rejected.
Graph gen_medial_extension(const EmbeddedGraph& host, const std::map<int, int>& diagonal_choice);

// The medial extension of H_n whose diagonals pair the two row-1 ring edges
// at every 4-valent vertex (n >= 6). Degrees are {4, 6}.
Graph gen_G_n(int n);

// ---------------------------------------------------------------------------
// S_m and S_m(lambda)
// ---------------------------------------------------------------------------

struct SmLambda {
    int m = 4;
    std::vector<long long> lambda;  // 12m-2 nonnegative entries
    void validate() const;
    long long total() const;
};

struct SmInfo {
    int m = 0;
    long long n = 0;                     // sum of lambda
    std::vector<std::vector<int>> rings; // B_0..B_m in cyclic order
    std::vector<int> central_vertices;   // the vertices of B_0, label x = position x+1
    std::vector<std::vector<int>> central_paths;  // vertex sequences
    std::map<int, int> edge_type;        // EdgeId -> type 1..2m (radial edges only)
};

struct SmResult {
    Graph graph;
    SmInfo info;
};

SmResult gen_S_m(int m);                   // lambda = 0
SmResult gen_S_m_lambda(const SmLambda& spec);

// |Phi_m(n)| = C(n + 12m - 3, 12m - 3), exactly (decimal string).
std::string count_phi(int m, long long n);

struct SmEnumeration {
    long long orbit_count = 0;      // lambda orbits under the dihedral action
    long long generated = 0;        // representatives actually generated (<= cap)
    long long distinct_forms = 0;   // distinct canonical forms among those
};

// Enumerates lambda-orbit representatives under D_{12m-2} in lex order,
// generates S_m(lambda) for the first `cap` of them and counts distinct
// canonical forms.
SmEnumeration enumerate_nonisomorphic_S(int m, int n, long long cap);

// ---------------------------------------------------------------------------
// U-graphs and grids
// ---------------------------------------------------------------------------

struct UGraph {
    Graph graph;
    Immersion immersion;          // the companion certificate; boundary uncrossed
    std::vector<int> boundary;    // outer boundary cycle, length n
};

// 4 concentric rings of n vertices; ring edges, spokes, and the two crossed
// diagonals per quadrilateral cell: 4n vertices, 13n edges (n >= 6).
UGraph gen_U_graph(int n);

struct GridJoin {
    Graph graph;
    Immersion immersion;
    std::vector<std::vector<int>> basic_paths;  // P_1..P_7 as vertex sequences
    std::vector<int> boundary1, boundary2;      // boundaries of the two sides
};

// Joins two U-graphs by a (1)- or (2)-grid between 7-vertex boundary windows
// starting at pos1/pos2.
GridJoin gen_grid_join(const UGraph& u1, const UGraph& u2, int gridtype, int pos1, int pos2);

}  // namespace onep

#endif
