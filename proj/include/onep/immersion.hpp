#ifndef ONEP_IMMERSION_HPP
#define ONEP_IMMERSION_HPP

#include <optional>
#include <string>
#include <vector>

#include "onep/embedding.hpp"
#include "onep/graph.hpp"

namespace onep {

// Certificate of a k-immersion: crossing pairs, per-edge crossing order, and
// a rotation system of the planarized graph.
struct Immersion {
    Graph base;
    std::vector<std::pair<EdgeId, EdgeId>> crossings;  // stored (min,max), no duplicates
    std::vector<std::vector<int>> order;  // per edge: its crossing indices, read from the
                                          // stored first endpoint of the edge
    RotationSystem rotation;              // of the planarization (segment ids, see below)
};

// Plane graph obtained by replacing every crossing with a degree-4 dummy.
// Vertices: originals 0..n-1, then dummy i = n + i for crossings[i].
// Edges (= segments): assigned per base edge in EdgeId order; base edge e with
// j crossings contributes j+1 consecutively numbered segments running from its
// stored first endpoint.
struct PlanarizedGraph {
    Graph graph;
    std::vector<std::vector<int>> segment_map;     // base edge -> its segment ids
    std::vector<std::pair<EdgeId, EdgeId>> dummy_map;  // dummy index -> crossing pair
};

// Throws std::invalid_argument when the structural invariants fail
// (adjacent-edge crossing, duplicate pair, order inconsistent with crossings).
PlanarizedGraph planarize(const Graph& g, const std::vector<std::pair<EdgeId, EdgeId>>& crossings,
                          const std::vector<std::vector<int>>& order);

// Convenience for k = 1 style crossing sets: derives the (trivial) per-edge
// order from the pair list.
std::vector<std::vector<int>> order_from_crossings(const Graph& g,
                                                   const std::vector<std::pair<EdgeId, EdgeId>>& crossings);

struct Violation {
    std::string code;  // "structure", "crossing-count", "rotation-cover", "alternation", "euler"
    std::string message;
};

// Total verification: Ok iff result is empty. Checks structural invariants,
// per-edge crossing count <= k, transversal alternation at every dummy, and
// the Euler test per component of the planarization.
std::vector<Violation> verify(const Immersion& imm, int k);
bool verify_ok(const Immersion& imm, int k);

// Euler-based floor on the crossings of any 1-immersion: max(0, m - 3n + 6).
int crossing_lower_bound(const Graph& g);

// True iff m > 4n - 8 (certifies non-1-planarity without search).
bool edge_bound_reject(const Graph& g);

// Builds a verified immersion with the given crossing pairs/order, if one
// exists: plane-embeds the planarization augmented with the four kite edges
// around every dummy (which forces transversal crossings), then strips the
// kites. Returns nullopt iff no such immersion exists.
std::optional<Immersion> make_immersion(const Graph& g,
                                        const std::vector<std::pair<EdgeId, EdgeId>>& crossings,
                                        const std::vector<std::vector<int>>& order);
std::optional<Immersion> make_immersion(const Graph& g,
                                        const std::vector<std::pair<EdgeId, EdgeId>>& crossings);

// Certificate file: the base graph block, `x <e1> <e2>` crossing lines,
// `o <e>: <x...>` order lines for edges with >= 2 crossings, then the rotation
// block of the planarization over segment ids (all 1-indexed).
std::string serialize_immersion(const Immersion& imm);
Immersion parse_immersion(const std::string& text);
Immersion load_immersion_file(const std::string& path);
void save_immersion_file(const Immersion& imm, const std::string& path);

}  // namespace onep

#endif
