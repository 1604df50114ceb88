#ifndef ONEP_PN_HPP
#define ONEP_PN_HPP

#include <optional>
#include <string>
#include <vector>

#include "onep/embedding.hpp"
#include "onep/graph.hpp"

namespace onep {

// Per-condition verdict with a re-checkable counterexample witness.
struct ConditionResult {
    std::string name;                 // "C1".."C9", "H1".."H4", "3-connected", "planar"
    bool pass = false;
    std::string witness;              // human-readable
    std::vector<int> witness_vertices;
    std::vector<int> witness_edges;
};

struct ConditionReport {
    std::vector<ConditionResult> results;
    bool all_pass() const;
    const ConditionResult* find(const std::string& name) const;
    std::string to_text() const;
};

// Theorem 3.1 conditions (C1)-(C9) plus the 3-connectivity / planarity
// prerequisites (reported separately, checked first).
ConditionReport check_A_class(const Graph& g);

// Class H conditions (H1)-(H4); the rotation is needed for the opposite
// peripheral cycles of (H4).
ConditionReport check_H_class(const Graph& h, const RotationSystem& rot);

// All unordered pairs of disjoint edges whose four endpoints are exactly the
// vertex set of two 3-cycles sharing an edge.
std::vector<std::pair<EdgeId, EdgeId>> paired_edges(const Graph& g);

// Forbidden subgraph pattern: a pattern graph plus exact-degree constraints on
// host images (degree 0 entry = unconstrained) and optional pairs of pattern
// vertices allowed to collapse onto the same host vertex.
struct ForbiddenPattern {
    std::string name;
    Graph pattern;
    std::vector<int> exact_degree;                    // per pattern vertex, 0 = free
    std::vector<std::pair<int, int>> may_identify;    // starred vertex pairs
};

// The versioned (C9) pattern library (transcribed fragments of Fig 3.1).
const std::vector<ForbiddenPattern>& forbidden_pattern_library();

struct PatternOccurrence {
    int pattern_index;
    std::vector<int> image;  // pattern vertex -> host vertex
};

// All occurrences of the library patterns respecting degree constraints; for
// starred pairs both the identified and the distinct interpretation count.
std::vector<PatternOccurrence> find_forbidden(const Graph& g,
                                              const std::vector<ForbiddenPattern>& lib);

}  // namespace onep

#endif
