#ifndef ONEP_CANONICAL_HPP
#define ONEP_CANONICAL_HPP

#include <string>
#include <vector>

#include "onep/graph.hpp"

namespace onep {

// Relabeling-invariant certificate: equal for two graphs iff they are
// isomorphic. Multigraph multiplicities are part of the certificate.
struct CanonicalForm {
    std::string certificate;
    bool operator==(const CanonicalForm& o) const { return certificate == o.certificate; }
    bool operator<(const CanonicalForm& o) const { return certificate < o.certificate; }
};

// Iterative degree/neighborhood refinement with backtracking over ties
// (individualization-refinement, minimum leaf certificate). Exact but
// intended for desk-scale graphs.
CanonicalForm canonical_form(const Graph& g);

// Canonical relabeling realizing the certificate: position i holds the vertex
// placed at canonical label i.
std::vector<int> canonical_order(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace onep

#endif
