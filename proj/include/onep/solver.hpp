#ifndef ONEP_SOLVER_HPP
#define ONEP_SOLVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "onep/graph.hpp"
#include "onep/immersion.hpp"

namespace onep {

struct SolverBudget {
    std::optional<int> max_crossings;   // cap on the crossing count iterated to
    double time_limit_seconds = 60.0;   // wall clock
    std::optional<long long> node_limit;
    int jobs = 1;

    void validate() const;
};

enum class Status { YES, NO, TIMEOUT };

struct SolverStats {
    long long nodes = 0;
    long long planarity_tests = 0;
    int crossings_used = 0;
    int max_depth_completed = -1;  // largest c whose level was exhausted
};

struct Verdict {
    Status status = Status::TIMEOUT;
    std::optional<Immersion> witness;  // present iff YES; verifies at k = 1
    SolverStats stats;
};

// Exact 1-planarity decision via iterative deepening on the crossing count:
// reject by the 4n-8 edge bound, then for c = lower bound .. floor(m/2)
// enumerate crossing sets of size c (matchings over non-adjacent edge pairs,
// lexicographic order) and planarity-test the kite-augmented planarization.
// The first hit in lexicographic (c, sorted pair list) order wins, so verdicts
// and witnesses are deterministic for any worker count.
Verdict decide_1planar(const Graph& g, const SolverBudget& budget = {});

// Same search with c = 0 excluded: decides whether a planar graph admits a
// 1-immersion with at least one crossing.
Verdict decide_proper_1immersion(const Graph& g, const SolverBudget& budget = {});

// Restricted-search variant: crossing pairs are drawn from `candidates` only
// (used by generators that know where crossings can go). Exhausts sizes
// c_min..c_max over the candidate set.
Verdict decide_with_candidates(const Graph& g, const std::vector<std::pair<EdgeId, EdgeId>>& candidates,
                               int c_min, int c_max, const SolverBudget& budget = {});

struct MnEdgeReport {
    EdgeId edge;
    Status status;               // YES means G - e is 1-planar
    std::optional<Immersion> witness;
};

struct MnReport {
    Status graph_status;         // NO required for MN
    std::optional<Immersion> graph_witness;  // when the graph itself is 1-planar
    std::vector<MnEdgeReport> deletions;
    bool confirmed = false;      // graph NO and every deletion YES
    bool inconclusive = false;   // some TIMEOUT encountered
};

MnReport mn_check(const Graph& g, const SolverBudget& budget = {});

}  // namespace onep

#endif
