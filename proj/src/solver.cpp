#include "onep/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace onep {

void SolverBudget::validate() const {
    if (max_crossings && *max_crossings < 0) throw std::invalid_argument("budget: max_crossings negative");
    if (time_limit_seconds <= 0) throw std::invalid_argument("budget: time limit must be positive");
    if (node_limit && *node_limit <= 0) throw std::invalid_argument("budget: node limit must be positive");
    if (jobs < 1) throw std::invalid_argument("budget: jobs must be >= 1");
}

namespace {

using Clock = std::chrono::steady_clock;

struct Shared {
    std::atomic<long long> nodes{0};
    std::atomic<long long> planarity_tests{0};
    std::atomic<bool> out_of_budget{false};
    std::atomic<int> best_prefix{INT32_MAX};  // top-level index of the best witness so far
    Clock::time_point deadline;
    long long node_limit = -1;

    bool charge(long long k = 1) {
        long long total = nodes.fetch_add(k) + k;
        if ((total & 1023) < k) {  // occasional wall-clock check
            if (Clock::now() > deadline) out_of_budget.store(true);
        }
        if (node_limit > 0 && total > node_limit) out_of_budget.store(true);
        return !out_of_budget.load(std::memory_order_relaxed);
    }
};

struct LevelSearch {
    const Graph& g;
    const std::vector<std::pair<int, int>>& pairs;      // normalized, lex sorted
    const std::vector<std::vector<int>>& pairs_of;      // edge -> ascending pair indices
    int c;                                              // exact matching size this level
    Shared& sh;
    int my_prefix = -1;

    std::vector<int> chosen;        // pair indices, ascending
    std::vector<char> used;         // edge -> used by a chosen pair
    std::optional<std::vector<std::pair<EdgeId, EdgeId>>> found;

    LevelSearch(const Graph& graph, const std::vector<std::pair<int, int>>& p,
                const std::vector<std::vector<int>>& po, int size, Shared& shared)
        : g(graph), pairs(p), pairs_of(po), c(size), sh(shared),
          used(static_cast<size_t>(graph.m()), 0) {}

    bool edge_matchable_after(int x, int last_idx) const {
        auto& lst = pairs_of[static_cast<size_t>(x)];
        auto it = std::upper_bound(lst.begin(), lst.end(), last_idx);
        for (; it != lst.end(); ++it) {
            auto [a, b] = pairs[static_cast<size_t>(*it)];
            int other = (a == x) ? b : a;
            if (!used[static_cast<size_t>(other)]) return true;
        }
        return false;
    }

    // Planarity of the partial structure: chosen crossings (with kites) plus
    // every edge that is decided to stay uncrossed. This is a subgraph of the
    // final augmented planarization of every completion, so nonplanarity here
    // prunes the whole branch.
    bool structure_planar(int last_idx, bool leaf) {
        int nd = static_cast<int>(chosen.size());
        std::vector<std::pair<int, int>> es;
        es.reserve(g.edges.size() + 6 * static_cast<size_t>(nd));
        std::set<std::pair<int, int>> present;
        auto push = [&](int u, int v) {
            auto key = std::minmax(u, v);
            if (present.insert(key).second) es.emplace_back(u, v);
        };
        for (int i = 0; i < nd; ++i) {
            auto [e, f] = pairs[static_cast<size_t>(chosen[static_cast<size_t>(i)])];
            int d = g.n + i;
            auto [a, b] = g.edges[static_cast<size_t>(e)];
            auto [x, y] = g.edges[static_cast<size_t>(f)];
            push(a, d);
            push(d, b);
            push(x, d);
            push(d, y);
            push(a, x);
            push(x, b);
            push(b, y);
            push(y, a);
        }
        for (int e = 0; e < g.m(); ++e) {
            if (used[static_cast<size_t>(e)]) continue;
            if (!leaf && edge_matchable_after(e, last_idx)) continue;  // not decided yet
            auto [u, v] = g.edges[static_cast<size_t>(e)];
            push(u, v);
        }
        sh.planarity_tests.fetch_add(1, std::memory_order_relaxed);
        Graph s = build_graph(g.n + nd, std::move(es), true);
        return is_planar(s);
    }

    bool aborted() const {
        return sh.out_of_budget.load(std::memory_order_relaxed) ||
               sh.best_prefix.load(std::memory_order_relaxed) < my_prefix;
    }

    // Depth-first over pair indices > last_idx, lexicographic. Returns true
    // when a witness was found (stored in `found`).
    bool dfs(int last_idx) {
        if (!sh.charge()) return false;
        if (aborted()) return false;
        if (static_cast<int>(chosen.size()) == c) {
            if (!structure_planar(last_idx, /*leaf=*/true)) return false;
            std::vector<std::pair<EdgeId, EdgeId>> M;
            for (int idx : chosen) M.push_back(pairs[static_cast<size_t>(idx)]);
            found = std::move(M);
            return true;
        }
        int need = c - static_cast<int>(chosen.size());
        // enough disjoint pairs left?
        int avail = 0;
        for (int idx = last_idx + 1; idx < static_cast<int>(pairs.size()) && avail < need; ++idx) {
            auto [a, b] = pairs[static_cast<size_t>(idx)];
            if (!used[static_cast<size_t>(a)] && !used[static_cast<size_t>(b)]) avail++;
        }
        if (avail < need) return false;
        if (!structure_planar(last_idx, /*leaf=*/false)) return false;

        for (int idx = last_idx + 1; idx < static_cast<int>(pairs.size()); ++idx) {
            if (aborted()) return false;
            auto [a, b] = pairs[static_cast<size_t>(idx)];
            if (used[static_cast<size_t>(a)] || used[static_cast<size_t>(b)]) continue;
            used[static_cast<size_t>(a)] = used[static_cast<size_t>(b)] = 1;
            chosen.push_back(idx);
            if (dfs(idx)) return true;
            chosen.pop_back();
            used[static_cast<size_t>(a)] = used[static_cast<size_t>(b)] = 0;
        }
        return false;
    }
};

std::vector<std::pair<int, int>> nonadjacent_pairs(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int e = 0; e < g.m(); ++e)
        for (int f = e + 1; f < g.m(); ++f) {
            auto [a, b] = g.edges[static_cast<size_t>(e)];
            auto [c, d] = g.edges[static_cast<size_t>(f)];
            if (a == c || a == d || b == c || b == d) continue;
            out.emplace_back(e, f);
        }
    return out;
}

// One iterative-deepening level, parallel over the first chosen pair.
// Returns the lexicographically first witness of size c, if any.
std::optional<std::vector<std::pair<EdgeId, EdgeId>>> run_level(
    const Graph& g, const std::vector<std::pair<int, int>>& pairs,
    const std::vector<std::vector<int>>& pairs_of, int c, Shared& sh, int jobs) {
    sh.best_prefix.store(INT32_MAX);
    if (c == 0) {
        LevelSearch ls(g, pairs, pairs_of, 0, sh);
        ls.my_prefix = -1;
        if (ls.dfs(-1)) return ls.found;
        return std::nullopt;
    }

    std::mutex res_mutex;
    std::optional<std::vector<std::pair<EdgeId, EdgeId>>> best;
    int best_idx = INT32_MAX;
    std::atomic<int> next{0};

    auto worker = [&]() {
        while (true) {
            int i = next.fetch_add(1);
            if (i >= static_cast<int>(pairs.size())) return;
            if (sh.out_of_budget.load(std::memory_order_relaxed)) return;
            if (sh.best_prefix.load(std::memory_order_relaxed) < i) return;
            LevelSearch ls(g, pairs, pairs_of, c, sh);
            ls.my_prefix = i;
            auto [a, b] = pairs[static_cast<size_t>(i)];
            ls.used[static_cast<size_t>(a)] = ls.used[static_cast<size_t>(b)] = 1;
            ls.chosen.push_back(i);
            if (ls.dfs(i) && ls.found) {
                std::lock_guard<std::mutex> lock(res_mutex);
                if (i < best_idx) {
                    best_idx = i;
                    best = ls.found;
                    // later prefixes can stop; earlier ones must still finish
                    int cur = sh.best_prefix.load();
                    while (i < cur && !sh.best_prefix.compare_exchange_weak(cur, i)) {
                    }
                }
            }
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    return best;
}

Verdict decide_range(const Graph& g, const std::vector<std::pair<int, int>>& pairs, int c_min, int c_max,
                     const SolverBudget& budget) {
    budget.validate();
    Shared sh;
    sh.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(budget.time_limit_seconds));
    sh.node_limit = budget.node_limit.value_or(-1);

    std::vector<std::vector<int>> pairs_of(static_cast<size_t>(g.m()));
    for (size_t i = 0; i < pairs.size(); ++i) {
        pairs_of[static_cast<size_t>(pairs[i].first)].push_back(static_cast<int>(i));
        pairs_of[static_cast<size_t>(pairs[i].second)].push_back(static_cast<int>(i));
    }

    Verdict v;
    for (int c = c_min; c <= c_max; ++c) {
        auto hit = run_level(g, pairs, pairs_of, c, sh, budget.jobs);
        v.stats.nodes = sh.nodes.load();
        v.stats.planarity_tests = sh.planarity_tests.load();
        if (hit) {
            auto imm = make_immersion(g, *hit);
            if (!imm) throw std::logic_error("solver: planar augmented structure lost its embedding");
            v.status = Status::YES;
            v.witness = std::move(*imm);
            v.stats.crossings_used = c;
            return v;
        }
        if (sh.out_of_budget.load()) {
            v.status = Status::TIMEOUT;
            return v;
        }
        v.stats.max_depth_completed = c;
    }
    v.status = Status::NO;
    return v;
}

}  // namespace

Verdict decide_1planar(const Graph& g, const SolverBudget& budget) {
    if (g.multigraph) throw std::invalid_argument("decide_1planar: simple graphs only");
    Verdict v;
    if (g.n >= 3 && edge_bound_reject(g)) {
        v.status = Status::NO;
        return v;
    }
    int c_min = crossing_lower_bound(g);
    int c_max = g.m() / 2;
    if (budget.max_crossings) c_max = std::min(c_max, *budget.max_crossings);
    return decide_range(g, nonadjacent_pairs(g), c_min, c_max, budget);
}

Verdict decide_proper_1immersion(const Graph& g, const SolverBudget& budget) {
    if (g.multigraph) throw std::invalid_argument("decide_proper_1immersion: simple graphs only");
    if (g.n >= 3 && edge_bound_reject(g)) {
        Verdict v;
        v.status = Status::NO;
        return v;
    }
    int c_min = std::max(1, crossing_lower_bound(g));
    int c_max = g.m() / 2;
    if (budget.max_crossings) c_max = std::min(c_max, *budget.max_crossings);
    return decide_range(g, nonadjacent_pairs(g), c_min, c_max, budget);
}

Verdict decide_with_candidates(const Graph& g, const std::vector<std::pair<EdgeId, EdgeId>>& candidates,
                               int c_min, int c_max, const SolverBudget& budget) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(candidates.size());
    for (auto& [e, f] : candidates) pairs.emplace_back(std::min(e, f), std::max(e, f));
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return decide_range(g, pairs, c_min, c_max, budget);
}

MnReport mn_check(const Graph& g, const SolverBudget& budget) {
    budget.validate();
    MnReport rep;
    auto t0 = Clock::now();
    auto remaining = [&]() {
        double used = std::chrono::duration<double>(Clock::now() - t0).count();
        return std::max(0.5, budget.time_limit_seconds - used);
    };

    SolverBudget sub = budget;
    sub.time_limit_seconds = remaining();
    Verdict vg = decide_1planar(g, sub);
    rep.graph_status = vg.status;
    rep.graph_witness = std::move(vg.witness);
    if (vg.status == Status::TIMEOUT) rep.inconclusive = true;

    bool all_yes = true;
    for (int e = 0; e < g.m(); ++e) {
        MnEdgeReport er;
        er.edge = e;
        if (rep.graph_status == Status::YES) {
            // not an MN-graph regardless; still record edges as unexplored
            er.status = Status::TIMEOUT;
            rep.deletions.push_back(std::move(er));
            continue;
        }
        sub.time_limit_seconds = remaining();
        Verdict ve = decide_1planar(delete_edge(g, e), sub);
        er.status = ve.status;
        er.witness = std::move(ve.witness);
        if (ve.status == Status::TIMEOUT) rep.inconclusive = true;
        if (ve.status != Status::YES) all_yes = false;
        rep.deletions.push_back(std::move(er));
        if (ve.status == Status::NO) break;  // definitely not MN
    }
    rep.confirmed = (rep.graph_status == Status::NO) && all_yes && !rep.inconclusive &&
                    static_cast<int>(rep.deletions.size()) == g.m();
    return rep;
}

}  // namespace onep
