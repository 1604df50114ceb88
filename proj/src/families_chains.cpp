#include <algorithm>
#include <set>
#include <stdexcept>

#include "onep/families.hpp"
#include "onep/solver.hpp"

namespace onep {

namespace {

// Local transcription tables. Vertex order (z, zbar, internals...); edges in
// certificate-stable order. Free cycles listed with their core vertex and
// core-adjacent edge positions.
struct LinkTable {
    int vertices;
    std::vector<std::pair<int, int>> edges;
    struct FC {
        int core;
        std::vector<int> cycle;
        std::pair<int, int> core_adjacent;  // positions into `edges`
    };
    std::vector<FC> free_cycles;
    int middle_edge = -1;  // position, B-links only
};

const LinkTable& a_link_table() {
    // z=0 zbar=1 v=2 w=3; two triangles sharing the edge vw
    static const LinkTable t{4,
                             {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
                             {{0, {0, 2, 3}, {0, 1}}, {1, {1, 2, 3}, {2, 3}}},
                             -1};
    return t;
}

const LinkTable& b_link_table() {
    // z=0 zbar=1 u=2 v=3 w=4; free 4-cycle z-v-u-w, center zbar joined to
    // v, u, w; the middle edge is the center spoke zbar-u
    static const LinkTable t{5,
                             {{0, 3}, {0, 4}, {1, 3}, {1, 2}, {1, 4}, {2, 3}, {2, 4}},
                             {{0, {0, 3, 2, 4}, {0, 1}}},
                             3};
    return t;
}

const LinkTable& base_link_table() {
    // z=0 zbar=1 u=2 v=3 w=4; free 3-cycle z-v-w; zbar carries three link
    // edges (it is the chain end sitting at an Omega(i) vertex)
    static const LinkTable t{5,
                             {{0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
                             {{0, {0, 3, 4}, {0, 1}}},
                             -1};
    return t;
}

const LinkTable& table_for(LinkKind k) {
    switch (k) {
        case LinkKind::A: return a_link_table();
        case LinkKind::B: return b_link_table();
        default: return base_link_table();
    }
}

// Instantiate a link between two existing vertices. `mirrored` swaps which
// end plays z (the free-cycle side of a B-link).
LinkInfo instantiate_link(LinkKind kind, bool mirrored, int left, int right, int& next_vertex,
                          std::vector<std::pair<int, int>>& edges) {
    const LinkTable& t = table_for(kind);
    std::vector<int> map(static_cast<size_t>(t.vertices));
    map[0] = mirrored ? right : left;
    map[1] = mirrored ? left : right;
    LinkInfo info;
    info.kind = kind;
    info.mirrored = mirrored;
    info.z = map[0];
    info.zbar = map[1];
    for (int i = 2; i < t.vertices; ++i) {
        map[static_cast<size_t>(i)] = next_vertex++;
        info.internals.push_back(map[static_cast<size_t>(i)]);
    }
    for (auto& [a, b] : t.edges) {
        info.edge_ids.push_back(static_cast<int>(edges.size()));
        edges.emplace_back(map[static_cast<size_t>(a)], map[static_cast<size_t>(b)]);
    }
    for (auto& fc : t.free_cycles) {
        LinkInfo::FreeCycle out;
        out.core = map[static_cast<size_t>(fc.core)];
        for (int v : fc.cycle) out.cycle.push_back(map[static_cast<size_t>(v)]);
        out.core_adjacent = {info.edge_ids[static_cast<size_t>(fc.core_adjacent.first)],
                             info.edge_ids[static_cast<size_t>(fc.core_adjacent.second)]};
        info.free_cycles.push_back(std::move(out));
    }
    if (t.middle_edge >= 0) info.middle_edge = info.edge_ids[static_cast<size_t>(t.middle_edge)];
    return info;
}

ChainInfo build_chain(LinkKind kind, int length, const std::vector<int>& variants,
                      const std::vector<int>& cores, int& next_vertex,
                      std::vector<std::pair<int, int>>& edges) {
    ChainInfo info;
    info.kind = kind;
    info.length = length;
    info.cores = cores;
    std::set<int> vset(variants.begin(), variants.end());
    for (int i = 1; i < length; ++i) {
        bool mirrored = kind == LinkKind::B && vset.count(i) > 0;
        info.links.push_back(instantiate_link(kind, mirrored, cores[static_cast<size_t>(i - 1)],
                                              cores[static_cast<size_t>(i)], next_vertex, edges));
    }
    info.links.push_back(instantiate_link(LinkKind::Base, false, cores[static_cast<size_t>(length - 1)],
                                          cores[static_cast<size_t>(length)], next_vertex, edges));
    return info;
}

void validate_variants(int length, const std::vector<int>& variants, LinkKind kind) {
    if (!variants.empty() && kind != LinkKind::B)
        throw std::invalid_argument("variants apply to B-chains only");
    int prev = 0;
    for (int h : variants) {
        if (h <= prev) throw std::invalid_argument("variant positions must be strictly increasing");
        if (h < 1 || h > length - 2)
            throw std::invalid_argument("variant position out of range 1..length-2");
        prev = h;
    }
}

}  // namespace

LinkGraph gen_link(LinkKind kind) {
    std::vector<std::pair<int, int>> edges;
    int next_vertex = 2;
    LinkInfo info = instantiate_link(kind, false, 0, 1, next_vertex, edges);
    LinkGraph out;
    out.graph = build_graph(next_vertex, std::move(edges));
    out.info = std::move(info);
    return out;
}

ChainGraph gen_chain(LinkKind kind, int length, const std::vector<int>& variants) {
    if (kind == LinkKind::Base) throw std::invalid_argument("chains are A- or B-chains");
    if (length < 2) throw std::invalid_argument("chain length must be >= 2");
    validate_variants(length, variants, kind);
    std::vector<int> cores(static_cast<size_t>(length + 1));
    for (int i = 0; i <= length; ++i) cores[static_cast<size_t>(i)] = i;
    int next_vertex = length + 1;
    std::vector<std::pair<int, int>> edges;
    ChainInfo info = build_chain(kind, length, variants, cores, next_vertex, edges);
    ChainGraph out;
    out.graph = build_graph(next_vertex, std::move(edges));
    out.info = std::move(info);
    return out;
}

void ChainSpec::validate() const {
    if (a_lengths.size() != 3 || b_lengths.size() != 3)
        throw std::invalid_argument("chain graph needs three A- and three B-chain lengths");
    for (int l : a_lengths)
        if (l < 2) throw std::invalid_argument("A-chain length must be >= 2");
    for (int l : b_lengths)
        if (l < 2) throw std::invalid_argument("B-chain length must be >= 2");
    if (!b_variants.empty() && b_variants.size() != 3)
        throw std::invalid_argument("b_variants must give one subset per B-chain");
    for (size_t i = 0; i < b_variants.size(); ++i)
        validate_variants(b_lengths[i], b_variants[i], LinkKind::B);
}

ChainGraphResult gen_chain_graph(const ChainSpec& spec) {
    spec.validate();
    ChainGraphInfo info;
    info.A = 0;
    info.B = 1;
    info.Omega = 2;
    info.base_vertices = {3, 4, 5};
    int next_vertex = 6;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 3; ++i) {
        info.omega_edges.push_back(static_cast<int>(edges.size()));
        edges.emplace_back(info.Omega, info.base_vertices[static_cast<size_t>(i)]);
    }
    auto add_chain = [&](LinkKind kind, int from, int to, int length, const std::vector<int>& variants) {
        std::vector<int> cores;
        cores.push_back(from);
        for (int i = 1; i < length; ++i) cores.push_back(next_vertex++);
        cores.push_back(to);
        return build_chain(kind, length, variants, cores, next_vertex, edges);
    };
    for (int i = 0; i < 3; ++i)
        info.a_chains.push_back(add_chain(LinkKind::A, info.A, info.base_vertices[static_cast<size_t>(i)],
                                          spec.a_lengths[static_cast<size_t>(i)], {}));
    for (int i = 0; i < 3; ++i)
        info.b_chains.push_back(
            add_chain(LinkKind::B, info.B, info.base_vertices[static_cast<size_t>(i)],
                      spec.b_lengths[static_cast<size_t>(i)],
                      spec.b_variants.empty() ? std::vector<int>{} : spec.b_variants[static_cast<size_t>(i)]));
    ChainGraphResult out;
    out.graph = build_graph(next_vertex, std::move(edges));
    out.info = std::move(info);
    return out;
}

namespace {

// shift an edge id into (G - e) coordinates
int shifted(EdgeId x, EdgeId removed) { return x > removed ? x - 1 : x; }

std::vector<std::pair<EdgeId, EdgeId>> cross_pairs(const Graph& gdel, const std::vector<int>& xs,
                                                   const std::vector<int>& ys) {
    std::vector<std::pair<EdgeId, EdgeId>> out;
    for (int x : xs)
        for (int y : ys) {
            if (x == y) continue;
            auto [a, b] = gdel.edges[static_cast<size_t>(x)];
            auto [c, d] = gdel.edges[static_cast<size_t>(y)];
            if (a == c || a == d || b == c || b == d) continue;
            out.emplace_back(std::min(x, y), std::max(x, y));
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> chain_edges(const ChainInfo& ch) {
    std::vector<int> out;
    for (auto& l : ch.links) out.insert(out.end(), l.edge_ids.begin(), l.edge_ids.end());
    return out;
}

}  // namespace

Immersion immersion_of_deleted_edge(const ChainGraphResult& cg, EdgeId e) {
    const Graph& g = cg.graph;
    if (e < 0 || e >= g.m()) throw std::invalid_argument("immersion_of_deleted_edge: invalid EdgeId");
    Graph gdel = delete_edge(g, e);

    // Omega-edge deletion leaves a planar graph.
    for (int oe : cg.info.omega_edges)
        if (oe == e) {
            auto imm = make_immersion(gdel, {});
            if (!imm) throw std::logic_error("chain graph minus an Omega-edge must be planar");
            return *imm;
        }

    // locate the chain and link containing e
    const ChainInfo* chain = nullptr;
    int link_idx = -1;
    int omega_index = -1;  // which Omega(i) the chain ends at
    for (int side = 0; side < 2 && !chain; ++side) {
        auto& chains = side == 0 ? cg.info.a_chains : cg.info.b_chains;
        for (size_t ci = 0; ci < chains.size() && !chain; ++ci)
            for (size_t li = 0; li < chains[ci].links.size(); ++li) {
                auto& ids = chains[ci].links[li].edge_ids;
                if (std::find(ids.begin(), ids.end(), e) != ids.end()) {
                    chain = &chains[ci];
                    link_idx = static_cast<int>(li);
                    omega_index = static_cast<int>(ci);
                    break;
                }
            }
    }
    if (!chain) throw std::logic_error("edge not accounted for by chain metadata");

    std::vector<int> omega_s;
    for (int oe : cg.info.omega_edges) omega_s.push_back(shifted(oe, e));

    auto collect = [&](const std::vector<int>& raw) {
        std::vector<int> out;
        for (int x : raw)
            if (x != e) out.push_back(shifted(x, e));
        return out;
    };

    // stage 1: the broken link and its neighbors against the Omega edges
    std::vector<int> local_raw;
    for (int li = std::max(0, link_idx - 1);
         li <= std::min(static_cast<int>(chain->links.size()) - 1, link_idx + 1); ++li) {
        auto& ids = chain->links[static_cast<size_t>(li)].edge_ids;
        local_raw.insert(local_raw.end(), ids.begin(), ids.end());
    }
    std::vector<int> local = collect(local_raw);
    SolverBudget budget;
    budget.time_limit_seconds = 600;
    budget.jobs = 1;
    {
        auto cand = cross_pairs(gdel, local, omega_s);
        auto v = decide_with_candidates(gdel, cand, 1, 4, budget);
        if (v.status == Status::YES) return *v.witness;
    }

    // stage 2: one link of a chain of the other kind passes through the hole
    // left by the deletion (the middle-edge drawing: its two walls take the
    // two 2-edge corridors of the broken link, the rung crosses between them,
    // five crossings in all). Try every such link, tightest pools first.
    std::vector<int> broken = collect(chain->links[static_cast<size_t>(link_idx)].edge_ids);
    broken.insert(broken.end(), omega_s.begin(), omega_s.end());
    auto& others = (chain->kind == LinkKind::A) ? cg.info.b_chains : cg.info.a_chains;
    for (int round = 0; round < 2; ++round) {
        for (int i = 0; i < 3; ++i) {
            bool same_base = i == omega_index;
            if ((round == 0) == same_base) continue;  // different base vertices first
            for (auto& link : others[static_cast<size_t>(i)].links) {
                std::vector<int> theirs = collect(link.edge_ids);
                theirs.insert(theirs.end(), omega_s.begin(), omega_s.end());
                auto cand = cross_pairs(gdel, broken, theirs);
                auto v = decide_with_candidates(gdel, cand, 1, 6, budget);
                if (v.status == Status::YES) return *v.witness;
            }
        }
    }

    throw std::runtime_error("no 1-immersion found for this deletion within the staged search");
}

}  // namespace onep
