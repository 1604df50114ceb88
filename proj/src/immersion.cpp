#include "onep/immersion.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace onep {

namespace {

void validate_structure(const Graph& g, const std::vector<std::pair<EdgeId, EdgeId>>& crossings,
                        const std::vector<std::vector<int>>& order) {
    std::set<std::pair<int, int>> pairs;
    for (auto& [e, f] : crossings) {
        if (e < 0 || e >= g.m() || f < 0 || f >= g.m())
            throw std::invalid_argument("crossing references invalid EdgeId");
        if (e == f) throw std::invalid_argument("edge cannot cross itself");
        auto [a, b] = g.edges[static_cast<size_t>(e)];
        auto [c, d] = g.edges[static_cast<size_t>(f)];
        if (a == c || a == d || b == c || b == d)
            throw std::invalid_argument("adjacent edges may not cross");
        if (!pairs.insert(std::minmax(e, f)).second)
            throw std::invalid_argument("duplicate crossing pair");
    }
    if (static_cast<int>(order.size()) != g.m())
        throw std::invalid_argument("order must list every edge");
    std::vector<std::multiset<int>> expected(static_cast<size_t>(g.m()));
    for (size_t i = 0; i < crossings.size(); ++i) {
        expected[static_cast<size_t>(crossings[i].first)].insert(static_cast<int>(i));
        expected[static_cast<size_t>(crossings[i].second)].insert(static_cast<int>(i));
    }
    for (int e = 0; e < g.m(); ++e) {
        std::multiset<int> got(order[static_cast<size_t>(e)].begin(), order[static_cast<size_t>(e)].end());
        if (got != expected[static_cast<size_t>(e)])
            throw std::invalid_argument("order sequence inconsistent with crossing list");
    }
}

}  // namespace

std::vector<std::vector<int>> order_from_crossings(const Graph& g,
                                                   const std::vector<std::pair<EdgeId, EdgeId>>& crossings) {
    std::vector<std::vector<int>> order(static_cast<size_t>(g.m()));
    for (size_t i = 0; i < crossings.size(); ++i) {
        order[static_cast<size_t>(crossings[i].first)].push_back(static_cast<int>(i));
        order[static_cast<size_t>(crossings[i].second)].push_back(static_cast<int>(i));
    }
    return order;
}

PlanarizedGraph planarize(const Graph& g, const std::vector<std::pair<EdgeId, EdgeId>>& crossings,
                          const std::vector<std::vector<int>>& order) {
    validate_structure(g, crossings, order);
    int c = static_cast<int>(crossings.size());
    PlanarizedGraph out;
    out.dummy_map = crossings;
    out.segment_map.resize(static_cast<size_t>(g.m()));
    std::vector<std::pair<int, int>> segs;
    for (int e = 0; e < g.m(); ++e) {
        int prev = g.edges[static_cast<size_t>(e)].first;
        for (int x : order[static_cast<size_t>(e)]) {
            int d = g.n + x;
            out.segment_map[static_cast<size_t>(e)].push_back(static_cast<int>(segs.size()));
            segs.emplace_back(prev, d);
            prev = d;
        }
        out.segment_map[static_cast<size_t>(e)].push_back(static_cast<int>(segs.size()));
        segs.emplace_back(prev, g.edges[static_cast<size_t>(e)].second);
    }
    // Dummies have degree exactly 4 by construction; the planarization may be a
    // multigraph whenever the base is one.
    out.graph = build_graph(g.n + c, std::move(segs), true);
    out.graph.multigraph = true;
    return out;
}

std::vector<Violation> verify(const Immersion& imm, int k) {
    std::vector<Violation> bad;
    if (k < 1) {
        bad.push_back({"structure", "k must be positive"});
        return bad;
    }
    PlanarizedGraph pl;
    try {
        pl = planarize(imm.base, imm.crossings, imm.order);
    } catch (const std::invalid_argument& ex) {
        bad.push_back({"structure", ex.what()});
        return bad;
    }
    for (int e = 0; e < imm.base.m(); ++e) {
        int cnt = static_cast<int>(imm.order[static_cast<size_t>(e)].size());
        if (cnt > k)
            bad.push_back({"crossing-count",
                           "edge " + std::to_string(e + 1) + " participates in " + std::to_string(cnt) +
                               " crossings, k = " + std::to_string(k)});
    }

    // rotation must cover the planarization's edge ends exactly
    FaceSet fs;
    try {
        fs = face_traversal(pl.graph, imm.rotation);
    } catch (const std::invalid_argument& ex) {
        bad.push_back({"rotation-cover", ex.what()});
        return bad;
    }

    // transversal alternation at each dummy: the two crossing edges' segments
    // must interleave in the cyclic order
    std::vector<int> seg_owner(static_cast<size_t>(pl.graph.m()), -1);
    for (int e = 0; e < imm.base.m(); ++e)
        for (int seg : pl.segment_map[static_cast<size_t>(e)]) seg_owner[static_cast<size_t>(seg)] = e;
    for (size_t x = 0; x < imm.crossings.size(); ++x) {
        int d = imm.base.n + static_cast<int>(x);
        auto& ring = imm.rotation.at[static_cast<size_t>(d)];
        if (ring.size() != 4) {
            bad.push_back({"alternation", "dummy " + std::to_string(x + 1) + " does not have degree 4"});
            continue;
        }
        auto owner = [&](int end) -> int {
            int e = seg_owner[static_cast<size_t>(end / 2)];
            return (e == imm.crossings[x].first || e == imm.crossings[x].second) ? e : -1;
        };
        int o0 = owner(ring[0]), o1 = owner(ring[1]), o2 = owner(ring[2]), o3 = owner(ring[3]);
        if (o0 < 0 || o1 < 0 || o2 < 0 || o3 < 0 || o0 != o2 || o1 != o3 || o0 == o1)
            bad.push_back({"alternation", "crossing " + std::to_string(x + 1) +
                                              " is a touching, not a transversal crossing"});
    }

    if (!is_plane_embedding(pl.graph, imm.rotation))
        bad.push_back({"euler", "rotation is not a plane embedding of the planarization"});
    return bad;
}

bool verify_ok(const Immersion& imm, int k) { return verify(imm, k).empty(); }

int crossing_lower_bound(const Graph& g) {
    if (g.multigraph) throw std::invalid_argument("crossing_lower_bound: simple graphs only");
    if (g.n < 3) return 0;
    return std::max(0, g.m() - 3 * g.n + 6);
}

bool edge_bound_reject(const Graph& g) {
    if (g.multigraph) throw std::invalid_argument("edge_bound_reject: simple graphs only");
    if (g.n < 3) return false;
    return g.m() > 4 * g.n - 8;
}

namespace {

// k = 1 structure: kite augmentation. Around every dummy add the 4-cycle
// through its four neighbors, interleaving the two crossing edges' sides.
// The dummy plus that cycle is a wheel W4, a 3-connected subgraph, so any
// planar embedding of the augmented graph alternates at the dummy; conversely
// every transversal drawing admits the kites routed along the crossing pair.
// Sound only when no edge carries two crossings (adjacent dummies would force
// kite diagonals to cross).
std::optional<Immersion> make_immersion_kites(const Graph& g, const PlanarizedGraph& pl,
                                              const std::vector<std::pair<EdgeId, EdgeId>>& crossings,
                                              const std::vector<std::vector<int>>& order) {
    const Graph& h = pl.graph;
    std::set<std::pair<int, int>> present;
    for (auto& [u, v] : h.edges) present.insert(std::minmax(u, v));
    std::vector<std::pair<int, int>> aug_edges = h.edges;
    auto add_once = [&](int u, int v) {
        auto key = std::minmax(u, v);
        if (present.insert(key).second) aug_edges.emplace_back(u, v);
    };
    for (size_t x = 0; x < crossings.size(); ++x) {
        auto [e, f] = crossings[x];
        auto [a, b] = g.edges[static_cast<size_t>(e)];
        auto [c, d] = g.edges[static_cast<size_t>(f)];
        add_once(a, c);
        add_once(c, b);
        add_once(b, d);
        add_once(d, a);
    }
    Graph aug = build_graph(h.n, std::move(aug_edges), true);
    auto emb = planar_embed(aug);
    if (!emb) return std::nullopt;

    Immersion imm;
    imm.base = g;
    imm.crossings = crossings;
    imm.order = order;
    imm.rotation.at.resize(static_cast<size_t>(h.n));
    for (int v = 0; v < h.n; ++v)
        for (int end : emb->at[static_cast<size_t>(v)])
            if (end / 2 < h.m()) imm.rotation.at[static_cast<size_t>(v)].push_back(end);
    return imm;
}

// General structure: every crossing becomes a rigid wheel. The hub stands for
// the dummy, the four rim vertices carry the segment attachments in
// alternating order, so the hub rotation is the rim cycle in any planar
// embedding and the read-back rotation alternates by construction.
std::optional<Immersion> make_immersion_wheels(const Graph& g, const PlanarizedGraph& pl,
                                               const std::vector<std::pair<EdgeId, EdgeId>>& crossings,
                                               const std::vector<std::vector<int>>& order) {
    int n = g.n;
    int c = static_cast<int>(crossings.size());
    int seg_count = pl.graph.m();
    auto rim = [&](int x, int j) { return n + c + 4 * x + j; };  // j: 0 e-in, 1 f-in, 2 e-out, 3 f-out

    // position of crossing x along edge e
    auto slot = [&](int e, int x) {
        auto& ord = order[static_cast<size_t>(e)];
        for (size_t t = 0; t < ord.size(); ++t)
            if (ord[static_cast<size_t>(t)] == x) return static_cast<int>(t);
        return -1;
    };

    std::vector<std::pair<int, int>> host_edges;
    // host edges 0..seg_count-1 mirror the planarization segments in order
    for (int e = 0; e < g.m(); ++e) {
        int prev = g.edges[static_cast<size_t>(e)].first;
        for (int x : order[static_cast<size_t>(e)]) {
            int role = (crossings[static_cast<size_t>(x)].first == e) ? 0 : 1;
            host_edges.emplace_back(prev, rim(x, role));
            prev = rim(x, role + 2);
        }
        host_edges.emplace_back(prev, g.edges[static_cast<size_t>(e)].second);
    }
    for (int x = 0; x < c; ++x) {
        int hub = n + x;
        for (int j = 0; j < 4; ++j) {
            host_edges.emplace_back(hub, rim(x, j));
            host_edges.emplace_back(rim(x, j), rim(x, (j + 1) % 4));
        }
    }
    Graph host = build_graph(n + c + 4 * c, std::move(host_edges), true);
    auto emb = planar_embed(host);
    if (!emb) return std::nullopt;

    Immersion imm;
    imm.base = g;
    imm.crossings = crossings;
    imm.order = order;
    imm.rotation.at.resize(static_cast<size_t>(n + c));
    // original vertices: host segment ids coincide with planarization segment ids
    for (int v = 0; v < n; ++v)
        for (int end : emb->at[static_cast<size_t>(v)])
            if (end / 2 < seg_count) imm.rotation.at[static_cast<size_t>(v)].push_back(end);
    // dummies: read the hub rotation and map each rim to its segment end
    for (int x = 0; x < c; ++x) {
        int hub = n + x;
        auto [e, f] = crossings[static_cast<size_t>(x)];
        auto seg_end_for_rim = [&](int j) {
            int edge = (j == 0 || j == 2) ? e : f;
            int t = slot(edge, x);
            auto& sm = pl.segment_map[static_cast<size_t>(edge)];
            if (j < 2) return 2 * sm[static_cast<size_t>(t)] + 1;  // incoming segment, dummy is second
            return 2 * sm[static_cast<size_t>(t) + 1];             // outgoing segment, dummy is first
        };
        for (int end : emb->at[static_cast<size_t>(hub)]) {
            int he = end / 2;
            if (he < seg_count) continue;  // hubs touch only spokes
            auto [a, b] = host.edges[static_cast<size_t>(he)];
            int r = (a == hub) ? b : a;
            int j = r - rim(x, 0);
            if (j < 0 || j > 3) continue;  // rim-rim edge, not a spoke
            imm.rotation.at[static_cast<size_t>(hub)].push_back(seg_end_for_rim(j));
        }
    }
    if (!verify(imm, g.m()).empty())
        throw std::logic_error("make_immersion: wheel extraction produced an invalid rotation "
                               "(pathological cut structure at a crossing)");
    return imm;
}

}  // namespace

std::optional<Immersion> make_immersion(const Graph& g,
                                        const std::vector<std::pair<EdgeId, EdgeId>>& crossings,
                                        const std::vector<std::vector<int>>& order) {
    PlanarizedGraph pl = planarize(g, crossings, order);
    bool multi = false;
    for (auto& seq : order) multi |= seq.size() > 1;
    if (!multi) return make_immersion_kites(g, pl, crossings, order);
    return make_immersion_wheels(g, pl, crossings, order);
}

std::optional<Immersion> make_immersion(const Graph& g,
                                        const std::vector<std::pair<EdgeId, EdgeId>>& crossings) {
    return make_immersion(g, crossings, order_from_crossings(g, crossings));
}

std::string serialize_immersion(const Immersion& imm) {
    std::ostringstream out;
    out << serialize_graph(imm.base);
    for (auto& [e, f] : imm.crossings) out << "x " << (e + 1) << " " << (f + 1) << "\n";
    for (int e = 0; e < imm.base.m(); ++e) {
        if (imm.order[static_cast<size_t>(e)].size() < 2) continue;
        out << "o " << (e + 1) << ":";
        for (int x : imm.order[static_cast<size_t>(e)]) out << " " << (x + 1);
        out << "\n";
    }
    PlanarizedGraph pl = planarize(imm.base, imm.crossings, imm.order);
    out << serialize_rotation(pl.graph, imm.rotation);
    return out.str();
}

Immersion parse_immersion(const std::string& text) {
    // split: graph block | x/o lines | rotation block
    std::istringstream in(text);
    std::string line;
    std::ostringstream gblock, xblock, rblock;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        char tag = line[0];
        if (tag == 'p' || tag == 'e')
            gblock << line << "\n";
        else if (tag == 'x' || tag == 'o')
            xblock << line << "\n";
        else if (tag == 'r')
            rblock << line << "\n";
        else
            throw std::invalid_argument("parse_immersion: unknown line: " + line);
    }
    Immersion imm;
    imm.base = parse_graph(gblock.str());
    std::istringstream xs(xblock.str());
    std::vector<std::vector<int>> explicit_order(static_cast<size_t>(imm.base.m()));
    std::vector<char> has_order(static_cast<size_t>(imm.base.m()), 0);
    while (std::getline(xs, line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "x") {
            int e, f;
            ls >> e >> f;
            if (!ls) throw std::invalid_argument("parse_immersion: malformed x line: " + line);
            imm.crossings.emplace_back(std::min(e, f) - 1, std::max(e, f) - 1);
        } else {
            std::string etok;
            ls >> etok;
            if (!etok.empty() && etok.back() == ':') etok.pop_back();
            int e = std::stoi(etok) - 1;
            if (e < 0 || e >= imm.base.m()) throw std::invalid_argument("parse_immersion: bad o line edge");
            has_order[static_cast<size_t>(e)] = 1;
            int x;
            while (ls >> x) explicit_order[static_cast<size_t>(e)].push_back(x - 1);
        }
    }
    imm.order = order_from_crossings(imm.base, imm.crossings);
    for (int e = 0; e < imm.base.m(); ++e)
        if (has_order[static_cast<size_t>(e)]) imm.order[static_cast<size_t>(e)] = explicit_order[static_cast<size_t>(e)];
    PlanarizedGraph pl = planarize(imm.base, imm.crossings, imm.order);
    imm.rotation = parse_rotation(pl.graph, rblock.str());
    return imm;
}

Immersion load_immersion_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open immersion file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_immersion(ss.str());
}

void save_immersion_file(const Immersion& imm, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write immersion file: " + path);
    out << serialize_immersion(imm);
}

}  // namespace onep
