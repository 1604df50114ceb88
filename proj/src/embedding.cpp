#include "onep/embedding.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace onep {

int RotationSystem::end_of(const Graph& g, EdgeId e, int vertex) {
    auto [u, v] = g.edges[static_cast<size_t>(e)];
    if (vertex == u) return 2 * e;
    if (vertex == v) return 2 * e + 1;
    throw std::invalid_argument("end_of: vertex not an endpoint");
}

int RotationSystem::end_vertex(const Graph& g, int end) {
    auto [u, v] = g.edges[static_cast<size_t>(end / 2)];
    return (end & 1) ? v : u;
}

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

}  // namespace

std::optional<RotationSystem> planar_embed(const Graph& g) {
    // Parallel edges are subdivided before the Boyer-Myrvold run; the rotation
    // is read back by collapsing the degree-2 subdivision vertices.
    int extra = 0;
    std::set<std::pair<int, int>> seen;
    std::vector<int> subdiv(static_cast<size_t>(g.m()), -1);  // edge -> subdivision vertex
    for (int e = 0; e < g.m(); ++e) {
        auto key = std::minmax(g.edges[static_cast<size_t>(e)].first, g.edges[static_cast<size_t>(e)].second);
        if (!seen.insert(key).second) subdiv[static_cast<size_t>(e)] = g.n + extra++;
    }

    BoostGraph bg(static_cast<size_t>(g.n + extra));
    // boost edge index -> (original edge, side of the half at its lower point)
    std::vector<std::pair<int, int>> origin;
    int eidx = 0;
    auto add = [&](int a, int b, int orig_edge, int half) {
        auto e = boost::add_edge(static_cast<size_t>(a), static_cast<size_t>(b), bg).first;
        boost::put(boost::edge_index, bg, e, eidx++);
        origin.emplace_back(orig_edge, half);
    };
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[static_cast<size_t>(e)];
        if (subdiv[static_cast<size_t>(e)] < 0) {
            add(u, v, e, -1);
        } else {
            int w = subdiv[static_cast<size_t>(e)];
            add(u, w, e, 0);
            add(w, v, e, 1);
        }
    }

    using Edge = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<Edge>> emb(boost::num_vertices(bg));
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, bg)));
    if (!planar) return std::nullopt;

    RotationSystem rot;
    rot.at.resize(static_cast<size_t>(g.n));
    for (int v = 0; v < g.n; ++v) {
        for (auto& be : emb[static_cast<size_t>(v)]) {
            int idx = boost::get(boost::edge_index, bg, be);
            auto [orig, half] = origin[static_cast<size_t>(idx)];
            auto [a, b] = g.edges[static_cast<size_t>(orig)];
            int side;
            if (half < 0)
                side = (v == a) ? 0 : 1;
            else
                side = half;  // half 0 touches the stored first endpoint
            rot.at[static_cast<size_t>(v)].push_back(2 * orig + side);
        }
    }
    return rot;
}

bool is_planar(const Graph& g) { return planar_embed(g).has_value(); }

FaceSet face_traversal(const Graph& g, const RotationSystem& rot) {
    if (static_cast<int>(rot.at.size()) != g.n)
        throw std::invalid_argument("face_traversal: rotation size mismatch");
    std::vector<int> pos(static_cast<size_t>(2 * g.m()), -1);
    int covered = 0;
    for (int v = 0; v < g.n; ++v) {
        for (size_t i = 0; i < rot.at[static_cast<size_t>(v)].size(); ++i) {
            int end = rot.at[static_cast<size_t>(v)][i];
            if (end < 0 || end >= 2 * g.m()) throw std::invalid_argument("face_traversal: bad edge end");
            if (RotationSystem::end_vertex(g, end) != v)
                throw std::invalid_argument("face_traversal: end listed at wrong vertex");
            if (pos[static_cast<size_t>(end)] != -1)
                throw std::invalid_argument("face_traversal: duplicated edge end");
            pos[static_cast<size_t>(end)] = static_cast<int>(i);
            covered++;
        }
    }
    if (covered != 2 * g.m()) throw std::invalid_argument("face_traversal: rotation does not cover all ends");

    // next directed edge after arriving along (e, dir)
    auto next_directed = [&](int dir_edge) {
        int e = dir_edge / 2, dir = dir_edge & 1;
        auto [a, b] = g.edges[static_cast<size_t>(e)];
        int w = dir ? a : b;                       // arrival vertex
        int in_end = 2 * e + (dir ? 0 : 1);        // the end of e sitting at w
        auto& ring = rot.at[static_cast<size_t>(w)];
        int p = pos[static_cast<size_t>(in_end)];
        int out_end = ring[(static_cast<size_t>(p) + 1) % ring.size()];
        int e2 = out_end / 2, side = out_end & 1;
        return 2 * e2 + side;  // leaving from side: side 0 means first->second
    };

    FaceSet fs;
    std::vector<char> used(static_cast<size_t>(2 * g.m()), 0);
    for (int start = 0; start < 2 * g.m(); ++start) {
        if (used[static_cast<size_t>(start)]) continue;
        std::vector<std::pair<int, int>> walk;
        int cur = start;
        while (!used[static_cast<size_t>(cur)]) {
            used[static_cast<size_t>(cur)] = 1;
            walk.emplace_back(cur / 2, cur & 1);
            cur = next_directed(cur);
        }
        fs.faces.push_back(std::move(walk));
    }
    fs.euler_value = g.n - g.m() + static_cast<int>(fs.faces.size());
    return fs;
}

std::vector<int> component_ids(const Graph& g) {
    std::vector<int> comp(static_cast<size_t>(g.n), -1);
    auto adj = g.adjacency();
    int c = 0;
    for (int v = 0; v < g.n; ++v) {
        if (comp[static_cast<size_t>(v)] >= 0) continue;
        std::vector<int> stack{v};
        comp[static_cast<size_t>(v)] = c;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[static_cast<size_t>(x)])
                if (comp[static_cast<size_t>(y)] < 0) {
                    comp[static_cast<size_t>(y)] = c;
                    stack.push_back(y);
                }
        }
        c++;
    }
    return comp;
}

bool is_plane_embedding(const Graph& g, const RotationSystem& rot) {
    FaceSet fs;
    try {
        fs = face_traversal(g, rot);
    } catch (const std::invalid_argument&) {
        return false;
    }
    auto comp = component_ids(g);
    int ncomp = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
    std::vector<int> vcount(static_cast<size_t>(ncomp), 0), ecount(static_cast<size_t>(ncomp), 0),
        fcount(static_cast<size_t>(ncomp), 0);
    for (int v = 0; v < g.n; ++v) vcount[static_cast<size_t>(comp[static_cast<size_t>(v)])]++;
    for (auto& [u, v] : g.edges) ecount[static_cast<size_t>(comp[static_cast<size_t>(u)])]++;
    for (auto& f : fs.faces) fcount[static_cast<size_t>(comp[static_cast<size_t>(g.edges[static_cast<size_t>(f[0].first)].first)])]++;
    for (int c = 0; c < ncomp; ++c) {
        if (ecount[static_cast<size_t>(c)] == 0) continue;  // isolated vertex: trivially plane
        if (vcount[static_cast<size_t>(c)] - ecount[static_cast<size_t>(c)] + fcount[static_cast<size_t>(c)] != 2)
            return false;
    }
    return true;
}

bool is_peripheral(const Graph& g, const std::vector<int>& cycle) {
    size_t len = cycle.size();
    if (len < 3) throw std::invalid_argument("is_peripheral: not a cycle");
    std::set<int> cset(cycle.begin(), cycle.end());
    if (cset.size() != len) throw std::invalid_argument("is_peripheral: repeated vertex");
    for (size_t i = 0; i < len; ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % len]))
            throw std::invalid_argument("is_peripheral: missing cycle edge");
    // induced: no chords
    for (auto& [u, v] : g.edges) {
        if (!cset.count(u) || !cset.count(v)) continue;
        size_t pu = static_cast<size_t>(std::find(cycle.begin(), cycle.end(), u) - cycle.begin());
        size_t pv = static_cast<size_t>(std::find(cycle.begin(), cycle.end(), v) - cycle.begin());
        size_t d = (pu + len - pv) % len;
        if (d != 1 && d != len - 1) return false;
    }
    // G - V(C) connected and nonempty
    std::vector<int> rest;
    for (int v = 0; v < g.n; ++v)
        if (!cset.count(v)) rest.push_back(v);
    if (rest.empty()) return false;
    return induced_subgraph(g, rest).is_connected();
}

std::vector<std::vector<int>> enumerate_short_cycles(const Graph& g, int maxlen) {
    if (maxlen != 3 && maxlen != 4) throw std::invalid_argument("enumerate_short_cycles: maxlen must be 3 or 4");
    auto adj = g.adjacency();
    std::vector<std::set<int>> nb(static_cast<size_t>(g.n));
    for (int v = 0; v < g.n; ++v) nb[static_cast<size_t>(v)] = std::set<int>(adj[static_cast<size_t>(v)].begin(), adj[static_cast<size_t>(v)].end());

    std::vector<std::vector<int>> out;
    for (auto& [a, b] : g.edges) {
        int u = std::min(a, b), v = std::max(a, b);
        for (int w : nb[static_cast<size_t>(v)])
            if (w > v && nb[static_cast<size_t>(u)].count(w)) out.push_back({u, v, w});
    }
    if (maxlen == 4) {
        for (int u = 0; u < g.n; ++u) {
            for (int w = u + 1; w < g.n; ++w) {
                std::vector<int> common;
                for (int x : nb[static_cast<size_t>(u)])
                    if (x != w && nb[static_cast<size_t>(w)].count(x)) common.push_back(x);
                for (size_t i = 0; i < common.size(); ++i)
                    for (size_t j = i + 1; j < common.size(); ++j) {
                        int a2 = common[i], b2 = common[j];
                        // emit once: at the diagonal containing the global minimum
                        if (u < a2 && u < b2) out.push_back({u, a2, w, b2});
                    }
            }
        }
    }
    return out;
}

int edge_disjoint_connectivity(const Graph& g, int s, int t, const std::vector<int>& forbidden) {
    if (s == t) throw std::invalid_argument("edge_disjoint_connectivity: s == t");
    std::vector<char> blocked(static_cast<size_t>(g.n), 0);
    for (int v : forbidden) blocked[static_cast<size_t>(v)] = 1;
    if (blocked[static_cast<size_t>(s)] || blocked[static_cast<size_t>(t)])
        throw std::invalid_argument("edge_disjoint_connectivity: terminal forbidden");

    auto inc = g.incident_edges();
    std::vector<int> flow(static_cast<size_t>(g.m()), 0);  // +1 along stored direction, -1 against
    int total = 0;
    while (true) {
        std::vector<int> pre(static_cast<size_t>(g.n), -2);  // incoming edge; -2 unvisited
        pre[static_cast<size_t>(s)] = -1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty() && pre[static_cast<size_t>(t)] == -2) {
            int v = q.front();
            q.pop();
            for (int e : inc[static_cast<size_t>(v)]) {
                auto [a, b] = g.edges[static_cast<size_t>(e)];
                int w = (v == a) ? b : a;
                int dir = (v == a) ? 1 : -1;  // traversal direction relative to storage
                if (blocked[static_cast<size_t>(w)] || pre[static_cast<size_t>(w)] != -2) continue;
                if (flow[static_cast<size_t>(e)] * dir >= 1) continue;  // saturated this way
                pre[static_cast<size_t>(w)] = e;
                q.push(w);
            }
        }
        if (pre[static_cast<size_t>(t)] == -2) break;
        int v = t;
        while (v != s) {
            int e = pre[static_cast<size_t>(v)];
            auto [a, b] = g.edges[static_cast<size_t>(e)];
            if (v == b) {
                flow[static_cast<size_t>(e)] += 1;
                v = a;
            } else {
                flow[static_cast<size_t>(e)] -= 1;
                v = b;
            }
        }
        total++;
    }
    return total;
}

bool is_k_connected(const Graph& g, int k) {
    if (g.n <= k) return false;
    if (!g.is_connected()) return false;
    if (k <= 1) return true;
    // remove every (k-1)-subset; desk scale only needs k <= 3
    std::vector<int> idx(static_cast<size_t>(k - 1), 0);
    std::vector<int> verts(static_cast<size_t>(g.n));
    for (int i = 0; i < g.n; ++i) verts[static_cast<size_t>(i)] = i;
    std::vector<int> chosen;
    std::function<bool(int, int)> rec = [&](int start, int left) -> bool {
        if (left == 0) {
            std::vector<int> rest;
            std::set<int> cut(chosen.begin(), chosen.end());
            for (int v = 0; v < g.n; ++v)
                if (!cut.count(v)) rest.push_back(v);
            return induced_subgraph(g, rest).is_connected();
        }
        for (int v = start; v < g.n; ++v) {
            chosen.push_back(v);
            bool ok = rec(v + 1, left - 1);
            chosen.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    return rec(0, k - 1);
}

std::string serialize_rotation(const Graph& g, const RotationSystem& rot) {
    std::ostringstream out;
    for (int v = 0; v < g.n; ++v) {
        out << "r " << (v + 1) << ":";
        for (int end : rot.at[static_cast<size_t>(v)]) out << " " << (end / 2 + 1);
        out << "\n";
    }
    return out.str();
}

RotationSystem parse_rotation(const Graph& g, const std::string& text) {
    RotationSystem rot;
    rot.at.resize(static_cast<size_t>(g.n));
    std::istringstream in(text);
    std::string line;
    std::vector<char> have(static_cast<size_t>(g.n), 0);
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag != "r") throw std::invalid_argument("parse_rotation: expected r line: " + line);
        std::string vtok;
        ls >> vtok;
        if (!vtok.empty() && vtok.back() == ':') vtok.pop_back();
        int v = std::stoi(vtok) - 1;
        if (v < 0 || v >= g.n) throw std::invalid_argument("parse_rotation: vertex out of range");
        if (have[static_cast<size_t>(v)]) throw std::invalid_argument("parse_rotation: duplicate vertex line");
        have[static_cast<size_t>(v)] = 1;
        int e1;
        while (ls >> e1) {
            int e = e1 - 1;
            if (e < 0 || e >= g.m()) throw std::invalid_argument("parse_rotation: edge id out of range");
            rot.at[static_cast<size_t>(v)].push_back(RotationSystem::end_of(g, e, v));
        }
    }
    return rot;
}

}  // namespace onep
