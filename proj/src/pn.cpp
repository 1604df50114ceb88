#include "onep/pn.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace onep {

bool ConditionReport::all_pass() const {
    for (auto& r : results)
        if (!r.pass) return false;
    return true;
}

const ConditionResult* ConditionReport::find(const std::string& name) const {
    for (auto& r : results)
        if (r.name == name) return &r;
    return nullptr;
}

std::string ConditionReport::to_text() const {
    std::ostringstream out;
    for (auto& r : results) {
        out << r.name << ": " << (r.pass ? "PASS" : "FAIL");
        if (!r.pass && !r.witness.empty()) out << "  [" << r.witness << "]";
        out << "\n";
    }
    return out.str();
}

namespace {

std::string vlist(const std::vector<int>& vs) {
    std::ostringstream s;
    for (size_t i = 0; i < vs.size(); ++i) s << (i ? " " : "") << (vs[i] + 1);
    return s.str();
}

// faces as vertex cycles (peripheral cycles of a 3-connected planar graph)
std::vector<std::vector<int>> face_cycles(const Graph& g, const RotationSystem& rot) {
    auto fs = face_traversal(g, rot);
    std::vector<std::vector<int>> out;
    for (auto& walk : fs.faces) {
        std::vector<int> cyc;
        for (auto& [e, dir] : walk) {
            auto [a, b] = g.edges[static_cast<size_t>(e)];
            cyc.push_back(dir ? b : a);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

bool cycle_has_edge(const std::vector<int>& cyc, int u, int v) {
    size_t L = cyc.size();
    for (size_t i = 0; i < L; ++i) {
        int a = cyc[i], b = cyc[(i + 1) % L];
        if ((a == u && b == v) || (a == v && b == u)) return true;
    }
    return false;
}

}  // namespace

std::vector<std::pair<EdgeId, EdgeId>> paired_edges(const Graph& g) {
    if (g.multigraph) throw std::invalid_argument("paired_edges: simple graphs only");
    auto tris = enumerate_short_cycles(g, 3);
    // adjacent triangle pairs and their 4-vertex unions
    std::set<std::pair<EdgeId, EdgeId>> out;
    for (size_t i = 0; i < tris.size(); ++i)
        for (size_t j = i + 1; j < tris.size(); ++j) {
            std::vector<int> common;
            for (int v : tris[i])
                if (std::find(tris[j].begin(), tris[j].end(), v) != tris[j].end()) common.push_back(v);
            if (common.size() != 2) continue;
            if (!g.has_edge(common[0], common[1])) continue;  // shared vertices must be a shared edge
            std::set<int> uni(tris[i].begin(), tris[i].end());
            uni.insert(tris[j].begin(), tris[j].end());
            if (uni.size() != 4) continue;
            std::vector<int> s(uni.begin(), uni.end());
            // disjoint edge pairs covering exactly these four vertices
            int splits[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
            for (auto& sp : splits) {
                int e1 = g.find_edge(s[sp[0]], s[sp[1]]);
                int e2 = g.find_edge(s[sp[2]], s[sp[3]]);
                if (e1 >= 0 && e2 >= 0) out.insert(std::minmax(e1, e2));
            }
        }
    return std::vector<std::pair<EdgeId, EdgeId>>(out.begin(), out.end());
}

ConditionReport check_A_class(const Graph& g) {
    if (g.multigraph) throw std::invalid_argument("check_A_class: simple graphs only");
    ConditionReport rep;

    auto emb = planar_embed(g);
    {
        ConditionResult r{"planar", emb.has_value(), "", {}, {}};
        if (!emb) r.witness = "graph is not planar";
        rep.results.push_back(r);
    }
    {
        ConditionResult r{"3-connected", is_k_connected(g, 3), "", {}, {}};
        if (!r.pass) r.witness = "graph is not 3-connected";
        rep.results.push_back(r);
    }
    if (!rep.all_pass()) return rep;

    auto deg = g.degrees();
    auto adj = g.adjacency();
    std::vector<std::set<int>> nb(static_cast<size_t>(g.n));
    for (int v = 0; v < g.n; ++v) nb[static_cast<size_t>(v)] = std::set<int>(adj[static_cast<size_t>(v)].begin(), adj[static_cast<size_t>(v)].end());

    // C1: degrees in [4, 6]
    {
        ConditionResult r{"C1", true, "", {}, {}};
        for (int v = 0; v < g.n && r.pass; ++v)
            if (deg[static_cast<size_t>(v)] < 4 || deg[static_cast<size_t>(v)] > 6) {
                r.pass = false;
                r.witness = "vertex " + std::to_string(v + 1) + " has degree " + std::to_string(deg[static_cast<size_t>(v)]);
                r.witness_vertices = {v};
            }
        rep.results.push_back(r);
    }

    auto tris = enumerate_short_cycles(g, 3);

    // C2: every edge on a 3-cycle
    {
        ConditionResult r{"C2", true, "", {}, {}};
        for (int e = 0; e < g.m() && r.pass; ++e) {
            auto [u, v] = g.edges[static_cast<size_t>(e)];
            bool found = false;
            for (int w : nb[static_cast<size_t>(u)])
                if (w != v && nb[static_cast<size_t>(v)].count(w)) {
                    found = true;
                    break;
                }
            if (!found) {
                r.pass = false;
                r.witness = "edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) + " lies on no 3-cycle";
                r.witness_edges = {e};
            }
        }
        rep.results.push_back(r);
    }

    // C3: every 3-cycle peripheral
    {
        ConditionResult r{"C3", true, "", {}, {}};
        for (auto& t : tris) {
            if (!is_peripheral(g, t)) {
                r.pass = false;
                r.witness = "separating 3-cycle " + vlist(t);
                r.witness_vertices = t;
                break;
            }
        }
        rep.results.push_back(r);
    }

    // C4: every 3-cycle adjacent to at most one other
    {
        ConditionResult r{"C4", true, "", {}, {}};
        std::map<std::pair<int, int>, std::vector<int>> by_edge;
        for (size_t i = 0; i < tris.size(); ++i) {
            auto& t = tris[i];
            for (int k = 0; k < 3; ++k)
                by_edge[std::minmax(t[static_cast<size_t>(k)], t[static_cast<size_t>((k + 1) % 3)])].push_back(static_cast<int>(i));
        }
        for (size_t i = 0; i < tris.size() && r.pass; ++i) {
            std::set<int> adjacent;
            auto& t = tris[i];
            for (int k = 0; k < 3; ++k)
                for (int j : by_edge[std::minmax(t[static_cast<size_t>(k)], t[static_cast<size_t>((k + 1) % 3)])])
                    if (j != static_cast<int>(i)) adjacent.insert(j);
            if (adjacent.size() > 1) {
                r.pass = false;
                r.witness = "3-cycle " + vlist(t) + " is adjacent to " + std::to_string(adjacent.size()) + " other 3-cycles";
                r.witness_vertices = t;
            }
        }
        rep.results.push_back(r);
    }

    // C5: no vertex in three mutually edge-disjoint 3-cycles
    {
        ConditionResult r{"C5", true, "", {}, {}};
        std::vector<std::vector<int>> at_vertex(static_cast<size_t>(g.n));
        for (size_t i = 0; i < tris.size(); ++i)
            for (int v : tris[i]) at_vertex[static_cast<size_t>(v)].push_back(static_cast<int>(i));
        auto edge_set = [&](int ti) {
            std::set<std::pair<int, int>> s;
            auto& t = tris[static_cast<size_t>(ti)];
            for (int k = 0; k < 3; ++k) s.insert(std::minmax(t[static_cast<size_t>(k)], t[static_cast<size_t>((k + 1) % 3)]));
            return s;
        };
        for (int v = 0; v < g.n && r.pass; ++v) {
            auto& ts = at_vertex[static_cast<size_t>(v)];
            for (size_t a = 0; a < ts.size() && r.pass; ++a)
                for (size_t b = a + 1; b < ts.size() && r.pass; ++b)
                    for (size_t c = b + 1; c < ts.size() && r.pass; ++c) {
                        auto sa = edge_set(ts[a]), sb = edge_set(ts[b]), sc = edge_set(ts[c]);
                        auto disjoint = [](const std::set<std::pair<int, int>>& x,
                                           const std::set<std::pair<int, int>>& y) {
                            for (auto& e : x)
                                if (y.count(e)) return false;
                            return true;
                        };
                        if (disjoint(sa, sb) && disjoint(sa, sc) && disjoint(sb, sc)) {
                            r.pass = false;
                            r.witness = "vertex " + std::to_string(v + 1) + " lies on three edge-disjoint 3-cycles";
                            r.witness_vertices = {v};
                        }
                    }
        }
        rep.results.push_back(r);
    }

    // C6: every 4-cycle peripheral or chorded into two peripheral triangles
    {
        ConditionResult r{"C6", true, "", {}, {}};
        for (auto& c4 : enumerate_short_cycles(g, 4)) {
            if (c4.size() != 4) continue;
            if (is_peripheral(g, c4)) continue;
            int u = c4[0], a = c4[1], w = c4[2], b = c4[3];
            bool ok = false;
            if (nb[static_cast<size_t>(u)].count(w)) {
                std::vector<int> t1{u, a, w}, t2{u, b, w};
                ok = is_peripheral(g, t1) && is_peripheral(g, t2);
            }
            if (!ok && nb[static_cast<size_t>(a)].count(b)) {
                std::vector<int> t1{a, u, b}, t2{a, w, b};
                ok = is_peripheral(g, t1) && is_peripheral(g, t2);
            }
            if (!ok) {
                r.pass = false;
                r.witness = "separating 4-cycle " + vlist(c4);
                r.witness_vertices = c4;
                break;
            }
        }
        rep.results.push_back(r);
    }

    // C7: four edge-disjoint paths around every 3-cycle
    {
        ConditionResult r{"C7", true, "", {}, {}};
        for (auto& t : tris) {
            std::set<int> excl(t.begin(), t.end());
            for (int v : t)
                for (int w : nb[static_cast<size_t>(v)]) excl.insert(w);
            std::vector<int> rest;
            for (int v = 0; v < g.n; ++v)
                if (!excl.count(v)) rest.push_back(v);
            for (size_t a = 0; a < rest.size() && r.pass; ++a)
                for (size_t b = a + 1; b < rest.size() && r.pass; ++b) {
                    int k = edge_disjoint_connectivity(g, rest[a], rest[b], t);
                    if (k < 4) {
                        r.pass = false;
                        r.witness = "vertices " + std::to_string(rest[a] + 1) + "," + std::to_string(rest[b] + 1) +
                                    " have only " + std::to_string(k) + " edge-disjoint paths around 3-cycle " + vlist(t);
                        r.witness_vertices = {rest[a], rest[b]};
                    }
                }
            if (!r.pass) break;
        }
        rep.results.push_back(r);
    }

    // C8: paired edges on nontriangular peripheral cycles
    {
        ConditionResult r{"C8", true, "", {}, {}};
        auto faces = face_cycles(g, *emb);
        auto pairs = paired_edges(g);
        for (auto& [e1, e2] : pairs) {
            auto [v, w] = g.edges[static_cast<size_t>(e1)];
            auto [v2, w2] = g.edges[static_cast<size_t>(e2)];
            std::set<int> quad{v, w, v2, w2};
            for (auto& C : faces) {
                if (C.size() < 4 || !cycle_has_edge(C, v, w)) continue;
                for (auto& C2 : faces) {
                    if (&C2 == &C) continue;
                    if (C2.size() < 4 || !cycle_has_edge(C2, v2, w2)) continue;
                    // (i) no common vertex
                    std::set<int> cs(C.begin(), C.end());
                    for (int x : C2)
                        if (cs.count(x)) {
                            r.pass = false;
                            r.witness = "paired cycles share vertex " + std::to_string(x + 1);
                            r.witness_vertices = {x};
                        }
                    if (!r.pass) break;
                    // (ii) adjacency / 2-path tests
                    std::set<int> cc(C.begin(), C.end());
                    cc.insert(C2.begin(), C2.end());
                    for (int a : C) {
                        for (int a2 : C2) {
                            if (quad.count(a) && quad.count(a2)) continue;
                            if (nb[static_cast<size_t>(a)].count(a2)) {
                                r.pass = false;
                                r.witness = "paired cycles joined by edge " + std::to_string(a + 1) + "-" +
                                            std::to_string(a2 + 1);
                                r.witness_vertices = {a, a2};
                                break;
                            }
                            for (int b : nb[static_cast<size_t>(a)]) {
                                if (cc.count(b)) continue;
                                if (nb[static_cast<size_t>(b)].count(a2)) {
                                    r.pass = false;
                                    r.witness = "paired cycles joined by 2-path " + std::to_string(a + 1) + "-" +
                                                std::to_string(b + 1) + "-" + std::to_string(a2 + 1);
                                    r.witness_vertices = {a, b, a2};
                                    break;
                                }
                            }
                            if (!r.pass) break;
                        }
                        if (!r.pass) break;
                    }
                    if (!r.pass) break;
                }
                if (!r.pass) break;
            }
            if (!r.pass) break;
        }
        rep.results.push_back(r);
    }

    // C9: forbidden fragments
    {
        ConditionResult r{"C9", true, "", {}, {}};
        auto occ = find_forbidden(g, forbidden_pattern_library());
        if (!occ.empty()) {
            r.pass = false;
            r.witness = "forbidden fragment " + forbidden_pattern_library()[static_cast<size_t>(occ[0].pattern_index)].name +
                        " at vertices " + vlist(occ[0].image);
            r.witness_vertices = occ[0].image;
        }
        rep.results.push_back(r);
    }

    return rep;
}

ConditionReport check_H_class(const Graph& h, const RotationSystem& rot) {
    if (h.multigraph) throw std::invalid_argument("check_H_class: simple graphs only");
    ConditionReport rep;
    {
        ConditionResult r{"planar-embedding", is_plane_embedding(h, rot), "", {}, {}};
        if (!r.pass) r.witness = "rotation is not a plane embedding";
        rep.results.push_back(r);
    }
    {
        ConditionResult r{"3-connected", is_k_connected(h, 3), "", {}, {}};
        if (!r.pass) r.witness = "graph is not 3-connected";
        rep.results.push_back(r);
    }
    if (!rep.all_pass()) return rep;

    auto deg = h.degrees();
    // H1
    {
        ConditionResult r{"H1", true, "", {}, {}};
        for (int v = 0; v < h.n && r.pass; ++v)
            if (deg[static_cast<size_t>(v)] != 3 && deg[static_cast<size_t>(v)] != 4) {
                r.pass = false;
                r.witness = "vertex " + std::to_string(v + 1) + " has valence " + std::to_string(deg[static_cast<size_t>(v)]);
                r.witness_vertices = {v};
            }
        rep.results.push_back(r);
    }
    // H2
    {
        ConditionResult r{"H2", true, "", {}, {}};
        auto tris = enumerate_short_cycles(h, 3);
        if (!tris.empty()) {
            r.pass = false;
            r.witness = "3-cycle " + vlist(tris[0]);
            r.witness_vertices = tris[0];
        }
        rep.results.push_back(r);
    }
    // H3
    {
        ConditionResult r{"H3", true, "", {}, {}};
        for (auto& c4 : enumerate_short_cycles(h, 4)) {
            if (c4.size() != 4) continue;
            if (!is_peripheral(h, c4)) {
                r.pass = false;
                r.witness = "non-peripheral 4-cycle " + vlist(c4);
                r.witness_vertices = c4;
                break;
            }
        }
        rep.results.push_back(r);
    }
    // H4: opposite peripheral cycles at 4-valent vertices
    {
        ConditionResult r{"H4", true, "", {}, {}};
        auto faces = face_cycles(h, rot);
        auto adj = h.adjacency();
        for (int v = 0; v < h.n && r.pass; ++v) {
            if (deg[static_cast<size_t>(v)] != 4) continue;
            std::vector<const std::vector<int>*> at;
            for (auto& f : faces)
                if (std::find(f.begin(), f.end(), v) != f.end()) at.push_back(&f);
            for (size_t i = 0; i < at.size() && r.pass; ++i)
                for (size_t j = i + 1; j < at.size() && r.pass; ++j) {
                    // opposite = no common edge incident with v
                    auto vedges = [&](const std::vector<int>& cyc) {
                        std::set<int> s;
                        size_t L = cyc.size();
                        for (size_t k = 0; k < L; ++k) {
                            if (cyc[k] != v) continue;
                            s.insert(cyc[(k + 1) % L]);
                            s.insert(cyc[(k + L - 1) % L]);
                        }
                        return s;
                    };
                    auto si = vedges(*at[i]), sj = vedges(*at[j]);
                    bool common = false;
                    for (int x : si) common |= sj.count(x) > 0;
                    if (common) continue;  // not opposite
                    for (int a : *at[i]) {
                        if (a == v) continue;
                        for (int b : *at[j]) {
                            if (b == v || a == b) continue;
                            if (h.has_edge(a, b)) {
                                r.pass = false;
                                r.witness = "edge " + std::to_string(a + 1) + "-" + std::to_string(b + 1) +
                                            " joins opposite cycles at vertex " + std::to_string(v + 1);
                                r.witness_vertices = {v, a, b};
                                break;
                            }
                        }
                        if (!r.pass) break;
                    }
                }
        }
        rep.results.push_back(r);
    }
    return rep;
}

// --- (C9) pattern library ----------------------------------------------------

const std::vector<ForbiddenPattern>& forbidden_pattern_library() {
    static const std::vector<ForbiddenPattern> lib = [] {
        std::vector<ForbiddenPattern> v;
        {
            // Two triangles xyz, vuw joined by xv, xw, uz with x, z, v, u all
            // 4-valent: the configuration ruled out before the case split.
            ForbiddenPattern p;
            p.name = "double-kite";
            // 0=x 1=y 2=z 3=v 4=u 5=w
            p.pattern = build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {0, 5}, {4, 2}});
            p.exact_degree = {4, 0, 4, 4, 4, 0};
            v.push_back(std::move(p));
        }
        {
            // The terminal subgraph of the first subcase: triangles xyz, vuw,
            // uwb, acd with the peripheral 4-cycle dbua.
            ForbiddenPattern p;
            p.name = "chained-kites";
            // 0=x 1=y 2=z 3=v 4=u 5=w 6=a 7=b 8=c 9=d
            p.pattern = build_graph(10, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 3}, {4, 2},
                                         {4, 7}, {5, 7}, {2, 6}, {6, 4}, {6, 8}, {6, 9}, {8, 9}, {7, 9}});
            p.exact_degree = {0, 0, 4, 4, 5, 0, 4, 4, 0, 0};
            v.push_back(std::move(p));
        }
        {
            // The terminal subgraph of the second subcase: triangles auz, aub,
            // ahd, btt' with the peripheral 4-cycle dt'ba; the starred pair
            // (h, t') may collapse onto one vertex.
            ForbiddenPattern p;
            p.name = "split-kites";
            // 0=x 1=y 2=z 3=v 4=u 5=w 6=a 7=b 8=d 9=h 10=t 11=t'
            p.pattern = build_graph(12, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 3}, {4, 2},
                                         {6, 2}, {6, 4}, {6, 7}, {4, 7}, {6, 9}, {9, 8}, {8, 6},
                                         {7, 10}, {7, 11}, {10, 11}, {8, 11}});
            p.exact_degree = {0, 0, 4, 4, 0, 0, 5, 4, 4, 0, 0, 0};
            p.may_identify = {{9, 11}};
            v.push_back(std::move(p));
        }
        return v;
    }();
    return lib;
}

namespace {

struct Matcher {
    const Graph& host;
    const Graph& pat;
    const std::vector<int>& exact_degree;
    std::vector<int> host_deg;
    std::vector<std::set<int>> host_nb;
    std::vector<int> order;        // pattern vertices in match order
    std::vector<int> image;       // pattern -> host (grows with order)
    std::set<std::vector<int>> image_sets;  // dedup by sorted host vertex set

    Matcher(const Graph& h, const Graph& p, const std::vector<int>& ed)
        : host(h), pat(p), exact_degree(ed) {
        host_deg = host.degrees();
        auto adj = host.adjacency();
        host_nb.resize(static_cast<size_t>(host.n));
        for (int v = 0; v < host.n; ++v)
            host_nb[static_cast<size_t>(v)] = std::set<int>(adj[static_cast<size_t>(v)].begin(), adj[static_cast<size_t>(v)].end());
        // connected match order: start at 0, prefer vertices adjacent to placed ones
        std::vector<char> placed(static_cast<size_t>(pat.n), 0);
        auto padj = pat.adjacency();
        order.push_back(0);
        placed[0] = 1;
        while (static_cast<int>(order.size()) < pat.n) {
            int best = -1;
            for (int v = 0; v < pat.n && best < 0; ++v) {
                if (placed[static_cast<size_t>(v)]) continue;
                for (int w : padj[static_cast<size_t>(v)])
                    if (placed[static_cast<size_t>(w)]) {
                        best = v;
                        break;
                    }
            }
            if (best < 0)
                for (int v = 0; v < pat.n; ++v)
                    if (!placed[static_cast<size_t>(v)]) {
                        best = v;
                        break;
                    }
            order.push_back(best);
            placed[static_cast<size_t>(best)] = 1;
        }
        image.assign(static_cast<size_t>(pat.n), -1);
    }

    bool feasible(int pv, int hv) const {
        if (exact_degree[static_cast<size_t>(pv)] > 0 && host_deg[static_cast<size_t>(hv)] != exact_degree[static_cast<size_t>(pv)])
            return false;
        int pd = 0;
        for (auto& [a, b] : pat.edges)
            if (a == pv || b == pv) pd++;
        if (host_deg[static_cast<size_t>(hv)] < pd) return false;
        for (int i = 0; i < pat.n; ++i) {
            if (image[static_cast<size_t>(i)] < 0) continue;
            bool pe = pat.has_edge(pv, i);
            if (pe && !host_nb[static_cast<size_t>(hv)].count(image[static_cast<size_t>(i)])) return false;
            if (image[static_cast<size_t>(i)] == hv) return false;  // injective
        }
        return true;
    }

    void rec(size_t k, std::vector<PatternOccurrence>& out, int pattern_index) {
        if (k == order.size()) {
            std::vector<int> key = image;
            std::sort(key.begin(), key.end());
            if (image_sets.insert(key).second) out.push_back({pattern_index, image});
            return;
        }
        int pv = order[k];
        for (int hv = 0; hv < host.n; ++hv) {
            if (!feasible(pv, hv)) continue;
            image[static_cast<size_t>(pv)] = hv;
            rec(k + 1, out, pattern_index);
            image[static_cast<size_t>(pv)] = -1;
        }
    }
};

Graph merge_pattern_vertices(const Graph& p, int a, int b, std::vector<int>& degree_map,
                             const std::vector<int>& exact) {
    // merge b into a; returns the merged pattern or an empty graph when the
    // merge is degenerate (self-loop / duplicate edge)
    std::vector<int> remap(static_cast<size_t>(p.n));
    int next = 0;
    for (int v = 0; v < p.n; ++v) {
        if (v == b) continue;
        remap[static_cast<size_t>(v)] = next++;
    }
    remap[static_cast<size_t>(b)] = remap[static_cast<size_t>(a)];
    std::set<std::pair<int, int>> edges;
    for (auto& [u, w] : p.edges) {
        int x = remap[static_cast<size_t>(u)], y = remap[static_cast<size_t>(w)];
        if (x == y) return Graph{};  // degenerate
        edges.insert(std::minmax(x, y));
    }
    degree_map.assign(static_cast<size_t>(p.n - 1), 0);
    for (int v = 0; v < p.n; ++v) {
        if (v == b) continue;
        int tgt = remap[static_cast<size_t>(v)];
        if (exact[static_cast<size_t>(v)] > 0) degree_map[static_cast<size_t>(tgt)] = exact[static_cast<size_t>(v)];
    }
    if (exact[static_cast<size_t>(b)] > 0) {
        int tgt = remap[static_cast<size_t>(b)];
        // both constraints apply; incompatible exact degrees make it unmatchable
        if (degree_map[static_cast<size_t>(tgt)] > 0 && degree_map[static_cast<size_t>(tgt)] != exact[static_cast<size_t>(b)])
            return Graph{};
        degree_map[static_cast<size_t>(tgt)] = exact[static_cast<size_t>(b)];
    }
    return build_graph(p.n - 1, std::vector<std::pair<int, int>>(edges.begin(), edges.end()));
}

}  // namespace

std::vector<PatternOccurrence> find_forbidden(const Graph& g, const std::vector<ForbiddenPattern>& lib) {
    std::vector<PatternOccurrence> out;
    for (size_t pi = 0; pi < lib.size(); ++pi) {
        auto& p = lib[pi];
        {
            Matcher m(g, p.pattern, p.exact_degree);
            m.rec(0, out, static_cast<int>(pi));
        }
        for (auto& [a, b] : p.may_identify) {
            std::vector<int> degs;
            Graph merged = merge_pattern_vertices(p.pattern, a, b, degs, p.exact_degree);
            if (merged.n == 0) continue;
            Matcher m(g, merged, degs);
            m.rec(0, out, static_cast<int>(pi));
        }
    }
    return out;
}

}  // namespace onep
