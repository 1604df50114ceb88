#include "onep/reduction.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace onep {

void Coloring::validate(const Graph& source) const {
    if (static_cast<int>(color.size()) != source.n)
        throw std::invalid_argument("coloring: must assign every source vertex");
    for (int c : color)
        if (c < 0 || c > 2) throw std::invalid_argument("coloring: colors are a, b, c");
}

Coloring parse_coloring(const std::string& text, const Graph& source) {
    Coloring col;
    col.color.assign(static_cast<size_t>(source.n), -1);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag, hue;
        int v;
        ls >> tag >> v >> hue;
        if (tag != "v" || !ls || v < 1 || v > source.n || hue.size() != 1 || hue[0] < 'a' || hue[0] > 'c')
            throw std::invalid_argument("coloring: malformed line: " + line);
        col.color[static_cast<size_t>(v - 1)] = hue[0] - 'a';
    }
    for (int c : col.color)
        if (c < 0) throw std::invalid_argument("coloring: missing vertex assignment");
    return col;
}

std::string serialize_coloring(const Coloring& col) {
    std::ostringstream out;
    for (size_t v = 0; v < col.color.size(); ++v)
        out << "v " << (v + 1) << " " << static_cast<char>('a' + col.color[v]) << "\n";
    return out.str();
}

namespace {

// U-graph structure with a vertex offset; mirrors gen_U_graph
void append_u(int n, int vbase, std::vector<std::pair<int, int>>& edges,
              std::vector<std::pair<EdgeId, EdgeId>>& crossings) {
    auto id = [n, vbase](int r, int j) { return vbase + r * n + ((j % n) + n) % n; };
    for (int r = 0; r < 4; ++r)
        for (int j = 0; j < n; ++j) edges.emplace_back(id(r, j), id(r, j + 1));
    for (int r = 0; r < 3; ++r)
        for (int j = 0; j < n; ++j) edges.emplace_back(id(r, j), id(r + 1, j));
    for (int r = 0; r < 3; ++r)
        for (int j = 0; j < n; ++j) {
            int d1 = static_cast<int>(edges.size());
            edges.emplace_back(id(r, j), id(r + 1, j + 1));
            int d2 = static_cast<int>(edges.size());
            edges.emplace_back(id(r, j + 1), id(r + 1, j));
            crossings.emplace_back(d1, d2);
        }
}

constexpr int kCorridorSlots = 12;  // s,r1,r2,t per label
constexpr int kWindowSlots = 7;
constexpr int kSelectorSlots = 10;  // alpha x3, x0 y0 x1 y1, omega x3
constexpr int kSelectorInner = 32;  // internal vertices of a 33-path

}  // namespace

Graph ReductionArtifact::g1() const {
    std::vector<std::pair<int, int>> edges(gbar_base.edges.begin(), gbar_base.edges.begin() + g1_edges);
    return build_graph(g1_vertices, std::move(edges), false);
}

Immersion ReductionArtifact::base_immersion() const {
    auto imm = make_immersion(g1(), base_crossings);
    if (!imm) throw std::logic_error("G^(1) skeleton lost its immersion");
    return *imm;
}

ReductionArtifact build_reduction(const Graph& source, const RotationSystem& rot) {
    if (source.multigraph) throw std::invalid_argument("build_reduction: source must be simple");
    if (!source.is_connected()) throw std::invalid_argument("build_reduction: source must be connected");
    auto deg = source.degrees();
    for (int v = 0; v < source.n; ++v)
        if (deg[static_cast<size_t>(v)] < 3 || deg[static_cast<size_t>(v)] > 4)
            throw std::invalid_argument("build_reduction: vertex " + std::to_string(v + 1) +
                                        " has degree " + std::to_string(deg[static_cast<size_t>(v)]) +
                                        ", the reduction needs degrees 3 or 4");
    if (!is_plane_embedding(source, rot))
        throw std::invalid_argument("build_reduction: rotation is not a plane embedding of the source");

    ReductionArtifact art;
    art.source = source;
    art.source_rotation = rot;
    art.k = 1;

    // face structure and corner bookkeeping
    auto fs = face_traversal(source, rot);
    int nfaces = static_cast<int>(fs.faces.size());
    std::vector<int> face_of(static_cast<size_t>(2 * source.m()), -1);
    for (int f = 0; f < nfaces; ++f)
        for (auto& [e, dir] : fs.faces[static_cast<size_t>(f)]) face_of[static_cast<size_t>(2 * e + dir)] = f;

    // rotation position of each edge end at each vertex
    std::vector<std::vector<int>> rot_edges(static_cast<size_t>(source.n));
    for (int v = 0; v < source.n; ++v)
        for (int end : rot.at[static_cast<size_t>(v)]) rot_edges[static_cast<size_t>(v)].push_back(end / 2);

    // corner (v, i) = between rotation entries i and i+1 at v; its face is the
    // face of the directed edge arriving at v along rotation entry i
    auto corner_face = [&](int v, int i) {
        int end = rot.at[static_cast<size_t>(v)][static_cast<size_t>(i)];
        int e = end / 2, side = end & 1;
        int dir_in = (side == 1) ? 0 : 1;  // direction whose head is v
        return face_of[static_cast<size_t>(2 * e + dir_in)];
    };

    // face corner lists in walk order: (vertex, rotation index at that vertex)
    std::vector<std::vector<std::pair<int, int>>> face_corners(static_cast<size_t>(nfaces));
    for (int f = 0; f < nfaces; ++f) {
        for (auto& [e, dir] : fs.faces[static_cast<size_t>(f)]) {
            auto [a, b] = source.edges[static_cast<size_t>(e)];
            int head = dir ? a : b;
            int in_end = 2 * e + (dir ? 0 : 1);
            auto& ring = rot.at[static_cast<size_t>(head)];
            int pos = static_cast<int>(std::find(ring.begin(), ring.end(), in_end) - ring.begin());
            face_corners[static_cast<size_t>(f)].emplace_back(head, pos);
        }
    }

    // --- vertex allocation, G^(1) first -----------------------------------
    std::vector<int> block_nv(static_cast<size_t>(source.n));
    std::vector<int> block_ubase(static_cast<size_t>(source.n));
    std::vector<int> face_nf(static_cast<size_t>(nfaces));
    std::vector<int> face_ubase(static_cast<size_t>(nfaces));
    int next_vertex = 0;

    art.blocks.resize(static_cast<size_t>(source.n));
    for (int v = 0; v < source.n; ++v) {
        int k = deg[static_cast<size_t>(v)];
        int nv = 19 * k + kSelectorSlots;  // corridor + window slots per edge, one selector zone
        nv = std::max(nv, 7 * k);          // the stated lower bound on the U-graph order
        block_nv[static_cast<size_t>(v)] = nv;
        block_ubase[static_cast<size_t>(v)] = next_vertex;
        next_vertex += 4 * nv;
        BlockMeta& bm = art.blocks[static_cast<size_t>(v)];
        bm.source_vertex = v;
        for (int j = 0; j < nv; ++j) bm.u_boundary.push_back(block_ubase[static_cast<size_t>(v)] + j);
        // tents (3 per corridor), then blocking internals (5 + 1)
        bm.corridors.resize(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) {
            bm.corridors[static_cast<size_t>(i)].source_edge = rot_edges[static_cast<size_t>(v)][static_cast<size_t>(i)];
            for (int h = 0; h < 3; ++h) bm.corridors[static_cast<size_t>(i)].apex[static_cast<size_t>(h)] = next_vertex++;
        }
        for (int t = 0; t < 3; ++t) bm.blocking0.push_back(next_vertex++);
        bm.blocking1.push_back(next_vertex++);
    }
    for (int f = 0; f < nfaces; ++f) {
        int corners = static_cast<int>(face_corners[static_cast<size_t>(f)].size());
        int nf = std::max(6, 7 * corners);
        face_nf[static_cast<size_t>(f)] = nf;
        face_ubase[static_cast<size_t>(f)] = next_vertex;
        next_vertex += 4 * nf;
        FaceMeta fm;
        for (auto& [cv, ci] : face_corners[static_cast<size_t>(f)]) fm.corner_vertices.push_back(cv);
        for (int j = 0; j < nf; ++j) fm.u_boundary.push_back(face_ubase[static_cast<size_t>(f)] + j);
        art.faces.push_back(std::move(fm));
    }
    art.g1_vertices = next_vertex;

    // pending path internals, visitor middles, selector internals
    art.pendings.resize(static_cast<size_t>(source.m()));
    for (int e = 0; e < source.m(); ++e) {
        art.pendings[static_cast<size_t>(e)].source_edge = e;
        for (int h = 0; h < 3; ++h) {
            art.pendings[static_cast<size_t>(e)].path[static_cast<size_t>(h)][1] = next_vertex++;
            art.pendings[static_cast<size_t>(e)].path[static_cast<size_t>(h)][2] = next_vertex++;
        }
    }
    for (int v = 0; v < source.n; ++v) {
        BlockMeta& bm = art.blocks[static_cast<size_t>(v)];
        for (auto& cor : bm.corridors)
            for (int h = 0; h < 3; ++h) cor.vis_mid[static_cast<size_t>(h)] = next_vertex++;
        for (int h = 0; h < 3; ++h) {
            bm.sel_path[static_cast<size_t>(h)].clear();
            for (int t = 0; t < kSelectorInner; ++t) bm.sel_path[static_cast<size_t>(h)].push_back(next_vertex++);
        }
    }

    // --- ring slot roles ----------------------------------------------------
    // around U(v): for each incident edge i: corridor (12 slots) then the
    // window of the corner face between e_i and e_{i+1} (7 slots); after the
    // last window the selector zone (10 slots)
    for (int v = 0; v < source.n; ++v) {
        BlockMeta& bm = art.blocks[static_cast<size_t>(v)];
        int k = deg[static_cast<size_t>(v)];
        int base = block_ubase[static_cast<size_t>(v)];
        int slot = 0;
        for (int i = 0; i < k; ++i) {
            Corridor& cor = bm.corridors[static_cast<size_t>(i)];
            for (int h = 0; h < 3; ++h) {
                cor.s[static_cast<size_t>(h)] = base + slot++;
                cor.r1[static_cast<size_t>(h)] = base + slot++;
                cor.r2[static_cast<size_t>(h)] = base + slot++;
                cor.t[static_cast<size_t>(h)] = base + slot++;
            }
            slot += kWindowSlots;  // the face window, wired when grids are laid
        }
        // selector zone: the three selectors run left to right across the two
        // blocking arches and land beyond them, staircase fashion (a lands
        // first). A dormant selector passes under an arch door pair of the
        // (0)-arch, the activated one passes through the (1)-arch.
        for (int h = 0; h < 3; ++h) bm.sel_alpha[static_cast<size_t>(h)] = base + slot++;
        bm.blocking0.insert(bm.blocking0.begin(), base + slot);      // x0
        bm.blocking0.push_back(base + slot + 1);                     // y0
        bm.blocking1.insert(bm.blocking1.begin(), base + slot + 2);  // x1
        bm.blocking1.push_back(base + slot + 3);                     // y1
        slot += 4;
        for (int h = 0; h < 3; ++h) bm.sel_omega[static_cast<size_t>(h)] = base + slot++;
        for (auto& cor : bm.corridors)
            for (int h = 0; h < 3; ++h) bm.boundary_labeled.push_back(cor.apex[static_cast<size_t>(h)]);
    }

    // --- G^(1) edges ---------------------------------------------------------
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < source.n; ++v) {
        BlockMeta& bm = art.blocks[static_cast<size_t>(v)];
        append_u(block_nv[static_cast<size_t>(v)], block_ubase[static_cast<size_t>(v)], edges, art.base_crossings);
        for (auto& cor : bm.corridors)
            for (int h = 0; h < 3; ++h) {
                int a0 = static_cast<int>(edges.size());
                edges.emplace_back(cor.apex[static_cast<size_t>(h)], cor.r1[static_cast<size_t>(h)]);
                edges.emplace_back(cor.apex[static_cast<size_t>(h)], cor.r2[static_cast<size_t>(h)]);
                if (h == 0) cor.tent_edges_a = {a0, a0 + 1};
                if (h == 1) cor.tent_edges_b = {a0, a0 + 1};
                if (h == 2) cor.tent_edges_c = {a0, a0 + 1};
            }
        for (size_t t = 0; t + 1 < bm.blocking0.size(); ++t) {
            bm.blocking0_edges.push_back(static_cast<int>(edges.size()));
            edges.emplace_back(bm.blocking0[t], bm.blocking0[t + 1]);
        }
        for (size_t t = 0; t + 1 < bm.blocking1.size(); ++t) {
            bm.blocking1_edges.push_back(static_cast<int>(edges.size()));
            edges.emplace_back(bm.blocking1[t], bm.blocking1[t + 1]);
        }
        // block vertex inventory
        for (int j = 0; j < 4 * block_nv[static_cast<size_t>(v)]; ++j)
            bm.block_vertices.push_back(block_ubase[static_cast<size_t>(v)] + j);
        for (auto& cor : bm.corridors)
            for (int h = 0; h < 3; ++h) bm.block_vertices.push_back(cor.apex[static_cast<size_t>(h)]);
        for (size_t t = 1; t + 1 < bm.blocking0.size(); ++t) bm.block_vertices.push_back(bm.blocking0[t]);
        bm.block_vertices.push_back(bm.blocking1[1]);
    }
    for (int f = 0; f < nfaces; ++f)
        append_u(face_nf[static_cast<size_t>(f)], face_ubase[static_cast<size_t>(f)], edges, art.base_crossings);

    // grids: corner t of face f joins the face window t with the block window
    // of the corresponding corridor; the two windows face each other, so one
    // side is traversed in reverse
    for (int f = 0; f < nfaces; ++f) {
        auto& corners = face_corners[static_cast<size_t>(f)];
        int ncor = static_cast<int>(corners.size());
        for (int t = 0; t < ncor; ++t) {
            auto [v, i] = corners[static_cast<size_t>(t)];
            int block_window_start = 19 * i + kCorridorSlots;  // slot offset on U(v)
            int vb = block_ubase[static_cast<size_t>(v)];
            int fb = face_ubase[static_cast<size_t>(f)];
            int nf = face_nf[static_cast<size_t>(f)];
            for (int s = 0; s < 7; ++s) {
                int bw = vb + block_window_start + s;
                int fw = fb + ((t * 7 + s) % nf);
                edges.emplace_back(bw, fw);
            }
        }
    }
    art.g1_edges = static_cast<int>(edges.size());

    // --- pending paths -------------------------------------------------------
    auto corridor_of = [&](int v, int e) -> Corridor& {
        for (auto& cor : art.blocks[static_cast<size_t>(v)].corridors)
            if (cor.source_edge == e) return cor;
        throw std::logic_error("corridor lookup failed");
    };
    for (int e = 0; e < source.m(); ++e) {
        auto [v, w] = source.edges[static_cast<size_t>(e)];
        Corridor& cv = corridor_of(v, e);
        Corridor& cw = corridor_of(w, e);
        for (int h = 0; h < 3; ++h) {
            auto& path = art.pendings[static_cast<size_t>(e)].path[static_cast<size_t>(h)];
            path[0] = cv.apex[static_cast<size_t>(h)];
            path[3] = cw.apex[static_cast<size_t>(h)];
            auto& ids = art.pendings[static_cast<size_t>(e)].edges[static_cast<size_t>(h)];
            for (int s = 0; s < 3; ++s) {
                ids[static_cast<size_t>(s)] = static_cast<int>(edges.size());
                edges.emplace_back(path[static_cast<size_t>(s)], path[static_cast<size_t>(s + 1)]);
            }
        }
    }
    // visitors
    for (int v = 0; v < source.n; ++v)
        for (auto& cor : art.blocks[static_cast<size_t>(v)].corridors)
            for (int h = 0; h < 3; ++h) {
                int e0 = static_cast<int>(edges.size());
                edges.emplace_back(cor.s[static_cast<size_t>(h)], cor.vis_mid[static_cast<size_t>(h)]);
                edges.emplace_back(cor.vis_mid[static_cast<size_t>(h)], cor.t[static_cast<size_t>(h)]);
                if (h == 0) cor.visitor_edges_a = {e0, e0 + 1};
                if (h == 1) cor.visitor_edges_b = {e0, e0 + 1};
                if (h == 2) cor.visitor_edges_c = {e0, e0 + 1};
            }
    // selectors
    for (int v = 0; v < source.n; ++v) {
        BlockMeta& bm = art.blocks[static_cast<size_t>(v)];
        for (int h = 0; h < 3; ++h) {
            std::vector<int> seq;
            seq.push_back(bm.sel_alpha[static_cast<size_t>(h)]);
            for (int t : bm.sel_path[static_cast<size_t>(h)]) seq.push_back(t);
            seq.push_back(bm.sel_omega[static_cast<size_t>(h)]);
            bm.sel_path[static_cast<size_t>(h)] = seq;
            for (size_t s = 0; s + 1 < seq.size(); ++s) {
                bm.sel_edges[static_cast<size_t>(h)].push_back(static_cast<int>(edges.size()));
                edges.emplace_back(seq[s], seq[s + 1]);
            }
        }
    }

    art.gbar_base = build_graph(next_vertex, std::move(edges), false);
    art.gbar = art.gbar_base;
    return art;
}

namespace {

std::vector<std::pair<EdgeId, EdgeId>> witness_crossings(const ReductionArtifact& art, const Coloring& col) {
    const Graph& src = art.source;
    col.validate(src);
    for (int e = 0; e < src.m(); ++e) {
        auto [v, w] = src.edges[static_cast<size_t>(e)];
        if (col.color[static_cast<size_t>(v)] == col.color[static_cast<size_t>(w)]) {
            char h = static_cast<char>('a' + col.color[static_cast<size_t>(v)]);
            throw std::invalid_argument(
                std::string("improper coloring: the (") + h + ")-path of source edge " + std::to_string(v + 1) +
                "-" + std::to_string(w + 1) + " would be crossed from both sides");
        }
    }

    std::vector<std::pair<EdgeId, EdgeId>> M = art.base_crossings;
    auto add = [&M](int a, int b) { M.emplace_back(std::min(a, b), std::max(a, b)); };

    // visitors: the activated family's visitor crosses the pending path as it
    // leaves the tent; dormant visitors dive under the tent instead
    for (int v = 0; v < src.n; ++v) {
        const BlockMeta& bm = art.blocks[static_cast<size_t>(v)];
        for (auto& cor : bm.corridors) {
            auto& pend = art.pendings[static_cast<size_t>(cor.source_edge)];
            auto [a, b] = src.edges[static_cast<size_t>(cor.source_edge)];
            bool at_first = (a == v);
            for (int h = 0; h < 3; ++h) {
                if (col.color[static_cast<size_t>(v)] == h) {
                    int near_edge = pend.edges[static_cast<size_t>(h)][at_first ? 0 : 2];
                    add(cor.visitor_edge(h, 0), near_edge);
                } else {
                    add(cor.visitor_edge(h, 0), cor.tent_edge(h, 0));
                    add(cor.visitor_edge(h, 1), cor.tent_edge(h, 1));
                }
            }
        }
    }

    // sibling crossings inside every corridor: the three paths make a full
    // reversal, so the pairs (a,b), (a,c), (b,c) each cross once; slots avoid
    // whichever near edge carries a visitor crossing
    for (int e = 0; e < src.m(); ++e) {
        auto [v, w] = src.edges[static_cast<size_t>(e)];
        auto& pend = art.pendings[static_cast<size_t>(e)];
        // ordered sibling crossing list per path: X1=(a,b), X2=(a,c), X3=(b,c)
        // along each path from the v side
        auto alloc = [&](int h) {
            std::array<int, 2> slots{};  // edge offsets within the path for its two crossings
            bool fam_v = col.color[static_cast<size_t>(v)] == h;
            bool fam_w = col.color[static_cast<size_t>(w)] == h;
            if (fam_v)
                slots = {1, 2};  // family takes the near-v edge
            else if (fam_w)
                slots = {0, 1};  // family takes the near-w edge
            else
                slots = {0, 1};
            return slots;
        };
        auto sa = alloc(0), sb = alloc(1), sc = alloc(2);
        int ea0 = pend.edges[0][static_cast<size_t>(sa[0])], ea1 = pend.edges[0][static_cast<size_t>(sa[1])];
        int eb0 = pend.edges[1][static_cast<size_t>(sb[0])], eb1 = pend.edges[1][static_cast<size_t>(sb[1])];
        int ec0 = pend.edges[2][static_cast<size_t>(sc[0])], ec1 = pend.edges[2][static_cast<size_t>(sc[1])];
        add(ea0, eb0);  // X1 = (a x b), first crossing of both
        add(ea1, ec0);  // X2 = (a x c)
        add(eb1, ec1);  // X3 = (b x c)
    }

    // selectors: three lanes (a above b above c) crossing the zone left to
    // right, over the (0)-arch and the lower (1)-arch beyond it, landing at
    // omega_a, omega_b, omega_c in that order. The activated selector cruises
    // over the (0)-arch and passes through the (1)-arch; each dormant one
    // ducks under an apex door pair of the (0)-arch (the higher lane takes the
    // inner pair) and passes over the (1)-arch. Lane changes force a fixed,
    // parity-consistent set of selector/selector crossings per case; every
    // crossing sits on its own edge, so the whole block stays a 1-immersion.
    for (int v = 0; v < src.n; ++v) {
        const BlockMeta& bm = art.blocks[static_cast<size_t>(v)];
        int chi = col.color[static_cast<size_t>(v)];
        auto& A = bm.sel_edges[0];
        auto& B = bm.sel_edges[1];
        auto& C = bm.sel_edges[2];
        auto& b0 = bm.blocking0_edges;
        auto& b1 = bm.blocking1_edges;
        switch (chi) {
            case 0:  // a activated: b inner doors, c outer doors
                add(B[10], b0[1]);
                add(B[15], b0[2]);
                add(C[10], b0[0]);
                add(C[15], b0[3]);
                add(A[10], b1[0]);
                add(A[15], b1[1]);
                add(A[6], B[18]);   // a descends between the arches
                add(A[7], C[18]);
                add(B[20], C[19]);  // b lands through c's lane
                break;
            case 1:  // b activated: a inner doors, c outer doors
                add(A[10], b0[1]);
                add(A[15], b0[2]);
                add(C[10], b0[0]);
                add(C[15], b0[3]);
                add(B[10], b1[0]);
                add(B[15], b1[1]);
                add(A[6], B[6]);    // a's dive strokes through b's apex lane
                add(A[16], B[7]);
                add(B[8], C[18]);   // b descends between the arches
                add(A[20], B[18]);  // a lands through b's and c's lanes
                add(A[21], C[19]);
                break;
            default:  // c activated: a inner doors, b outer doors
                add(A[10], b0[1]);
                add(A[15], b0[2]);
                add(B[10], b0[0]);
                add(B[15], b0[3]);
                add(C[10], b1[0]);
                add(C[15], b1[1]);
                add(B[6], C[4]);    // both dives stroke through c's apex lane
                add(A[6], C[5]);
                add(A[16], C[6]);
                add(B[16], C[7]);
                add(A[20], B[18]);  // staircase landings
                add(A[21], C[18]);
                add(B[20], C[19]);
                break;
        }
    }
    return M;
}

}  // namespace

Immersion build_witness(const ReductionArtifact& art, const Coloring& col) {
    if (art.k != 1) throw std::invalid_argument("build_witness: use build_witness_k for k > 1 artifacts");
    auto M = witness_crossings(art, col);
    auto imm = make_immersion(art.gbar, M);
    if (!imm) throw std::logic_error("witness crossing set failed to embed");
    return *imm;
}

Coloring extract_coloring(const ReductionArtifact& art, const Immersion& imm) {
    if (!verify_ok(imm, 1)) throw std::invalid_argument("extract_coloring: immersion does not verify at k = 1");
    std::set<std::pair<int, int>> pairs(imm.crossings.begin(), imm.crossings.end());
    Coloring col;
    col.color.assign(static_cast<size_t>(art.source.n), -1);
    for (int v = 0; v < art.source.n; ++v) {
        const BlockMeta& bm = art.blocks[static_cast<size_t>(v)];
        std::set<int> b1(bm.blocking1_edges.begin(), bm.blocking1_edges.end());
        int activated = -1;
        for (int h = 0; h < 3; ++h) {
            bool hit = false;
            for (int se : bm.sel_edges[static_cast<size_t>(h)])
                for (int be : bm.blocking1_edges)
                    if (pairs.count(std::minmax(se, be))) hit = true;
            if (hit) {
                if (activated >= 0)
                    throw std::invalid_argument("extract_coloring: block " + std::to_string(v + 1) +
                                                " has several activated families");
                activated = h;
            }
        }
        if (activated < 0)
            throw std::invalid_argument("extract_coloring: block " + std::to_string(v + 1) +
                                        " has no activated family");
        col.color[static_cast<size_t>(v)] = activated;
    }
    return col;
}

ReductionArtifact build_reduction_k(const Graph& source, const RotationSystem& rot, int k) {
    if (k < 1) throw std::invalid_argument("build_reduction_k: k must be >= 1");
    ReductionArtifact art = build_reduction(source, rot);
    if (k == 1) return art;
    art.k = k;
    art.gbar = multiply_edges(art.gbar_base, k);
    return art;
}

Immersion build_witness_k(const ReductionArtifact& art, const Coloring& col) {
    if (art.k == 1) return build_witness(art, col);
    auto M = witness_crossings(art, col);
    int k = art.k;
    std::vector<std::pair<EdgeId, EdgeId>> lifted;
    lifted.reserve(M.size() * static_cast<size_t>(k) * static_cast<size_t>(k));
    for (auto& [e, f] : M)
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) lifted.emplace_back(k * e + i, k * f + j);
    auto imm = make_immersion(art.gbar, lifted);
    if (!imm) throw std::logic_error("k-lift witness failed to embed");
    return *imm;
}

std::string serialize_reduction_meta(const ReductionArtifact& art) {
    std::ostringstream out;
    out << "c reduction artifact: k=" << art.k << " source n=" << art.source.n << " m=" << art.source.m()
        << " gbar n=" << art.gbar.n << " m=" << art.gbar.m() << "\n";
    out << "c g1 vertices=" << art.g1_vertices << " edges=" << art.g1_edges << "\n";
    for (auto& bm : art.blocks) {
        out << "block " << (bm.source_vertex + 1) << " boundary";
        for (int x : bm.boundary_labeled) out << " " << (x + 1);
        out << "\n";
        out << "block " << (bm.source_vertex + 1) << " blocking0";
        for (int x : bm.blocking0) out << " " << (x + 1);
        out << "\nblock " << (bm.source_vertex + 1) << " blocking1";
        for (int x : bm.blocking1) out << " " << (x + 1);
        out << "\n";
        for (int h = 0; h < 3; ++h) {
            out << "block " << (bm.source_vertex + 1) << " family " << static_cast<char>('a' + h) << " path33";
            for (int x : bm.sel_path[static_cast<size_t>(h)]) out << " " << (x + 1);
            out << "\n";
        }
    }
    for (auto& p : art.pendings) {
        auto [v, w] = art.source.edges[static_cast<size_t>(p.source_edge)];
        for (int h = 0; h < 3; ++h) {
            out << "pending " << (v + 1) << "-" << (w + 1) << " " << static_cast<char>('a' + h);
            for (int x : p.path[static_cast<size_t>(h)]) out << " " << (x + 1);
            out << "\n";
        }
    }
    for (size_t f = 0; f < art.faces.size(); ++f) {
        out << "face " << (f + 1) << " corners";
        for (int v : art.faces[f].corner_vertices) out << " " << (v + 1);
        out << "\n";
    }
    return out.str();
}

}  // namespace onep
