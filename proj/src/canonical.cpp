#include "onep/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace onep {

namespace {

// Ordered partition of 0..n-1 into cells; cell index is the color.
struct Partition {
    std::vector<std::vector<int>> cells;
    std::vector<int> color_of;  // vertex -> cell index

    bool discrete() const {
        for (auto& c : cells)
            if (c.size() > 1) return false;
        return true;
    }
};

struct Refiner {
    int n;
    // adjacency with multiplicities: adj[v] = sorted (neighbor, mult)
    std::vector<std::vector<std::pair<int, int>>> adj;

    explicit Refiner(const Graph& g) : n(g.n), adj(static_cast<size_t>(g.n)) {
        std::map<std::pair<int, int>, int> mult;
        for (auto& [u, v] : g.edges) {
            auto key = std::minmax(u, v);
            mult[key]++;
        }
        for (auto& [key, c] : mult) {
            adj[static_cast<size_t>(key.first)].emplace_back(key.second, c);
            adj[static_cast<size_t>(key.second)].emplace_back(key.first, c);
        }
    }

    Partition initial() const {
        Partition p;
        p.cells.push_back(std::vector<int>());
        p.cells[0].reserve(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) p.cells[0].push_back(v);
        p.color_of.assign(static_cast<size_t>(n), 0);
        refine(p);
        return p;
    }

    // Signature of v against the current coloring: sorted (color, mult) pairs.
    std::vector<std::pair<int, int>> signature(const Partition& p, int v) const {
        std::map<int, int> acc;
        for (auto& [w, c] : adj[static_cast<size_t>(v)]) acc[p.color_of[static_cast<size_t>(w)]] += c;
        return std::vector<std::pair<int, int>>(acc.begin(), acc.end());
    }

    // 1-WL refinement to a stable ordered partition. Cell split order follows
    // sorted signatures, so the result is relabeling-invariant.
    void refine(Partition& p) const {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<std::vector<int>> next;
            next.reserve(p.cells.size());
            for (auto& cell : p.cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::map<std::vector<std::pair<int, int>>, std::vector<int>> groups;
                for (int v : cell) groups[signature(p, v)].push_back(v);
                if (groups.size() > 1) changed = true;
                for (auto& [sig, verts] : groups) next.push_back(verts);
            }
            p.cells = std::move(next);
            for (size_t i = 0; i < p.cells.size(); ++i)
                for (int v : p.cells[i]) p.color_of[static_cast<size_t>(v)] = static_cast<int>(i);
            if (static_cast<int>(p.cells.size()) == n) break;
        }
    }

};

struct CanonSearch {
    const Refiner& ref;
    const Graph& g;
    std::string best;
    std::vector<int> best_order;
    bool have_best = false;

    CanonSearch(const Refiner& r, const Graph& graph) : ref(r), g(graph) {}

    // Encode the graph under a discrete labeling: (n, flag, sorted edge rows).
    std::string encode_with_labels(const std::vector<int>& label) const {
        std::vector<std::tuple<int, int, int>> rows;  // (a, b, mult)
        std::map<std::pair<int, int>, int> mult;
        for (auto& [u, v] : g.edges) {
            int a = label[static_cast<size_t>(u)], b = label[static_cast<size_t>(v)];
            if (a > b) std::swap(a, b);
            mult[{a, b}]++;
        }
        std::string out;
        auto put32 = [&out](uint32_t x) {
            out.push_back(static_cast<char>(x >> 24));
            out.push_back(static_cast<char>(x >> 16));
            out.push_back(static_cast<char>(x >> 8));
            out.push_back(static_cast<char>(x));
        };
        put32(static_cast<uint32_t>(g.n));
        put32(static_cast<uint32_t>(g.multigraph ? 1 : 0));
        for (auto& [key, c] : mult) {
            put32(static_cast<uint32_t>(key.first));
            put32(static_cast<uint32_t>(key.second));
            put32(static_cast<uint32_t>(c));
        }
        return out;
    }

    void search(Partition p) {
        ref.refine(p);
        if (p.discrete()) {
            std::vector<int> label(static_cast<size_t>(g.n));
            std::vector<int> order(static_cast<size_t>(g.n));
            for (size_t i = 0; i < p.cells.size(); ++i) {
                label[static_cast<size_t>(p.cells[i][0])] = static_cast<int>(i);
                order[i] = p.cells[i][0];
            }
            std::string cert = encode_with_labels(label);
            if (!have_best || cert < best) {
                best = std::move(cert);
                best_order = std::move(order);
                have_best = true;
            }
            return;
        }
        // first smallest non-singleton cell
        size_t target = 0;
        size_t best_size = 0;
        for (size_t i = 0; i < p.cells.size(); ++i) {
            size_t s = p.cells[i].size();
            if (s > 1 && (best_size == 0 || s < best_size)) {
                best_size = s;
                target = i;
            }
        }
        std::vector<int> cell = p.cells[target];
        for (int v : cell) {
            Partition q;
            q.cells.reserve(p.cells.size() + 1);
            for (size_t i = 0; i < p.cells.size(); ++i) {
                if (i == target) {
                    q.cells.push_back({v});
                    std::vector<int> rest;
                    for (int w : p.cells[i])
                        if (w != v) rest.push_back(w);
                    q.cells.push_back(std::move(rest));
                } else {
                    q.cells.push_back(p.cells[i]);
                }
            }
            q.color_of.assign(static_cast<size_t>(g.n), 0);
            for (size_t i = 0; i < q.cells.size(); ++i)
                for (int w : q.cells[i]) q.color_of[static_cast<size_t>(w)] = static_cast<int>(i);
            search(std::move(q));
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    if (g.n == 0) return CanonicalForm{std::string("\0\0\0\0", 4)};
    Refiner ref(g);
    CanonSearch s(ref, g);
    s.search(ref.initial());
    return CanonicalForm{s.best};
}

std::vector<int> canonical_order(const Graph& g) {
    if (g.n == 0) return {};
    Refiner ref(g);
    CanonSearch s(ref, g);
    s.search(ref.initial());
    return s.best_order;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.m() != b.m()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace onep
