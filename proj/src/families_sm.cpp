#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "onep/canonical.hpp"
#include "onep/families.hpp"

namespace onep {

void SmLambda::validate() const {
    if (m < 4) throw std::invalid_argument("S_m(lambda): m must be >= 4");
    if (static_cast<int>(lambda.size()) != 12 * m - 2)
        throw std::invalid_argument("S_m(lambda): lambda must have 12m-2 entries");
    for (long long v : lambda)
        if (v < 0) throw std::invalid_argument("S_m(lambda): lambda entries must be nonnegative");
}

long long SmLambda::total() const { return std::accumulate(lambda.begin(), lambda.end(), 0LL); }

SmResult gen_S_m_lambda(const SmLambda& spec) {
    spec.validate();
    const int m = spec.m;
    const int N = 12 * m - 2;
    const long long n = spec.total();

    SmInfo info;
    info.m = m;
    info.n = n;

    // fixed part: rings b_i(x) = i*N + x, mids mid_i(x), central path internals
    auto b = [N](int i, int x) { return i * N + ((x % N) + N) % N; };
    auto mid = [N, m](int i, int x) { return (m + 1) * N + (i - 1) * N + ((x % N) + N) % N; };
    const int paths = 6 * m - 1;
    const int inner = 6 * m - 4;  // 2-valent vertices per central path
    const int central_base = (2 * m + 1) * N;
    int next_vertex = central_base + paths * inner;

    // lambda slices: per position x, n_x slices of 5 new vertices
    // (beta on B_{m-2}, B_{m-1}, B_m and the two mids)
    struct Slice {
        int b2, b1, b0, mu1, mu0;
    };
    std::vector<std::vector<Slice>> slices(static_cast<size_t>(N));
    for (int x = 0; x < N; ++x)
        for (long long j = 0; j < spec.lambda[static_cast<size_t>(x)]; ++j) {
            Slice s{next_vertex, next_vertex + 1, next_vertex + 2, next_vertex + 3, next_vertex + 4};
            next_vertex += 5;
            slices[static_cast<size_t>(x)].push_back(s);
        }

    std::vector<std::pair<int, int>> edges;
    auto add = [&edges](int u, int v) {
        edges.emplace_back(u, v);
        return static_cast<int>(edges.size()) - 1;
    };

    // ring edges; the three outer rings thread through the inserted slices
    info.rings.resize(static_cast<size_t>(m + 1));
    for (int i = 0; i <= m; ++i) {
        auto& ring = info.rings[static_cast<size_t>(i)];
        for (int x = 0; x < N; ++x) {
            ring.push_back(b(i, x));
            int prev = b(i, x);
            if (i >= m - 2) {
                for (auto& s : slices[static_cast<size_t>(x)]) {
                    int nv = (i == m - 2) ? s.b2 : (i == m - 1) ? s.b1 : s.b0;
                    add(prev, nv);
                    ring.push_back(nv);
                    prev = nv;
                }
            }
            add(prev, b(i, x + 1));
        }
    }

    // radial edges: every mid hangs from two consecutive vertices of the ring
    // below and one of the ring above; types 2i-1 / 2i
    for (int i = 1; i <= m; ++i) {
        for (int x = 0; x < N; ++x) {
            info.edge_type[add(b(i - 1, x), mid(i, x))] = 2 * i - 1;
            if (i == m - 1 && !slices[static_cast<size_t>(x)].empty()) {
                // the second-down edge lands on the first inserted slice
                info.edge_type[add(slices[static_cast<size_t>(x)][0].b2, mid(i, x))] = 2 * i - 1;
            } else {
                info.edge_type[add(b(i - 1, x + 1), mid(i, x))] = 2 * i - 1;
            }
            info.edge_type[add(mid(i, x), b(i, x))] = 2 * i;
        }
    }

    // slice radial edges
    for (int x = 0; x < N; ++x) {
        auto& sl = slices[static_cast<size_t>(x)];
        for (size_t j = 0; j < sl.size(); ++j) {
            int next_b2 = (j + 1 < sl.size()) ? sl[j + 1].b2 : b(m - 2, x + 1);
            info.edge_type[add(sl[j].b2, sl[j].mu1)] = 2 * m - 3;
            info.edge_type[add(sl[j].mu1, next_b2)] = 2 * m - 3;
            info.edge_type[add(sl[j].mu1, sl[j].b1)] = 2 * m - 2;
            info.edge_type[add(sl[j].b1, sl[j].mu0)] = 2 * m - 1;
            info.edge_type[add(sl[j].mu0, sl[j].b0)] = 2 * m;
        }
    }

    // central paths between opposite central vertices
    for (int p = 0; p < paths; ++p) {
        std::vector<int> path;
        path.push_back(b(0, p));
        int base = central_base + p * inner;
        for (int k = 0; k < inner; ++k) {
            int v = base + k;
            add(path.back(), v);
            path.push_back(v);
        }
        add(path.back(), b(0, p + paths));
        path.push_back(b(0, p + paths));
        info.central_paths.push_back(std::move(path));
    }
    for (int x = 0; x < N; ++x) info.central_vertices.push_back(b(0, x));

    SmResult out;
    out.graph = build_graph(next_vertex, std::move(edges));
    out.info = std::move(info);
    return out;
}

SmResult gen_S_m(int m) {
    SmLambda spec;
    spec.m = m;
    spec.lambda.assign(static_cast<size_t>(12 * m - 2), 0);
    return gen_S_m_lambda(spec);
}

// --- counting ----------------------------------------------------------------

namespace {

// decimal bignum, base 1e9
struct Big {
    std::vector<uint32_t> d{0};  // little endian

    static Big from(long long v) {
        Big b;
        b.d.clear();
        if (v == 0) b.d.push_back(0);
        while (v > 0) {
            b.d.push_back(static_cast<uint32_t>(v % 1000000000));
            v /= 1000000000;
        }
        return b;
    }
    void mul(long long k) {
        unsigned long long carry = 0;
        for (auto& x : d) {
            unsigned long long cur = static_cast<unsigned long long>(x) * static_cast<unsigned long long>(k) + carry;
            x = static_cast<uint32_t>(cur % 1000000000);
            carry = cur / 1000000000;
        }
        while (carry) {
            d.push_back(static_cast<uint32_t>(carry % 1000000000));
            carry /= 1000000000;
        }
    }
    void div(long long k) {  // exact division expected
        unsigned long long rem = 0;
        for (size_t i = d.size(); i-- > 0;) {
            unsigned long long cur = rem * 1000000000ULL + d[i];
            d[i] = static_cast<uint32_t>(cur / static_cast<unsigned long long>(k));
            rem = cur % static_cast<unsigned long long>(k);
        }
        while (d.size() > 1 && d.back() == 0) d.pop_back();
    }
    std::string str() const {
        std::string out = std::to_string(d.back());
        for (size_t i = d.size() - 1; i-- > 0;) {
            std::string block = std::to_string(d[i]);
            out += std::string(9 - block.size(), '0') + block;
        }
        return out;
    }
};

}  // namespace

std::string count_phi(int m, long long n) {
    if (m < 4) throw std::invalid_argument("count_phi: m must be >= 4");
    if (n < 0) throw std::invalid_argument("count_phi: n must be >= 0");
    long long k = 12LL * m - 3;  // choose k from n+k
    Big acc = Big::from(1);
    for (long long i = 1; i <= k; ++i) {
        acc.mul(n + i);
        acc.div(i);
    }
    return acc.str();
}

namespace {

std::vector<long long> rotate_tuple(const std::vector<long long>& t, int s) {
    int K = static_cast<int>(t.size());
    std::vector<long long> out(t.size());
    for (int x = 0; x < K; ++x) out[static_cast<size_t>((x + s) % K)] = t[static_cast<size_t>(x)];
    return out;
}

std::vector<long long> reflect_tuple(const std::vector<long long>& t) {
    int K = static_cast<int>(t.size());
    std::vector<long long> out(t.size());
    for (int x = 0; x < K; ++x) out[static_cast<size_t>((K - 1 - x))] = t[static_cast<size_t>(x)];
    return out;
}

bool is_canonical_necklace(const std::vector<long long>& t) {
    int K = static_cast<int>(t.size());
    std::vector<long long> r = t;
    for (int pass = 0; pass < 2; ++pass) {
        for (int s = 0; s < K; ++s) {
            if (rotate_tuple(r, s) < t) return false;
        }
        r = reflect_tuple(t);
    }
    return true;
}

// enumerate all tuples of K nonnegatives summing to n, lexicographically
void enumerate_compositions(int K, int n, std::vector<long long>& cur,
                            const std::function<void(const std::vector<long long>&)>& sink) {
    if (K == 1) {
        cur.push_back(n);
        sink(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= n; ++v) {
        cur.push_back(v);
        enumerate_compositions(K - 1, n - v, cur, sink);
        cur.pop_back();
    }
}

}  // namespace

SmEnumeration enumerate_nonisomorphic_S(int m, int n, long long cap) {
    if (m < 4 || n < 0 || cap < 0) throw std::invalid_argument("enumerate_nonisomorphic_S: bad arguments");
    const int K = 12 * m - 2;
    SmEnumeration res;
    std::set<std::string> forms;
    std::vector<long long> cur;
    enumerate_compositions(K, n, cur, [&](const std::vector<long long>& t) {
        if (!is_canonical_necklace(t)) return;
        res.orbit_count++;
        if (res.generated >= cap) return;
        res.generated++;
        SmLambda spec;
        spec.m = m;
        spec.lambda = t;
        forms.insert(canonical_form(gen_S_m_lambda(spec).graph).certificate);
    });
    res.distinct_forms = static_cast<long long>(forms.size());
    return res;
}

}  // namespace onep
