#include "trispec/canonical.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <vector>

namespace trispec {

SmallGraph to_small(const Graph& g) {
    if (g.n > kCanonicalCap)
        throw std::invalid_argument("canonical machinery capped at n <= " +
                                    std::to_string(kCanonicalCap) + ", got n = " +
                                    std::to_string(g.n));
    SmallGraph s;
    s.n = g.n;
    for (int v = 0; v < g.n; ++v)
        for (int u = g.adj[v].next(0); u != -1; u = g.adj[v].next(u + 1)) s.row[v] |= uint32_t(1) << u;
    return s;
}

Graph from_small(const SmallGraph& s) {
    Graph g(s.n);
    for (int v = 0; v < s.n; ++v)
        for (uint32_t m = s.row[v]; m; m &= m - 1) {
            int u = __builtin_ctz(m);
            if (u > v) g.add_edge(v, u);
        }
    return g;
}

SmallGraph small_delete_vertex(const SmallGraph& g, int v) {
    SmallGraph h;
    h.n = g.n - 1;
    const uint32_t low = (uint32_t(1) << v) - 1;
    int j = 0;
    for (int i = 0; i < g.n; ++i) {
        if (i == v) continue;
        uint32_t r = g.row[i];
        h.row[j++] = (r & low) | ((r >> 1) & ~low);
    }
    return h;
}

bool small_is_connected(const SmallGraph& g) {
    if (g.n <= 1) return true;
    uint32_t seen = 1, frontier = 1;
    while (frontier) {
        uint32_t next = 0;
        for (uint32_t m = frontier; m; m &= m - 1) next |= g.row[__builtin_ctz(m)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (uint32_t(1) << g.n) - 1;
}

bool small_is_triangle_free(const SmallGraph& g) {
    for (int u = 0; u < g.n; ++u)
        for (uint32_t m = g.row[u] & ~((uint32_t(1) << (u + 1)) - 1); m; m &= m - 1)
            if (g.row[u] & g.row[__builtin_ctz(m)]) return false;
    return true;
}

bool small_is_bipartite(const SmallGraph& g) {
    uint32_t side[2] = {0, 0};
    uint32_t all = (g.n >= 32) ? ~uint32_t(0) : (uint32_t(1) << g.n) - 1;
    uint32_t seen = 0;
    while (seen != all) {
        uint32_t start = uint32_t(1) << __builtin_ctz(~seen & all);
        uint32_t frontier = start;
        int parity = 0;
        side[0] |= start;
        seen |= start;
        while (frontier) {
            uint32_t next = 0;
            for (uint32_t m = frontier; m; m &= m - 1) next |= g.row[__builtin_ctz(m)];
            if (next & side[parity]) return false;
            frontier = next & ~seen;
            side[parity ^ 1] |= frontier;
            seen |= frontier;
            parity ^= 1;
        }
    }
    return true;
}

void refine_partition(const SmallGraph& g, ColorArray& color, int& ncolors) {
    const int n = g.n;
    // signature of v: (current color, count of neighbors in each cell)
    struct Sig {
        uint8_t key[kCanonicalCap + 1];
    };
    Sig sig[kCanonicalCap];
    int idx[kCanonicalCap];
    while (true) {
        for (int v = 0; v < n; ++v) {
            std::memset(sig[v].key, 0, sizeof sig[v].key);
            sig[v].key[0] = color[v];
            for (uint32_t m = g.row[v]; m; m &= m - 1) sig[v].key[1 + color[__builtin_ctz(m)]]++;
        }
        for (int v = 0; v < n; ++v) idx[v] = v;
        std::sort(idx, idx + n, [&](int a, int b) {
            int c = std::memcmp(sig[a].key, sig[b].key, 1 + ncolors);
            if (c != 0) return c < 0;
            return a < b;  // stable within identical signatures
        });
        ColorArray fresh{};
        int nc = 0;
        fresh[idx[0]] = 0;
        for (int i = 1; i < n; ++i) {
            if (std::memcmp(sig[idx[i]].key, sig[idx[i - 1]].key, 1 + ncolors) != 0) ++nc;
            fresh[idx[i]] = static_cast<uint8_t>(nc);
        }
        ++nc;
        if (nc == ncolors) return;  // stable
        color = fresh;
        ncolors = nc;
        if (ncolors == n) return;
    }
}

void root_refinement(const SmallGraph& g, ColorArray& color, int& ncolors) {
    const int n = g.n;
    // initial cells: degree descending
    int degs[kCanonicalCap];
    std::vector<int> uniq;
    for (int v = 0; v < n; ++v) degs[v] = g.degree(v);
    uniq.assign(degs, degs + n);
    std::sort(uniq.begin(), uniq.end(), std::greater<int>());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int v = 0; v < n; ++v)
        color[v] = static_cast<uint8_t>(std::lower_bound(uniq.begin(), uniq.end(), degs[v],
                                                         std::greater<int>()) -
                                        uniq.begin());
    ncolors = static_cast<int>(uniq.size());
    if (n == 0) {
        ncolors = 0;
        return;
    }
    refine_partition(g, color, ncolors);
}

namespace {

struct UnionFind {
    int parent[kCanonicalCap];
    void reset(int n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

struct Searcher {
    const SmallGraph& g;
    int n;
    bool have_best = false;
    std::array<uint32_t, kCanonicalCap> best_rows{};
    ColorArray best_order{};
    std::vector<ColorArray> autos;  // discovered automorphisms, old -> old
    std::vector<uint8_t> path;      // individualized vertices on the current branch
    long long nodes = 0;

    explicit Searcher(const SmallGraph& graph) : g(graph), n(graph.n) {}

    void relabel(const ColorArray& order, std::array<uint32_t, kCanonicalCap>& rows) const {
        uint8_t pos[kCanonicalCap];
        for (int i = 0; i < n; ++i) pos[order[i]] = static_cast<uint8_t>(i);
        for (int i = 0; i < n; ++i) {
            uint32_t r = 0;
            for (uint32_t m = g.row[order[i]]; m; m &= m - 1) r |= uint32_t(1) << pos[__builtin_ctz(m)];
            rows[i] = r;
        }
    }

    static int compare_rows(const std::array<uint32_t, kCanonicalCap>& a,
                            const std::array<uint32_t, kCanonicalCap>& b, int n) {
        for (int i = 0; i < n; ++i) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    bool is_automorphism(const ColorArray& sigma) const {
        for (int v = 0; v < n; ++v) {
            uint32_t mapped = 0;
            for (uint32_t m = g.row[v]; m; m &= m - 1) mapped |= uint32_t(1) << sigma[__builtin_ctz(m)];
            if (mapped != g.row[sigma[v]]) return false;
        }
        return true;
    }

    void leaf(const ColorArray& color) {
        ColorArray order{};
        for (int v = 0; v < n; ++v) order[color[v]] = static_cast<uint8_t>(v);
        std::array<uint32_t, kCanonicalCap> rows;
        relabel(order, rows);
        if (!have_best) {
            have_best = true;
            best_rows = rows;
            best_order = order;
            return;
        }
        int cmp = compare_rows(rows, best_rows, n);
        if (cmp > 0) {
            best_rows = rows;
            best_order = order;
        } else if (cmp == 0) {
            ColorArray sigma{};
            for (int i = 0; i < n; ++i) sigma[order[i]] = best_order[i];
            if (is_automorphism(sigma)) autos.push_back(sigma);
        }
    }

    bool fixes_path(const ColorArray& sigma) const {
        for (uint8_t p : path)
            if (sigma[p] != p) return false;
        return true;
    }

    void dfs(ColorArray color, int ncolors) {
        if (++nodes > 50'000'000)
            throw std::runtime_error("canonical_label: search did not close (pathological input)");
        refine_partition(g, color, ncolors);
        if (ncolors == n) {
            leaf(color);
            return;
        }
        // target: first non-singleton cell
        int cell = -1;
        int count[kCanonicalCap] = {0};
        for (int v = 0; v < n; ++v) count[color[v]]++;
        for (int c = 0; c < ncolors; ++c)
            if (count[c] >= 2) {
                cell = c;
                break;
            }
        UnionFind uf;
        uf.reset(n);
        size_t watermark = 0;
        auto absorb = [&]() {
            for (; watermark < autos.size(); ++watermark)
                if (fixes_path(autos[watermark]))
                    for (int v = 0; v < n; ++v) uf.unite(v, autos[watermark][v]);
        };
        absorb();
        std::vector<uint8_t> tried;
        for (int v = 0; v < n; ++v) {
            if (color[v] != cell) continue;
            bool skip = false;
            for (uint8_t u : tried)
                if (uf.find(u) == uf.find(v)) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            tried.push_back(static_cast<uint8_t>(v));
            // individualize: v becomes the sole first element of its cell
            ColorArray child{};
            for (int u = 0; u < n; ++u) {
                uint8_t c = color[u];
                child[u] = static_cast<uint8_t>(c > cell || (c == cell && u != v) ? c + 1 : c);
            }
            path.push_back(static_cast<uint8_t>(v));
            dfs(child, ncolors + 1);
            path.pop_back();
            absorb();
        }
    }
};

}  // namespace

CanonLabeling canonical_label(const SmallGraph& g) {
    CanonLabeling out;
    out.canon.n = g.n;
    if (g.n == 0) {
        for (int i = 0; i < kCanonicalCap; ++i) out.orbit[i] = static_cast<uint8_t>(i);
        return out;
    }
    Searcher s(g);
    ColorArray color{};
    int ncolors = 0;
    root_refinement(g, color, ncolors);
    s.dfs(color, ncolors);
    out.canon.n = g.n;
    for (int i = 0; i < g.n; ++i) out.canon.row[i] = s.best_rows[i];
    out.order = s.best_order;
    UnionFind uf;
    uf.reset(g.n);
    for (const auto& sigma : s.autos)
        for (int v = 0; v < g.n; ++v) uf.unite(v, sigma[v]);
    for (int v = 0; v < g.n; ++v) out.orbit[v] = static_cast<uint8_t>(uf.find(v));
    return out;
}

Graph canonical_form(const Graph& g) {
    return from_small(canonical_label(to_small(g)).canon);
}

}  // namespace trispec
