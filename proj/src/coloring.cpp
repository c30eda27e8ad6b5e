#include "trispec/coloring.hpp"

#include <vector>

namespace trispec {

namespace {

struct ColorSearch {
    const Graph& g;
    int k;
    std::vector<int> color;          // -1 = uncolored
    std::vector<Bitset> used_by_nbr; // colors seen among neighbors, as bitmask rows over colors

    ColorSearch(const Graph& graph, int kk)
        : g(graph), k(kk), color(graph.n, -1), used_by_nbr(graph.n, Bitset(kk)) {}

    int pick_vertex() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g.n; ++v) {
            if (color[v] != -1) continue;
            int sat = used_by_nbr[v].count();
            int deg = g.adj[v].count();
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool solve(int colored, int max_used) {
        if (colored == g.n) return true;
        int v = pick_vertex();
        // first-use rule: at most one brand-new color may be opened here
        int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (used_by_nbr[v].test(c)) continue;
            color[v] = c;
            std::vector<int> touched;
            for (int u = g.adj[v].next(0); u != -1; u = g.adj[v].next(u + 1)) {
                if (!used_by_nbr[u].test(c)) {
                    used_by_nbr[u].set(c);
                    touched.push_back(u);
                }
            }
            if (solve(colored + 1, std::max(max_used, c))) return true;
            for (int u : touched) used_by_nbr[u].reset(c);
            color[v] = -1;
        }
        return false;
    }
};

}  // namespace

bool is_k_colorable(const Graph& g, int k) {
    if (g.n == 0) return true;
    if (k <= 0) return false;
    if (k >= g.n) return true;
    ColorSearch s(g, k);
    return s.solve(0, -1);
}

int chromatic_number(const Graph& g) {
    if (g.n == 0) return 0;
    int lb = g.edge_count() > 0 ? 2 : 1;
    for (int k = lb;; ++k)
        if (is_k_colorable(g, k)) return k;
}

}  // namespace trispec
