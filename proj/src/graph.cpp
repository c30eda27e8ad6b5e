#include "trispec/graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace trispec {

int Bitset::count() const {
    int c = 0;
    for (uint64_t x : w_) c += std::popcount(x);
    return c;
}

bool Bitset::any() const {
    for (uint64_t x : w_)
        if (x) return true;
    return false;
}

bool Bitset::intersects(const Bitset& o) const {
    size_t m = std::min(w_.size(), o.w_.size());
    for (size_t i = 0; i < m; ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

int Bitset::next(int from) const {
    if (from >= nbits_) return -1;
    int wi = from >> 6;
    uint64_t cur = w_[wi] & (~uint64_t(0) << (from & 63));
    while (true) {
        if (cur) {
            int pos = (wi << 6) + std::countr_zero(cur);
            return pos < nbits_ ? pos : -1;
        }
        if (++wi >= static_cast<int>(w_.size())) return -1;
        cur = w_[wi];
    }
}

void Graph::add_edge(int u, int v) {
    adj[u].set(v);
    adj[v].set(u);
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (int v = 0; v < n; ++v) twice += adj[v].count();
    return twice / 2;
}

Graph graph_from_edges(const EdgeList& e) {
    Graph g(e.n);
    for (const auto& [u, v] : e.edges) {
        std::string pair = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
        if (u < 0 || v < 0 || u >= e.n || v >= e.n)
            throw std::invalid_argument("graph_from_edges: endpoint out of range in " + pair);
        if (u == v)
            throw std::invalid_argument("graph_from_edges: loop " + pair);
        if (g.has_edge(u, v))
            throw std::invalid_argument("graph_from_edges: duplicate edge " + pair);
        g.add_edge(u, v);
    }
    return g;
}

bool is_triangle_free(const Graph& g) {
    for (int u = 0; u < g.n; ++u)
        for (int v = g.adj[u].next(u + 1); v != -1; v = g.adj[u].next(v + 1))
            if (g.adj[u].intersects(g.adj[v])) return false;
    return true;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        comps.emplace_back();
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comps.back().push_back(u);
            for (int v = g.adj[u].next(0); v != -1; v = g.adj[u].next(v + 1)) {
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
    }
    return comps;
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    return connected_components(g).size() == 1;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> color(g.n, -1);
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = g.adj[u].next(0); v != -1; v = g.adj[u].next(v + 1)) {
                if (color[v] == -1) {
                    color[v] = color[u] ^ 1;
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    Graph h(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph delete_vertex(const Graph& g, int v) {
    std::vector<int> keep;
    keep.reserve(g.n - 1);
    for (int u = 0; u < g.n; ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, keep);
}

}  // namespace trispec
