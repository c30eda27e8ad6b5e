#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace trispec {

// Growable bit vector used for adjacency rows; graphs are not capped at
// machine-word order.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

    int size() const { return nbits_; }
    int count() const;
    bool any() const;
    bool intersects(const Bitset& o) const;

    // Index of the first set bit at position >= from, or -1.
    int next(int from) const;

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

    const std::vector<uint64_t>& words() const { return w_; }

private:
    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

// Undirected simple graph: order plus one adjacency row per vertex.
// Symmetric, loop-free; immutable by convention once built.
struct Graph {
    int n = 0;
    std::vector<Bitset> adj;

    Graph() = default;
    explicit Graph(int order) : n(order), adj(order, Bitset(order)) {}

    bool has_edge(int u, int v) const { return adj[u].test(v); }
    void add_edge(int u, int v);
    int degree(int v) const { return adj[v].count(); }
    long long edge_count() const;

    bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }
};

struct EdgeList {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

// Throws std::invalid_argument naming the offending pair on out-of-range
// endpoints, loops, or duplicates.
Graph graph_from_edges(const EdgeList& e);

// Bitwise row-intersection scan over the edges.
bool is_triangle_free(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// Vertex sets of the connected components, in order of smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);
Graph delete_vertex(const Graph& g, int v);

}  // namespace trispec
