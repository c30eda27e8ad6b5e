#include "trispec/constructions.hpp"

#include <array>
#include <stdexcept>

namespace trispec {

namespace {

// F1, Figure 1 edge list under the frozen labeling.
constexpr std::array<std::pair<int, int>, 20> kF1Edges{{
    {0, 5},   // v13 u1
    {2, 5},   // v1  u1
    {1, 6},   // v23 u2
    {3, 6},   // v2  u2
    {5, 6},   // u1  u2
    {5, 8},   // u1  w13
    {6, 9},   // u2  w23
    {0, 10},  // v13 y
    {1, 10},  // v23 y
    {2, 10},  // v1  y
    {3, 10},  // v2  y
    {4, 10},  // x   y
    {4, 8},   // x   w13
    {4, 9},   // x   w23
    {0, 7},   // v13 u3
    {1, 7},   // v23 u3
    {7, 8},   // u3  w13
    {7, 9},   // u3  w23
    {3, 8},   // v2  w13
    {2, 9},   // v1  w23
}};

// F2, Figure 3 left: 0..10 = v13, v23, v2, x, u1, u2, u3, w13, w23, w2, y.
constexpr std::array<std::pair<int, int>, 20> kF2Edges{{
    {4, 5},   // u1  u2
    {0, 4},   // v13 u1
    {4, 7},   // u1  w13
    {1, 5},   // v23 u2
    {5, 8},   // u2  w23
    {2, 5},   // v2  u2
    {5, 9},   // u2  w2
    {0, 6},   // v13 u3
    {6, 7},   // u3  w13
    {6, 8},   // u3  w23
    {1, 6},   // v23 u3
    {2, 7},   // v2  w13
    {3, 7},   // x   w13
    {0, 9},   // v13 w2
    {0, 10},  // v13 y
    {2, 10},  // v2  y
    {3, 9},   // x   w2
    {3, 10},  // x   y
    {1, 10},  // v23 y
    {3, 8},   // x   w23
}};

// F3, Figure 3 right: 0..10 = v13, v23, v1, w2, x, u1, u2, u3, w13, w23, y.
constexpr std::array<std::pair<int, int>, 21> kF3Edges{{
    {0, 5},   // v13 u1
    {2, 5},   // v1  u1
    {1, 6},   // v23 u2
    {3, 6},   // w2  u2
    {5, 6},   // u1  u2
    {5, 8},   // u1  w13
    {6, 9},   // u2  w23
    {0, 10},  // v13 y
    {1, 10},  // v23 y
    {2, 10},  // v1  y
    {3, 4},   // w2  x
    {4, 10},  // x   y
    {4, 8},   // x   w13
    {4, 9},   // x   w23
    {0, 7},   // v13 u3
    {1, 7},   // v23 u3
    {7, 8},   // u3  w13
    {7, 9},   // u3  w23
    {0, 3},   // v13 w2
    {2, 9},   // v1  w23
    {2, 3},   // v1  w2
}};

template <size_t N>
Graph build11(const std::array<std::pair<int, int>, N>& edges) {
    EdgeList e;
    e.n = 11;
    for (auto [u, v] : edges) e.edges.emplace_back(std::min(u, v), std::max(u, v));
    return graph_from_edges(e);
}

BlowupSpec blow_xy(const Graph& base, int xi, int yi, long long s, long long t) {
    if (t < 1) throw std::invalid_argument("blow-up: empty hub class (t >= 1 required)");
    if (s < 0) throw std::invalid_argument("blow-up: negative class size");
    BlowupSpec spec;
    spec.base = base;
    spec.sizes.assign(base.n, 1);
    spec.sizes[xi] = s;
    spec.sizes[yi] = t;
    return spec;
}

}  // namespace

Graph grotzsch() { return build11(kF1Edges); }
Graph f2_base() { return build11(kF2Edges); }
Graph f3_base() { return build11(kF3Edges); }

BlowupSpec f1_st(long long s, long long t) { return blow_xy(grotzsch(), kF1VertexX, kF1VertexY, s, t); }
BlowupSpec f2_st(long long s, long long t) { return blow_xy(f2_base(), kF2VertexX, kF2VertexY, s, t); }
BlowupSpec f3_st(long long s, long long t) { return blow_xy(f3_base(), kF3VertexX, kF3VertexY, s, t); }

BlowupSpec f1_n(long long n, const std::array<long long, 3>& split, bool swapped) {
    if (n < 11) throw std::invalid_argument("f1_n: n >= 11 required");
    long long lo = (n - 7) / 2, hi = (n - 7) - lo;
    long long want = swapped ? hi : lo;
    long long w = swapped ? lo : hi;
    long long sum = split[0] + split[1] + split[2];
    if (sum != want)
        throw std::invalid_argument("f1_n: split must sum to " + std::to_string(want) +
                                    (swapped ? " (swapped variant)" : ""));
    for (long long part : split)
        if (part < 1) throw std::invalid_argument("f1_n: each split entry must be >= 1");
    BlowupSpec spec;
    spec.base = grotzsch();
    spec.sizes.assign(11, 1);
    spec.sizes[0] = split[0];  // v13
    spec.sizes[2] = split[1];  // v1
    spec.sizes[1] = split[2];  // v23
    spec.sizes[kF1VertexY] = w;
    return spec;
}

Graph turan(int n, int r) {
    if (n < 0) throw std::invalid_argument("turan: negative order");
    if (r < 1) {
        if (n == 0 && r == 0) return Graph(0);
        throw std::invalid_argument("turan: r >= 1 required for n > 0");
    }
    Graph g(n);
    std::vector<int> part(n);
    for (int v = 0; v < n; ++v) part[v] = v % r;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part[u] != part[v]) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph sk_ab(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("sk_ab: both parts must be nonempty");
    // 0..a-1 one side, a..a+b-1 other side, a+b the subdivision vertex on the
    // former edge (0, a)
    Graph g(a + b + 1);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            if (!(u == 0 && v == 0)) g.add_edge(u, a + v);
    g.add_edge(0, a + b);
    g.add_edge(a, a + b);
    return g;
}

Graph kab_circ_k3(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("kab_circ_k3: both parts must be nonempty");
    // vertex a is the identified vertex (in the size-b part); a+b and a+b+1
    // complete the triangle
    Graph g(a + b + 2);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    g.add_edge(a, a + b);
    g.add_edge(a, a + b + 1);
    g.add_edge(a + b, a + b + 1);
    return g;
}

}  // namespace trispec
