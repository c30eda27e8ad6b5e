#pragma once

#include <array>
#include <cstdint>

#include "trispec/graph.hpp"

namespace trispec {

// Canonical labeling is only guaranteed (and accepted) up to this order;
// larger inputs are rejected rather than silently slow.
constexpr int kCanonicalCap = 24;

// Fixed-size graph for the enumeration/canonicalization hot path.
struct SmallGraph {
    int n = 0;
    std::array<uint32_t, kCanonicalCap> row{};

    bool edge(int u, int v) const { return (row[u] >> v) & 1u; }
    void add_edge(int u, int v) {
        row[u] |= uint32_t(1) << v;
        row[v] |= uint32_t(1) << u;
    }
    int degree(int v) const { return __builtin_popcount(row[v]); }
    long long edge_count() const {
        long long t = 0;
        for (int v = 0; v < n; ++v) t += degree(v);
        return t / 2;
    }
    bool operator==(const SmallGraph& o) const {
        if (n != o.n) return false;
        for (int i = 0; i < n; ++i)
            if (row[i] != o.row[i]) return false;
        return true;
    }
};

SmallGraph to_small(const Graph& g);  // throws std::invalid_argument if n > cap
Graph from_small(const SmallGraph& g);
SmallGraph small_delete_vertex(const SmallGraph& g, int v);

bool small_is_connected(const SmallGraph& g);
bool small_is_bipartite(const SmallGraph& g);
bool small_is_triangle_free(const SmallGraph& g);

using ColorArray = std::array<uint8_t, kCanonicalCap>;

// Equitable refinement of the ordered partition given by `color`
// (cells numbered 0..ncolors-1 in partition order).  Sub-cells produced by a
// split keep their parent's relative position, so a vertex never leaves the
// span of its starting cell.
void refine_partition(const SmallGraph& g, ColorArray& color, int& ncolors);

// Degree-descending initial cells followed by equitable refinement.  The
// last cell is therefore a subset of the minimum-degree vertices.
void root_refinement(const SmallGraph& g, ColorArray& color, int& ncolors);

struct CanonLabeling {
    SmallGraph canon;   // relabeled graph; bit-identical across isomorphs
    ColorArray order;   // order[i] = original vertex placed at position i
    ColorArray orbit;   // union-find roots from discovered automorphisms;
                        // same root => provably same Aut-orbit (a refinement
                        // of the true orbit partition, never coarser)
};

CanonLabeling canonical_label(const SmallGraph& g);

// Isomorphism-invariant relabeling: two graphs are isomorphic iff their
// canonical forms are bit-identical.  Guaranteed for n <= kCanonicalCap.
Graph canonical_form(const Graph& g);

}  // namespace trispec
