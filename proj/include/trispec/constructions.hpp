#pragma once

#include "trispec/blowup.hpp"
#include "trispec/graph.hpp"

namespace trispec {

// Fixed vertex labelings (frozen; quotient rows and tests depend on them).
//
// F1 (Grotzsch):  0..10 = v13, v23, v1, v2, x, u1, u2, u3, w13, w23, y
// F2:             0..10 = v13, v23, v2, x, u1, u2, u3, w13, w23, w2, y
// F3:             0..10 = v13, v23, v1, w2, x, u1, u2, u3, w13, w23, y
//
// The transcribed F2/F3 edge lists also ship as data/f2_edges.txt and
// data/f3_edges.txt; a test checks the constants against those files.
constexpr int kF1VertexX = 4;
constexpr int kF1VertexY = 10;
constexpr int kF2VertexX = 3;
constexpr int kF2VertexY = 10;
constexpr int kF3VertexX = 4;
constexpr int kF3VertexY = 10;

// The smallest triangle-free 4-chromatic graph; 11 vertices, 20 edges.
Graph grotzsch();

// 11-vertex base graphs of the two other blow-up families; 20 and 21 edges.
Graph f2_base();
Graph f3_base();

// Blow-up of F1 at x and y by independent sets of sizes s and t.  s = 0 is
// allowed (the class is dropped); t = 0 would disconnect the hub and is
// rejected.
BlowupSpec f1_st(long long s, long long t);

// Blow-up of F1 at v13, v1, v23 (sizes `split`) and y (size n minus the
// rest).  The split must consist of positive parts summing to
// floor((n-7)/2), or ceil((n-7)/2) when `swapped` is set.
BlowupSpec f1_n(long long n, const std::array<long long, 3>& split, bool swapped = false);

BlowupSpec f2_st(long long s, long long t);
BlowupSpec f3_st(long long s, long long t);

// Complete n-vertex r-partite graph with part sizes as equal as possible.
Graph turan(int n, int r);
Graph complete_bipartite(int a, int b);

// K_{a,b} with one edge subdivided: a+b+1 vertices, ab+1 edges.
Graph sk_ab(int a, int b);

// K_{a,b} with a vertex of the size-b part identified with a K3 vertex:
// a+b+2 vertices, ab+3 edges.
Graph kab_circ_k3(int a, int b);

}  // namespace trispec
