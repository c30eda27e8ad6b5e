#pragma once

#include <vector>

#include "trispec/common.hpp"
#include "trispec/graph.hpp"

namespace trispec {

// Independent-set blow-up: one class per base vertex, classes joined
// completely iff the base vertices are adjacent.  Size-0 classes are
// dropped on expansion.
struct BlowupSpec {
    Graph base;
    std::vector<long long> sizes;

    long long order() const {
        long long t = 0;
        for (long long s : sizes) t += s;
        return t;
    }
};

Graph expand(const BlowupSpec& spec);

// Equitable-partition divisor matrix of a blow-up: entry (i,j) is sizes[j]
// when base vertices i,j are adjacent, else 0.  Its Perron root equals the
// spectral radius of the expanded graph (verified by property test, not
// assumed).
struct QuotientMatrix {
    int dim = 0;
    std::vector<Rat> entries;  // row-major
    std::vector<long long> class_sizes;

    const Rat& at(int i, int j) const { return entries[static_cast<size_t>(i) * dim + j]; }
};

// Requires the base restricted to retained (size > 0) classes to be
// connected, otherwise the Perron root need not be simple.
QuotientMatrix quotient_matrix(const BlowupSpec& spec);

// Fraction-free (Bareiss) determinant of an integer matrix.
Int bareiss_det(std::vector<Int> m, int dim);

// g(x,t) = det((x + n/2) I - B(n,t)) where B is the 11x11 divisor matrix of
// the Grotzsch blow-up with class sizes (n-11-t)/2 at x and (n-7+t)/2 at y.
// Exact; requires n-11-t even and >= 0.  |t| > 23 is outside the range the
// comparison lemma uses; such calls succeed but set *large_t.
Rat g_eval(long long n, long long t, const Rat& x, bool* large_t = nullptr);

// Interpolates n -> g(x,t) exactly from 13 admissible nodes (smallest
// admissible n >= 30, matching parity) and checks the n^10 coefficient
// (6+4x)/2048 and the n^9 coefficient (39+t^2+108x+76x^2)/2048.
bool verify_g_leading(const Rat& x, long long t);

}  // namespace trispec
