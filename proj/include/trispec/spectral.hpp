#pragma once

#include <stdexcept>
#include <vector>

#include "trispec/blowup.hpp"
#include "trispec/common.hpp"
#include "trispec/graph.hpp"

namespace trispec {

// lo <= rho <= hi, unconditionally: Collatz-Wielandt bounds hold for every
// positive test vector, so validity does not depend on convergence.  The
// flag only records whether the requested width was reached.
struct CertifiedInterval {
    Rat lo, hi;
    bool converged = true;

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
};

struct NonnegMatrix {
    int dim = 0;
    std::vector<Rat> a;  // row-major

    NonnegMatrix() = default;
    explicit NonnegMatrix(int d) : dim(d), a(static_cast<size_t>(d) * d, Rat(0)) {}

    const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * dim + j]; }
    Rat& at(int i, int j) { return a[static_cast<size_t>(i) * dim + j]; }

    bool operator==(const NonnegMatrix& o) const { return dim == o.dim && a == o.a; }

    static NonnegMatrix from_graph(const Graph& g);
    static NonnegMatrix from_quotient(const QuotientMatrix& q);
};

// strong connectivity of the support digraph
bool is_irreducible(const NonnegMatrix& m);

struct CertifyOptions {
    int max_exact_rounds = 512;
    unsigned precision_bits = 96;  // doubles on stagnation
};

// Certified Perron-root interval by rational Collatz-Wielandt bracketing:
// repeated application of m (plus a diagonal shift for aperiodicity) with
// precision-capped renormalization, iterated until hi-lo <= tol or the
// round cap is hit (then the still-valid wide interval is flagged).
CertifiedInterval rho_certified(const NonnegMatrix& m, const Rat& tol, const CertifyOptions& = {});

// Maximum over connected components; disconnected graphs allowed.
CertifiedInterval rho_graph(const Graph& g, const Rat& tol, const CertifyOptions& = {});

// Coefficients of det(xI - m), exact (index k holds the x^k coefficient,
// monic).  Dimension capped at 64.
std::vector<Rat> char_poly_exact(const NonnegMatrix& m);

enum class RhoOrder { LESS, EQUAL, GREATER };

struct undecided_error : std::runtime_error {
    CertifiedInterval a, b;
    undecided_error(const CertifiedInterval& ia, const CertifiedInterval& ib)
        : std::runtime_error("compare_rho: undecided within budget"), a(ia), b(ib) {}
};

// Refines both intervals until disjoint, or proves equality exactly via
// characteristic polynomials and Sturm root isolation.  EQUAL is never
// concluded from interval overlap alone.
RhoOrder compare_rho(const NonnegMatrix& a, const NonnegMatrix& b, long long budget = 256);

inline RhoOrder compare_rho(const QuotientMatrix& a, const QuotientMatrix& b,
                            long long budget = 256) {
    return compare_rho(NonnegMatrix::from_quotient(a), NonnegMatrix::from_quotient(b), budget);
}

// Component-wise extension to graphs: disconnected inputs are fine because
// the exact phase isolates the largest real root of the full characteristic
// polynomial, which is rho for a symmetric matrix.
RhoOrder compare_rho_graph(const Graph& a, const Graph& b, long long budget = 256);

CertifiedInterval rho_quotient(const QuotientMatrix& q, const Rat& tol);

}  // namespace trispec
