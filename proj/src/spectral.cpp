#include "trispec/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "trispec/poly.hpp"

namespace trispec {

NonnegMatrix NonnegMatrix::from_graph(const Graph& g) {
    NonnegMatrix m(g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = g.adj[i].next(0); j != -1; j = g.adj[i].next(j + 1)) m.at(i, j) = 1;
    return m;
}

NonnegMatrix NonnegMatrix::from_quotient(const QuotientMatrix& q) {
    NonnegMatrix m(q.dim);
    m.a = q.entries;
    return m;
}

bool is_irreducible(const NonnegMatrix& m) {
    if (m.dim == 0) return false;
    if (m.dim == 1) return m.at(0, 0) != 0;
    auto reach = [&](bool transpose) {
        std::vector<char> seen(m.dim, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < m.dim; ++v) {
                const Rat& e = transpose ? m.at(v, u) : m.at(u, v);
                if (e != 0 && !seen[v]) {
                    seen[v] = 1;
                    ++count;
                    stack.push_back(v);
                }
            }
        }
        return count == m.dim;
    };
    return reach(false) && reach(true);
}

namespace {

// Integer view: rho(M) = rho(A)/scale with A = scale * M entrywise.
struct IntMatrix {
    int dim = 0;
    std::vector<Int> a;
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * dim + j]; }
};

IntMatrix scale_to_int(const NonnegMatrix& m, Int& scale) {
    scale = 1;
    for (const Rat& e : m.a) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.get_den().get_mpz_t());
    IntMatrix im;
    im.dim = m.dim;
    im.a.reserve(m.a.size());
    for (const Rat& e : m.a) im.a.push_back(e.get_num() * (scale / e.get_den()));
    return im;
}

// Diagonal shift that makes the power iteration contract fast: with
// c >= rho every eigenvalue of A + cI is nonnegative, so the contraction
// ratio is about (c + lambda_2)/(c + rho) ~ 1/2 even for near-bipartite
// spectra where lambda_min ~ -rho would otherwise stall the iteration.
Int shift_for(const IntMatrix& A) {
    Int best = 1;
    for (int i = 0; i < A.dim; ++i) {
        Int row_sum = 0;
        for (int j = 0; j < A.dim; ++j) row_sum += A.at(i, j);
        if (row_sum > best) best = row_sum;
    }
    return best;
}

// Double-precision power iteration on A + shift*I to seed the exact pass;
// purely an accelerator, never part of the certificate.
std::vector<double> double_seed(const IntMatrix& A, const Int& shift) {
    const int d = A.dim;
    std::vector<double> ad;
    ad.reserve(A.a.size());
    bool fits = true;
    for (const Int& e : A.a) {
        double v = mpz_get_d(e.get_mpz_t());
        if (v > 9e15) fits = false;
        ad.push_back(v);
    }
    const double c = mpz_get_d(shift.get_mpz_t());
    std::vector<double> v(d, 1.0), w(d);
    if (!fits || c > 9e15) return v;
    double prev_spread = 1e300;
    int stale = 0;
    for (int it = 0; it < 20000; ++it) {
        double vmax = 0;
        for (int i = 0; i < d; ++i) {
            double s = c * v[i];
            const double* row = &ad[static_cast<size_t>(i) * d];
            for (int j = 0; j < d; ++j) s += row[j] * v[j];
            w[i] = s;
            vmax = std::max(vmax, s);
        }
        double rmin = 1e300, rmax = 0;
        for (int i = 0; i < d; ++i) {
            double r = w[i] / v[i];
            rmin = std::min(rmin, r);
            rmax = std::max(rmax, r);
        }
        for (int i = 0; i < d; ++i) v[i] = std::max(w[i] / vmax, 1e-300);
        double spread = (rmax - rmin) / std::max(rmax, 1.0);
        if (spread < 1e-15) break;
        if (spread >= prev_spread * 0.999) {
            if (++stale > 48) break;
        } else {
            stale = 0;
        }
        prev_spread = std::min(prev_spread, spread);
    }
    return v;
}

std::vector<Int> rationalize(const std::vector<double>& v, unsigned bits) {
    double vmax = 0;
    for (double x : v) vmax = std::max(vmax, x);
    std::vector<Int> out(v.size());
    Int one = 1;
    for (size_t i = 0; i < v.size(); ++i) {
        double scaled = std::ldexp(v[i] / vmax, static_cast<int>(std::min(bits, 512u)));
        Int q;
        mpz_set_d(q.get_mpz_t(), scaled);
        out[i] = q < 1 ? one : q;
    }
    return out;
}

void renormalize(std::vector<Int>& v, unsigned bits) {
    size_t maxbits = 0;
    for (const Int& x : v) maxbits = std::max(maxbits, mpz_sizeinbase(x.get_mpz_t(), 2));
    if (maxbits <= bits) return;
    unsigned long shift = static_cast<unsigned long>(maxbits - bits);
    for (Int& x : v) {
        mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), shift);
        if (x < 1) x = 1;
    }
}

// Collatz-Wielandt pass on A + shift*I: [min_i, max_i] of (Av + shift*v)_i / v_i.
void cw_pass(const IntMatrix& A, const Int& shift, const std::vector<Int>& v, std::vector<Int>& w,
             Rat& lo, Rat& hi) {
    const int d = A.dim;
    w.assign(d, Int(0));
    for (int i = 0; i < d; ++i) {
        Int s = shift * v[i];
        const Int* row = &A.a[static_cast<size_t>(i) * d];
        for (int j = 0; j < d; ++j)
            if (row[j] != 0) s += row[j] * v[j];
        w[i] = s;
    }
    bool first = true;
    for (int i = 0; i < d; ++i) {
        Rat r = make_rat(w[i], v[i]);
        if (first || r < lo) lo = r;
        if (first || r > hi) hi = r;
        first = false;
    }
}

CertifiedInterval rho_int_core(const IntMatrix& A, const Int& scale, const Rat& tol,
                               const CertifyOptions& opts) {
    const Rat scaled_tol = tol * Rat(scale);
    const Int shift = shift_for(A);
    std::vector<Int> v = rationalize(double_seed(A, shift), opts.precision_bits);
    std::vector<Int> w;
    unsigned bits = opts.precision_bits;
    Rat lo, hi;
    Rat prev_width(-1);
    int stale = 0;
    for (int round = 0; round < opts.max_exact_rounds; ++round) {
        cw_pass(A, shift, v, w, lo, hi);
        Rat width = hi - lo;
        if (width <= scaled_tol) {
            return {(lo - shift) / Rat(scale), (hi - shift) / Rat(scale), true};
        }
        if (prev_width >= 0 && width > prev_width * Rat(3, 4)) {
            if (++stale >= 4) {
                bits *= 2;
                stale = 0;
            }
        } else {
            stale = 0;
        }
        prev_width = width;
        v = std::move(w);
        renormalize(v, bits);
    }
    cw_pass(A, shift, v, w, lo, hi);
    return {(lo - shift) / Rat(scale), (hi - shift) / Rat(scale), false};
}

}  // namespace

CertifiedInterval rho_certified(const NonnegMatrix& m, const Rat& tol, const CertifyOptions& opts) {
    if (m.dim == 0) throw std::invalid_argument("rho_certified: empty matrix");
    if (tol <= 0) throw std::invalid_argument("rho_certified: tol must be positive");
    for (const Rat& e : m.a)
        if (e < 0) throw std::invalid_argument("rho_certified: negative entry");
    if (m.dim == 1) return {m.at(0, 0), m.at(0, 0), true};
    if (!is_irreducible(m))
        throw std::invalid_argument("rho_certified: matrix is reducible (certify per component)");
    Int scale;
    IntMatrix A = scale_to_int(m, scale);
    return rho_int_core(A, scale, tol, opts);
}

CertifiedInterval rho_graph(const Graph& g, const Rat& tol, const CertifyOptions& opts) {
    if (g.n == 0) return {Rat(0), Rat(0), true};
    CertifiedInterval best{Rat(0), Rat(0), true};
    bool first = true;
    for (const auto& comp : connected_components(g)) {
        CertifiedInterval ci;
        if (comp.size() == 1) {
            ci = {Rat(0), Rat(0), true};
        } else {
            Graph sub = induced_subgraph(g, comp);
            IntMatrix A;
            A.dim = sub.n;
            A.a.assign(static_cast<size_t>(sub.n) * sub.n, Int(0));
            for (int i = 0; i < sub.n; ++i)
                for (int j = sub.adj[i].next(0); j != -1; j = sub.adj[i].next(j + 1))
                    A.a[static_cast<size_t>(i) * sub.n + j] = 1;
            ci = rho_int_core(A, Int(1), tol, opts);
        }
        if (first) {
            best = ci;
            first = false;
        } else {
            best.lo = std::max(best.lo, ci.lo);
            best.hi = std::max(best.hi, ci.hi);
            best.converged = best.converged && ci.converged;
        }
    }
    return best;
}

CertifiedInterval rho_quotient(const QuotientMatrix& q, const Rat& tol) {
    return rho_certified(NonnegMatrix::from_quotient(q), tol);
}

std::vector<Rat> char_poly_exact(const NonnegMatrix& m) {
    const int d = m.dim;
    if (d > 64) throw std::invalid_argument("char_poly_exact: dimension capped at 64");
    std::vector<Rat> c(d + 1, Rat(0));
    c[d] = 1;
    if (d == 0) return c;
    // Faddeev-LeVerrier
    NonnegMatrix B = m;  // reused as a general rational matrix here
    for (int k = 1; k <= d; ++k) {
        Rat tr(0);
        for (int i = 0; i < d; ++i) tr += B.at(i, i);
        c[d - k] = -tr / Rat(k);
        if (k == d) break;
        // B_{k+1} = m * (B_k + c_{d-k} I) = m*B_k + c_{d-k}*m
        NonnegMatrix next(d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Rat s = c[d - k] * m.at(i, j);
                for (int l = 0; l < d; ++l) {
                    const Rat& mil = m.at(i, l);
                    if (mil != 0) s += mil * B.at(l, j);
                }
                next.at(i, j) = s;
            }
        B = std::move(next);
    }
    return c;
}

namespace {

// Exact comparison of the largest real roots of two integer polynomials.
RhoOrder compare_largest_roots(const ZPoly& pa, const ZPoly& pb, long long budget) {
    if (pa == pb) return RhoOrder::EQUAL;
    auto ca = sturm_chain(pa);
    auto cb = sturm_chain(pb);
    RootInterval ra = isolate_largest_root(ca);
    RootInterval rb = isolate_largest_root(cb);
    ZPoly g = zpoly_gcd(pa, pb);
    std::vector<ZPoly> cg;
    if (zpoly_degree(g) >= 1) cg = sturm_chain(g);

    auto bisect = [](const std::vector<ZPoly>& chain, RootInterval& iv) {
        Rat mid = (iv.lo + iv.hi) / 2;
        if (sturm_count(chain, mid, iv.hi) >= 1)
            iv.lo = mid;
        else
            iv.hi = mid;
    };

    for (long long step = 0; step < budget; ++step) {
        if (ra.hi <= rb.lo) return RhoOrder::LESS;
        if (rb.hi <= ra.lo) return RhoOrder::GREATER;
        if (!cg.empty()) {
            // a gcd root inside both isolating intervals is the shared
            // largest root: each interval holds exactly one root of its
            // polynomial, and a gcd root is a root of both
            Rat olo = std::max(ra.lo, rb.lo);
            Rat ohi = std::min(ra.hi, rb.hi);
            if (olo < ohi && sturm_count(cg, olo, ohi) >= 1) return RhoOrder::EQUAL;
        }
        bisect(ca, ra);
        bisect(cb, rb);
    }
    throw undecided_error({ra.lo, ra.hi, false}, {rb.lo, rb.hi, false});
}

}  // namespace

RhoOrder compare_rho(const NonnegMatrix& a, const NonnegMatrix& b, long long budget) {
    if (a == b) return RhoOrder::EQUAL;
    auto interval = [&](const NonnegMatrix& m, const Rat& tol) {
        if (m.dim == 1) return CertifiedInterval{m.at(0, 0), m.at(0, 0), true};
        return rho_certified(m, tol);
    };
    if (a.dim > 1 && !is_irreducible(a))
        throw std::invalid_argument("compare_rho: first matrix reducible");
    if (b.dim > 1 && !is_irreducible(b))
        throw std::invalid_argument("compare_rho: second matrix reducible");

    // phase 1: interval refinement at shrinking tolerance
    CertifiedInterval ia, ib;
    Rat tol = rat_from_decimal("1e-9");
    for (int attempt = 0; attempt < 3; ++attempt) {
        ia = interval(a, tol);
        ib = interval(b, tol);
        if (ia.hi < ib.lo) return RhoOrder::LESS;
        if (ib.hi < ia.lo) return RhoOrder::GREATER;
        tol /= 1000000;
    }

    // phase 2: exact characteristic polynomials + Sturm isolation
    ZPoly pa = zpoly_from_rational(char_poly_exact(a));
    ZPoly pb = zpoly_from_rational(char_poly_exact(b));
    return compare_largest_roots(pa, pb, budget);
}

RhoOrder compare_rho_graph(const Graph& a, const Graph& b, long long budget) {
    if (a == b) return RhoOrder::EQUAL;
    bool a_edgeless = a.edge_count() == 0, b_edgeless = b.edge_count() == 0;
    if (a_edgeless && b_edgeless) return RhoOrder::EQUAL;  // both rho = 0

    Rat tol = rat_from_decimal("1e-9");
    for (int attempt = 0; attempt < 3; ++attempt) {
        CertifiedInterval ia = rho_graph(a, tol);
        CertifiedInterval ib = rho_graph(b, tol);
        if (ia.hi < ib.lo) return RhoOrder::LESS;
        if (ib.hi < ia.lo) return RhoOrder::GREATER;
        tol /= 1000000;
    }
    ZPoly pa = zpoly_from_rational(char_poly_exact(NonnegMatrix::from_graph(a)));
    ZPoly pb = zpoly_from_rational(char_poly_exact(NonnegMatrix::from_graph(b)));
    return compare_largest_roots(pa, pb, budget);
}

}  // namespace trispec
