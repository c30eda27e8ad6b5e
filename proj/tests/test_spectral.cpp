#include <random>

#include "doctest.h"
#include "trispec/constructions.hpp"
#include "trispec/poly.hpp"
#include "trispec/spectral.hpp"

using namespace trispec;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

const Rat kTol = rat_from_decimal("1e-9");

bool contains_sqrt(const CertifiedInterval& iv, long v) {
    // lo <= sqrt(v) <= hi, via exact squaring
    Rat vv(v);
    if (iv.lo > 0 && iv.lo * iv.lo > vv) return false;
    if (iv.hi < 0) return false;
    return iv.hi * iv.hi >= vv;
}

NonnegMatrix random_irreducible(std::mt19937_64& rng, int dim) {
    NonnegMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        m.at(i, (i + 1) % dim) = Rat(1 + static_cast<long>(rng() % 5));
        for (int j = 0; j < dim; ++j)
            if (rng() % 100 < 40) m.at(i, j) += make_rat(rng() % 7, 1 + rng() % 4);
    }
    return m;
}

}  // namespace

TEST_CASE("certified intervals for closed-form graphs") {
    CertifiedInterval k23 = rho_graph(complete_bipartite(2, 3), kTol);
    CHECK(k23.converged);
    CHECK(k23.width() <= kTol);
    CHECK(contains_sqrt(k23, 6));

    CertifiedInterval c5 = rho_graph(cycle(5), kTol);
    CHECK(c5.lo <= 2);
    CHECK(c5.hi >= 2);
    CHECK(c5.width() <= kTol);

    CertifiedInterval g = rho_graph(grotzsch(), kTol);
    CHECK(g.width() <= kTol);
    CHECK(g.lo >= 3);
    CHECK(g.hi <= 4);
    CHECK(g.hi * g.hi <= 20);  // Nosal: rho <= sqrt(e)

    CHECK(rho_graph(Graph(1), kTol).hi == 0);
    CertifiedInterval k2 = rho_graph(complete_bipartite(1, 1), kTol);
    CHECK(k2.lo <= 1);
    CHECK(k2.hi >= 1);

    // disjoint union: maximum over components
    Graph du(11);
    for (int i = 0; i < 5; ++i) du.add_edge(i, (i + 1) % 5);
    for (int i = 6; i < 11; ++i) du.add_edge(5, i);
    CertifiedInterval mixed = rho_graph(du, kTol);
    CHECK(contains_sqrt(mixed, 5));
}

TEST_CASE("degenerate and error inputs") {
    NonnegMatrix one(1);
    one.at(0, 0) = make_rat(7, 3);
    CertifiedInterval iv = rho_certified(one, kTol);
    CHECK(iv.lo == iv.hi);
    CHECK(iv.lo == make_rat(7, 3));

    NonnegMatrix reducible(2);
    reducible.at(0, 1) = 1;  // upper triangular support
    CHECK_THROWS_AS(rho_certified(reducible, kTol), std::invalid_argument);

    NonnegMatrix neg(2);
    neg.at(0, 1) = -1;
    neg.at(1, 0) = 1;
    CHECK_THROWS_AS(rho_certified(neg, kTol), std::invalid_argument);
    CHECK_THROWS_AS(rho_certified(one, Rat(0)), std::invalid_argument);
}

TEST_CASE("char_poly_exact on small cases") {
    auto p = char_poly_exact(NonnegMatrix::from_graph(complete_bipartite(1, 1)));
    REQUIRE(p.size() == 3);  // x^2 - 1
    CHECK(p[2] == 1);
    CHECK(p[1] == 0);
    CHECK(p[0] == -1);

    QuotientMatrix q = quotient_matrix(BlowupSpec{complete_bipartite(1, 1), {2, 3}});
    auto pq = char_poly_exact(NonnegMatrix::from_quotient(q));
    REQUIRE(pq.size() == 3);  // x^2 - 6
    CHECK(pq[2] == 1);
    CHECK(pq[0] == -6);

    // C5: rho = 2 is a root, and no real root exceeds it
    auto pc = char_poly_exact(NonnegMatrix::from_graph(cycle(5)));
    ZPoly z = zpoly_from_rational(pc);
    CHECK(zpoly_sign_at(z, Rat(2)) == 0);
    auto chain = sturm_chain(z);
    CHECK(sturm_count(chain, Rat(2), zpoly_root_bound(z)) == 0);
}

TEST_CASE("char_poly evaluation agrees with the direct exact determinant") {
    std::mt19937_64 rng(314159);
    for (int trial = 0; trial < 50; ++trial) {
        int dim = 1 + static_cast<int>(rng() % 6);
        NonnegMatrix m(dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) m.at(i, j) = make_rat(rng() % 6, 1 + rng() % 3);
        Rat x = make_rat(static_cast<long>(rng() % 19) - 9, 1 + rng() % 4);
        auto coeffs = char_poly_exact(m);
        Rat horner(0);
        for (int k = dim; k >= 0; --k) horner = horner * x + coeffs[k];
        // det(xI - m) via integer Bareiss after clearing denominators
        Int den = x.get_den();
        for (const Rat& e : m.a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.get_den().get_mpz_t());
        std::vector<Int> im(static_cast<size_t>(dim) * dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                Rat entry = -m.at(i, j);
                if (i == j) entry += x;
                im[static_cast<size_t>(i) * dim + j] = entry.get_num() * (den / entry.get_den());
            }
        Int scale;
        mpz_pow_ui(scale.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(dim));
        CHECK(horner == make_rat(bareiss_det(std::move(im), dim), scale));
    }
}

TEST_CASE("unconditional bracketing against char-poly root isolation") {
    std::mt19937_64 rng(90210);
    for (int trial = 0; trial < 100; ++trial) {
        int dim = 2 + static_cast<int>(rng() % 7);
        NonnegMatrix m = random_irreducible(rng, dim);
        CertifiedInterval iv = rho_certified(m, kTol);
        ZPoly p = zpoly_from_rational(char_poly_exact(m));
        auto chain = sturm_chain(p);
        RootInterval root = isolate_largest_root(chain);
        refine_root(chain, root, rat_from_decimal("1e-12"));
        // the isolated Perron root must meet the certified interval
        CHECK(root.hi >= iv.lo);
        CHECK(root.lo <= iv.hi);
    }
}

TEST_CASE("monotonicity: adding an edge strictly increases rho") {
    std::mt19937_64 rng(1618);
    int done = 0;
    while (done < 100) {
        int n = 3 + static_cast<int>(rng() % 8);
        Graph g(n);
        for (int v = 1; v < n; ++v) g.add_edge(v, static_cast<int>(rng() % v));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (!g.has_edge(i, j) && rng() % 100 < 25) g.add_edge(i, j);
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u == v || g.has_edge(u, v)) continue;
        Graph h = g;
        h.add_edge(u, v);
        CHECK(compare_rho_graph(g, h) == RhoOrder::LESS);
        ++done;
    }
}

TEST_CASE("compare_rho orderings") {
    NonnegMatrix q23 = NonnegMatrix::from_quotient(
        quotient_matrix(BlowupSpec{complete_bipartite(1, 1), {2, 3}}));
    CHECK(compare_rho(q23, q23) == RhoOrder::EQUAL);

    // reflexivity through distinct but cospectral-by-construction inputs
    NonnegMatrix q32 = NonnegMatrix::from_quotient(
        quotient_matrix(BlowupSpec{complete_bipartite(1, 1), {3, 2}}));
    CHECK(compare_rho(q23, q32) == RhoOrder::EQUAL);

    CHECK(compare_rho_graph(turan(10, 2), turan(10, 3)) == RhoOrder::LESS);
    CHECK(compare_rho_graph(turan(10, 3), turan(10, 2)) == RhoOrder::GREATER);

    // paper's near-balanced comparison at n = 101
    QuotientMatrix balanced = quotient_matrix(f1_st(45, 47));
    QuotientMatrix skewed = quotient_matrix(f1_st(44, 48));
    CHECK(compare_rho(balanced, skewed) == RhoOrder::GREATER);
    CHECK(compare_rho(skewed, balanced) == RhoOrder::LESS);
}

TEST_CASE("compare_rho proves equality of cospectral maxima exactly") {
    // K_{1,4} and C_4 share rho = 2 with different characteristic polynomials
    CHECK(compare_rho_graph(star(4), cycle(4)) == RhoOrder::EQUAL);
    // disconnected against connected with the same top component value
    Graph du(7);
    for (int i = 0; i < 4; ++i) du.add_edge(i, (i + 1) % 4);
    CHECK(compare_rho_graph(du, cycle(4)) == RhoOrder::EQUAL);
    Graph empty3(3);
    CHECK(compare_rho_graph(empty3, Graph(5)) == RhoOrder::EQUAL);
}

TEST_CASE("budget exhaustion surfaces as undecided, carrying both intervals") {
    // equal Perron roots, different polynomials, no budget to prove it
    try {
        compare_rho_graph(star(4), cycle(4), 0);
        CHECK(false);
    } catch (const undecided_error& e) {
        CHECK(e.a.lo <= e.a.hi);
        CHECK(e.b.lo <= e.b.hi);
    }
}

TEST_CASE("antisymmetry on random irreducible pairs") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        NonnegMatrix a = random_irreducible(rng, 2 + static_cast<int>(rng() % 5));
        NonnegMatrix b = random_irreducible(rng, 2 + static_cast<int>(rng() % 5));
        RhoOrder ab = compare_rho(a, b);
        RhoOrder ba = compare_rho(b, a);
        if (ab == RhoOrder::LESS) CHECK(ba == RhoOrder::GREATER);
        if (ab == RhoOrder::GREATER) CHECK(ba == RhoOrder::LESS);
        if (ab == RhoOrder::EQUAL) CHECK(ba == RhoOrder::EQUAL);
    }
}

TEST_CASE("interval printing is outward-rounded decimal") {
    CHECK(decimal_floor(make_rat(1, 3), 6) == "0.333333");
    CHECK(decimal_ceil(make_rat(1, 3), 6) == "0.333334");
    CHECK(decimal_floor(make_rat(-1, 3), 6) == "-0.333334");
    CHECK(decimal_ceil(make_rat(-1, 3), 6) == "-0.333333");
    CHECK(decimal_floor(Rat(2), 3) == "2.000");
    CHECK(rat_from_decimal("13.2") == make_rat(66, 5));
    CHECK(rat_from_decimal("1e-9") == make_rat(1, 1000000000));
    CHECK(rat_from_decimal("-2.5e2") == Rat(-250));
}
