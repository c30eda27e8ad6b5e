#include <random>

#include "doctest.h"
#include "trispec/blowup.hpp"
#include "trispec/constructions.hpp"
#include "trispec/spectral.hpp"

using namespace trispec;

namespace {

Graph k2() {
    Graph g(2);
    g.add_edge(0, 1);
    return g;
}

Graph random_connected(std::mt19937_64& rng, int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, static_cast<int>(rng() % v));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.has_edge(i, j) && rng() % 100 < 30) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("expand basics") {
    BlowupSpec s{k2(), {3, 4}};
    Graph g = expand(s);
    CHECK(g.n == 7);
    CHECK(g.edge_count() == 12);
    CHECK(is_bipartite(g));

    Graph big = expand(f1_st(45, 47));
    CHECK(big.n == 101);
    CHECK(big.edge_count() == 2406);

    // zero classes are dropped
    BlowupSpec z{k2(), {0, 5}};
    CHECK(expand(z).n == 5);
    CHECK(expand(z).edge_count() == 0);
}

TEST_CASE("quotient matrix forms") {
    QuotientMatrix q = quotient_matrix(BlowupSpec{k2(), {2, 3}});
    REQUIRE(q.dim == 2);
    CHECK(q.at(0, 0) == 0);
    CHECK(q.at(0, 1) == 3);
    CHECK(q.at(1, 0) == 2);
    CHECK(q.at(1, 1) == 0);

    // all-ones sizes give back the adjacency matrix
    Graph g5 = grotzsch();
    QuotientMatrix qa = quotient_matrix(BlowupSpec{g5, std::vector<long long>(11, 1)});
    for (int i = 0; i < 11; ++i)
        for (int j = 0; j < 11; ++j) CHECK(qa.at(i, j) == (g5.has_edge(i, j) ? 1 : 0));

    // disconnected retained base is rejected
    Graph two(2);
    CHECK_THROWS_AS(quotient_matrix(BlowupSpec{two, {2, 2}}), std::invalid_argument);
}

TEST_CASE("quotient reproduces the 11x11 divisor matrix entrywise") {
    const long long n = 101, t = 3;
    const long long sx = (n - 11 - t) / 2, sy = (n - 7 + t) / 2;
    QuotientMatrix q = quotient_matrix(f1_st(sx, sy));
    REQUIRE(q.dim == 11);
    // rows in class order v13,v23,v1,v2,Ax,u1,u2,u3,w13,w23,Ay
    long expect[11][11] = {
        {0, 0, 0, 0, 0, 1, 0, 1, 0, 0, sy},
        {0, 0, 0, 0, 0, 0, 1, 1, 0, 0, sy},
        {0, 0, 0, 0, 0, 1, 0, 0, 0, 1, sy},
        {0, 0, 0, 0, 0, 0, 1, 0, 1, 0, sy},
        {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, sy},
        {1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0},
        {0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0},
        {1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0},
        {0, 0, 0, 1, sx, 1, 0, 1, 0, 0, 0},
        {0, 0, 1, 0, sx, 0, 1, 1, 0, 0, 0},
        {1, 1, 1, 1, sx, 0, 0, 0, 0, 0, 0},
    };
    for (int i = 0; i < 11; ++i)
        for (int j = 0; j < 11; ++j) CHECK(q.at(i, j) == Rat(expect[i][j]));
}

TEST_CASE("generalized symmetry: sizes[i] Q[i][j] = sizes[j] Q[j][i]") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        BlowupSpec s{random_connected(rng, n), {}};
        for (int v = 0; v < n; ++v) s.sizes.push_back(1 + rng() % 5);
        QuotientMatrix q = quotient_matrix(s);
        for (int i = 0; i < q.dim; ++i)
            for (int j = 0; j < q.dim; ++j)
                CHECK(Rat(static_cast<long>(q.class_sizes[i])) * q.at(i, j) ==
                      Rat(static_cast<long>(q.class_sizes[j])) * q.at(j, i));
    }
}

TEST_CASE("divisor-matrix identity: quotient Perron root equals blow-up rho") {
    std::mt19937_64 rng(808);
    Rat tight = rat_from_decimal("1e-10");
    Rat tol = rat_from_decimal("1e-9");
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        BlowupSpec s{random_connected(rng, n), {}};
        for (int v = 0; v < n; ++v) s.sizes.push_back(1 + rng() % 5);
        CertifiedInterval a = rho_quotient(quotient_matrix(s), tight);
        CertifiedInterval b = rho_graph(expand(s), tight);
        Rat gap = a.mid() - b.mid();
        if (gap < 0) gap = -gap;
        CHECK(gap <= tol);
    }
}

TEST_CASE("g_eval exactness and signs") {
    CHECK_THROWS_AS(g_eval(20, 0, Rat(0)), std::invalid_argument);  // parity
    CHECK_THROWS_AS(g_eval(12, 3, Rat(0)), std::invalid_argument);  // negative class

    CHECK(g_eval(101, 0, Rat(0)) > 0);  // beyond the Perron root

    // warning flag outside |t| <= 23
    bool large = false;
    g_eval(101, 24, Rat(-1), &large);
    CHECK(large);
    g_eval(101, 0, Rat(-1), &large);
    CHECK_FALSE(large);

    // identity case: all class sizes 1 at n = 20 has the wrong parity
    CHECK_THROWS_AS(g_eval(20, 0, Rat(0)), std::invalid_argument);
}

TEST_CASE("certified rho interval maps to a sign change of g") {
    Rat tol = rat_from_decimal("1e-9");
    for (long long base : {51, 101, 501}) {
        for (long long t : {-3, 0, 1, 5}) {
            // keep class sizes integral: bump to the adjacent order when the
            // parities disagree
            long long n = ((base - 11 - t) % 2 == 0) ? base : base + 1;
            QuotientMatrix q = quotient_matrix(f1_st((n - 11 - t) / 2, (n - 7 + t) / 2));
            CertifiedInterval iv = rho_quotient(q, tol);
            Rat half(static_cast<long>(n));
            half /= 2;
            Rat glo = g_eval(n, t, iv.lo - half);
            Rat ghi = g_eval(n, t, iv.hi - half);
            CHECK(glo * ghi <= 0);
        }
    }
}

TEST_CASE("rho - n/2 lies in [-2, 0] for the balanced blow-up at n = 101") {
    Rat tol = rat_from_decimal("1e-9");
    QuotientMatrix q = quotient_matrix(f1_st(45, 47));
    CertifiedInterval iv = rho_quotient(q, tol);
    Rat half = Rat(101) / 2;
    CHECK(iv.lo - half >= -2);
    CHECK(iv.hi - half <= 0);
}

TEST_CASE("g leading coefficients match the closed forms") {
    for (long long t : {-1, 0, 1, 2})
        for (long x : {-2, -1, 0}) CHECK(verify_g_leading(Rat(x), t));
    // a rational x off the acceptance grid
    CHECK(verify_g_leading(make_rat(-3, 2), 4));
    CHECK_THROWS_AS(verify_g_leading(Rat(0), 24), std::invalid_argument);
}

TEST_CASE("bareiss determinant") {
    std::vector<Int> m{Int(0), Int(3), Int(2), Int(0)};
    CHECK(bareiss_det(m, 2) == -6);
    std::vector<Int> singular{Int(1), Int(2), Int(2), Int(4)};
    CHECK(bareiss_det(singular, 2) == 0);
    std::vector<Int> m3{Int(2), Int(0), Int(1), Int(1), Int(3), Int(2), Int(0), Int(1), Int(4)};
    CHECK(bareiss_det(m3, 3) == 21);
}
