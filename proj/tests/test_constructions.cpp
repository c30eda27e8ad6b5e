#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "trispec/canonical.hpp"
#include "trispec/coloring.hpp"
#include "trispec/constructions.hpp"

using namespace trispec;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.n; ++v) d.push_back(g.degree(v));
    std::sort(d.rbegin(), d.rend());
    return d;
}

Graph load_edge_file(const std::string& path, uint64_t expect_fnv) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    CHECK(h == expect_fnv);
    EdgeList e;
    e.n = 11;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int u, v;
        ls >> u >> v;
        e.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    return graph_from_edges(e);
}

}  // namespace

TEST_CASE("grotzsch structure") {
    Graph g = grotzsch();
    CHECK(g.n == 11);
    CHECK(g.edge_count() == 20);
    CHECK(degree_sequence(g) == std::vector<int>{5, 4, 4, 4, 4, 4, 3, 3, 3, 3, 3});
    CHECK(is_triangle_free(g));
    CHECK_FALSE(is_k_colorable(g, 3));
    CHECK(is_k_colorable(g, 4));
    CHECK(chromatic_number(g) == 4);
    CHECK(g.degree(kF1VertexY) == 5);  // the hub
    // u1-u2-w23-u3-w13-u1 is a 5-cycle
    int u1 = 5, u2 = 6, u3 = 7, w13 = 8, w23 = 9;
    CHECK(g.has_edge(u1, u2));
    CHECK(g.has_edge(u2, w23));
    CHECK(g.has_edge(w23, u3));
    CHECK(g.has_edge(u3, w13));
    CHECK(g.has_edge(w13, u1));
    Graph c5 = induced_subgraph(g, {u1, u2, u3, w13, w23});
    CHECK(c5.edge_count() == 5);
}

TEST_CASE("f1_st blow-up identities") {
    CHECK(canonical_form(expand(f1_st(1, 1))) == canonical_form(grotzsch()));
    Graph g24 = expand(f1_st(2, 4));
    CHECK(g24.n == 15);
    CHECK(g24.edge_count() == 41);
    CHECK_THROWS_AS(f1_st(3, 0), std::invalid_argument);

    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        long long s = rng() % 12;
        long long t = 1 + rng() % 12;
        Graph g = expand(f1_st(s, t));
        CHECK(g.n == 9 + s + t);
        CHECK(g.edge_count() == 13 + 2 * s + 4 * t + s * t);
        CHECK(is_triangle_free(g));
    }
}

TEST_CASE("balanced f1_st matches the closed-form edge count for odd n") {
    for (long long n = 11; n <= 41; n += 2) {
        Graph g = expand(f1_st((n - 11) / 2, (n - 7) / 2));
        CHECK(g.n == n);
        CHECK(g.edge_count() == (n * n - 6 * n + 29) / 4);
        CHECK(g.edge_count() == (n - 3) * (n - 3) / 4 + 5);
    }
}

TEST_CASE("f1_st chromatic number stays 4 while the x class is nonempty") {
    for (long long s = 1; s <= 5; ++s)
        for (long long t = 1; t <= 5; ++t) CHECK(chromatic_number(expand(f1_st(s, t))) == 4);
    // the base graph is vertex-critical, so dropping the x class loses a color
    for (long long t = 1; t <= 5; ++t) CHECK(chromatic_number(expand(f1_st(0, t))) == 3);
}

TEST_CASE("f1_n split rules") {
    Graph g15 = expand(f1_n(15, {2, 1, 1}));
    CHECK(g15.n == 15);
    CHECK(g15.edge_count() == (15 - 3) * (15 - 3) / 4 + 5);  // 41

    // edge count does not depend on the split
    Graph a = expand(f1_n(17, {3, 1, 1}));
    Graph b = expand(f1_n(17, {1, 2, 2}));
    CHECK(a.edge_count() == b.edge_count());

    CHECK_THROWS_AS(f1_n(15, {1, 1, 1}), std::invalid_argument);  // wrong sum
    CHECK_THROWS_AS(f1_n(17, {5, 0, 0}), std::invalid_argument);  // empty class
    CHECK_THROWS_AS(f1_n(10, {1, 1, 1}), std::invalid_argument);  // n too small

    // swapped variant: sizes ceil on the v-side, floor on the hub
    Graph sw = expand(f1_n(16, {2, 2, 1}, true));
    CHECK(sw.n == 16);
}

TEST_CASE("f2/f3 bases match the shipped transcriptions") {
    Graph f2 = load_edge_file(std::string(TRISPEC_SOURCE_DIR) + "/data/f2_edges.txt",
                              0x796e1e274e69c8acull);
    Graph f3 = load_edge_file(std::string(TRISPEC_SOURCE_DIR) + "/data/f3_edges.txt",
                              0x041938c9844fce29ull);
    CHECK(f2 == f2_base());
    CHECK(f3 == f3_base());
}

TEST_CASE("f2/f3 structural invariants") {
    Graph f2 = f2_base(), f3 = f3_base();
    CHECK(f2.n == 11);
    CHECK(f2.edge_count() == 20);
    CHECK(f3.n == 11);
    CHECK(f3.edge_count() == 21);
    CHECK(is_triangle_free(f2));
    CHECK(is_triangle_free(f3));
    CHECK(chromatic_number(f3) <= 3);
    CHECK(is_triangle_free(expand(f2_st(1, 1))));
    CHECK(chromatic_number(expand(f3_st(1, 1))) <= 3);
    CHECK(expand(f2_st(3, 4)).n == 9 + 3 + 4);
    CHECK(expand(f3_st(3, 4)).n == 9 + 3 + 4);
    for (long long s = 0; s <= 3; ++s)
        for (long long t = 1; t <= 3; ++t) {
            CHECK(is_triangle_free(expand(f2_st(s, t))));
            CHECK(is_triangle_free(expand(f3_st(s, t))));
        }
}

TEST_CASE("turan and complete bipartite") {
    Graph t52 = turan(5, 2);
    CHECK(t52.edge_count() == 6);
    CHECK(canonical_form(t52) == canonical_form(complete_bipartite(2, 3)));
    CHECK(turan(10, 2).edge_count() == 25);
    CHECK(turan(6, 3).edge_count() == 12);
    CHECK(is_triangle_free(turan(9, 2)));
    CHECK_FALSE(is_triangle_free(turan(6, 3)));
    CHECK_THROWS_AS(turan(5, 0), std::invalid_argument);
}

TEST_CASE("subdivided and identified bipartite constructions") {
    Graph s22 = sk_ab(2, 2);
    CHECK(s22.n == 5);
    CHECK(s22.edge_count() == 5);
    CHECK(is_triangle_free(s22));
    CHECK_FALSE(is_bipartite(s22));  // it is C5

    Graph s11 = sk_ab(1, 1);
    CHECK(s11.n == 3);
    CHECK(s11.edge_count() == 2);

    Graph kk = kab_circ_k3(2, 2);
    CHECK(kk.n == 6);
    CHECK(kk.edge_count() == 7);
    CHECK_FALSE(is_triangle_free(kk));

    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        int a = 1 + static_cast<int>(rng() % 6), b = 1 + static_cast<int>(rng() % 6);
        Graph s = sk_ab(a, b);
        CHECK(s.n == a + b + 1);
        CHECK(s.edge_count() == static_cast<long long>(a) * b + 1);
        CHECK(is_triangle_free(s));
        if (a >= 2 && b >= 2) CHECK_FALSE(is_bipartite(s));  // a 5-cycle appears
        Graph k = kab_circ_k3(a, b);
        CHECK(k.n == a + b + 2);
        CHECK(k.edge_count() == static_cast<long long>(a) * b + 3);
        CHECK_FALSE(is_triangle_free(k));
    }
    CHECK_THROWS_AS(sk_ab(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(kab_circ_k3(2, 0), std::invalid_argument);
}
