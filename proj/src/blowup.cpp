#include "trispec/blowup.hpp"

#include <stdexcept>

#include "trispec/constructions.hpp"

namespace trispec {

Graph expand(const BlowupSpec& spec) {
    if (static_cast<int>(spec.sizes.size()) != spec.base.n)
        throw std::invalid_argument("expand: one class size per base vertex required");
    for (long long s : spec.sizes)
        if (s < 0) throw std::invalid_argument("expand: negative class size");
    long long total = spec.order();
    if (total > 2'000'000)
        throw std::invalid_argument("expand: order too large to materialize adjacency rows");
    int n = static_cast<int>(total);
    std::vector<long long> offset(spec.sizes.size() + 1, 0);
    for (size_t i = 0; i < spec.sizes.size(); ++i) offset[i + 1] = offset[i] + spec.sizes[i];
    Graph g(n);
    for (int bi = 0; bi < spec.base.n; ++bi) {
        for (int bj = spec.base.adj[bi].next(bi + 1); bj != -1; bj = spec.base.adj[bi].next(bj + 1)) {
            for (long long u = offset[bi]; u < offset[bi + 1]; ++u)
                for (long long v = offset[bj]; v < offset[bj + 1]; ++v)
                    g.add_edge(static_cast<int>(u), static_cast<int>(v));
        }
    }
    return g;
}

QuotientMatrix quotient_matrix(const BlowupSpec& spec) {
    if (static_cast<int>(spec.sizes.size()) != spec.base.n)
        throw std::invalid_argument("quotient_matrix: one class size per base vertex required");
    std::vector<int> retained;
    for (int i = 0; i < spec.base.n; ++i) {
        if (spec.sizes[i] < 0) throw std::invalid_argument("quotient_matrix: negative class size");
        if (spec.sizes[i] > 0) retained.push_back(i);
    }
    Graph rbase = induced_subgraph(spec.base, retained);
    if (!is_connected(rbase))
        throw std::invalid_argument(
            "quotient_matrix: base restricted to retained classes is disconnected; Perron root "
            "would not be simple");
    QuotientMatrix q;
    q.dim = static_cast<int>(retained.size());
    q.entries.assign(static_cast<size_t>(q.dim) * q.dim, Rat(0));
    for (int i = 0; i < q.dim; ++i) {
        q.class_sizes.push_back(spec.sizes[retained[i]]);
        for (int j = 0; j < q.dim; ++j)
            if (rbase.has_edge(i, j)) q.entries[static_cast<size_t>(i) * q.dim + j] = Rat(static_cast<long>(spec.sizes[retained[j]]));
    }
    return q;
}

Int bareiss_det(std::vector<Int> m, int dim) {
    auto at = [&](int i, int j) -> Int& { return m[static_cast<size_t>(i) * dim + j]; };
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k < dim; ++k) {
        if (at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < dim; ++i)
                if (at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p == -1) return Int(0);
            for (int j = 0; j < dim; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < dim; ++i) {
            for (int j = k + 1; j < dim; ++j) {
                Int num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign == 1 ? at(dim - 1, dim - 1) : Int(-at(dim - 1, dim - 1));
}

Rat g_eval(long long n, long long t, const Rat& x, bool* large_t) {
    if ((n - 11 - t) % 2 != 0)
        throw std::invalid_argument("g_eval: n-11-t must be even (integral class sizes)");
    if (n - 11 - t < 0)
        throw std::invalid_argument("g_eval: n-11-t must be nonnegative");
    if (large_t) *large_t = (t < -23 || t > 23);

    const Graph f1 = grotzsch();
    std::vector<Int> sizes(11, Int(1));
    sizes[kF1VertexX] = Int(static_cast<long>((n - 11 - t) / 2));
    sizes[kF1VertexY] = Int(static_cast<long>((n - 7 + t) / 2));

    // clear denominators: multiply every entry by 2*den(x)
    const Int den = x.get_den();
    const Int num = x.get_num();
    const Int diag = 2 * num + den * static_cast<long>(n);  // 2*den*(x + n/2)
    std::vector<Int> m(11 * 11, Int(0));
    for (int i = 0; i < 11; ++i) {
        m[static_cast<size_t>(i) * 11 + i] = diag;
        for (int j = 0; j < 11; ++j)
            if (f1.has_edge(i, j)) m[static_cast<size_t>(i) * 11 + j] -= 2 * den * sizes[j];
    }
    Int d = bareiss_det(std::move(m), 11);
    Int scale;  // (2*den)^11
    Int base = 2 * den;
    mpz_pow_ui(scale.get_mpz_t(), base.get_mpz_t(), 11);
    return make_rat(d, scale);
}

bool verify_g_leading(const Rat& x, long long t) {
    if (t < -23 || t > 23)
        throw std::invalid_argument("verify_g_leading: |t| <= 23 required");
    long long n0 = 30;
    while ((n0 - 11 - t) % 2 != 0) ++n0;
    constexpr int kNodes = 13;
    std::vector<long long> nodes(kNodes);
    std::vector<Rat> vals(kNodes);
    for (int i = 0; i < kNodes; ++i) {
        nodes[i] = n0 + 2 * i;
        vals[i] = g_eval(nodes[i], t, x);
    }
    // Newton divided differences, then expansion to the power basis
    std::vector<Rat> dd = vals;
    for (int j = 1; j < kNodes; ++j)
        for (int i = kNodes - 1; i >= j; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rat(static_cast<long>(nodes[i] - nodes[i - j]));
    std::vector<Rat> coeff(kNodes, Rat(0));
    coeff[0] = dd[kNodes - 1];
    int deg = 0;
    for (int k = kNodes - 2; k >= 0; --k) {
        // coeff <- coeff * (n - nodes[k]) + dd[k], in place from the top
        for (int i = deg; i >= 0; --i) {
            Rat shifted = coeff[i] * Rat(static_cast<long>(nodes[k]));
            coeff[i + 1] += coeff[i];
            coeff[i] = -shifted;
        }
        coeff[0] += dd[k];
        ++deg;
    }
    // degree-in-n of g is 10; anything above must vanish exactly
    if (coeff[12] != 0 || coeff[11] != 0)
        throw std::logic_error("verify_g_leading: interpolated degree exceeds 11");
    Rat c10_expected = (Rat(6) + Rat(4) * x) / Rat(2048);
    Rat c9_expected =
        (Rat(39) + Rat(static_cast<long>(t * t)) + Rat(108) * x + Rat(76) * x * x) / Rat(2048);
    return coeff[10] == c10_expected && coeff[9] == c9_expected;
}

}  // namespace trispec
