#include "trispec/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace trispec {

void zpoly_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int zpoly_degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly zpoly_derivative(const ZPoly& p) {
    ZPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    zpoly_trim(d);
    return d;
}

ZPoly zpoly_primitive(const ZPoly& p) {
    ZPoly q = p;
    zpoly_trim(q);
    if (q.empty()) return q;
    Int g = 0;
    for (const Int& c : q) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    for (Int& c : q) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return q;
}

int zpoly_sign_at(const ZPoly& p, const Rat& x) {
    // evaluate p(a/b) * b^deg, which has the same sign as p(a/b)
    if (p.empty()) return 0;
    const Int& a = x.get_num();
    const Int& b = x.get_den();
    Int acc = p.back();
    for (int i = static_cast<int>(p.size()) - 2; i >= 0; --i) {
        acc *= a;
        Int scale;
        mpz_pow_ui(scale.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(p.size() - 1 - i));
        acc += p[i] * scale;
    }
    return sign_of(acc);
}

ZPoly zpoly_from_rational(const std::vector<Rat>& coeffs) {
    Int lcm = 1;
    for (const Rat& c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly p;
    for (const Rat& c : coeffs) {
        Int scaled = c.get_num() * (lcm / c.get_den());
        p.push_back(scaled);
    }
    return zpoly_primitive(p);
}

namespace {

// Integer pseudo-remainder: returns lc(b)^(deg a - deg b + 1) * a mod b,
// all in Z[x]; msign receives the sign of that multiplier so Sturm chains
// can undo an accidental flip.
ZPoly prem(const ZPoly& a, const ZPoly& b, int& msign) {
    ZPoly r = a;
    zpoly_trim(r);
    const int db = zpoly_degree(b);
    const Int& lb = b.back();
    int e = zpoly_degree(r) - db + 1;
    msign = (sign_of(lb) < 0 && e > 0 && e % 2 == 1) ? -1 : 1;
    while (!r.empty() && zpoly_degree(r) >= db) {
        int dr = zpoly_degree(r);
        Int lr = r.back();
        for (Int& c : r) c *= lb;
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= lr * b[i];
        zpoly_trim(r);
        --e;
    }
    if (e > 0) {
        Int mult;
        mpz_pow_ui(mult.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
        for (Int& c : r) c *= mult;
    }
    return r;
}

}  // namespace

ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
    a = zpoly_primitive(a);
    b = zpoly_primitive(b);
    if (zpoly_degree(a) < zpoly_degree(b)) std::swap(a, b);
    while (!b.empty()) {
        int msign = 0;
        ZPoly r = prem(a, b, msign);
        r = zpoly_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && sign_of(a.back()) < 0)
        for (Int& c : a) c = -c;
    return a;
}

ZPoly zpoly_exact_div(const ZPoly& num, const ZPoly& den) {
    if (den.empty()) throw std::invalid_argument("zpoly_exact_div: division by zero polynomial");
    ZPoly r = num;
    zpoly_trim(r);
    const int dd = zpoly_degree(den);
    if (zpoly_degree(r) < dd) throw std::logic_error("zpoly_exact_div: degree underflow");
    ZPoly q(zpoly_degree(r) - dd + 1, Int(0));
    for (int i = zpoly_degree(r); i >= dd; --i) {
        if (static_cast<int>(r.size()) <= i || r[i] == 0) continue;
        if (!mpz_divisible_p(r[i].get_mpz_t(), den.back().get_mpz_t()))
            throw std::logic_error("zpoly_exact_div: inexact division");
        Int c = r[i] / den.back();
        q[i - dd] = c;
        for (int j = 0; j <= dd; ++j) r[i - dd + j] -= c * den[j];
    }
    zpoly_trim(r);
    if (!r.empty()) throw std::logic_error("zpoly_exact_div: nonzero remainder");
    return q;
}

std::vector<ZPoly> sturm_chain(const ZPoly& p) {
    std::vector<ZPoly> chain;
    ZPoly p0 = zpoly_primitive(p);
    if (p0.empty()) return chain;
    if (zpoly_degree(p0) >= 1) {
        // squarefree part: repeated roots would let every chain element
        // vanish at once and break the sign-variation count
        ZPoly der = zpoly_primitive(zpoly_derivative(p0));
        ZPoly g = zpoly_gcd(p0, der);
        if (zpoly_degree(g) >= 1) p0 = zpoly_primitive(zpoly_exact_div(p0, g));
    }
    chain.push_back(p0);
    ZPoly p1 = zpoly_primitive(zpoly_derivative(p0));
    if (p1.empty()) return chain;
    chain.push_back(p1);
    while (true) {
        int msign = 0;
        ZPoly r = prem(chain[chain.size() - 2], chain.back(), msign);
        if (r.empty()) break;
        // next element is -(previous mod last) up to a positive factor
        if (msign > 0)
            for (Int& c : r) c = -c;
        r = zpoly_primitive(r);
        chain.push_back(std::move(r));
        if (zpoly_degree(chain.back()) == 0) break;
    }
    return chain;
}

namespace {

int variations_at(const std::vector<ZPoly>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const ZPoly& q : chain) {
        int s = zpoly_sign_at(q, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

}  // namespace

int sturm_count(const std::vector<ZPoly>& chain, const Rat& a, const Rat& b) {
    if (chain.empty()) return 0;
    return variations_at(chain, a) - variations_at(chain, b);
}

Rat zpoly_root_bound(const ZPoly& p) {
    if (p.empty()) throw std::invalid_argument("zpoly_root_bound: zero polynomial");
    Int maxc = 0;
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        Int a = abs(p[i]);
        if (a > maxc) maxc = a;
    }
    Int lead = abs(p.back());
    // Cauchy bound: 1 + max|c_i| / |lead|, rounded up to an integer
    Int q = maxc / lead + 2;
    return Rat(q);
}

RootInterval isolate_largest_root(const std::vector<ZPoly>& chain) {
    if (chain.empty()) throw std::invalid_argument("isolate_largest_root: zero polynomial");
    // bound from the chain head: the squarefree part, same root set
    Rat bound = zpoly_root_bound(chain.front());
    RootInterval iv{-bound, bound};
    int total = sturm_count(chain, iv.lo, iv.hi);
    if (total <= 0) throw std::invalid_argument("isolate_largest_root: no real roots");
    // push lo upward while keeping at least one root above it
    while (sturm_count(chain, iv.lo, iv.hi) != 1) {
        Rat mid = (iv.lo + iv.hi) / 2;
        if (sturm_count(chain, mid, iv.hi) >= 1)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

void refine_root(const std::vector<ZPoly>& chain, RootInterval& iv, const Rat& width) {
    while (iv.hi - iv.lo > width) {
        Rat mid = (iv.lo + iv.hi) / 2;
        if (sturm_count(chain, mid, iv.hi) >= 1)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
}

}  // namespace trispec
