#include "trispec/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "trispec/coloring.hpp"
#include "trispec/graph6.hpp"

namespace trispec {

const char* to_string(TriState t) {
    switch (t) {
        case TriState::YES: return "YES";
        case TriState::NO: return "NO";
        default: return "NOT_APPLICABLE";
    }
}

const char* to_string(Objective o) { return o == Objective::EDGES ? "EDGES" : "RHO"; }

namespace {

std::string g6(const SmallGraph& g) { return graph6_encode(from_small(g)); }

long long mantel_value(long long n) { return n * n / 4; }
long long theorem11_value(long long n) { return (n - 3) * (n - 3) / 4 + 5; }

void stream_classes(int n, const EnumFilter& f, const VerifyOptions& opt,
                    const std::function<void(const SmallGraph&)>& sink) {
    if (f.require_triangle_free) {
        enumerate_triangle_free_small(n, f, sink, opt.workers);
    } else {
        for (const SmallGraph& g : brute_force_all_small(n))
            if (passes_filter(g, f)) sink(g);
    }
}

void revalidate_winner(const SmallGraph& g, const EnumFilter& f) {
    bool ok = true;
    if (f.require_triangle_free && !small_is_triangle_free(g)) ok = false;
    if (ok && f.connected_only && !small_is_connected(g)) ok = false;
    if (ok && f.non_bipartite_only && small_is_bipartite(g)) ok = false;
    if (ok && f.min_chromatic > 0 && chromatic_number(from_small(g)) < f.min_chromatic) ok = false;
    if (!ok) throw std::logic_error("extremal winner failed its own filter re-validation");
}

// Canonical graph6 of every F1(n) member with positive splits, both
// floor/ceiling variants; empty when n leaves no positive split.
std::vector<std::string> f1n_family_g6(int n) {
    std::set<std::string> out;
    for (int variant = 0; variant < 2; ++variant) {
        long long lo = (static_cast<long long>(n) - 7) / 2;
        long long hi = (static_cast<long long>(n) - 7) - lo;
        long long sum = variant ? hi : lo;
        if (variant == 1 && hi == lo) break;
        for (long long a = 1; a <= sum - 2; ++a)
            for (long long b = 1; a + b <= sum - 1; ++b) {
                std::array<long long, 3> split{a, b, sum - a - b};
                Graph ex = expand(f1_n(n, split, variant == 1));
                out.insert(graph6_encode(canonical_form(ex)));
            }
    }
    return {out.begin(), out.end()};
}

void edges_prediction(ExtremalReport& rep) {
    const EnumFilter& f = rep.filter;
    if (!f.require_triangle_free || f.connected_only || f.non_bipartite_only) {
        rep.matches_paper_prediction = TriState::NOT_APPLICABLE;
        return;
    }
    std::vector<std::string> winners_sorted = rep.winners;
    std::sort(winners_sorted.begin(), winners_sorted.end());
    if (f.min_chromatic >= 4) {
        long long predicted = theorem11_value(rep.n);
        std::vector<std::string> family = f1n_family_g6(rep.n);
        std::sort(family.begin(), family.end());
        bool value_ok = rep.value_edges == predicted;
        bool winners_ok = winners_sorted == family;
        rep.matches_paper_prediction = (value_ok && winners_ok) ? TriState::YES : TriState::NO;
        rep.prediction_note =
            "edge-extremal theorem stated for n >= 150 (recorded, not asserted): predicted value " +
            std::to_string(predicted) + " " + (value_ok ? "matches" : "differs") +
            ", F1(n) family of size " + std::to_string(family.size()) +
            (winners_ok ? " matches winners" : " differs from winners");
        return;
    }
    if (f.min_chromatic <= 2) {
        bool value_ok = rep.value_edges == mantel_value(rep.n);
        std::vector<std::string> expect{graph6_encode(canonical_form(turan(rep.n, 2)))};
        bool winners_ok = winners_sorted == expect;
        rep.matches_paper_prediction = (value_ok && winners_ok) ? TriState::YES : TriState::NO;
        rep.prediction_note = "Turan/Mantel: floor(n^2/4) with unique winner T_{n,2}";
        return;
    }
    rep.matches_paper_prediction = TriState::NOT_APPLICABLE;
}

void rho_prediction(ExtremalReport& rep) {
    const EnumFilter& f = rep.filter;
    if (!f.require_triangle_free || f.connected_only) {
        rep.matches_paper_prediction = TriState::NOT_APPLICABLE;
        return;
    }
    std::vector<std::string> winners_sorted = rep.winners;
    std::sort(winners_sorted.begin(), winners_sorted.end());
    auto single = [&](const Graph& g, TriState& out) {
        std::vector<std::string> expect{graph6_encode(canonical_form(g))};
        out = (winners_sorted == expect) ? TriState::YES : TriState::NO;
    };
    if (f.min_chromatic >= 4 && !f.non_bipartite_only) {
        if (rep.n < 11) {
            rep.matches_paper_prediction = TriState::NOT_APPLICABLE;
            rep.prediction_note = "prediction undefined below n = 11";
            return;
        }
        long long s = (rep.n - 11) / 2, t = (rep.n - 7 + 1) / 2;
        single(expand(f1_st(s, t)), rep.matches_paper_prediction);
        rep.prediction_note =
            "spectral-extremal theorem is asymptotic (recorded, not asserted): prediction "
            "F1(floor((n-11)/2), ceil((n-7)/2))";
        return;
    }
    if (f.non_bipartite_only && f.min_chromatic <= 2) {
        if (rep.n < 3) {
            rep.matches_paper_prediction = TriState::NOT_APPLICABLE;
            return;
        }
        single(sk_ab((rep.n - 1 + 1) / 2, (rep.n - 1) / 2), rep.matches_paper_prediction);
        rep.prediction_note = "prediction SK_{ceil((n-1)/2), floor((n-1)/2)} (exact for n >= 5)";
        return;
    }
    if (f.min_chromatic <= 2) {
        single(turan(rep.n, 2), rep.matches_paper_prediction);
        rep.prediction_note = "spectral Turan: unique maximizer T_{n,2}";
        return;
    }
    rep.matches_paper_prediction = TriState::NOT_APPLICABLE;
}

struct TournamentResult {
    std::vector<SmallGraph> winners;  // in stream order
    CertifiedInterval best;
    long long examined = 0;
};

// TODO: certify stream candidates in parallel (merge by stream index) if
// spectral searches at n >= 12 ever become a routine use; the n <= 10
// acceptance runs finish in under a second serially.
TournamentResult spectral_tournament(
    const std::function<void(const std::function<void(const SmallGraph&)>&)>& source,
    const VerifyOptions& opt) {
    struct Live {
        SmallGraph g;
        CertifiedInterval iv;
        long long idx;
    };
    TournamentResult res;
    std::vector<Live> live;
    Rat best_lo(0);
    bool have = false;
    source([&](const SmallGraph& g) {
        long long idx = res.examined++;
        CertifiedInterval iv = rho_graph(from_small(g), opt.tol);
        if (have && iv.hi < best_lo) return;
        live.push_back({g, iv, idx});
        if (!have || iv.lo > best_lo) {
            best_lo = iv.lo > best_lo ? iv.lo : best_lo;
            have = true;
            std::erase_if(live, [&](const Live& l) { return l.iv.hi < best_lo; });
        }
    });
    if (!have) return res;

    size_t inc = 0;
    for (size_t i = 1; i < live.size(); ++i)
        if (live[i].iv.lo > live[inc].iv.lo) inc = i;

    std::vector<size_t> winner_idx{inc};
    for (size_t i = 0; i < live.size(); ++i) {
        if (i == inc) continue;
        RhoOrder ord =
            compare_rho_graph(from_small(live[i].g), from_small(live[inc].g), opt.budget);
        if (ord == RhoOrder::LESS) continue;
        if (ord == RhoOrder::EQUAL) {
            winner_idx.push_back(i);
        } else {
            inc = i;  // dethroned: previous winners were equal to a smaller value
            winner_idx.assign(1, i);
        }
    }
    std::sort(winner_idx.begin(), winner_idx.end(),
              [&](size_t a, size_t b) { return live[a].idx < live[b].idx; });
    for (size_t i : winner_idx) res.winners.push_back(live[i].g);
    res.best = live[inc].iv;
    return res;
}

}  // namespace

ExtremalReport extremal_edges(int n, const EnumFilter& f, const VerifyOptions& opt) {
    ExtremalReport rep;
    rep.n = n;
    rep.objective = Objective::EDGES;
    rep.filter = f;
    long long best = -1;
    std::vector<SmallGraph> winners;
    stream_classes(n, f, opt, [&](const SmallGraph& g) {
        ++rep.classes_examined;
        long long e = g.edge_count();
        if (e > best) {
            best = e;
            winners.assign(1, g);
        } else if (e == best) {
            winners.push_back(g);
        }
    });
    rep.value_edges = best;
    for (const SmallGraph& w : winners) {
        revalidate_winner(w, f);
        rep.winners.push_back(g6(w));
    }
    if (rep.classes_examined == 0 && f.min_chromatic >= 4 && n <= 10)
        rep.prediction_note =
            "empty by theory: a triangle-free graph with chromatic number >= 4 needs >= 11 "
            "vertices";
    else
        edges_prediction(rep);
    return rep;
}

ExtremalReport extremal_spectral(int n, const EnumFilter& f, const VerifyOptions& opt) {
    ExtremalReport rep;
    rep.n = n;
    rep.objective = Objective::RHO;
    rep.filter = f;
    TournamentResult t = spectral_tournament(
        [&](const std::function<void(const SmallGraph&)>& sink) {
            stream_classes(n, f, opt, sink);
        },
        opt);
    rep.classes_examined = t.examined;
    rep.value_rho = t.best;
    for (const SmallGraph& w : t.winners) {
        revalidate_winner(w, f);
        rep.winners.push_back(g6(w));
    }
    if (rep.classes_examined == 0 && f.min_chromatic >= 4 && n <= 10)
        rep.prediction_note =
            "empty by theory: a triangle-free graph with chromatic number >= 4 needs >= 11 "
            "vertices";
    else
        rho_prediction(rep);
    return rep;
}

bool check_nosal(const Graph& g, const VerifyOptions& opt) {
    if (!is_triangle_free(g))
        throw std::invalid_argument("check_nosal: input must be triangle-free");
    CertifiedInterval iv = rho_graph(g, opt.tol);
    Rat slack = rat_from_decimal("1e-9");
    Rat h = iv.hi - slack;
    if (h <= 0) return true;
    return h * h <= Rat(static_cast<long>(g.edge_count()));
}

bool check_vertex_deletion(const Graph& g, int u, const VerifyOptions& opt) {
    if (u < 0 || u >= g.n) throw std::invalid_argument("check_vertex_deletion: vertex out of range");
    CertifiedInterval ig = rho_graph(g, opt.tol);
    CertifiedInterval id = rho_graph(delete_vertex(g, u), opt.tol);
    Rat slack = rat_from_decimal("1e-9");
    return ig.lo * ig.lo <= id.hi * id.hi + Rat(2 * g.degree(u)) + slack;
}

namespace {

Graph complete_multipartite(const std::vector<long long>& parts) {
    long long n = 0;
    for (long long p : parts) n += p;
    if (n > 4000) throw std::invalid_argument("perturbation check: order too large");
    Graph g(static_cast<int>(n));
    std::vector<int> part_of(n);
    int v = 0;
    for (size_t p = 0; p < parts.size(); ++p)
        for (long long i = 0; i < parts[p]; ++i) part_of[v++] = static_cast<int>(p);
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            if (part_of[a] != part_of[b]) g.add_edge(a, b);
    return g;
}

}  // namespace

PerturbationResult check_perturbation_bound(const PerturbationSpec& p, const VerifyOptions& opt) {
    PerturbationResult res;
    const int r = static_cast<int>(p.part_sizes.size());
    if (r < 2) throw std::invalid_argument("perturbation check: need r >= 2 parts");
    for (size_t i = 0; i < p.part_sizes.size(); ++i) {
        if (p.part_sizes[i] < 1) throw std::invalid_argument("perturbation check: empty part");
        if (i > 0 && p.part_sizes[i] > p.part_sizes[i - 1])
            throw std::invalid_argument("perturbation check: parts must be in decreasing order");
    }
    long long n = 0;
    for (long long s : p.part_sizes) n += s;
    const long long n1 = p.part_sizes.front(), nr = p.part_sizes.back();

    Graph k = complete_multipartite(p.part_sizes);
    Graph g = k;
    std::vector<int> part_of(n);
    {
        int v = 0;
        for (size_t q = 0; q < p.part_sizes.size(); ++q)
            for (long long i = 0; i < p.part_sizes[q]; ++i) part_of[v++] = static_cast<int>(q);
    }
    for (auto [u, v] : p.added_class_edges) {
        if (u < 0 || v < 0 || u >= g.n || v >= g.n || u == v || part_of[u] != part_of[v] ||
            g.has_edge(u, v))
            throw std::invalid_argument("perturbation check: malformed class-edge");
        g.add_edge(u, v);
    }
    for (auto [u, v] : p.deleted_cross_edges) {
        if (u < 0 || v < 0 || u >= g.n || v >= g.n || part_of[u] == part_of[v] || !g.has_edge(u, v))
            throw std::invalid_argument("perturbation check: malformed cross-edge");
        g.adj[u].reset(v);
        g.adj[v].reset(u);
    }

    const long long a1 = static_cast<long long>(p.added_class_edges.size());
    const long long a2 = static_cast<long long>(p.deleted_cross_edges.size());
    res.alpha_gate_ok = std::max(a1, a2) * 8000LL * r * r * r <= n;  // (20r)^3 = 8000 r^3
    res.size_gate_ok = n >= 400LL * r;

    const Rat rn(static_cast<long>(n));
    const Rat shift = Rat(2 * static_cast<long>(a1 - a2)) / rn;

    bool branch1 = (n1 - nr) * 400 <= n;
    bool branch2 = p.k.has_value() && *p.k >= 1 && n1 - nr >= 2 * *p.k;
    if (!branch1 && !branch2) {
        res.verdict = PerturbationVerdict::NOT_APPLICABLE;
        res.detail = "neither estimate applies: parts unbalanced beyond n/400 and no imbalance "
                     "witness k supplied";
        return res;
    }

    Rat tol = opt.tol;
    for (int attempt = 0; attempt < 3; ++attempt, tol /= 1000) {
        res.rho_g = rho_graph(g, tol);
        res.rho_k = rho_graph(k, tol);
        if (branch1) {
            res.branch = 1;
            Rat phi(static_cast<long>(std::max(n1 - nr, 2 * (a1 + a2))));
            Rat rhs = Rat(56 * static_cast<long>(a1 + a2)) * phi / (rn * rn);
            Rat dlo = res.rho_g.lo - res.rho_k.hi - shift;
            Rat dhi = res.rho_g.hi - res.rho_k.lo - shift;
            Rat alo = abs(dlo), ahi = abs(dhi);
            Rat abs_max = std::max(alo, ahi);
            Rat abs_min = (dlo <= 0 && dhi >= 0) ? Rat(0) : std::min(alo, ahi);
            if (abs_max <= rhs) {
                res.verdict = PerturbationVerdict::PASS;
                res.detail = "|rho(G)-rho(K)-2(a1-a2)/n| <= 56(a1+a2)phi/n^2 certified";
                return res;
            }
            if (abs_min > rhs) {
                res.verdict = PerturbationVerdict::FAIL;
                res.detail = "estimate (i) violated by certified margin";
                return res;
            }
        } else {
            res.branch = 2;
            const long long kk = *p.k;
            CertifiedInterval rho_t = rho_graph(turan(static_cast<int>(n), r), tol);
            Rat psi(static_cast<long>(std::max(3 * kk, 2 * (a1 + a2))));
            Rat one_minus = Rat(1) - Rat(28 * r) * psi / rn;
            Rat pow4 = one_minus * one_minus * one_minus * one_minus;
            Rat drop = Rat(2 * (r - 1) * static_cast<long>(kk * kk)) / (Rat(r) * rn) * pow4;
            Rat pert = Rat(56 * static_cast<long>(a1 + a2) * 7 * r) * psi / (rn * rn);
            Rat rhs_lo = rho_t.lo + shift - drop + pert;
            Rat rhs_hi = rho_t.hi + shift - drop + pert;
            if (res.rho_g.hi <= rhs_lo) {
                res.verdict = PerturbationVerdict::PASS;
                res.detail = "estimate (ii) upper bound certified";
                return res;
            }
            if (res.rho_g.lo > rhs_hi) {
                res.verdict = PerturbationVerdict::FAIL;
                res.detail = "estimate (ii) violated by certified margin";
                return res;
            }
        }
    }
    throw std::runtime_error(
        "perturbation check: certified intervals too wide to decide either way");
}

std::vector<PerturbationSpec> seeded_perturbation_specs(uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    auto pick = [&](long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(rng() % static_cast<uint64_t>(hi - lo + 1));
    };
    std::vector<PerturbationSpec> specs;
    while (static_cast<int>(specs.size()) < count) {
        PerturbationSpec s;
        long long a = pick(10, 100);  // K2(a,a), n = 2a <= 200
        s.part_sizes = {a, a};
        long long a1 = pick(0, 3);
        long long a2 = pick(0, 3 - a1);
        std::set<std::pair<int, int>> used;
        while (static_cast<long long>(s.added_class_edges.size()) < a1) {
            int part = static_cast<int>(pick(0, 1));
            int u = static_cast<int>(pick(0, a - 1)) + part * static_cast<int>(a);
            int v = static_cast<int>(pick(0, a - 1)) + part * static_cast<int>(a);
            if (u == v) continue;
            auto e = std::minmax(u, v);
            if (used.insert({e.first, e.second}).second)
                s.added_class_edges.emplace_back(e.first, e.second);
        }
        while (static_cast<long long>(s.deleted_cross_edges.size()) < a2) {
            int u = static_cast<int>(pick(0, a - 1));
            int v = static_cast<int>(a + pick(0, a - 1));
            if (used.insert({u, v}).second) s.deleted_cross_edges.emplace_back(u, v);
        }
        specs.push_back(std::move(s));
    }
    return specs;
}

BalancedBlowupResult check_balanced_blowup(long long n, const VerifyOptions& opt) {
    if (n < 60)
        throw std::invalid_argument(
            "check_balanced_blowup: n >= 60 required so all class sizes stay positive across "
            "|s| <= 22");
    BalancedBlowupResult res;
    res.sstar = (n % 2 != 0) ? 0 : 1;
    auto quotient_for = [&](long long s) {
        return quotient_matrix(f1_st((n - 11 - s) / 2, (n - 7 + s) / 2));
    };
    QuotientMatrix qstar = quotient_for(res.sstar);
    for (long long s = -22; s <= 22; ++s) {
        if ((n - 11 - s) % 2 != 0) continue;  // class sizes must be integers
        if (s == res.sstar) continue;
        RhoOrder ord = compare_rho(quotient_for(s), qstar, opt.budget);
        if (ord != RhoOrder::LESS) {
            res.ok = false;
            res.detail = "offset s = " + std::to_string(s) + " is not certified strictly below "
                         "the balanced blow-up";
            return res;
        }
        ++res.comparisons;
    }
    res.ok = true;
    res.detail = std::to_string(res.comparisons) + " strict comparisons certified against s* = " +
                 std::to_string(res.sstar);
    return res;
}

IntervalClaimResult check_interval_claim(long long n, const VerifyOptions& opt) {
    if (n < 60) throw std::invalid_argument("check_interval_claim: n >= 60 required");
    IntervalClaimResult res;
    long long s = (n - 11) / 2;         // floor
    long long t = (n - 7 + 1) / 2;      // ceil
    QuotientMatrix q = quotient_matrix(f1_st(s, t));
    res.rho = rho_quotient(q, opt.tol);
    Rat lb = Rat(static_cast<long>(n - 3)) / 2 - Rat(66) / Rat(5 * static_cast<long>(n));
    Rat ub = Rat(static_cast<long>(n)) / 2;
    res.ok = res.rho.lo >= lb && res.rho.hi <= ub;
    res.detail = res.ok ? "certified inside [(n-3)/2 - 13.2/n, n/2]"
                        : "certified interval escapes the claimed range";
    return res;
}

bool verify_spectral_turan(int n, const VerifyOptions& opt) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("verify_spectral_turan: oracle path requires 1 <= n <= 7");
    TournamentResult t = spectral_tournament(
        [&](const std::function<void(const SmallGraph&)>& sink) {
            for (const SmallGraph& g : brute_force_all_small(n))
                if (small_is_triangle_free(g)) sink(g);
        },
        opt);
    if (t.winners.size() != 1) return false;
    return g6(t.winners[0]) == graph6_encode(canonical_form(turan(n, 2)));
}

}  // namespace trispec
