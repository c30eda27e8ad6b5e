#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trispec/constructions.hpp"
#include "trispec/enumerate.hpp"
#include "trispec/spectral.hpp"

namespace trispec {

enum class TriState { YES, NO, NOT_APPLICABLE };
enum class Objective { EDGES, RHO };

const char* to_string(TriState t);
const char* to_string(Objective o);

struct VerifyOptions {
    int workers = 1;
    Rat tol = rat_from_decimal("1e-9");
    long long budget = 256;
};

struct ExtremalReport {
    int n = 0;
    Objective objective = Objective::EDGES;
    EnumFilter filter;
    std::vector<std::string> winners;  // canonical graph6, deterministic order
    long long value_edges = -1;        // EDGES objective
    CertifiedInterval value_rho;       // RHO objective
    long long classes_examined = 0;
    TriState matches_paper_prediction = TriState::NOT_APPLICABLE;
    std::string prediction_note;
};

// Exhaustive maximization over the enumerated stream.  The paper-prediction
// flag is recorded, never asserted: the theorems it references are
// asymptotic and n <= 13 is outside their stated range.
ExtremalReport extremal_edges(int n, const EnumFilter& f, const VerifyOptions& = {});
ExtremalReport extremal_spectral(int n, const EnumFilter& f, const VerifyOptions& = {});

// rho(g) <= sqrt(e(g)) + 1e-9 for triangle-free g, certified.
bool check_nosal(const Graph& g, const VerifyOptions& = {});

// rho(g)^2 <= rho(g - u)^2 + 2 deg(u) + 1e-9, certified.
bool check_vertex_deletion(const Graph& g, int u, const VerifyOptions& = {});

struct PerturbationSpec {
    std::vector<long long> part_sizes;  // n1 >= ... >= nr, all >= 1
    std::vector<std::pair<int, int>> added_class_edges;   // same-part vertex pairs
    std::vector<std::pair<int, int>> deleted_cross_edges; // cross-part vertex pairs
    std::optional<long long> k;  // imbalance witness for branch (ii)
};

enum class PerturbationVerdict { PASS, FAIL, NOT_APPLICABLE };

struct PerturbationResult {
    PerturbationVerdict verdict = PerturbationVerdict::NOT_APPLICABLE;
    int branch = 0;              // 1 = near-balanced, 2 = imbalance >= 2k, 0 = none
    bool alpha_gate_ok = false;  // max(a1,a2) <= n/(20r)^3, recorded not enforced
    bool size_gate_ok = false;   // n >= 400r proxy, recorded not enforced
    CertifiedInterval rho_g, rho_k;
    std::string detail;
};

// Builds G from the complete multipartite graph by the listed edits,
// certifies both spectral radii and checks whichever estimate applies.  The
// lemma's "n sufficiently large" and alpha gates are reported as flags; the
// numeric inequality is still evaluated when a branch hypothesis holds.
PerturbationResult check_perturbation_bound(const PerturbationSpec& p, const VerifyOptions& = {});

// Deterministic generator for the seeded property suite: balanced K2(a,a)
// with at most three perturbing edges.
std::vector<PerturbationSpec> seeded_perturbation_specs(uint64_t seed, int count);

struct BalancedBlowupResult {
    bool ok = false;
    long long sstar = 0;
    int comparisons = 0;  // certified strict comparisons performed
    std::string detail;
};

// For every admissible offset s (|s| <= 22, matching parity, s != s*),
// certifies rho(F1((n-11-s)/2, (n-7+s)/2)) strictly below the balanced
// blow-up via exact 11x11 quotient comparisons.
BalancedBlowupResult check_balanced_blowup(long long n, const VerifyOptions& = {});

struct IntervalClaimResult {
    bool ok = false;
    CertifiedInterval rho;
    std::string detail;
};

// (n-3)/2 - 13.2/n <= rho(F1(floor((n-11)/2), ceil((n-7)/2))) <= n/2.
IntervalClaimResult check_interval_claim(long long n, const VerifyOptions& = {});

// The unique certified rho-maximizer among triangle-free classes of order
// n <= 7 is the bipartite Turan graph.
bool verify_spectral_turan(int n, const VerifyOptions& = {});

}  // namespace trispec
