#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ramseykit/exact.hpp"
#include "ramseykit/graph.hpp"
#include "ramseykit/kernel.hpp"
#include "ramseykit/pattern.hpp"

namespace rk {

// Float-path inequality checks accept this much negative slack before a
// verdict flips to "violated"; the verified statements are exact theorems,
// so anything beyond noise signals an implementation bug.
inline constexpr double kSlackTol = 1e-9;

// Degree/codegree deviation stats of f_{p,G} = W_G - p. Computed exactly in
// scaled integers (the popcount path), held as rationals plus doubles.
struct CenteredStats {
    Rat p;
    int n = 0;
    Rat mu, nu;
    double mu_d = 0.0, nu_d = 0.0;
};

// Exact maxima; mu over vertices, nu one-sided over ordered distinct pairs.
CenteredStats centered_stats(const SimpleGraph& g, const Rat& p, int jobs = 1);

struct InequalityReport {
    std::string name;
    std::string instance;
    double lhs = 0.0, rhs = 0.0;
    double slack = 0.0;      // rhs - lhs
    bool holds = false;
    bool exact_comparison = false;  // verdict from rational arithmetic
    std::vector<std::pair<std::string, bool>> preconditions;
};

// |t_{K_{a,b}}(w)| <= |t_{K_{c,b}}(w)| for a >= c, c even.
InequalityReport verify_kab_monotone(int a, int b, int c, const StepKernel& w);

// |t_H(w)| <= |t_{K_{2,d}}(w)|^{1/2} for a vertex of degree d in H.
InequalityReport verify_local(const PatternGraph& h, int d, const StepKernel& w);

// |t_H(w)| <= |t_{K_{2,2*ceil(h/2)}}(w)|^{h/(2*ceil(h/2))} with h = |B|, for
// bipartite H whose B side has minimum degree 2. side_of[v] in {0,1}; B is 1.
InequalityReport verify_bipartite_global(const PatternGraph& h, const std::vector<int>& side_of,
                                         const StepKernel& w);

// |t_H(w)| <= |t_{K_{2,2*ceil(h/2)}}(w)|^{1/4} with h = v(H), no isolated vertices.
InequalityReport verify_general_global(const PatternGraph& h, const StepKernel& w);

// |t_{K_{2,a}}(f_{p,G})| <= 2 nu^a + 2 n^{-2/3}.
InequalityReport k2a_graph_bound(const SimpleGraph& g, const Rat& p, int a);

// Shared t_J(f) values across expansions of several patterns on one (G, p).
struct ExpansionCache {
    std::map<IsoClass, Rat> tj;
};

struct ExpansionTerm {
    IsoClass cls;
    int vertices = 0, edges = 0;
    long long count = 0;  // C_{H,J}
    Rat term;             // p^{e(H)-e(J)} C_{H,J} t_J(f)
};

// t_H(W_G) = sum_J p^{e(H)-e(J)} C_{H,J} t_J(f), evaluated as an exact
// rational identity.
struct Expansion {
    Rat total;
    Rat direct;
    bool exact_match = false;
    std::vector<ExpansionTerm> terms;
};

Expansion expansion(const PatternGraph& h, const SimpleGraph& g, const Rat& p,
                    ExpansionCache* cache = nullptr);

// Discrepancy report for the effective-distance bound. Preconditions are
// reported, never enforced: at desk scale nu^{-2r} <= n is out of reach, and
// the report records exactly which hypotheses fail.
struct DiscrepancyReport {
    double discrepancy = 0.0;   // |t_H(W_G)/p^e - 1 - p^{-1} e t_K2(f) - p^{-3} tri t_K3(f)|
    double bound = 0.0;         // 2^{-2r} nu^{7/6} + 3 C(r+1,4) p^{-2} mu^2
    double mu = 0.0;
    double nu_used = 0.0;
    double nu_graph = 0.0;
    int r = 0;
    long long edges = 0, triangles = 0;
    double t_k2 = 0.0, t_k3 = 0.0, t_k12 = 0.0, t_two_edges = 0.0;
    std::vector<std::pair<std::string, bool>> preconditions;
    bool applicable = false;     // all preconditions met
    bool within_bound = false;
    bool mu_terms_ok = false;    // |t_{K_{1,2}}(f)| <= mu^2 and |t_{K_2+K_2}(f)| <= mu^2
};

DiscrepancyReport effective_distance_report(const PatternGraph& h, const SimpleGraph& g,
                                            const Rat& p, double nu);

// Seeded adversarial kernel for sweeps: 2-8 atoms, uniform weights, values
// uniform in [-1,1] symmetrized by averaging.
StepKernel random_signed_kernel(std::uint64_t seed, int min_atoms = 2, int max_atoms = 8);

// Named verification sweeps ("kab", "local", "bipartite-global",
// "general-global", "k2a", "expansion"); one row per trial.
struct TrialRow {
    std::string suite;
    std::uint64_t seed = 0;
    std::string instance;
    double lhs = 0.0, rhs = 0.0, slack = 0.0;
    bool holds = false;
};

std::vector<TrialRow> run_suite(const std::string& suite, int trials, std::uint64_t master_seed,
                                int jobs = 1);
const std::vector<std::string>& suite_names();

}  // namespace rk
