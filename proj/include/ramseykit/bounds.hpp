#pragma once

#include <string>
#include <vector>

#include "ramseykit/exact.hpp"
#include "ramseykit/graph.hpp"
#include "ramseykit/quasirandom.hpp"

namespace rk {

// Parameters of the induction bound. C_eps (the 2^{C_eps r^2} prefactor
// constant) and c_eps_small (the inductive-step constant) are configuration:
// the source theorems leave them implicit.
struct BoundConfig {
    int r = 8;
    double epsilon = 0.25;
    double c_eps = 1.0;
    double c_eps_small = 1e-2;

    void validate() const;
};

// tau(x) = 6x^5 - 15x^4 + 10x^3 and its derivatives.
double tau(double x);
double tau_d1(double x);
double tau_d2(double x);

// The piecewise ramp rho_{r,eps}: 0 on [0,eps], scaled tau on [eps,1],
// reflected through x -> 1/x beyond. Closed-form derivatives via the chain
// rule through the reflection. Long-double internals; these feed difference
// checks at k ~ 1e9 where double cancellation would bite.
double rho(const BoundConfig& cfg, double x);
double rho_d1(const BoundConfig& cfg, double x);
double rho_d2(const BoundConfig& cfg, double x);
long double rho_ld(const BoundConfig& cfg, long double x);

// phi(k,l) = rho(l/k) log(k+l).
double phi(const BoundConfig& cfg, long long k, long long l);
long double phi_ld(const BoundConfig& cfg, long double k, long double l);

// ln alpha(k,l) = C_eps r^2 ln 2 - phi(k,l).
double log_alpha(const BoundConfig& cfg, long long k, long long l);

// alpha*(k,l) = floor(alpha binom(k+l,k)) / binom(k+l,k). The floor is exact
// big-integer arithmetic when alpha itself is rational (rho integral at l/k
// and C_eps r^2 integral); otherwise a high-precision float floor, flagged.
struct AlphaStar {
    bool exact = false;
    Rat value;           // exact path only
    BigInt floor_num;    // floor(alpha * binom), exact path only
    double log_value = 0.0;
};

AlphaStar alpha_star(const BoundConfig& cfg, long long k, long long l);

// Grid verification of the rho calculus: range bound, derivative sup-norms,
// the (r-4)eps^3/32 floor at eps/2, and finite-difference agreement of the
// closed-form derivatives.
std::vector<InequalityReport> rho_properties_check(const BoundConfig& cfg, int grid_size);

struct RatioCheck {
    int m = 0;
    std::string which;   // "b", "c", "beta", "gamma"
    double lhs = 0.0, rhs = 0.0;
    bool holds = false;
};

// Verified smoothness data for alpha = 2^{C_eps r^2} exp(-phi): the (b, c)
// ratio bounds for m in {1, 2, r-1} plus the alpha*/floor-corrected (beta,
// gamma) checks.
struct SmoothnessCertificate {
    long long k = 0, l = 0;
    BoundConfig cfg;
    double b = 0.0, c = 0.0, beta = 0.0, gamma = 0.0;
    bool preconditions_met = false;  // k, l >= 200 r^4 / eps^2
    std::vector<RatioCheck> checks;
    bool all_hold = false;
};

SmoothnessCertificate smoothness_certificate(const BoundConfig& cfg, long long k, long long l);

// One report per hypothesis of the inductive step, with the k*beta + l*gamma
// check evaluated both directly and through the rho(l/k) + eps/2 identity.
std::vector<InequalityReport> inductive_step_preconditions(const BoundConfig& cfg,
                                                           const SmoothnessCertificate& cert);

// mu <= max(p beta, (1-p) gamma); nu <= 2 max(p,1-p)(p beta + (1-p) gamma) + 1/n.
struct DeviationBounds {
    double mu_bound = 0.0;
    double nu_bound = 0.0;
};
DeviationBounds degree_regularity_bounds(double p, double beta, double gamma, long long n);

// Degree interval forced on a Ramsey graph by the alpha ratios.
struct DegreeWindow {
    double lo = 0.0, hi = 0.0;
    bool empty = true;
};
DegreeWindow degree_window(double alpha_km1l, double alpha_klm1, double alpha_star_kl, long long k,
                           long long l, double n);

// Monochromatic triangle count vs the degree-sequence formula.
struct GoodmanResult {
    long long mono_triangles = 0;
    long long degree_formula = 0;
    bool equal = false;
};
GoodmanResult goodman(const SimpleGraph& g);

enum class BoundRegime { induction, es_base, es_smallr };
const char* regime_name(BoundRegime r);

struct BoundResult {
    long long k = 0, l = 0;
    BoundConfig cfg;
    int r_used = 0;
    double phi_value = 0.0;
    double log_alpha_value = 0.0;
    LogReal bound_log;   // ln of 2^{C r^2} exp(-phi) binom(k+l,k)
    LogReal es_log;      // ln binom(k+l,k)
    LogReal ratio_log;   // bound / es in log space
    BoundRegime regime = BoundRegime::induction;
    bool exact_available = false;
    BigInt exact_floor;  // floor of the bound when the exact path applies
    double derived_c = 0.0;  // best_bound: coefficient in ratio <= -c (log k)^2
};

BoundResult ramsey_upper_bound(const BoundConfig& cfg, long long k, long long l);

// The headline-bound evaluation: r = eps^3 log k / (64 C_eps) rounded down,
// the theorem applied at eps/2, Erdos-Szekeres fallback (flagged) when the
// prescribed r falls below 5.
BoundResult best_bound(long long k, long long l, double epsilon, double c_eps);

}  // namespace rk
