// Acceptance suite: one criterion per invocation (1..8, or "all"). Each
// criterion prints a PASS/FAIL line per clause plus a summary line; the exit
// status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "ramseykit/bounds.hpp"
#include "ramseykit/construction.hpp"
#include "ramseykit/graph.hpp"
#include "ramseykit/kernel.hpp"
#include "ramseykit/pattern.hpp"
#include "ramseykit/quasirandom.hpp"
#include "ramseykit/rng.hpp"
#include "ramseykit/simd.hpp"

using namespace rk;

namespace {

int hw_jobs() {
    unsigned c = std::thread::hardware_concurrency();
    return c == 0 ? 1 : static_cast<int>(c);
}

struct Criterion {
    int number;
    bool pass = true;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Criterion(int n) : number(n) {}

    void clause(const std::string& name, bool ok, const std::string& detail = "") {
        pass = pass && ok;
        std::printf("  [%s] %s%s%s\n", ok ? "pass" : "FAIL", name.c_str(), detail.empty() ? "" : " -- ",
                    detail.c_str());
        std::fflush(stdout);
    }

    void note(const std::string& text) { std::printf("  note: %s\n", text.c_str()); }

    bool finish() {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %d (%.1fs)\n", pass ? "PASS" : "FAIL", number, secs);
        std::fflush(stdout);
        return pass;
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// 1. Exact expansion identity for every H on <= 5 vertices without isolated
//    vertices, 50 seeded graphs with n <= 10, p in {1/3, 1/2, 2/3}.
bool criterion_1() {
    Criterion c(1);
    const auto& patterns = all_patterns_up_to(5, true);
    const Rat ps[3] = {Rat(1, 3), Rat(1, 2), Rat(2, 3)};
    long long checked = 0, matched = 0;
    for (int gi = 0; gi < 50; ++gi) {
        int n = 5 + gi % 6;  // 5..10
        SimpleGraph g = gnp_graph(n, 0.5, 1000 + static_cast<std::uint64_t>(gi));
        for (const Rat& p : ps) {
            ExpansionCache cache;
            for (const auto& h : patterns) {
                Expansion ex = expansion(h, g, p, &cache);
                ++checked;
                matched += ex.exact_match;
            }
        }
    }
    c.clause("t_H(W_G) = sum_J p^{e(H)-e(J)} C_{H,J} t_J(f) exactly, " + std::to_string(checked) +
                 " instances",
             matched == checked,
             std::to_string(matched) + "/" + std::to_string(checked) + " exact matches");
    return c.finish();
}

// 2. Unconditional inequality suites: zero violations across seeded kernels,
//    graphs, and all patterns up to 6 vertices.
bool criterion_2() {
    Criterion c(2);
    int jobs = hw_jobs();
    for (const std::string suite : {"kab", "local", "bipartite-global", "general-global", "k2a"}) {
        auto rows = run_suite(suite, 1000, 20240917, jobs);
        int violations = 0;
        double min_slack = HUGE_VAL;
        for (const auto& r : rows) {
            violations += !r.holds;
            min_slack = std::min(min_slack, r.slack);
        }
        c.clause(suite + ": 1000 trials", violations == 0,
                 std::to_string(violations) + " violations, min slack " + fmt(min_slack));
    }
    return c.finish();
}

// 3. Exact block-construction formulas: connected density closed form and the
//    deviation lower bound.
bool criterion_3() {
    Criterion c(3);
    long long formula_checked = 0;
    bool formula_ok = true;
    for (const auto& j : all_patterns_up_to(5, true)) {
        if (!j.is_connected()) continue;
        for (int m = 1; m <= 8; ++m) {
            try {
                Rat v = connected_density(j, m);  // throws if formula != enumeration
                Rat expect = Rat(1, 1ll << j.edge_count()) * Rat::pow(Rat(m), 1 - j.vertex_count());
                formula_ok = formula_ok && v == expect;
            } catch (const std::exception&) {
                formula_ok = false;
            }
            ++formula_checked;
        }
    }
    c.clause("t_J(W - 1/2) = 2^{-e(J)} m^{1-v(J)} exactly, connected J <= 5 vertices, m in 1..8",
             formula_ok, std::to_string(formula_checked) + " (J, m) pairs");

    bool dev_ok = true;
    for (int r = 2; r <= 4; ++r)
        for (int m = 1; m <= 8; ++m) {
            DeviationBound d = deviation_lower_bound(r, m);
            dev_ok = dev_ok && d.holds;
        }
    c.clause("deviation sum >= 2^{C(r-1,2)} m^{1-r} for r in {2,3,4}, m in 1..8", dev_ok);
    return c.finish();
}

// 4. W-random statistics scaling: mu and nu inside [1/(8m), 2/m] for at least
//    18 of 20 seeds at each m in {2, 4, 8} with n = 500 m^2.
bool criterion_4() {
    Criterion c(4);
    int jobs = hw_jobs();
    std::printf("  (simd level: %s, %d worker threads)\n", simd::level_name(simd::active_level()), jobs);
    for (int m : {2, 4, 8}) {
        int n = 500 * m * m;
        double lo = 1.0 / (8.0 * m), hi = 2.0 / m;
        int in_band = 0;
        StepKernel kernel = block_graphon(m).kernel;
        for (int seed = 0; seed < 20; ++seed) {
            SimpleGraph g = w_random_graph(kernel, n, 5000 + static_cast<std::uint64_t>(seed));
            CenteredStats st = centered_stats(g, Rat(1, 2), jobs);
            bool ok = st.mu_d >= lo && st.mu_d <= hi && st.nu_d >= lo && st.nu_d <= hi;
            in_band += ok;
        }
        c.clause("m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                     ": mu, nu in [1/(8m), 2/m] for >= 18/20 seeds",
                 in_band >= 18, std::to_string(in_band) + "/20 in band");
    }
    return c.finish();
}

// 5. rho/phi calculus: grid properties, the eps/2 floor, finite-difference
//    agreement, and the smoothness ratio checks.
bool criterion_5() {
    Criterion c(5);
    bool grid_ok = true;
    std::string first_fail;
    for (int r = 5; r <= 12; ++r)
        for (double eps : {0.1, 0.25, 0.4}) {
            BoundConfig cfg{r, eps, 1.0, 1e-2};
            for (const auto& rep : rho_properties_check(cfg, 10000)) {
                if (!rep.holds && first_fail.empty())
                    first_fail = rep.name + " at r=" + std::to_string(r) + " eps=" + fmt(eps);
                grid_ok = grid_ok && rep.holds;
            }
        }
    c.clause("rho range/derivative/floor/finite-difference grid, (r,eps) in {5..12}x{0.1,0.25,0.4}",
             grid_ok, first_fail);

    bool smooth_ok = true;
    long long pairs = 0;
    std::string cert_fail;
    SplitMix rng(777);
    for (int r = 5; r <= 12; ++r)
        for (double eps : {0.1, 0.25, 0.4}) {
            BoundConfig cfg{r, eps, 1.0, 1e-2};
            double need = 200.0 * std::pow(static_cast<double>(r), 4) / (eps * eps);
            for (int t = 0; t < 100; ++t) {
                long long k = static_cast<long long>(need) + 1 +
                              static_cast<long long>(rng.next_below(1u << 22));
                double x = eps + (1.0 - eps) * rng.next_double();
                long long l = std::max<long long>(static_cast<long long>(need) + 1,
                                                  static_cast<long long>(x * static_cast<double>(k)));
                SmoothnessCertificate cert = smoothness_certificate(cfg, k, l);
                ++pairs;
                if (!cert.all_hold && cert_fail.empty())
                    cert_fail = "r=" + std::to_string(r) + " eps=" + fmt(eps) + " k=" + std::to_string(k) +
                                " l=" + std::to_string(l);
                smooth_ok = smooth_ok && cert.all_hold;
            }
        }
    c.clause("smoothness ratio checks at " + std::to_string(pairs) + " (k,l) pairs with k,l >= 200r^4/eps^2",
             smooth_ok, cert_fail);
    return c.finish();
}

// 6. Bound reproduction on the diagonal log grid with r=8, eps=0.25, C_eps=1.
bool criterion_6() {
    Criterion c(6);
    BoundConfig cfg{8, 0.25, 1.0, 1e-2};
    std::vector<long long> grid;
    for (int i = 0; i <= 8; ++i)
        grid.push_back(static_cast<long long>(std::llround(std::pow(10.0, 3.0 + 0.5 * i))));

    bool beats_es = true;
    long long first_fail_k = 0;
    double threshold = std::pow(2.0, cfg.c_eps * cfg.r);
    for (long long k : grid) {
        BoundResult res = ramsey_upper_bound(cfg, k, k);
        if (static_cast<double>(k) >= threshold && !(res.bound_log.ln < res.es_log.ln)) {
            if (first_fail_k == 0) first_fail_k = k;
            beats_es = false;
        }
    }
    c.clause("bound_log < es_baseline_log for all k >= 2^{C_eps r} on the grid (as stated, C_eps = 1)",
             beats_es,
             beats_es ? ""
                      : "first failure at k = " + std::to_string(first_fail_k) +
                            "; with C_eps = 1 the prefactor 2^{C_eps r^2} = 2^64 exceeds the "
                            "deflation exp(-phi) = 1/(2k) for every k <= 1e7 (the formula only "
                            "beats Erdos-Szekeres once 2k > 2^64, i.e. k > 9.2e18)");
    if (!beats_es)
        c.note("the stated threshold k >= 2^{C_eps r} = 256 would require C_eps <= 1/(r^2 - r); "
               "informational sweep with C_eps = 1/56 follows");
    {
        BoundConfig small{8, 0.25, 1.0 / 56.0, 1e-2};
        bool ok = true;
        for (long long k : grid) {
            BoundResult res = ramsey_upper_bound(small, k, k);
            if (static_cast<double>(k) >= std::pow(2.0, small.c_eps * small.r))
                ok = ok && res.bound_log.ln < res.es_log.ln;
        }
        c.note(std::string("informational (not the stated criterion): C_eps = 1/56 grid ") +
               (ok ? "improves on Erdos-Szekeres at every point" : "still fails"));
    }

    bool closed_ok = true;
    for (long long k : grid) {
        BoundResult res = ramsey_upper_bound(cfg, k, k);
        double closed = cfg.c_eps * cfg.r * cfg.r * std::log(2.0) +
                        log_binomial(static_cast<double>(2 * k), static_cast<double>(k)) -
                        std::log(2.0 * static_cast<double>(k));
        closed_ok = closed_ok && std::fabs(res.bound_log.ln - closed) <=
                                     1e-9 * std::max(1.0, std::fabs(closed));
    }
    c.clause("diagonal bound matches 2^{C_eps r^2} C(2k,k)/(2k) to 1e-9 relative", closed_ok);

    bool best_ok = true;
    bool any_induction = false;
    for (long long k : grid) {
        BoundResult res = best_bound(k, k, cfg.epsilon, cfg.c_eps);
        double logk = std::log(static_cast<double>(k));
        best_ok = best_ok && res.ratio_log.ln <= -res.derived_c * logk * logk + 1e-12;
        any_induction = any_induction || res.regime != BoundRegime::es_smallr;
    }
    c.clause("best_bound ratio_log <= -c (log k)^2 for its derived c at every grid point", best_ok,
             any_induction ? "" : "all grid points fall back to Erdos-Szekeres (prescribed r < 5), c = 0");
    return c.finish();
}

// 7. Ramsey semantics oracle.
bool criterion_7() {
    Criterion c(7);
    auto r33 = ramsey_exact(3, 3, 6);
    c.clause("ramsey_exact(3,3,6) = 6", r33.has_value() && *r33 == 6);

    auto g5 = find_ramsey_witness(3, 3, 5);
    bool pentagon = false;
    if (g5) {
        PatternGraph p5(5, [&] {
            std::vector<std::pair<int, int>> es;
            for (int u = 0; u < 5; ++u)
                for (int v = u + 1; v < 5; ++v)
                    if (g5->has_edge(u, v)) es.emplace_back(u, v);
            return es;
        }());
        pentagon = find_isomorphism(p5, pattern_from_name("C5")).has_value();
    }
    c.clause("the n=5 witness is C_5", pentagon);

    SimpleGraph p17 = paley_graph(17);
    RamseyWitness w{p17, 3, 3};
    c.clause("Paley(17) is a (3,3)-witness with clique and independence numbers 3",
             w.verify() && p17.clique_number() == 3 && p17.independence_number() == 3);

    bool goodman_ok = true;
    SplitMix rng(99);
    for (int t = 0; t < 100; ++t) {
        SimpleGraph g = gnp_graph(4 + static_cast<int>(rng.next_below(9)), 0.5, rng.fork());
        goodman_ok = goodman_ok && goodman(g).equal;
    }
    c.clause("Goodman identity exact on 100 seeded graphs, n <= 12", goodman_ok);

    // Stretch (non-blocking by the criterion text, asserted because it is fast).
    auto r34 = ramsey_exact(3, 4, 9);
    SimpleGraph c814 = circulant_graph(8, {1, 4});
    bool stretch = r34.has_value() && *r34 == 9 && c814.clique_number() == 2 &&
                   c814.independence_number() == 3 && find_ramsey_witness(3, 4, 8).has_value();
    c.clause("stretch: ramsey_exact(3,4,9) = 9 with the circulant C_8(1,4) witness", stretch);
    return c.finish();
}

// 8. Effective-distance applicability honesty.
bool criterion_8() {
    Criterion c(8);
    struct Instance {
        const char* name;
        PatternGraph h;
        SimpleGraph g;
        Rat p;
    };
    std::vector<Instance> instances;
    instances.push_back({"K4 / Paley(17), p=1/2", pattern_from_name("K4"), paley_graph(17), Rat(1, 2)});
    instances.push_back({"K4 / G(60,1/2), p=1/2", pattern_from_name("K4"), gnp_graph(60, 0.5, 8), Rat(1, 2)});
    instances.push_back({"K5 / G(40,1/2), p=1/3", pattern_from_name("K5"), gnp_graph(40, 0.5, 9), Rat(1, 3)});
    instances.push_back({"K4 / wrand(m=4, n=500), p=1/2", pattern_from_name("K4"),
                         w_random_graph(block_graphon(4).kernel, 500, 77), Rat(1, 2)});
    instances.push_back({"K3 / C5, p=2/5", pattern_from_name("K3"), cycle_graph(5), Rat(2, 5)});

    bool all_flagged = true, mu_ok = true;
    for (const auto& inst : instances) {
        CenteredStats st = centered_stats(inst.g, inst.p);
        double nu = std::max(st.nu_d, 1e-6);
        DiscrepancyReport rep = effective_distance_report(inst.h, inst.g, inst.p, nu);
        bool some_unmet = false;
        for (const auto& [name, ok] : rep.preconditions) some_unmet = some_unmet || !ok;
        all_flagged = all_flagged && some_unmet;
        mu_ok = mu_ok && rep.mu_terms_ok;
    }
    c.clause("every desk-scale instance flags at least one unmet precondition", all_flagged);
    c.clause("|t_{K_{1,2}}(f)| <= mu^2 and |t_{K_2+K_2}(f)| <= mu^2 on every instance", mu_ok);
    return c.finish();
}

}  // namespace

int main(int argc, char** argv) {
    std::string which = argc > 1 ? argv[1] : "all";
    bool (*criteria[8])() = {criterion_1, criterion_2, criterion_3, criterion_4,
                             criterion_5, criterion_6, criterion_7, criterion_8};
    int failed = 0;
    if (which == "all") {
        for (int i = 0; i < 8; ++i) failed += !criteria[i]();
        std::printf("%d/8 criteria passed\n", 8 - failed);
    } else {
        int n = std::atoi(which.c_str());
        if (n < 1 || n > 8) {
            std::fprintf(stderr, "usage: acceptance [1..8|all]\n");
            return 2;
        }
        failed = !criteria[n - 1]();
    }
    return failed;
}
