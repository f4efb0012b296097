#include "ramseykit/quasirandom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>

#include "ramseykit/parallel.hpp"
#include "ramseykit/rng.hpp"
#include "ramseykit/simd.hpp"

namespace rk {

namespace {
using i128 = __int128;

BigInt bigint_from_i128(i128 v) {
    bool neg = v < 0;
    unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    BigInt lo(static_cast<unsigned long long>(mag), 1);
    BigInt hi(static_cast<unsigned long long>(mag >> 64), 1);
    BigInt r = hi.shifted_left(64) + lo;
    if (neg && !r.is_zero()) r.negate();
    return r;
}

// Scaled centered-codegree numerator with p = pn/q:
//   s(x,y) = q^2 codeg(x,y) - q pn (d_x + d_y) + n pn^2,
// so that E_z f(x,z) f(z,y) = s(x,y) / (n q^2).
struct ScaledGraphStats {
    long long pn = 0, q = 0;
    int n = 0;
    std::vector<int> deg;
    const SimpleGraph* g = nullptr;

    long long pair_value(int x, int y) const {
        long long codeg = static_cast<long long>(simd::and_popcount(g->row(x), g->row(y), g->words_per_row()));
        return q * q * codeg - q * pn * (deg[x] + deg[y]) + static_cast<long long>(n) * pn * pn;
    }
};

ScaledGraphStats make_scaled(const SimpleGraph& g, const Rat& p) {
    if (p <= Rat(0) || p >= Rat(1)) throw DomainError("density parameter must lie in (0,1)");
    if (!p.den().fits_int64() || p.den().to_int64() > (1ll << 20))
        throw DomainError("density parameter denominator too large for the exact stats path");
    ScaledGraphStats s;
    s.pn = p.num().to_int64();
    s.q = p.den().to_int64();
    s.n = g.vertex_count();
    s.g = &g;
    s.deg.resize(static_cast<std::size_t>(s.n));
    for (int v = 0; v < s.n; ++v) s.deg[v] = g.degree(v);
    return s;
}

}  // namespace

CenteredStats centered_stats(const SimpleGraph& g, const Rat& p, int jobs) {
    ScaledGraphStats s = make_scaled(g, p);
    int n = s.n;
    if (n < 1) throw DomainError("centered_stats needs a nonempty graph");

    long long mu_num = 0;
    for (int x = 0; x < n; ++x)
        mu_num = std::max(mu_num, std::llabs(s.q * s.deg[x] - s.pn * static_cast<long long>(n)));

    // nu is symmetric in (x, y), so blocks with x <= y cover all ordered
    // distinct pairs. Two-level tiling: an outer x-block bounds how often the
    // y rows stream from memory, and 16x16 sub-tiles over 128-word strips
    // keep the popcount kernel's working set in L1. Codegrees for a tile pair
    // are accumulated in one counts matrix and centered afterwards.
    constexpr int kTile = 16;
    constexpr int kOuter = 128;
    constexpr std::size_t kWordTile = 128;
    std::size_t words = g.words_per_row();
    int nouter = (n + kOuter - 1) / kOuter;
    std::vector<long long> block_max(static_cast<std::size_t>(nouter), std::numeric_limits<long long>::min());
    parallel_for(nouter, jobs, [&](long long ob) {
        int ox0 = static_cast<int>(ob) * kOuter;
        int ox1 = std::min(n, ox0 + kOuter);
        long long local = std::numeric_limits<long long>::min();
        std::uint64_t counts[kTile * kTile];
        for (int y0 = ox0; y0 < n; y0 += kTile) {
            int ny = std::min(kTile, n - y0);
            for (int x0 = ox0; x0 < std::min(ox1, y0 + ny); x0 += kTile) {
                int nx = std::min(kTile, ox1 - x0);
                std::fill(counts, counts + static_cast<std::size_t>(nx) * ny, 0);
                for (std::size_t w0 = 0; w0 < words; w0 += kWordTile)
                    simd::and_popcount_block(g.row(x0), words, nx, g.row(y0), words, ny, w0,
                                             std::min(words, w0 + kWordTile), counts);
                for (int ix = 0; ix < nx; ++ix) {
                    int x = x0 + ix;
                    for (int jy = 0; jy < ny; ++jy) {
                        int y = y0 + jy;
                        if (y <= x) continue;
                        long long codeg =
                            static_cast<long long>(counts[static_cast<std::size_t>(ix) * ny + jy]);
                        long long v = s.q * s.q * codeg - s.q * s.pn * (s.deg[x] + s.deg[y]) +
                                      static_cast<long long>(n) * s.pn * s.pn;
                        local = std::max(local, v);
                    }
                }
            }
        }
        block_max[static_cast<std::size_t>(ob)] = local;
    });
    long long nu_num = std::numeric_limits<long long>::min();
    for (long long v : block_max) nu_num = std::max(nu_num, v);
    if (n == 1) nu_num = 0;
    nu_num = std::max(nu_num, 0ll);

    CenteredStats out;
    out.p = p;
    out.n = n;
    out.mu = Rat(BigInt(mu_num), BigInt(s.q) * BigInt(n));
    out.nu = Rat(BigInt(nu_num), BigInt(s.q) * BigInt(s.q) * BigInt(n));
    out.mu_d = out.mu.to_double();
    out.nu_d = out.nu.to_double();
    return out;
}

// ---------------------------------------------------------------------------
// Inequality verifiers.

namespace {

InequalityReport make_report(std::string name, double lhs, double rhs) {
    InequalityReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.holds = lhs <= rhs + kSlackTol;
    return r;
}

bool exact_kab_feasible(const StepKernel& w, int a, int b) {
    if (w.mode() != Mode::exact) return false;
    double m = w.atom_count();
    return std::pow(m, std::min(a, b) + 1) <= 2e6;
}

}  // namespace

InequalityReport verify_kab_monotone(int a, int b, int c, const StepKernel& w) {
    if (a < c) throw UsageError("verify_kab_monotone needs a >= c");
    if (c < 1 || c % 2 != 0) throw UsageError("verify_kab_monotone needs even positive c");
    if (b < 1) throw UsageError("verify_kab_monotone needs positive b");
    double lhs = std::fabs(kab_density(a, b, w));
    double rhs = std::fabs(kab_density(c, b, w));
    InequalityReport r = make_report("kab", lhs, rhs);
    r.preconditions = {{"a>=c", true}, {"c even", true}, {"sup_norm<=1", w.sup_norm() <= 1.0 + 1e-12}};
    if (exact_kab_feasible(w, a, b) && exact_kab_feasible(w, c, b)) {
        r.exact_comparison = true;
        r.holds = kab_density_exact(a, b, w).abs() <= kab_density_exact(c, b, w).abs();
    }
    return r;
}

InequalityReport verify_local(const PatternGraph& h, int d, const StepKernel& w) {
    bool found = false;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) == d) found = true;
    if (!found || d < 1) throw UsageError("verify_local: no vertex of the requested degree");
    double lhs = std::fabs(density(h, w));
    double t = kab_density(2, d, w);
    double rhs = std::sqrt(std::fabs(t));
    InequalityReport r = make_report("local", lhs, rhs);
    r.preconditions = {{"degree vertex", true}, {"sup_norm<=1", w.sup_norm() <= 1.0 + 1e-12}};
    if (w.mode() == Mode::exact && exact_kab_feasible(w, 2, d) &&
        std::pow(static_cast<double>(w.atom_count()), h.vertex_count()) <= 2e6) {
        Rat lq = density_exact(h, w).abs();
        Rat tq = kab_density_exact(2, d, w).abs();
        r.exact_comparison = true;
        r.holds = lq * lq <= tq;
    }
    return r;
}

InequalityReport verify_bipartite_global(const PatternGraph& h, const std::vector<int>& side_of,
                                         const StepKernel& w) {
    int n = h.vertex_count();
    if (static_cast<int>(side_of.size()) != n) throw UsageError("bipartition size mismatch");
    for (auto [u, v] : h.edges())
        if (side_of[u] == side_of[v]) throw UsageError("declared bipartition has an internal edge");
    int hb = 0;
    for (int v = 0; v < n; ++v)
        if (side_of[v] == 1) {
            ++hb;
            if (h.degree(v) <= 1) throw UsageError("B side has a vertex of degree <= 1");
        }
    if (hb == 0) throw UsageError("B side is empty");
    int u2 = 2 * ((hb + 1) / 2);  // 2*ceil(|B|/2)
    double lhs = std::fabs(density(h, w));
    double t = kab_density(2, u2, w);
    double rhs = std::pow(std::fabs(t), static_cast<double>(hb) / u2);
    InequalityReport r = make_report("bipartite-global", lhs, rhs);
    r.preconditions = {{"bipartite", true}, {"B min degree >= 2", true}};
    if (w.mode() == Mode::exact && exact_kab_feasible(w, 2, u2) &&
        std::pow(static_cast<double>(w.atom_count()), n) <= 2e6) {
        // lhs <= |t|^{hb/u2}  <=>  lhs^{u2} <= |t|^{hb}
        Rat lq = density_exact(h, w).abs();
        Rat tq = kab_density_exact(2, u2, w).abs();
        r.exact_comparison = true;
        r.holds = Rat::pow(lq, u2) <= Rat::pow(tq, hb);
    }
    return r;
}

InequalityReport verify_general_global(const PatternGraph& h, const StepKernel& w) {
    if (h.vertex_count() == 0 || h.has_isolated_vertex())
        throw UsageError("verify_general_global: isolated vertex");
    int hv = h.vertex_count();
    int u2 = 2 * ((hv + 1) / 2);
    double lhs = std::fabs(density(h, w));
    double t = kab_density(2, u2, w);
    double rhs = std::pow(std::fabs(t), 0.25);
    InequalityReport r = make_report("general-global", lhs, rhs);
    r.preconditions = {{"no isolated vertices", true}, {"sup_norm<=1", w.sup_norm() <= 1.0 + 1e-12}};
    if (w.mode() == Mode::exact && exact_kab_feasible(w, 2, u2) &&
        std::pow(static_cast<double>(w.atom_count()), hv) <= 2e6) {
        Rat lq = density_exact(h, w).abs();
        Rat tq = kab_density_exact(2, u2, w).abs();
        r.exact_comparison = true;
        r.holds = Rat::pow(lq, 4) <= tq;
    }
    return r;
}

InequalityReport k2a_graph_bound(const SimpleGraph& g, const Rat& p, int a) {
    if (a < 1) throw UsageError("k2a_graph_bound needs a >= 1");
    ScaledGraphStats s = make_scaled(g, p);
    int n = s.n;
    CenteredStats st = centered_stats(g, p);
    // t_{K_{2,a}}(f) = E_{x,y} (f_{x,y})^a over all ordered pairs, x = y included.
    long double step = 4.0L * static_cast<long double>(n) * s.q * s.q;  // |s(x,y)| <= 4 q^2 n
    long double worst = static_cast<long double>(n) * n;
    for (int i = 0; i < a; ++i) worst *= step;
    Rat lhs_q(0);
    if (worst < 1e36L) {
        i128 acc = 0;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                i128 term = 1;
                long long sv = s.pair_value(x, y);
                for (int i = 0; i < a; ++i) term *= sv;
                acc += term;
            }
        BigInt den = BigInt::pow(BigInt(s.q) * BigInt(s.q) * BigInt(n), static_cast<unsigned>(a)) *
                     (BigInt(n) * BigInt(n));
        lhs_q = Rat(bigint_from_i128(acc), den);
    } else {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                Rat v(BigInt(s.pair_value(x, y)), BigInt(s.q) * BigInt(s.q) * BigInt(n));
                lhs_q += Rat::pow(v, a);
            }
        lhs_q = lhs_q / Rat(static_cast<long long>(n) * n);
    }
    double lhs = std::fabs(lhs_q.to_double());
    double rhs = 2.0 * std::pow(st.nu_d, a) + 2.0 * std::pow(static_cast<double>(n), -2.0 / 3.0);
    InequalityReport r = make_report("k2a", lhs, rhs);
    r.preconditions = {{"a>=1", true}};
    return r;
}

// ---------------------------------------------------------------------------
// Expansion identity.

Expansion expansion(const PatternGraph& h, const SimpleGraph& g, const Rat& p, ExpansionCache* cache) {
    if (p <= Rat(0) || p >= Rat(1)) throw DomainError("expansion needs p in (0,1)");
    StepKernel wg = embed_graph(g, Mode::exact);
    StepKernel f = center(wg, p);
    SubgraphCensus cen = census(h);
    int eh = h.edge_count();
    Expansion out;
    out.total = Rat(0);
    ExpansionCache local;
    ExpansionCache& c = cache ? *cache : local;
    for (const auto& [cls, entry] : cen.entries) {
        Rat tj;
        auto it = c.tj.find(cls);
        if (it != c.tj.end()) {
            tj = it->second;
        } else {
            tj = density_exact(from_iso_class(cls), f);
            c.tj.emplace(cls, tj);
        }
        ExpansionTerm term;
        term.cls = cls;
        term.vertices = entry.vertices;
        term.edges = entry.edges;
        term.count = entry.count;
        term.term = Rat::pow(p, eh - entry.edges) * Rat(entry.count) * tj;
        out.total += term.term;
        out.terms.push_back(std::move(term));
    }
    out.direct = density_exact(h, wg);
    out.exact_match = (out.total == out.direct);
    return out;
}

// ---------------------------------------------------------------------------
// Effective-distance discrepancy report.

DiscrepancyReport effective_distance_report(const PatternGraph& h, const SimpleGraph& g,
                                            const Rat& p, double nu) {
    if (!(nu > 0.0 && nu <= 1.0)) throw DomainError("nu must lie in (0,1]");
    CenteredStats st = centered_stats(g, p);
    int n = g.vertex_count();
    PatternStats hs = pattern_stats(h);
    int r = h.vertex_count();
    double pd = p.to_double();

    DiscrepancyReport rep;
    rep.r = r;
    rep.edges = hs.edge_count;
    rep.triangles = hs.triangle_count;
    rep.mu = st.mu_d;
    rep.nu_graph = st.nu_d;
    rep.nu_used = nu;

    // The correction terms have degree-sequence closed forms (diagonal of W_G
    // is zero, f_x = (d_x - pn)/n):
    //   t_{K_2}(f)   = 2e/n^2 - p
    //   t_{K_{1,2}}(f) = sum_x (d_x - pn)^2 / n^3
    //   t_{K_3}(f)   = 6T/n^3 - 3p sum_y d_y^2 / n^3 + 3p^2 (2e/n^2) - p^3,
    // all exact rationals at any graph size.
    BigInt n2 = BigInt(n) * BigInt(n);
    BigInt n3 = n2 * BigInt(n);
    long long edges2 = 0;
    BigInt sum_d2(0);
    for (int v = 0; v < n; ++v) {
        long long d = g.degree(v);
        edges2 += d;
        sum_d2 += BigInt(d * d);
    }
    Rat tk2_q = Rat(BigInt(edges2), n2) - p;
    Rat tk12_q(0);
    {
        Rat pn = p * Rat(n);
        Rat acc(0);
        for (int v = 0; v < n; ++v) {
            Rat dev = Rat(g.degree(v)) - pn;
            acc += dev * dev;
        }
        tk12_q = acc / Rat(n3, BigInt(1));
    }
    long long tri = g.triangle_count();
    Rat tk3_q = Rat(BigInt(6 * tri), n3) - Rat(3) * p * Rat(sum_d2, n3) +
                Rat(3) * p * p * Rat(BigInt(edges2), n2) - p * p * p;

    // t_H(W_G): complete patterns via the clique census (t_{K_s} =
    // s! #K_s / n^s); otherwise the generic density engine.
    Rat th_q(0);
    bool have_exact_th = true;
    bool complete = hs.edge_count == static_cast<long long>(r) * (r - 1) / 2;
    double th_float = 0.0;
    if (complete) {
        long long cliques = g.count_cliques(r);
        long long fact = 1;
        for (int i = 2; i <= r; ++i) fact *= i;
        th_q = Rat(BigInt(cliques) * BigInt(fact), BigInt::pow(BigInt(n), static_cast<unsigned>(r)));
    } else if (std::pow(static_cast<double>(n), r) <= 2e7 && n <= 512) {
        th_q = density_exact(h, embed_graph(g, Mode::exact));
    } else {
        have_exact_th = false;
        th_float = density(h, embed_graph(g, Mode::floating));
    }

    Rat mu2 = st.mu * st.mu;
    rep.mu_terms_ok = tk12_q.abs() <= mu2 && (tk2_q * tk2_q).abs() <= mu2;

    double th = have_exact_th ? th_q.to_double() : th_float;
    double tk2 = tk2_q.to_double();
    double tk3 = tk3_q.to_double();
    double tk12 = tk12_q.to_double();
    rep.t_k2 = tk2;
    rep.t_k3 = tk3;
    rep.t_k12 = tk12;
    rep.t_two_edges = tk2 * tk2;

    if (have_exact_th) {
        // discrepancy as an exact rational, then rounded once
        Rat pe_q = Rat::pow(p, static_cast<int>(hs.edge_count));
        Rat disc = th_q / pe_q - Rat(1) - Rat(hs.edge_count) / p * tk2_q -
                   Rat(hs.triangle_count) / (p * p * p) * tk3_q;
        rep.discrepancy = disc.abs().to_double();
    } else {
        double pe = std::pow(pd, static_cast<double>(hs.edge_count));
        rep.discrepancy = std::fabs(th / pe - 1.0 - (hs.edge_count / pd) * tk2 -
                                    (hs.triangle_count / (pd * pd * pd)) * tk3);
    }
    double c_r14 = binomial(static_cast<unsigned>(r + 1), 4).to_double();
    rep.bound = std::pow(2.0, -2.0 * r) * std::pow(nu, 7.0 / 6.0) +
                3.0 * c_r14 * (st.mu_d * st.mu_d) / (pd * pd);

    bool nu_ok = nu >= st.nu_d - 1e-15;
    bool r_ok = static_cast<double>(r) <= std::log(1.0 / nu) / (12.0 * std::log(8.0 / pd));
    // nu^{-2r} <= n, compared in logs to survive astronomic magnitudes.
    bool n_ok = -2.0 * r * std::log(nu) <= std::log(static_cast<double>(n));
    rep.preconditions = {{"nu >= nu_{p,G}", nu_ok},
                         {"r <= log(1/nu)/(12 log(8/p))", r_ok},
                         {"nu^{-2r} <= n", n_ok}};
    rep.applicable = nu_ok && r_ok && n_ok;
    rep.within_bound = rep.discrepancy <= rep.bound + kSlackTol;
    return rep;
}

// ---------------------------------------------------------------------------
// Seeded sweeps.

StepKernel random_signed_kernel(std::uint64_t seed, int min_atoms, int max_atoms) {
    if (min_atoms < 1 || max_atoms < min_atoms) throw DomainError("bad atom range");
    SplitMix rng(seed);
    int m = min_atoms + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_atoms - min_atoms + 1)));
    std::vector<double> raw(static_cast<std::size_t>(m) * m);
    for (auto& x : raw) x = rng.next_double() * 2.0 - 1.0;
    std::vector<double> values(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            values[static_cast<std::size_t>(i) * m + j] =
                0.5 * (raw[static_cast<std::size_t>(i) * m + j] + raw[static_cast<std::size_t>(j) * m + i]);
    return StepKernel::floating(FiniteSpace::uniform_float(m), std::move(values), false);
}

namespace {

std::uint64_t trial_seed(std::uint64_t master, long long i) {
    SplitMix rng(master ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(i + 1)));
    return rng.next_u64();
}

Rat pick_p(SplitMix& rng) {
    switch (rng.next_below(3)) {
        case 0: return Rat(1, 3);
        case 1: return Rat(1, 2);
        default: return Rat(2, 3);
    }
}

// Bipartite patterns (up to 6 vertices) paired with a declared B side whose
// minimum degree is 2; built once.
struct BipartiteEntry {
    PatternGraph h;
    std::vector<int> side;
};

const std::vector<BipartiteEntry>& bipartite_pool() {
    static std::mutex mu;
    static std::vector<BipartiteEntry> pool;
    static bool built = false;
    std::lock_guard<std::mutex> lock(mu);
    if (built) return pool;
    for (const auto& g : all_patterns_up_to(6, true)) {
        auto coloring = g.bipartition();
        if (!coloring) continue;
        for (int b_side = 0; b_side < 2; ++b_side) {
            bool nonempty = false, valid = true;
            for (int v = 0; v < g.vertex_count(); ++v) {
                if ((*coloring)[v] == b_side) {
                    nonempty = true;
                    if (g.degree(v) <= 1) valid = false;
                }
            }
            if (!nonempty || !valid) continue;
            std::vector<int> side(static_cast<std::size_t>(g.vertex_count()));
            for (int v = 0; v < g.vertex_count(); ++v) side[v] = (*coloring)[v] == b_side ? 1 : 0;
            pool.push_back({g, std::move(side)});
        }
    }
    built = true;
    return pool;
}

TrialRow run_trial(const std::string& suite, std::uint64_t master, long long i) {
    TrialRow row;
    row.suite = suite;
    row.seed = trial_seed(master, i);
    SplitMix rng(row.seed);
    std::ostringstream desc;

    if (suite == "kab") {
        int c = 2 * (1 + static_cast<int>(rng.next_below(2)));  // 2 or 4
        InequalityReport rep;
        if (i % 3 == 2) {
            int n = 10 + static_cast<int>(rng.next_below(51));
            Rat p = pick_p(rng);
            SimpleGraph g = gnp_graph(n, 0.5, rng.fork());
            StepKernel f = center(embed_graph(g, Mode::floating), p.to_double());
            int a = c + static_cast<int>(rng.next_below(3));
            int b = 1 + static_cast<int>(rng.next_below(2));
            rep = verify_kab_monotone(a, b, c, f);
            desc << "centered gnp n=" << n << " p=" << p.to_string() << " a=" << a << " b=" << b
                 << " c=" << c;
        } else {
            StepKernel w = random_signed_kernel(rng.fork());
            int a = c + static_cast<int>(rng.next_below(4));
            int b = 1 + static_cast<int>(rng.next_below(3));
            rep = verify_kab_monotone(a, b, c, w);
            desc << "signed kernel m=" << w.atom_count() << " a=" << a << " b=" << b << " c=" << c;
        }
        row.lhs = rep.lhs;
        row.rhs = rep.rhs;
        row.holds = rep.holds;
    } else if (suite == "local") {
        const auto& pool = all_patterns_up_to(6, true);
        const PatternGraph& h = pool[static_cast<std::size_t>(i) % pool.size()];
        StepKernel w = random_signed_kernel(rng.fork());
        int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(h.vertex_count())));
        int d = h.degree(v);
        InequalityReport rep = verify_local(h, d, w);
        desc << "H#" << (i % static_cast<long long>(pool.size())) << " v(H)=" << h.vertex_count()
             << " d=" << d << " m=" << w.atom_count();
        row.lhs = rep.lhs;
        row.rhs = rep.rhs;
        row.holds = rep.holds;
    } else if (suite == "bipartite-global") {
        const auto& pool = bipartite_pool();
        const auto& entry = pool[static_cast<std::size_t>(i) % pool.size()];
        StepKernel w = random_signed_kernel(rng.fork());
        InequalityReport rep = verify_bipartite_global(entry.h, entry.side, w);
        desc << "H#" << (i % static_cast<long long>(pool.size())) << " v(H)=" << entry.h.vertex_count()
             << " m=" << w.atom_count();
        row.lhs = rep.lhs;
        row.rhs = rep.rhs;
        row.holds = rep.holds;
    } else if (suite == "general-global") {
        const auto& pool = all_patterns_up_to(6, true);
        const PatternGraph& h = pool[static_cast<std::size_t>(i) % pool.size()];
        StepKernel w = random_signed_kernel(rng.fork());
        InequalityReport rep = verify_general_global(h, w);
        desc << "H#" << (i % static_cast<long long>(pool.size())) << " v(H)=" << h.vertex_count()
             << " m=" << w.atom_count();
        row.lhs = rep.lhs;
        row.rhs = rep.rhs;
        row.holds = rep.holds;
    } else if (suite == "k2a") {
        int n = 10 + static_cast<int>(rng.next_below(51));
        Rat p = pick_p(rng);
        double gen_p = 0.3 + 0.2 * static_cast<double>(rng.next_below(3));
        SimpleGraph g = gnp_graph(n, gen_p, rng.fork());
        int a = 1 + static_cast<int>(rng.next_below(4));
        InequalityReport rep = k2a_graph_bound(g, p, a);
        desc << "gnp n=" << n << " gen_p=" << gen_p << " p=" << p.to_string() << " a=" << a;
        row.lhs = rep.lhs;
        row.rhs = rep.rhs;
        row.holds = rep.holds;
    } else if (suite == "expansion") {
        const auto& pool = all_patterns_up_to(5, true);
        const PatternGraph& h = pool[static_cast<std::size_t>(i) % pool.size()];
        int n = 6 + static_cast<int>(rng.next_below(5));
        Rat p = pick_p(rng);
        SimpleGraph g = gnp_graph(n, 0.5, rng.fork());
        Expansion ex = expansion(h, g, p);
        desc << "H#" << (i % static_cast<long long>(pool.size())) << " n=" << n << " p=" << p.to_string();
        row.lhs = ex.direct.to_double();
        row.rhs = ex.total.to_double();
        row.holds = ex.exact_match;
    } else {
        throw UsageError("unknown suite: " + suite);
    }
    row.instance = desc.str();
    row.slack = row.rhs - row.lhs;
    return row;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"kab",           "local", "bipartite-global",
                                                "general-global", "k2a",  "expansion"};
    return names;
}

std::vector<TrialRow> run_suite(const std::string& suite, int trials, std::uint64_t master_seed, int jobs) {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw UsageError("unknown suite: " + suite);
    // Build shared pools before fanning out across threads.
    if (suite == "bipartite-global") bipartite_pool();
    all_patterns_up_to(6, true);
    all_patterns_up_to(5, true);
    std::vector<TrialRow> rows(static_cast<std::size_t>(trials));
    parallel_for(trials, jobs,
                 [&](long long i) { rows[static_cast<std::size_t>(i)] = run_trial(suite, master_seed, i); });
    return rows;
}

}  // namespace rk
