#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ramseykit/construction.hpp"
#include "ramseykit/graph.hpp"
#include "ramseykit/kernel.hpp"
#include "ramseykit/pattern.hpp"
#include "ramseykit/quasirandom.hpp"
#include "ramseykit/rng.hpp"

using namespace rk;

namespace {

// Independent density oracle: plain nested loops over every assignment, no
// pruning, no vectorized reduction.
double brute_density(const PatternGraph& h, const StepKernel& w) {
    int v = h.vertex_count(), m = w.atom_count();
    std::vector<int> assign(static_cast<std::size_t>(v), 0);
    double acc = 0.0;
    while (true) {
        double p = 1.0;
        for (int i = 0; i < v; ++i) p *= w.space().weights[assign[i]];
        for (auto [a, b] : h.edges()) p *= w.value(assign[a], assign[b]);
        acc += p;
        int i = v - 1;
        while (i >= 0 && assign[i] == m - 1) assign[i--] = 0;
        if (i < 0) break;
        ++assign[i];
    }
    return acc;
}

Rat brute_density_exact(const PatternGraph& h, const StepKernel& w) {
    int v = h.vertex_count(), m = w.atom_count();
    std::vector<int> assign(static_cast<std::size_t>(v), 0);
    Rat acc(0);
    while (true) {
        Rat p(1);
        for (int i = 0; i < v; ++i) p *= w.space().weights_q[assign[i]];
        for (auto [a, b] : h.edges()) p *= w.value_q(assign[a], assign[b]);
        acc += p;
        int i = v - 1;
        while (i >= 0 && assign[i] == m - 1) assign[i--] = 0;
        if (i < 0) break;
        ++assign[i];
    }
    return acc;
}

SimpleGraph k3() {
    SimpleGraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    return g;
}

}  // namespace

TEST_CASE("embed_graph: K3, empty, C5") {
    StepKernel w = embed_graph(k3());
    CHECK(w.atom_count() == 3);
    CHECK(w.is_graphon());
    for (int i = 0; i < 3; ++i) {
        CHECK(w.space().weights_q[i] == Rat(1, 3));
        CHECK(w.value_q(i, i) == Rat(0));
        for (int j = 0; j < 3; ++j)
            if (i != j) CHECK(w.value_q(i, j) == Rat(1));
    }
    StepKernel e2 = embed_graph(empty_graph(2));
    CHECK(e2.mean_q() == Rat(0));
    StepKernel c5 = embed_graph(cycle_graph(5));
    for (int i = 0; i < 5; ++i) {
        int row_sum = 0;
        for (int j = 0; j < 5; ++j) row_sum += c5.value(i, j) > 0.5 ? 1 : 0;
        CHECK(row_sum == 2);
    }
}

TEST_CASE("center: K3 at 2/3, identity case, domain errors") {
    StepKernel f = center(embed_graph(k3()), Rat(2, 3));
    for (int i = 0; i < 3; ++i) {
        CHECK(f.value_q(i, i) == Rat(-2, 3));
        for (int j = 0; j < 3; ++j)
            if (i != j) CHECK(f.value_q(i, j) == Rat(1, 3));
    }
    CHECK(!f.is_graphon());
    CHECK(f.sup_norm() <= 1.0);

    // constant-p graphon centered at p is the zero kernel
    StepKernel constp = StepKernel::exact(FiniteSpace::uniform_exact(3),
                                          std::vector<Rat>(9, Rat(2, 5)), true);
    StepKernel z = center(constp, Rat(2, 5));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(z.value_q(i, j) == Rat(0));

    CHECK_THROWS_AS(center(embed_graph(k3()), Rat(1)), DomainError);
    CHECK_THROWS_AS(center(embed_graph(k3()), Rat(0)), DomainError);
    CHECK_THROWS_AS(center(embed_graph(k3()), Rat(3, 2)), DomainError);
}

TEST_CASE("density: frozen exact values") {
    CHECK(density_exact(pattern_from_name("K2"), embed_graph(k3())) == Rat(2, 3));
    CHECK(density_exact(pattern_from_name("K3"), embed_graph(cycle_graph(5))) == Rat(0));
    StepKernel fb2 = center(block_graphon(2).kernel, Rat(1, 2));
    CHECK(density_exact(pattern_from_name("K2"), fb2) == Rat(1, 4));
    // patterns with no edges have density 1
    CHECK(density_exact(pattern_from_name("E3"), fb2) == Rat(1));
}

TEST_CASE("density: exact equals independent brute force on random kernels") {
    SplitMix rng(404);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng.next_below(5));
        SimpleGraph g = gnp_graph(n, 0.5, rng.fork());
        StepKernel w = embed_graph(g);
        StepKernel f = center(w, Rat(1, 3));
        const auto& pool = all_patterns_up_to(4, true);
        const PatternGraph& h = pool[rng.next_below(pool.size())];
        CHECK(density_exact(h, w) == brute_density_exact(h, w));
        CHECK(density_exact(h, f) == brute_density_exact(h, f));
        CHECK(density(h, f) == doctest::Approx(brute_density(h, f)).epsilon(1e-12));
    }
}

TEST_CASE("density: exact and float modes agree") {
    SplitMix rng(88);
    for (int trial = 0; trial < 20; ++trial) {
        SimpleGraph g = gnp_graph(6 + static_cast<int>(rng.next_below(4)), 0.5, rng.fork());
        StepKernel w = embed_graph(g);
        const auto& pool = all_patterns_up_to(5, true);
        const PatternGraph& h = pool[rng.next_below(pool.size())];
        double ex = density_exact(h, w).to_double();
        double fl = density(h, w);
        CHECK(std::fabs(ex - fl) <= 1e-9 * (1.0 + std::fabs(ex)));
    }
}

TEST_CASE("density invariances: relabeling, atom permutation, disjoint union") {
    SplitMix rng(2718);
    StepKernel w = random_signed_kernel(42);
    // relabeling of H
    PatternGraph h1(4, {{0, 1}, {1, 2}, {2, 3}});
    PatternGraph h2(4, {{3, 2}, {2, 0}, {0, 1}});  // same path relabeled
    CHECK(density(h1, w) == doctest::Approx(density(h2, w)).epsilon(1e-12));
    // simultaneous atom permutation
    int m = w.atom_count();
    std::vector<int> perm(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) perm[i] = i;
    for (int i = m - 1; i > 0; --i) std::swap(perm[i], perm[rng.next_below(static_cast<std::uint64_t>(i + 1))]);
    std::vector<double> pv(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) pv[static_cast<std::size_t>(perm[i]) * m + perm[j]] = w.value(i, j);
    StepKernel wp = StepKernel::floating(FiniteSpace::uniform_float(m), std::move(pv), false);
    CHECK(density(h1, w) == doctest::Approx(density(h1, wp)).epsilon(1e-12));
    // disjoint unions multiply
    PatternGraph k2 = pattern_from_name("K2");
    PatternGraph k3p = pattern_from_name("K3");
    PatternGraph uni = k2.disjoint_union(k3p);
    CHECK(density(uni, w) == doctest::Approx(density(k2, w) * density(k3p, w)).epsilon(1e-12));
    StepKernel fq = center(embed_graph(k3()), Rat(1, 2));
    CHECK(density_exact(uni, fq) == density_exact(k2, fq) * density_exact(k3p, fq));
}

TEST_CASE("codegree: frozen values and brute-force cross-check") {
    CHECK(codegree_exact(embed_graph(k3()), {0}) == Rat(2, 3));
    StepKernel c5 = embed_graph(cycle_graph(5));
    // unique common neighbor of 0 and 2 in C5 is vertex 1
    Rat expected(0);
    for (int y = 0; y < 5; ++y)
        expected += c5.value_q(0, y) * c5.value_q(2, y) * Rat(1, 5);
    CHECK(expected == Rat(1, 5));
    CHECK(codegree_exact(c5, {0, 2}) == expected);
    StepKernel zero = StepKernel::exact(FiniteSpace::uniform_exact(3),
                                        std::vector<Rat>(9, Rat(0)), true);
    CHECK(codegree_exact(zero, {0, 1, 2}) == Rat(0));
    CHECK(codegree(c5, {0, 2}) == doctest::Approx(0.2).epsilon(1e-14));
    CHECK_THROWS_AS(codegree(c5, {}), UsageError);
}

TEST_CASE("kab_density: mean case, nonnegativity, brute-force equality") {
    StepKernel c5 = embed_graph(cycle_graph(5));
    CHECK(kab_density_exact(1, 1, c5) == c5.mean_q());
    // t_{K_{2,3}} via codegree powers equals the direct K_{2,3} density
    CHECK(kab_density_exact(2, 3, c5) == brute_density_exact(pattern_from_name("K2,3"), c5));
    CHECK(kab_density_exact(3, 2, c5) == kab_density_exact(2, 3, c5));
    // t_{K_{a,b}} >= 0 for even products, signed kernels
    SplitMix rng(55);
    for (int trial = 0; trial < 50; ++trial) {
        StepKernel w = random_signed_kernel(rng.fork());
        CHECK(kab_density(2, 2, w) >= -1e-15);
        CHECK(kab_density(1, 2, w) >= -1e-15);
        CHECK(kab_density(2, 3, w) >= -1e-15);
    }
    StepKernel fq = center(embed_graph(k3()), Rat(1, 3));
    CHECK(kab_density_exact(2, 2, fq).sign() >= 0);
    CHECK(kab_density_exact(2, 2, fq) == brute_density_exact(pattern_from_name("K2,2"), fq));
}

TEST_CASE("densities stay inside [-1, 1] for sup-norm-1 kernels") {
    SplitMix rng(314);
    const auto& pool = all_patterns_up_to(5, true);
    for (int trial = 0; trial < 60; ++trial) {
        StepKernel w = random_signed_kernel(rng.fork());
        const PatternGraph& h = pool[rng.next_below(pool.size())];
        CHECK(std::fabs(density(h, w)) <= 1.0 + 1e-12);
    }
}

TEST_CASE("work budgets raise budget errors") {
    SimpleGraph g = gnp_graph(60, 0.5, 1);
    StepKernel w = embed_graph(g, Mode::floating);
    DensityBudget tight;
    tight.max_assignments = 1e6;
    CHECK_THROWS_AS(density(pattern_from_name("K6"), w, tight), BudgetError);
    CHECK_THROWS_AS(kab_density(4, 4, w, tight), BudgetError);
}

TEST_CASE("kernel json round trip") {
    StepKernel fb3 = center(block_graphon(3).kernel, Rat(1, 2));
    StepKernel back = kernel_from_json(kernel_to_json(fb3));
    CHECK(back.mode() == Mode::exact);
    CHECK(back.atom_count() == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(back.value_q(i, j) == fb3.value_q(i, j));

    StepKernel w = random_signed_kernel(17);
    StepKernel wb = kernel_from_json(kernel_to_json(w));
    CHECK(wb.mode() == Mode::floating);
    for (int i = 0; i < w.atom_count(); ++i)
        for (int j = 0; j < w.atom_count(); ++j) CHECK(wb.value(i, j) == w.value(i, j));

    CHECK_THROWS(kernel_from_json("{\"weights\":[1],\"values\":[[2]],\"mode\":\"exact\"}"));
}

TEST_CASE("kernel validation rejects bad inputs") {
    CHECK_THROWS_AS(StepKernel::exact(FiniteSpace::uniform_exact(2),
                                      {Rat(0), Rat(1), Rat(0), Rat(0)}, true),
                    DomainError);  // asymmetric
    CHECK_THROWS_AS(StepKernel::exact(FiniteSpace::uniform_exact(1), {Rat(3, 2)}, false),
                    DomainError);  // sup norm
    CHECK_THROWS_AS(StepKernel::exact(FiniteSpace::uniform_exact(1), {Rat(-1, 2)}, true),
                    DomainError);  // negative graphon
    CHECK_THROWS_AS(FiniteSpace::from_weights_exact({Rat(1, 2), Rat(1, 3)}), DomainError);
    CHECK_THROWS_AS(FiniteSpace::from_weights_exact({Rat(3, 2), Rat(-1, 2)}), DomainError);
}
