#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramseykit/construction.hpp"
#include "ramseykit/quasirandom.hpp"
#include "ramseykit/rng.hpp"

using namespace rk;

TEST_CASE("block_graphon: values and mean") {
    BlockGraphon b1 = block_graphon(1);
    CHECK(b1.kernel.value_q(0, 0) == Rat(1));

    BlockGraphon b2 = block_graphon(2);
    CHECK(b2.kernel.value_q(0, 0) == Rat(1));
    CHECK(b2.kernel.value_q(1, 1) == Rat(1));
    CHECK(b2.kernel.value_q(0, 1) == Rat(1, 2));
    CHECK(b2.kernel.is_graphon());

    for (int m = 1; m <= 8; ++m) {
        // mean = 1/2 + 1/(2m), by direct weighted sum
        CHECK(block_graphon(m).kernel.mean_q() == Rat(1, 2) + Rat(1, 2 * m));
    }
    CHECK_THROWS_AS(block_graphon(0), DomainError);
}

TEST_CASE("w_random_graph: constant kernels and determinism") {
    StepKernel zero = StepKernel::exact(FiniteSpace::uniform_exact(1), {Rat(0)}, true);
    StepKernel one = StepKernel::exact(FiniteSpace::uniform_exact(1), {Rat(1)}, true);
    CHECK(w_random_graph(zero, 12, 7).edge_count() == 0);
    CHECK(w_random_graph(one, 12, 7).edge_count() == 66);

    SimpleGraph a = w_random_graph(block_graphon(3).kernel, 100, 5);
    SimpleGraph b = w_random_graph(block_graphon(3).kernel, 100, 5);
    SimpleGraph c = w_random_graph(block_graphon(3).kernel, 100, 6);
    bool same = true, diff = false;
    for (int u = 0; u < 100; ++u)
        for (int v = u + 1; v < 100; ++v) {
            same = same && a.has_edge(u, v) == b.has_edge(u, v);
            diff = diff || a.has_edge(u, v) != c.has_edge(u, v);
        }
    CHECK(same);
    CHECK(diff);
    CHECK_THROWS_AS(w_random_graph(center(block_graphon(2).kernel, Rat(1, 2)), 5, 1), UsageError);
}

TEST_CASE("w_random_graph: edge density concentrates around 1/2 + 1/(2m)") {
    // The dominant fluctuation is the atom assignment (how many pairs land in
    // the same block), of order n^{-1/2} on the density scale.
    const int m = 4, n = 1000;
    double expect = 0.5 + 1.0 / (2 * m);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        SimpleGraph g = w_random_graph(block_graphon(m).kernel, n, seed);
        double density = static_cast<double>(g.edge_count()) / (n * (n - 1) / 2.0);
        CHECK(std::fabs(density - expect) <= 0.035);
    }
}

TEST_CASE("w_random_graph: mu and nu scale like 1/m (sampling experiment)") {
    const int m = 4, n = 2000;
    int inside = 0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        SimpleGraph g = w_random_graph(block_graphon(m).kernel, n, 1000 + seed);
        CenteredStats st = centered_stats(g, Rat(1, 2), 2);
        bool ok = st.mu_d >= 1.0 / (8 * m) && st.mu_d <= 2.0 / m && st.nu_d >= 1.0 / (8 * m) &&
                  st.nu_d <= 2.0 / m;
        inside += ok;
    }
    CHECK(inside >= 4);
}

TEST_CASE("connected_density: paper formula values") {
    CHECK(connected_density(pattern_from_name("K2"), 2) == Rat(1, 4));
    CHECK(connected_density(pattern_from_name("K3"), 3) == Rat(1, 72));
    // P2 (path with 2 edges, 3 vertices): 2^{-2} m^{-2} at m = 2
    CHECK(connected_density(pattern_from_name("P2"), 2) == Rat(1, 16));
    CHECK_THROWS_AS(connected_density(pattern_from_name("E2"), 2), UsageError);
    PatternGraph two_edges = pattern_from_name("K2").disjoint_union(pattern_from_name("K2"));
    CHECK_THROWS_AS(connected_density(two_edges, 2), UsageError);
}

TEST_CASE("connected_density: formula equals exact kernel density, all J <= 5, m <= 8") {
    // connected_density itself asserts equality against the enumerated
    // density; this sweep makes the coverage explicit.
    int connected = 0;
    for (const auto& j : all_patterns_up_to(5, true)) {
        if (!j.is_connected()) continue;
        ++connected;
        for (int m = 1; m <= 8; ++m) CHECK_NOTHROW(connected_density(j, m));
    }
    CHECK(connected == 1 + 2 + 6 + 21);  // connected graphs on 2..5 vertices
}

TEST_CASE("deviation_lower_bound: r = 2, 3, 4") {
    for (int m = 1; m <= 8; ++m) {
        DeviationBound d2 = deviation_lower_bound(2, m);
        CHECK(d2.connected_spanning_subgraphs == 1);
        CHECK(d2.sum == Rat(1, m));
        CHECK(d2.floor_value == Rat(1, m));
        CHECK(d2.holds);

        DeviationBound d3 = deviation_lower_bound(3, m);
        CHECK(d3.connected_spanning_subgraphs == 4);
        CHECK(d3.sum == Rat(4) * Rat::pow(Rat(m), -2));
        CHECK(d3.holds);

        DeviationBound d4 = deviation_lower_bound(4, m);
        CHECK(d4.connected_spanning_subgraphs == 38);
        CHECK(d4.sum == Rat(38) * Rat::pow(Rat(m), -3));
        CHECK(d4.floor_value == Rat(8) * Rat::pow(Rat(m), -3));
        CHECK(d4.holds);
    }
    DeviationBound d32 = deviation_lower_bound(3, 2);
    CHECK(d32.floor_value == Rat(1, 2));
    CHECK(d32.sum == Rat(1));
    CHECK_THROWS_AS(deviation_lower_bound(1, 2), DomainError);
    CHECK_THROWS_AS(deviation_lower_bound(7, 2), SizeError);
}

TEST_CASE("paley graphs") {
    SimpleGraph p5 = paley_graph(5);
    // residues mod 5 are {1,4}: the 5-cycle
    for (int v = 0; v < 5; ++v) CHECK(p5.degree(v) == 2);
    CHECK(p5.has_edge(0, 1));
    CHECK(p5.has_edge(0, 4));
    CHECK(!p5.has_edge(0, 2));

    SimpleGraph p17 = paley_graph(17);
    for (int v = 0; v < 17; ++v) CHECK(p17.degree(v) == 8);
    CHECK(p17.clique_number() == 3);
    CHECK(p17.independence_number() == 3);

    CHECK_THROWS_AS(paley_graph(7), DomainError);   // 3 mod 4
    CHECK_THROWS_AS(paley_graph(15), DomainError);  // composite
}

TEST_CASE("paley graphs are self-complementary (vertex-map search)") {
    for (int q : {5, 13, 17}) {
        SimpleGraph g = paley_graph(q);
        SimpleGraph c = g.complement();
        PatternGraph pg(q, [&] {
            std::vector<std::pair<int, int>> es;
            for (int u = 0; u < q; ++u)
                for (int v = u + 1; v < q; ++v)
                    if (g.has_edge(u, v)) es.emplace_back(u, v);
            return es;
        }());
        PatternGraph pc(q, [&] {
            std::vector<std::pair<int, int>> es;
            for (int u = 0; u < q; ++u)
                for (int v = u + 1; v < q; ++v)
                    if (c.has_edge(u, v)) es.emplace_back(u, v);
            return es;
        }());
        CHECK(find_isomorphism(pg, pc).has_value());
    }
}

TEST_CASE("ramsey witnesses and the exact oracle") {
    RamseyWitness w{paley_graph(17), 3, 3};
    CHECK(w.verify());
    RamseyWitness bad{complete_graph(4), 3, 3};
    CHECK(!bad.verify());

    CHECK(ramsey_exact(2, 2, 3) == 2);
    CHECK(ramsey_exact(2, 5, 9) == 5);
    CHECK(ramsey_exact(3, 3, 6) == 6);
    CHECK(ramsey_exact(3, 3, 5) == std::nullopt);  // unknown within the cap

    // the n = 5 witness for (3,3) is the pentagon, uniquely
    auto g5 = find_ramsey_witness(3, 3, 5);
    REQUIRE(g5.has_value());
    for (int v = 0; v < 5; ++v) CHECK(g5->degree(v) == 2);
    CHECK(g5->edge_count() == 5);
    CHECK(!find_ramsey_witness(3, 3, 6).has_value());

    CHECK_THROWS_AS(ramsey_exact(1, 3, 5), DomainError);
    CHECK_THROWS_AS(ramsey_exact(3, 3, 10), SizeError);
}

TEST_CASE("ramsey oracle stretch: R(3,4) = 9 with the circulant witness") {
    SimpleGraph c814 = circulant_graph(8, {1, 4});
    RamseyWitness w{c814, 2, 3};  // avoids K_3 and empty K_4
    CHECK(c814.clique_number() == 2);
    CHECK(c814.independence_number() == 3);
    CHECK(ramsey_exact(3, 4, 9) == 9);
    auto g8 = find_ramsey_witness(3, 4, 8);
    REQUIRE(g8.has_value());
    CHECK(g8->clique_number() <= 2);
    CHECK(g8->independence_number() <= 3);
}
