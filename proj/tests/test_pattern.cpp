#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "ramseykit/pattern.hpp"
#include "ramseykit/rng.hpp"

using namespace rk;

namespace {

PatternGraph random_pattern(SplitMix& rng, int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_u64() & 1) es.emplace_back(i, j);
    return PatternGraph(n, std::move(es));
}

PatternGraph relabel(const PatternGraph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
    return PatternGraph(g.vertex_count(), std::move(es));
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
    PatternGraph tri1(3, {{0, 1}, {1, 2}, {0, 2}});
    PatternGraph tri2(3, {{2, 0}, {0, 1}, {2, 1}});
    CHECK(canonical_form(tri1) == canonical_form(tri2));

    PatternGraph path(3, {{0, 1}, {1, 2}});
    PatternGraph star(3, {{0, 1}, {0, 2}});
    CHECK(canonical_form(path) == canonical_form(star));  // both are K_{1,2}

    CHECK(canonical_form(pattern_from_name("K1,3")) != canonical_form(pattern_from_name("P3")));
}

TEST_CASE("canonical form: code equality iff isomorphic (brute-force oracle)") {
    SplitMix rng(2024);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 2 + static_cast<int>(rng.next_below(5));  // up to 6 vertices
        PatternGraph a = random_pattern(rng, n);
        PatternGraph b = random_pattern(rng, n);
        bool same_code = canonical_form(a) == canonical_form(b);
        bool iso = find_isomorphism(a, b).has_value();
        CHECK(same_code == iso);
        // And a genuinely isomorphic copy must always agree.
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.next_below(static_cast<std::uint64_t>(i + 1))]);
        CHECK(canonical_form(a) == canonical_form(relabel(a, perm)));
    }
}

TEST_CASE("canonical code round-trips through a representative graph") {
    SplitMix rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(7));
        PatternGraph g = random_pattern(rng, n);
        IsoClass cls = canonical_form(g);
        PatternGraph rep = from_iso_class(cls);
        CHECK(canonical_form(rep) == cls);
    }
}

TEST_CASE("pattern_stats on K4, C5, K2") {
    auto k4 = pattern_stats(pattern_from_name("K4"));
    CHECK(k4.edge_count == 6);
    CHECK(k4.triangle_count == 4);
    CHECK(k4.path2_count == 12);
    CHECK(k4.disjoint_edge_pairs == 3);

    auto c5 = pattern_stats(pattern_from_name("C5"));
    CHECK(c5.edge_count == 5);
    CHECK(c5.triangle_count == 0);
    CHECK(c5.path2_count == 5);
    CHECK(c5.disjoint_edge_pairs == 5);

    auto k2 = pattern_stats(pattern_from_name("K2"));
    CHECK(k2.edge_count == 1);
    CHECK(k2.triangle_count == 0);
    CHECK(k2.path2_count == 0);
    CHECK(k2.disjoint_edge_pairs == 0);
}

TEST_CASE("pattern_stats matches an independent brute-force count") {
    SplitMix rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng.next_below(5));
        PatternGraph g = random_pattern(rng, n);
        auto s = pattern_stats(g);
        long long tri = 0, paths = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    int e = g.has_edge(a, b) + g.has_edge(a, c) + g.has_edge(b, c);
                    if (e == 3) ++tri;
                    // every pair of incident edges in the triple is one path
                    if (g.has_edge(a, b) && g.has_edge(b, c)) ++paths;
                    if (g.has_edge(b, a) && g.has_edge(a, c)) ++paths;
                    if (g.has_edge(a, c) && g.has_edge(c, b)) ++paths;
                }
        CHECK(s.triangle_count == tri);
        CHECK(s.path2_count == paths);
        long long dis = 0;
        const auto& es = g.edges();
        for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = i + 1; j < es.size(); ++j) {
                auto [a, b] = es[i];
                auto [c, d] = es[j];
                if (a != c && a != d && b != c && b != d) ++dis;
            }
        CHECK(s.disjoint_edge_pairs == dis);
    }
}

TEST_CASE("census of K3 lists all eight edge subsets") {
    auto c = census(pattern_from_name("K3"));
    CHECK(c.total() == 8);
    CHECK(c.count_of(IsoClass{0, 0}) == 1);
    CHECK(c.count_of(canonical_form(pattern_from_name("K2"))) == 3);
    CHECK(c.count_of(canonical_form(pattern_from_name("K1,2"))) == 3);
    CHECK(c.count_of(canonical_form(pattern_from_name("K3"))) == 1);
}

TEST_CASE("census of K4: triangles, matchings, totals") {
    auto c = census(pattern_from_name("K4"));
    CHECK(c.total() == 64);  // 2^6
    CHECK(c.count_of(canonical_form(pattern_from_name("K3"))) == 4);
    PatternGraph two_edges = pattern_from_name("K2").disjoint_union(pattern_from_name("K2"));
    CHECK(c.count_of(canonical_form(two_edges)) == 3);
}

TEST_CASE("census cross-checks pattern_stats and the size bound") {
    SplitMix rng(31);
    auto k2 = canonical_form(pattern_from_name("K2"));
    auto k3 = canonical_form(pattern_from_name("K3"));
    auto k12 = canonical_form(pattern_from_name("K1,2"));
    auto mm = canonical_form(pattern_from_name("K2").disjoint_union(pattern_from_name("K2")));
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng.next_below(5));
        PatternGraph g = random_pattern(rng, n);
        auto c = census(g);
        auto s = pattern_stats(g);
        CHECK(c.total() == (1ll << g.edge_count()));
        CHECK(c.count_of(k2) == s.edge_count);
        CHECK(c.count_of(k3) == s.triangle_count);
        CHECK(c.count_of(k12) == s.path2_count);
        CHECK(c.count_of(mm) == s.disjoint_edge_pairs);
        // Paper's bound on the number of subgraphs with s vertices.
        std::map<int, long long> by_size;
        for (const auto& [cls, e] : c.entries) by_size[e.vertices] += e.count;
        for (const auto& [sz, cnt] : by_size) {
            if (sz == 0) continue;
            long long bound = 1;
            for (int i = 0; i < sz * (sz - 1) / 2; ++i) bound *= 2;
            long long choose = 1;
            for (int i = 0; i < sz; ++i) choose = choose * (n - i) / (i + 1);
            CHECK(cnt <= choose * bound);
        }
        // Only classes without isolated vertices appear.
        for (const auto& [cls, e] : c.entries) {
            if (e.vertices == 0) continue;
            CHECK(!from_iso_class(cls).has_isolated_vertex());
        }
    }
}

TEST_CASE("stats bounds from the paper hold for all patterns up to 6 vertices") {
    for (const auto& g : all_patterns_up_to(6, false)) {
        auto s = pattern_stats(g);
        long long r = g.vertex_count();
        long long c3 = r * (r - 1) * (r - 2) / 6;
        long long c4 = r >= 4 ? r * (r - 1) * (r - 2) * (r - 3) / 24 : 0;
        CHECK(s.path2_count <= 3 * c3);
        CHECK(s.disjoint_edge_pairs <= 3 * c4);
        CHECK(s.triangle_count >= 0);
    }
}

TEST_CASE("builtin names and text parsing") {
    CHECK(pattern_from_name("K4").edge_count() == 6);
    CHECK(pattern_from_name("C6").edge_count() == 6);
    CHECK(pattern_from_name("P3").vertex_count() == 4);
    CHECK(pattern_from_name("P3").edge_count() == 3);
    CHECK(pattern_from_name("K2,3").edge_count() == 6);
    CHECK(pattern_from_name("E5").edge_count() == 0);
    CHECK_THROWS_AS(pattern_from_name("Q3"), DomainError);

    PatternGraph g = parse_pattern_text("4\n0 1\n1 2\n2 3\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(canonical_form(g) == canonical_form(pattern_from_name("P3")));
    CHECK(canonical_form(parse_pattern_text(pattern_to_text(g))) == canonical_form(g));
}

TEST_CASE("pattern pool sizes match known graph counts") {
    // Graphs up to isomorphism on <= n vertices: 1,2,4,11,34,156 (n=1..6).
    CHECK(all_patterns_up_to(4, false).size() == 1 + 1 + 2 + 4 + 11);  // includes the empty graph on 0 vertices
    CHECK(all_patterns_up_to(5, false).size() == 19 + 34);
    CHECK(all_patterns_up_to(6, false).size() == 53 + 156);
    // No-isolated-vertex classes on exactly 2..6 vertices: 1,2,7,23,122.
    CHECK(all_patterns_up_to(6, true).size() == 1 + 2 + 7 + 23 + 122);
}

TEST_CASE("caps raise size errors") {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 11; ++i) es.emplace_back(i, (i + 1) % 12);
    PatternGraph big(12, std::move(es));
    CHECK_THROWS_AS(canonical_form(big), SizeError);
    CHECK_THROWS_AS(census(big), SizeError);
}
