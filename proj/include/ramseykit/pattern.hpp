#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramseykit/errors.hpp"

namespace rk {

inline constexpr int kCanonicalCap = 10;  // exact minimization over permutations
inline constexpr int kCensusCap = 7;      // 2^e(H) edge-subset enumeration

// Small labeled simple graph used as a density pattern.
class PatternGraph {
public:
    PatternGraph() = default;
    PatternGraph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::uint32_t adjacency_mask(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
    int degree(int v) const { return __builtin_popcount(adj_[v]); }

    bool has_isolated_vertex() const;
    bool is_connected() const;  // true for the empty graph on 0 or 1 vertices
    // 2-coloring if bipartite: color[v] in {0,1}.
    std::optional<std::vector<int>> bipartition() const;

    // Graph induced by an edge subset with isolated vertices dropped,
    // remaining vertices relabeled compactly in order.
    PatternGraph edge_subgraph_compacted(std::uint32_t edge_mask) const;

    PatternGraph disjoint_union(const PatternGraph& other) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint32_t> adj_;
};

// Order-invariant code: equal iff the graphs are isomorphic. Vertex count
// plus the minimal upper-triangle adjacency bitstring over vertex relabelings
// (fits 64 bits up to 10 vertices, C(10,2) = 45).
struct IsoClass {
    std::uint8_t v = 0;
    std::uint64_t code = 0;
    auto operator<=>(const IsoClass&) const = default;
};

IsoClass canonical_form(const PatternGraph& g, int cap = kCanonicalCap);
// Rebuild a representative graph from a canonical code.
PatternGraph from_iso_class(const IsoClass& cls);

// Exhaustive statistics used by the density expansion bound.
struct PatternStats {
    long long edge_count = 0;          // e(H)
    long long triangle_count = 0;      // number of triangles
    long long path2_count = 0;         // unordered paths of length 2
    long long disjoint_edge_pairs = 0; // unordered pairs of vertex-disjoint edges
};

PatternStats pattern_stats(const PatternGraph& g);

// Tally of subgraphs of H by isomorphism class (isolated vertices dropped).
// One entry per class J with the vertex/edge counts of J and the number of
// edge subsets of H inducing it. The empty class (v=0, e=0) has count 1.
struct CensusEntry {
    IsoClass cls;
    int vertices = 0;
    int edges = 0;
    long long count = 0;
};

struct SubgraphCensus {
    std::map<IsoClass, CensusEntry> entries;
    long long count_of(const IsoClass& cls) const;
    long long total() const;  // = 2^e(H)
};

SubgraphCensus census(const PatternGraph& g, int cap = kCensusCap);

// Explicit vertex bijection a -> b respecting adjacency, if one exists.
std::optional<std::vector<int>> find_isomorphism(const PatternGraph& a, const PatternGraph& b);

// Named builtins: K<n>, C<n>, P<n> (path with n edges), K<a>,<b>, E<n>.
PatternGraph pattern_from_name(const std::string& name);
// Text form: first line vertex count, then one "u v" pair per line.
PatternGraph parse_pattern_text(const std::string& text);
std::string pattern_to_text(const PatternGraph& g);

// All isomorphism classes with at most max_vertices vertices, one
// representative each, optionally restricted to graphs without isolated
// vertices. Cached; safe for concurrent use after first call.
const std::vector<PatternGraph>& all_patterns_up_to(int max_vertices, bool no_isolated);

}  // namespace rk
