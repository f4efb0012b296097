#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramseykit/errors.hpp"

namespace rk {

// Simple graph on n vertices, adjacency held as packed row bit-vectors so the
// codegree/triangle inner loops can run on word-parallel AND+popcount.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);

    int vertex_count() const { return n_; }
    std::size_t words_per_row() const { return words_; }
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    long long edge_count() const;

    // Low-level word access for bulk generators. After writing raw rows,
    // symmetrize_from_upper() makes the upper triangle canonical: it mirrors
    // bits (u,v), u < v, onto (v,u), clears the diagonal, and masks the tail.
    std::uint64_t* mutable_row(int v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }
    void symmetrize_from_upper();

    SimpleGraph complement() const;

    // Number of triangles containing each pair is popcount(row(u) & row(v));
    // total triangle count sums it over edges.
    long long triangle_count() const;
    long long count_cliques(int k) const;
    int clique_number() const;
    int independence_number() const;

private:
    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Parsers / formatters ------------------------------------------------------

// Text form: first line n, then "u v" per line (0-indexed).
SimpleGraph graph_from_edge_list_text(const std::string& text);
std::string graph_to_edge_list_text(const SimpleGraph& g);

SimpleGraph graph_from_graph6(const std::string& g6);
std::string graph_to_graph6(const SimpleGraph& g);

// Generators ----------------------------------------------------------------

SimpleGraph complete_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph empty_graph(int n);
// Erdos-Renyi with edge probability p, deterministic in seed.
SimpleGraph gnp_graph(int n, double p, std::uint64_t seed);
// Circulant on Z_n with the given connection distances.
SimpleGraph circulant_graph(int n, const std::vector<int>& distances);

}  // namespace rk
