#pragma once

#include <cstdint>
#include <optional>

#include "ramseykit/exact.hpp"
#include "ramseykit/graph.hpp"
#include "ramseykit/kernel.hpp"
#include "ramseykit/pattern.hpp"

namespace rk {

// m equal blocks, value 1 on the diagonal blocks and 1/2 elsewhere.
struct BlockGraphon {
    int m = 0;
    StepKernel kernel;
};

BlockGraphon block_graphon(int m);

// Vertex types sampled from the kernel's space, each edge present
// independently with the kernel value; deterministic in the seed.
SimpleGraph w_random_graph(const StepKernel& w, int n, std::uint64_t seed);

// 2^{-e(J)} m^{1-v(J)} for connected J; verified against the exact density of
// the centered block graphon before returning.
Rat connected_density(const PatternGraph& j, int m);

// Lower bound on the connected r-vertex contribution to t_{K_r} of the block
// construction: sum over connected J on r vertices of C_{K_r,J} 2^{e(J)}
// t_J(W - 1/2), against the floor 2^{C(r-1,2)} m^{1-r}.
struct DeviationBound {
    Rat sum;
    Rat floor_value;
    bool holds = false;
    long long connected_spanning_subgraphs = 0;
};

DeviationBound deviation_lower_bound(int r, int m);

// Quadratic-residue graph on Z_q; q prime, q = 1 mod 4.
SimpleGraph paley_graph(int q);

// Graph avoiding K_{k+1} and the empty graph on l+1 vertices.
struct RamseyWitness {
    SimpleGraph graph;
    int k = 0, l = 0;
    bool verify() const;  // exhaustive clique / independent-set search
};

// Smallest n <= n_max forcing a K_s or empty t-set in every n-vertex graph;
// nullopt when every n <= n_max still has a witness.
std::optional<int> ramsey_exact(int s, int t, int n_max);

// A witness on exactly n vertices, if one exists.
std::optional<SimpleGraph> find_ramsey_witness(int s, int t, int n);

}  // namespace rk
