#include "ramseykit/construction.hpp"

#include <algorithm>
#include <map>

#include "ramseykit/rng.hpp"

namespace rk {

BlockGraphon block_graphon(int m) {
    if (m < 1) throw DomainError("block_graphon needs m >= 1");
    if (m > 512) throw SizeError("block_graphon capped at 512 blocks");
    std::vector<Rat> values(static_cast<std::size_t>(m) * m, Rat(1, 2));
    for (int i = 0; i < m; ++i) values[static_cast<std::size_t>(i) * m + i] = Rat(1);
    BlockGraphon bg;
    bg.m = m;
    bg.kernel = StepKernel::exact(FiniteSpace::uniform_exact(m), std::move(values), true);
    return bg;
}

SimpleGraph w_random_graph(const StepKernel& w, int n, std::uint64_t seed) {
    if (!w.is_graphon()) throw UsageError("w_random_graph needs a graphon");
    if (n < 1) throw DomainError("w_random_graph needs n >= 1");
    SplitMix rng(seed);
    int m = w.atom_count();
    std::vector<int> atom(static_cast<std::size_t>(n));
    std::vector<double> cum(static_cast<std::size_t>(m));
    double acc = 0;
    for (int a = 0; a < m; ++a) {
        acc += w.space().weights[a];
        cum[a] = acc;
    }
    for (int v = 0; v < n; ++v) {
        double u = rng.next_double();
        int a = static_cast<int>(std::lower_bound(cum.begin(), cum.end(), u) - cum.begin());
        atom[v] = std::min(a, m - 1);
    }

    // Fast path when every kernel value is 0, 1/2 or 1 (block graphons and
    // 0/1 kernels): rows are filled 64 coin flips per word, then the 0/1
    // atom-pair classes are patched in with word-wide atom masks and the
    // upper triangle is mirrored by block transpose. A coin flip per pair
    // would dominate the sampling experiments at n ~ 3e4.
    bool simple_values = true;
    for (int a = 0; a < m && simple_values; ++a)
        for (int b = 0; b < m; ++b) {
            double v = w.value(a, b);
            if (v != 0.0 && v != 0.5 && v != 1.0) {
                simple_values = false;
                break;
            }
        }
    SimpleGraph g(n);
    if (simple_values) {
        std::size_t words = g.words_per_row();
        std::vector<std::uint64_t> atom_mask(static_cast<std::size_t>(m) * words, 0);
        for (int v = 0; v < n; ++v)
            atom_mask[static_cast<std::size_t>(atom[v]) * words + v / 64] |= std::uint64_t(1) << (v % 64);
        for (int u = 0; u < n; ++u) {
            std::uint64_t* row = g.mutable_row(u);
            for (std::size_t wd = 0; wd < words; ++wd) row[wd] = rng.next_u64();
            for (int a = 0; a < m; ++a) {
                double val = w.value(atom[u], a);
                if (val == 0.5) continue;
                const std::uint64_t* mask = atom_mask.data() + static_cast<std::size_t>(a) * words;
                if (val == 1.0)
                    for (std::size_t wd = 0; wd < words; ++wd) row[wd] |= mask[wd];
                else
                    for (std::size_t wd = 0; wd < words; ++wd) row[wd] &= ~mask[wd];
            }
        }
        g.symmetrize_from_upper();
        return g;
    }

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double val = w.value(atom[u], atom[v]);
            if (rng.next_double() < val) g.add_edge(u, v);
        }
    return g;
}

Rat connected_density(const PatternGraph& j, int m) {
    if (!j.is_connected()) throw UsageError("connected_density needs a connected pattern");
    if (m < 1) throw DomainError("connected_density needs m >= 1");
    int e = j.edge_count(), v = j.vertex_count();
    Rat formula = Rat(1, 1ll << e) * Rat::pow(Rat(m), 1 - v);
    StepKernel f = center(block_graphon(m).kernel, Rat(1, 2));
    Rat direct = density_exact(j, f);
    if (formula != direct)
        throw std::logic_error("connected block-graphon density formula disagrees with enumeration");
    return formula;
}

DeviationBound deviation_lower_bound(int r, int m) {
    if (r < 2) throw DomainError("deviation_lower_bound needs r >= 2");
    if (r > 6) throw SizeError("deviation_lower_bound capped at r = 6");
    if (m < 1) throw DomainError("deviation_lower_bound needs m >= 1");
    PatternGraph kr = pattern_from_name("K" + std::to_string(r));
    int ne = kr.edge_count();
    // Tally connected spanning subgraphs of K_r by isomorphism class.
    std::map<IsoClass, long long> counts;
    long long total_connected = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << ne); ++mask) {
        PatternGraph sub = kr.edge_subgraph_compacted(mask);
        if (sub.vertex_count() != r || !sub.is_connected()) continue;
        ++total_connected;
        ++counts[canonical_form(sub)];
    }
    DeviationBound out;
    out.connected_spanning_subgraphs = total_connected;
    out.sum = Rat(0);
    for (const auto& [cls, count] : counts) {
        PatternGraph rep = from_iso_class(cls);
        Rat tj = connected_density(rep, m);
        out.sum += Rat(count) * Rat(1ll << rep.edge_count()) * tj;
    }
    long long c_r1_2 = static_cast<long long>(r - 1) * (r - 2) / 2;
    out.floor_value = Rat(BigInt(1).shifted_left(static_cast<unsigned>(c_r1_2)), BigInt(1)) *
                      Rat::pow(Rat(m), 1 - r);
    out.holds = out.sum >= out.floor_value;
    return out;
}

SimpleGraph paley_graph(int q) {
    if (q < 5) throw DomainError("paley graph needs a prime q >= 5");
    for (int d = 2; static_cast<long long>(d) * d <= q; ++d)
        if (q % d == 0) throw DomainError("paley modulus must be prime");
    if (q % 4 != 1) throw DomainError("paley modulus must be 1 mod 4");
    std::vector<bool> residue(static_cast<std::size_t>(q), false);
    for (int x = 1; x < q; ++x) residue[static_cast<std::size_t>(static_cast<long long>(x) * x % q)] = true;
    SimpleGraph g(q);
    for (int u = 0; u < q; ++u)
        for (int v = u + 1; v < q; ++v)
            if (residue[static_cast<std::size_t>(v - u)]) g.add_edge(u, v);
    return g;
}

bool RamseyWitness::verify() const {
    if (k < 1 || l < 1) return false;
    return graph.count_cliques(k + 1) == 0 && graph.complement().count_cliques(l + 1) == 0;
}

namespace {

// Backtracking witness search, one vertex at a time. rows[v] is the
// neighborhood of v among vertices < v. A candidate neighborhood is rejected
// when it completes a K_s (an (s-1)-clique inside the mask) or an empty t-set
// (a (t-1)-independent set inside the complement). Symmetry break: the
// neighborhood of vertex 0 is a contiguous prefix of the later vertices.
struct WitnessSearch {
    int s, t, n;
    std::vector<std::uint32_t> adj;  // adjacency masks over all placed vertices

    WitnessSearch(int s_, int t_, int n_) : s(s_), t(t_), n(n_), adj(static_cast<std::size_t>(n_), 0) {}

    bool is_clique(std::uint32_t set) const {
        for (std::uint32_t rest = set; rest;) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            if ((adj[v] & rest) != rest) return false;
        }
        return true;
    }

    bool is_independent(std::uint32_t set) const {
        for (std::uint32_t rest = set; rest;) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            if (adj[v] & rest) return false;
        }
        return true;
    }

    // All k-subsets of [0, v) that are cliques / independent sets.
    void collect(int v, int k, bool cliques, std::vector<std::uint32_t>& out) const {
        out.clear();
        if (k == 0) {
            out.push_back(0);
            return;
        }
        if (v < k) return;
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::uint32_t set = 0;
            for (int i : idx) set |= std::uint32_t(1) << i;
            if (cliques ? is_clique(set) : is_independent(set)) out.push_back(set);
            int i = k - 1;
            while (i >= 0 && idx[i] == v - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int jj = i + 1; jj < k; ++jj) idx[jj] = idx[jj - 1] + 1;
        }
    }

    bool extend(int v) {
        if (v == n) return true;
        std::vector<std::uint32_t> cliques, indeps;
        collect(v, s - 1, true, cliques);
        collect(v, t - 1, false, indeps);
        std::uint32_t full = (std::uint32_t(1) << v) - 1;
        for (std::uint32_t mask = 0; mask <= full; ++mask) {
            // vertex 0's neighborhood must stay a contiguous prefix
            if (v >= 2 && (mask & 1) && !(adj[v - 1] & 1)) continue;
            bool ok = true;
            for (std::uint32_t c : cliques)
                if ((mask & c) == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            std::uint32_t non = full & ~mask;
            for (std::uint32_t ind : indeps)
                if ((non & ind) == ind) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            adj[v] = mask;
            for (std::uint32_t rest = mask; rest;) {
                int u = __builtin_ctz(rest);
                rest &= rest - 1;
                adj[u] |= std::uint32_t(1) << v;
            }
            if (extend(v + 1)) return true;
            for (std::uint32_t rest = mask; rest;) {
                int u = __builtin_ctz(rest);
                rest &= rest - 1;
                adj[u] &= ~(std::uint32_t(1) << v);
            }
            adj[v] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<SimpleGraph> find_ramsey_witness(int s, int t, int n) {
    if (s < 2 || t < 2) throw DomainError("ramsey witness search needs s, t >= 2");
    if (n < 1 || n > 9) throw SizeError("witness search capped at 9 vertices");
    WitnessSearch search(s, t, n);
    if (!search.extend(0)) return std::nullopt;
    SimpleGraph g(n);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if ((search.adj[v] >> u) & 1) g.add_edge(u, v);
    return g;
}

std::optional<int> ramsey_exact(int s, int t, int n_max) {
    if (s < 2 || t < 2) throw DomainError("ramsey_exact needs s, t >= 2");
    if (n_max < 1 || n_max > 9) throw SizeError("ramsey_exact capped at n_max = 9");
    for (int n = 1; n <= n_max; ++n) {
        if (!find_ramsey_witness(s, t, n)) return n;
    }
    return std::nullopt;
}

}  // namespace rk
