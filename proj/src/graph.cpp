#include "ramseykit/graph.hpp"

#include <algorithm>
#include <sstream>

#include "ramseykit/rng.hpp"
#include "ramseykit/simd.hpp"

namespace rk {

SimpleGraph::SimpleGraph(int n) : n_(n) {
    if (n < 0) throw DomainError("negative vertex count");
    words_ = static_cast<std::size_t>((n + 63) / 64);
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void SimpleGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("self-loop");
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t(1) << (v % 64);
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t(1) << (u % 64);
}

bool SimpleGraph::has_edge(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
}

int SimpleGraph::degree(int v) const {
    const std::uint64_t* r = row(v);
    int d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += __builtin_popcountll(r[w]);
    return d;
}

long long SimpleGraph::edge_count() const {
    long long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

namespace {

// In-place 64x64 bit-matrix transpose under the bit-b = column-b convention
// (butterfly stages swap the (row j-bit, column j-bit) = (0,1)/(1,0) cells).
void transpose64(std::uint64_t a[64]) {
    std::uint64_t m = 0x00000000ffffffffull;
    for (unsigned j = 32; j; j >>= 1, m ^= m << j) {
        for (unsigned k = 0; k < 64; k = (k + j + 1) & ~j) {
            std::uint64_t t = ((a[k] >> j) ^ a[k + j]) & m;
            a[k] ^= t << j;
            a[k + j] ^= t;
        }
    }
}

}  // namespace

void SimpleGraph::symmetrize_from_upper() {
    // Mask tail bits beyond n in every row first; they may hold generator noise.
    if (n_ % 64 != 0) {
        std::uint64_t tail = (std::uint64_t(1) << (n_ % 64)) - 1;
        for (int v = 0; v < n_; ++v) mutable_row(v)[words_ - 1] &= tail;
    }
    std::size_t blocks = words_;
    std::uint64_t t[64], tt[64];
    for (std::size_t bi = 0; bi < blocks; ++bi) {
        for (std::size_t bj = bi; bj < blocks; ++bj) {
            for (int r = 0; r < 64; ++r) {
                int u = static_cast<int>(bi * 64) + r;
                t[r] = u < n_ ? row(u)[bj] : 0;
            }
            for (int r = 0; r < 64; ++r) tt[r] = t[r];
            transpose64(tt);
            if (bi == bj) {
                // keep bits above the diagonal, mirror them below, clear it
                for (int r = 0; r < 64; ++r) {
                    int u = static_cast<int>(bi * 64) + r;
                    if (u >= n_) break;
                    std::uint64_t above = r == 63 ? 0 : ~((std::uint64_t(2) << r) - 1);
                    mutable_row(u)[bj] = (t[r] & above) | (tt[r] & ((std::uint64_t(1) << r) - 1));
                }
            } else {
                for (int c = 0; c < 64; ++c) {
                    int v = static_cast<int>(bj * 64) + c;
                    if (v >= n_) break;
                    mutable_row(v)[bi] = tt[c];
                }
            }
        }
    }
}

SimpleGraph SimpleGraph::complement() const {
    SimpleGraph c(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) c.add_edge(u, v);
    return c;
}

long long SimpleGraph::triangle_count() const {
    long long total = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) total += static_cast<long long>(simd::and_popcount(row(u), row(v), words_));
    // Each triangle counted once per edge, with the common-neighbor popcount
    // double counting vertices below/above: every triangle appears 3 times.
    return total / 3;
}

namespace {

long long cliques_rec(const SimpleGraph& g, std::vector<std::uint64_t>& cand, int depth, int want) {
    if (depth == want) return 1;
    long long total = 0;
    std::size_t w = g.words_per_row();
    std::uint64_t* cur = cand.data() + static_cast<std::size_t>(depth) * w;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!((cur[v / 64] >> (v % 64)) & 1)) continue;
        // Restrict candidates to neighbors of v above v, keeping tuples ordered.
        std::uint64_t* next = cand.data() + static_cast<std::size_t>(depth + 1) * w;
        const std::uint64_t* rv = g.row(v);
        for (std::size_t i = 0; i < w; ++i) next[i] = cur[i] & rv[i];
        for (int i = 0; i <= v / 64; ++i)
            next[i] &= (i < v / 64) ? 0 : ~((std::uint64_t(2) << (v % 64)) - 1);
        total += cliques_rec(g, cand, depth + 1, want);
    }
    return total;
}

}  // namespace

long long SimpleGraph::count_cliques(int k) const {
    if (k == 0) return 1;
    if (k == 1) return n_;
    std::vector<std::uint64_t> cand(static_cast<std::size_t>(k + 1) * words_, 0);
    for (int v = 0; v < n_; ++v) cand[v / 64] |= std::uint64_t(1) << (v % 64);
    return cliques_rec(*this, cand, 0, k);
}

int SimpleGraph::clique_number() const {
    int k = 0;
    while (count_cliques(k + 1) > 0) ++k;
    return k;
}

int SimpleGraph::independence_number() const { return complement().clique_number(); }

// ---------------------------------------------------------------------------

SimpleGraph graph_from_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    int n;
    if (!(in >> n)) throw DomainError("graph text: missing vertex count");
    SimpleGraph g(n);
    int u, v;
    while (in >> u >> v) g.add_edge(u, v);
    return g;
}

std::string graph_to_edge_list_text(const SimpleGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << "\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.has_edge(u, v)) out << u << " " << v << "\n";
    return out.str();
}

SimpleGraph graph_from_graph6(const std::string& g6) {
    std::size_t pos = 0;
    if (g6.empty()) throw DomainError("empty graph6 string");
    long long n;
    if (g6[0] == '~') throw DomainError("graph6: large-n forms not supported");
    n = g6[0] - 63;
    pos = 1;
    if (n < 0 || n > 100000) throw DomainError("graph6: bad vertex count");
    SimpleGraph g(static_cast<int>(n));
    long long need = n * (n - 1) / 2;
    long long bit = 0;
    for (; pos < g6.size() && bit < need; ++pos) {
        int c = g6[pos] - 63;
        if (c < 0 || c > 63) throw DomainError("graph6: bad character");
        for (int b = 5; b >= 0 && bit < need; --b, ++bit) {
            if ((c >> b) & 1) {
                // bit index walks column-major: pairs (0,1),(0,2),(1,2),(0,3),...
                long long rem = bit;
                int col = 1;
                while (rem >= col) rem -= col, ++col;
                g.add_edge(static_cast<int>(rem), col);
            }
        }
    }
    if (bit < need) throw DomainError("graph6: truncated");
    return g;
}

std::string graph_to_graph6(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n > 62) throw SizeError("graph6 export limited to 62 vertices here");
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0, nb = 0;
    for (int col = 1; col < n; ++col)
        for (int rowi = 0; rowi < col; ++rowi) {
            acc = (acc << 1) | (g.has_edge(rowi, col) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    if (nb) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return out;
}

// ---------------------------------------------------------------------------

SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph cycle_graph(int n) {
    if (n < 3) throw DomainError("cycle needs at least 3 vertices");
    SimpleGraph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

SimpleGraph empty_graph(int n) { return SimpleGraph(n); }

SimpleGraph gnp_graph(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw DomainError("edge probability outside [0,1]");
    SimpleGraph g(n);
    SplitMix rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_double() < p) g.add_edge(u, v);
    return g;
}

SimpleGraph circulant_graph(int n, const std::vector<int>& distances) {
    SimpleGraph g(n);
    for (int v = 0; v < n; ++v)
        for (int d : distances) {
            if (d <= 0 || 2 * d > n + 1) continue;
            int u = (v + d) % n;
            if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
        }
    return g;
}

}  // namespace rk
