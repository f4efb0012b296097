#include "ramseykit/pattern.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace rk {

PatternGraph::PatternGraph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
    : n_(vertex_count), edges_(std::move(edge_list)) {
    if (n_ < 0 || n_ > 20) throw DomainError("pattern vertex count out of range");
    adj_.assign(static_cast<std::size_t>(n_), 0);
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n_) throw DomainError("pattern edge endpoint out of range");
        if (u == v) throw DomainError("pattern self-loop");
        if ((adj_[u] >> v) & 1) throw DomainError("duplicate pattern edge");
        adj_[u] |= std::uint32_t(1) << v;
        adj_[v] |= std::uint32_t(1) << u;
    }
    std::sort(edges_.begin(), edges_.end());
}

bool PatternGraph::has_isolated_vertex() const {
    for (int v = 0; v < n_; ++v)
        if (adj_[v] == 0) return true;
    return false;
}

bool PatternGraph::is_connected() const {
    if (n_ <= 1) return true;
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < n_; ++v)
            if ((frontier >> v) & 1) next |= adj_[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (std::uint32_t(1) << n_) - 1;
}

std::optional<std::vector<int>> PatternGraph::bipartition() const {
    std::vector<int> color(static_cast<std::size_t>(n_), -1);
    for (int s = 0; s < n_; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n_; ++u) {
                if (!has_edge(u, v)) continue;
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

PatternGraph PatternGraph::edge_subgraph_compacted(std::uint32_t edge_mask) const {
    std::uint32_t used = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if ((edge_mask >> i) & 1) used |= (1u << edges_[i].first) | (1u << edges_[i].second);
    }
    std::array<int, 20> relabel{};
    int nv = 0;
    for (int v = 0; v < n_; ++v)
        if ((used >> v) & 1) relabel[v] = nv++;
    std::vector<std::pair<int, int>> es;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if ((edge_mask >> i) & 1) es.emplace_back(relabel[edges_[i].first], relabel[edges_[i].second]);
    return PatternGraph(nv, std::move(es));
}

PatternGraph PatternGraph::disjoint_union(const PatternGraph& other) const {
    std::vector<std::pair<int, int>> es = edges_;
    for (auto [u, v] : other.edges_) es.emplace_back(u + n_, v + n_);
    return PatternGraph(n_ + other.n_, std::move(es));
}

namespace {

std::uint64_t encode_with_labels(const PatternGraph& g, const std::vector<int>& label) {
    // Fixed labeled encoding (memo key, not the canonical code).
    int n = g.vertex_count();
    std::uint64_t bits = 0;
    int pos = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++pos) {
            if (g.has_edge(label[i], label[j])) bits |= std::uint64_t(1) << pos;
        }
    }
    return bits;
}

// Canonical code layout: vertices placed one at a time; placing the vertex at
// position j contributes its adjacency bits toward positions 0..j-1 as the
// next most-significant chunk. Minimizing this placement-lexicographic
// integer over all orderings is isomorphism-invariant, and a partial
// placement whose prefix already exceeds the best code can be cut.
struct CanonicalSearch {
    const PatternGraph& g;
    int n;
    int total_bits;
    std::uint64_t best = ~std::uint64_t(0);
    std::array<int, kCanonicalCap> order{};

    explicit CanonicalSearch(const PatternGraph& graph)
        : g(graph), n(graph.vertex_count()), total_bits(graph.vertex_count() * (graph.vertex_count() - 1) / 2) {}

    void run(int pos, int bits_filled, std::uint64_t prefix, std::uint32_t used) {
        if (pos == n) {
            best = std::min(best, prefix);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            std::uint64_t chunk = 0;
            for (int i = 0; i < pos; ++i)
                if (g.has_edge(order[i], v)) chunk |= std::uint64_t(1) << (pos - 1 - i);
            int nb = bits_filled + pos;
            std::uint64_t p2 = (prefix << pos) | chunk;
            if (best != ~std::uint64_t(0) && p2 > (best >> (total_bits - nb))) continue;
            order[pos] = v;
            run(pos + 1, nb, p2, used | (std::uint32_t(1) << v));
        }
    }
};

}  // namespace

IsoClass canonical_form(const PatternGraph& g, int cap) {
    int n = g.vertex_count();
    if (n > cap || n > kCanonicalCap) throw SizeError("canonical_form: vertex count above cap");
    if (n == 0) return IsoClass{0, 0};
    CanonicalSearch search(g);
    search.run(0, 0, 0, 0);
    return IsoClass{static_cast<std::uint8_t>(n), search.best};
}

PatternGraph from_iso_class(const IsoClass& cls) {
    int n = cls.v;
    int total_bits = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> es;
    // Bit for pair (i, j), i < j, sits at offset C(j,2) + i from the top.
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            int from_top = j * (j - 1) / 2 + i;
            if ((cls.code >> (total_bits - 1 - from_top)) & 1) es.emplace_back(i, j);
        }
    return PatternGraph(n, std::move(es));
}

PatternStats pattern_stats(const PatternGraph& g) {
    PatternStats s;
    s.edge_count = g.edge_count();
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                int e = g.has_edge(a, b) + g.has_edge(a, c) + g.has_edge(b, c);
                if (e == 3) ++s.triangle_count;
            }
    // Unordered paths of length 2: a center with an unordered pair of neighbors.
    for (int v = 0; v < n; ++v) {
        long long d = g.degree(v);
        s.path2_count += d * (d - 1) / 2;
    }
    const auto& es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a != c && a != d && b != c && b != d) ++s.disjoint_edge_pairs;
        }
    return s;
}

long long SubgraphCensus::count_of(const IsoClass& cls) const {
    auto it = entries.find(cls);
    return it == entries.end() ? 0 : it->second.count;
}

long long SubgraphCensus::total() const {
    long long t = 0;
    for (const auto& [cls, e] : entries) t += e.count;
    return t;
}

SubgraphCensus census(const PatternGraph& g, int cap) {
    if (g.vertex_count() > cap) throw SizeError("census: vertex count above cap");
    int e = g.edge_count();
    if (e > 25) throw SizeError("census: too many edges for subset enumeration");
    SubgraphCensus out;
    // Canonicalization memoized on the compacted labeled graph; distinct edge
    // subsets frequently induce the same labeled subgraph.
    std::unordered_map<std::uint64_t, IsoClass> memo;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << e); ++mask) {
        PatternGraph sub = g.edge_subgraph_compacted(mask);
        std::vector<int> ident(static_cast<std::size_t>(sub.vertex_count()));
        std::iota(ident.begin(), ident.end(), 0);
        std::uint64_t key = encode_with_labels(sub, ident) * 16 + static_cast<std::uint64_t>(sub.vertex_count());
        auto it = memo.find(key);
        IsoClass cls;
        if (it != memo.end()) {
            cls = it->second;
        } else {
            cls = canonical_form(sub);
            memo.emplace(key, cls);
        }
        auto& entry = out.entries[cls];
        if (entry.count == 0) {
            entry.cls = cls;
            entry.vertices = sub.vertex_count();
            entry.edges = sub.edge_count();
        }
        ++entry.count;
    }
    return out;
}

std::optional<std::vector<int>> find_isomorphism(const PatternGraph& a, const PatternGraph& b) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
    {
        std::vector<int> da, db;
        for (int v = 0; v < n; ++v) da.push_back(a.degree(v)), db.push_back(b.degree(v));
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        if (da != db) return std::nullopt;
    }
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    // Backtracking over vertices of `a` in order; degree filter plus full
    // consistency check against already-mapped vertices.
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || a.degree(v) != b.degree(w)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (a.has_edge(u, v) != b.has_edge(map[u], w)) ok = false;
            if (!ok) continue;
            map[v] = w;
            used[w] = true;
            if (self(self, v + 1)) return true;
            used[w] = false;
            map[v] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return map;
}

PatternGraph pattern_from_name(const std::string& name) {
    if (name.size() < 2) throw DomainError("unknown pattern name: " + name);
    char kind = name[0];
    std::string rest = name.substr(1);
    auto parse_int = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw DomainError("unknown pattern name: " + name);
        return std::stoi(s);
    };
    if (kind == 'K') {
        auto comma = rest.find(',');
        if (comma != std::string::npos) {
            int a = parse_int(rest.substr(0, comma));
            int b = parse_int(rest.substr(comma + 1));
            std::vector<std::pair<int, int>> es;
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
            return PatternGraph(a + b, std::move(es));
        }
        int n = parse_int(rest);
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
        return PatternGraph(n, std::move(es));
    }
    if (kind == 'C') {
        int n = parse_int(rest);
        if (n < 3) throw DomainError("cycle needs at least 3 vertices");
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
        return PatternGraph(n, std::move(es));
    }
    if (kind == 'P') {
        int ne = parse_int(rest);  // path with ne edges, ne+1 vertices
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < ne; ++i) es.emplace_back(i, i + 1);
        return PatternGraph(ne + 1, std::move(es));
    }
    if (kind == 'E') {
        int n = parse_int(rest);
        return PatternGraph(n, {});
    }
    throw DomainError("unknown pattern name: " + name);
}

PatternGraph parse_pattern_text(const std::string& text) {
    std::istringstream in(text);
    int n;
    if (!(in >> n)) throw DomainError("pattern text: missing vertex count");
    std::vector<std::pair<int, int>> es;
    int u, v;
    while (in >> u >> v) es.emplace_back(u, v);
    return PatternGraph(n, std::move(es));
}

std::string pattern_to_text(const PatternGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

const std::vector<PatternGraph>& all_patterns_up_to(int max_vertices, bool no_isolated) {
    if (max_vertices < 0 || max_vertices > 7) throw SizeError("pattern pool capped at 7 vertices");
    static std::mutex mu;
    static std::map<std::pair<int, bool>, std::vector<PatternGraph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(max_vertices, no_isolated);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<PatternGraph> pool;
    std::map<IsoClass, bool> seen;
    for (int n = no_isolated ? 2 : 0; n <= max_vertices; ++n) {
        int m = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << m); ++mask) {
            std::vector<std::pair<int, int>> es;
            int pos = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++pos)
                    if ((mask >> pos) & 1) es.emplace_back(i, j);
            PatternGraph g(n, std::move(es));
            if (no_isolated && (n == 0 || g.has_isolated_vertex())) continue;
            IsoClass cls = canonical_form(g);
            if (!seen.emplace(cls, true).second) continue;
            pool.push_back(std::move(g));
        }
    }
    auto [pos, inserted] = cache.emplace(key, std::move(pool));
    (void)inserted;
    return pos->second;
}

}  // namespace rk
