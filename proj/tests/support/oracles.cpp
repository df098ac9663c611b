#include "oracles.hpp"

#include <algorithm>
#include <random>

namespace oracle {

std::size_t min_cut(const nudcode::NetworkInstance& g, std::size_t sink_index) {
    const std::size_t n = g.node_count();
    const std::size_t s = g.source(), t = g.sink(sink_index);
    std::vector<std::size_t> free;
    for (std::size_t v = 0; v < n; ++v)
        if (v != s && v != t) free.push_back(v);
    std::size_t best = g.edge_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
        std::vector<char> side(n, 0);
        side[s] = 1;
        for (std::size_t i = 0; i < free.size(); ++i)
            if (mask >> i & 1) side[free[i]] = 1;
        std::size_t cut = 0;
        for (const auto& e : g.edges())
            if (side[e.tail] && !side[e.head]) ++cut;
        best = std::min(best, cut);
    }
    return best;
}

namespace {

void bron_kerbosch(const nudcode::UndirectedGraph& g, std::vector<std::size_t>& r, std::vector<std::size_t> p,
                   std::vector<std::size_t> x, std::vector<std::vector<std::size_t>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    while (!p.empty()) {
        const std::size_t v = p.back();
        std::vector<std::size_t> np, nx;
        for (std::size_t u : p)
            if (g.adjacent(u, v)) np.push_back(u);
        for (std::size_t u : x)
            if (g.adjacent(u, v)) nx.push_back(u);
        r.push_back(v);
        bron_kerbosch(g, r, np, nx, out);
        r.pop_back();
        p.pop_back();
        x.push_back(v);
    }
}

bool color_from(const nudcode::UndirectedGraph& g, std::size_t k, std::size_t v, std::vector<std::size_t>& col) {
    if (v == g.vertex_count()) return true;
    for (std::size_t c = 1; c <= k; ++c) {
        bool ok = true;
        for (std::size_t u : g.neighbors(v))
            if (u < v && col[u] == c) ok = false;
        if (!ok) continue;
        col[v] = c;
        if (color_from(g, k, v + 1, col)) return true;
    }
    col[v] = 0;
    return false;
}

}  // namespace

std::vector<std::vector<std::size_t>> maximal_cliques(const nudcode::UndirectedGraph& g) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> r, p;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) p.push_back(v);
    bron_kerbosch(g, r, p, {}, out);
    return out;
}

std::size_t max_clique(const nudcode::UndirectedGraph& g) {
    std::size_t best = 0;
    for (const auto& c : maximal_cliques(g)) best = std::max(best, c.size());
    return best;
}

bool k_colorable(const nudcode::UndirectedGraph& g, std::size_t k) {
    std::vector<std::size_t> col(g.vertex_count(), 0);
    return color_from(g, k, 0, col);
}

std::size_t chromatic(const nudcode::UndirectedGraph& g) {
    if (g.vertex_count() == 0) return 0;
    std::size_t k = 1;
    while (!k_colorable(g, k)) ++k;
    return k;
}

std::uint8_t gf_mul(std::uint8_t a, std::uint8_t b) {
    unsigned prod = 0;
    for (int i = 0; i < 8; ++i)
        if (b >> i & 1) prod ^= unsigned(a) << i;
    for (int bit = 14; bit >= 8; --bit)
        if (prod >> bit & 1) prod ^= 0x11Bu << (bit - 8);
    return static_cast<std::uint8_t>(prod);
}

bool is_induced_cycle(const nudcode::UndirectedGraph& g, const std::vector<std::size_t>& vs) {
    if (vs.size() < 3) return false;
    const nudcode::UndirectedGraph h = g.induced(vs);
    for (std::size_t v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) != 2) return false;
    // connected
    std::vector<char> seen(h.vertex_count(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t u : h.neighbors(v))
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
    }
    return count == h.vertex_count();
}

nudcode::UndirectedGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    nudcode::UndirectedGraph g(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (coin(rng)) g.add_edge(a, b);
    return g;
}

}  // namespace oracle
