#include "nudcode/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "nudcode/errors.hpp"

namespace nudcode {

bool is_proper(const UndirectedGraph& g, const Coloring& c) {
    if (c.color_of.size() != g.vertex_count()) return false;
    for (std::size_t col : c.color_of) {
        if (col < 1 || col > c.budget) return false;
    }
    for (auto [u, v] : g.edge_list()) {
        if (c.color_of[u] == c.color_of[v]) return false;
    }
    return true;
}

namespace {

std::vector<char> adjacency_matrix(const UndirectedGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<char> adj(n * n, 0);
    for (auto [u, v] : g.edge_list()) adj[u * n + v] = adj[v * n + u] = 1;
    return adj;
}

class CliqueSearch {
public:
    CliqueSearch(const UndirectedGraph& g, std::size_t limit) : n_(g.vertex_count()), limit_(limit) {
        adj_ = adjacency_matrix(g);
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
    }

    std::vector<std::size_t> run() {
        std::vector<std::size_t> cur;
        expand(cur, order_);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    bool adj(std::size_t u, std::size_t v) const { return adj_[u * n_ + v] != 0; }

    void expand(std::vector<std::size_t>& cur, const std::vector<std::size_t>& cand) {
        if (cur.size() > best_.size()) best_ = cur;
        if (limit_ && ++nodes_ > limit_) return;

        // Greedy coloring of the candidates gives an upper bound per prefix.
        std::vector<std::size_t> bound(cand.size());
        std::vector<std::vector<std::size_t>> classes;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool clash = false;
                for (std::size_t u : classes[c]) {
                    if (adj(u, cand[i])) {
                        clash = true;
                        break;
                    }
                }
                if (!clash) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(cand[i]);
            bound[i] = c + 1;
        }
        for (std::size_t i = 1; i < bound.size(); ++i) bound[i] = std::max(bound[i], bound[i - 1]);

        for (std::size_t i = cand.size(); i-- > 0;) {
            if (cur.size() + bound[i] <= best_.size()) return;
            const std::size_t v = cand[i];
            std::vector<std::size_t> next;
            for (std::size_t k = 0; k < i; ++k) {
                if (adj(v, cand[k])) next.push_back(cand[k]);
            }
            cur.push_back(v);
            expand(cur, next);
            cur.pop_back();
            if (limit_ && nodes_ > limit_) return;
        }
    }

    std::size_t n_;
    std::size_t limit_;
    std::size_t nodes_ = 0;
    std::vector<char> adj_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> best_;
};

bool is_clique(const UndirectedGraph& g, const std::vector<std::size_t>& vs) {
    for (std::size_t a = 0; a < vs.size(); ++a) {
        if (vs[a] >= g.vertex_count()) return false;
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
            if (!g.adjacent(vs[a], vs[b])) return false;
        }
    }
    return true;
}

class Dsatur {
public:
    Dsatur(const UndirectedGraph& g, std::size_t k, const ColoringOptions& opts)
        : g_(g), n_(g.vertex_count()), k_(k), deadline_(opts.deadline), color_(n_, 0),
          seen_(n_ * (k + 1), 0), sat_(n_, 0), tie_(n_) {
        std::iota(tie_.begin(), tie_.end(), 0);
        if (opts.seed != 0) {
            std::mt19937_64 rng(opts.seed);
            std::shuffle(tie_.begin(), tie_.end(), rng);
        }
    }

    void assign(std::size_t v, std::size_t c) {
        color_[v] = c;
        for (std::size_t u : g_.neighbors(v)) {
            if (seen_[u * (k_ + 1) + c]++ == 0) ++sat_[u];
        }
    }

    void unassign(std::size_t v) {
        const std::size_t c = color_[v];
        for (std::size_t u : g_.neighbors(v)) {
            if (--seen_[u * (k_ + 1) + c] == 0) --sat_[u];
        }
        color_[v] = 0;
    }

    bool search(std::size_t colored, std::size_t max_used) {
        if (colored == n_) return true;
        if ((++nodes_ & 0xff) == 0 && deadline_.expired()) throw TimeoutError("coloring search budget exhausted");

        std::size_t best = n_;
        for (std::size_t v = 0; v < n_; ++v) {
            if (color_[v]) continue;
            if (best == n_ || better(v, best)) best = v;
        }
        if (sat_[best] >= k_) return false;
        const std::size_t top = std::min(k_, max_used + 1);
        for (std::size_t c = 1; c <= top; ++c) {
            if (seen_[best * (k_ + 1) + c]) continue;
            assign(best, c);
            if (search(colored + 1, std::max(max_used, c))) return true;
            unassign(best);
        }
        return false;
    }

    std::vector<std::size_t> colors() const { return color_; }
    std::size_t nodes() const { return nodes_; }

private:
    bool better(std::size_t a, std::size_t b) const {
        if (sat_[a] != sat_[b]) return sat_[a] > sat_[b];
        if (g_.degree(a) != g_.degree(b)) return g_.degree(a) > g_.degree(b);
        return tie_[a] < tie_[b];
    }

    const UndirectedGraph& g_;
    std::size_t n_;
    std::size_t k_;
    const Deadline& deadline_;
    std::vector<std::size_t> color_;
    std::vector<std::uint32_t> seen_;  // [v][c]: neighbors of v colored c
    std::vector<std::size_t> sat_;
    std::vector<std::size_t> tie_;
    std::size_t nodes_ = 0;
};

}  // namespace

std::optional<Coloring> color_exact(const UndirectedGraph& g, std::size_t budget, const ColoringOptions& opts,
                                    ColoringStats* stats) {
    if (budget == 0) throw ValidationError("color budget must be positive");
    const std::size_t n = g.vertex_count();
    if (n == 0) return Coloring{{}, budget};

    std::vector<std::size_t> clique;
    if (opts.clique_hint && is_clique(g, *opts.clique_hint)) {
        clique = *opts.clique_hint;
    } else {
        clique = find_max_clique(g, 20000);
    }
    if (stats) stats->clique_size = clique.size();
    if (clique.size() > budget) return std::nullopt;

    Dsatur search(g, budget, opts);
    for (std::size_t i = 0; i < clique.size(); ++i) search.assign(clique[i], i + 1);
    const bool ok = search.search(clique.size(), clique.size());
    if (stats) stats->nodes = search.nodes();
    if (!ok) return std::nullopt;
    return Coloring{search.colors(), budget};
}

std::vector<std::size_t> find_max_clique(const UndirectedGraph& g, std::size_t node_limit) {
    return CliqueSearch(g, node_limit).run();
}

std::size_t chromatic_number_oracle(const UndirectedGraph& g, std::size_t cap) {
    if (g.vertex_count() > cap) {
        throw CapError("graph has " + std::to_string(g.vertex_count()) + " vertices; oracle cap is " +
                       std::to_string(cap));
    }
    if (g.vertex_count() == 0) return 0;
    for (std::size_t k = std::max<std::size_t>(1, find_max_clique(g).size());; ++k) {
        if (color_exact(g, k)) return k;
    }
}

std::optional<Coloring> two_colorable(const UndirectedGraph& g) {
    const std::size_t n = g.vertex_count();
    Coloring c{std::vector<std::size_t>(n, 0), 2};
    std::vector<std::size_t> queue;
    queue.reserve(n);
    for (std::size_t root = 0; root < n; ++root) {
        if (c.color_of[root]) continue;
        c.color_of[root] = 1;
        queue.assign(1, root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t v = queue[head];
            for (std::size_t u : g.neighbors(v)) {
                if (!c.color_of[u]) {
                    c.color_of[u] = 3 - c.color_of[v];
                    queue.push_back(u);
                } else if (c.color_of[u] == c.color_of[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return c;
}

}  // namespace nudcode
