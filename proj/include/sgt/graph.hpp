#ifndef SGT_GRAPH_HPP
#define SGT_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

#include "semigroup.hpp"

namespace sgt {

struct commutative_semigroup : std::runtime_error {
    commutative_semigroup()
        : std::runtime_error("commutative semigroup has no commuting graph") {}
};

/// Undirected simple graph with vertex labels back-referencing semigroup
/// elements. Adjacency is kept as 64-bit row bitsets.
class SimpleGraph {
public:
    explicit SimpleGraph(int vertices)
        : n_(vertices), words_((vertices + 63) / 64), rows_(vertices, std::vector<std::uint64_t>(words_, 0)) {
        labels_.resize(vertices);
        for (int v = 0; v < vertices; ++v) labels_[v] = v;
    }

    int vertex_count() const { return n_; }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("no loops in a simple graph");
        rows_[u][v >> 6] |= std::uint64_t{1} << (v & 63);
        rows_[v][u >> 6] |= std::uint64_t{1} << (u & 63);
    }

    bool adjacent(int u, int v) const { return (rows_[u][v >> 6] >> (v & 63)) & 1; }

    const std::vector<std::uint64_t>& row(int v) const { return rows_[v]; }
    int words() const { return words_; }

    int degree(int v) const {
        int d = 0;
        for (auto w : rows_[v]) d += __builtin_popcountll(w);
        return d;
    }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += degree(v);
        return total / 2;
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (adjacent(v, u)) out.push_back(u);
        return out;
    }

    const std::vector<element>& vertex_labels() const { return labels_; }
    void set_vertex_labels(std::vector<element> labels) { labels_ = std::move(labels); }

private:
    int n_;
    int words_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<element> labels_;
};

/// Graph on the non-central elements; distinct x, y adjacent iff xy = yx.
inline SimpleGraph commuting_graph(const FiniteSemigroup& s) {
    const ElementSet z = center(s);
    std::vector<element> verts;
    for (element x = 0; x < s.order(); ++x)
        if (!z.contains(x)) verts.push_back(x);
    if (verts.empty()) throw commutative_semigroup();

    SimpleGraph g(static_cast<int>(verts.size()));
    g.set_vertex_labels(verts);
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (s.at(verts[i], verts[j]) == s.at(verts[j], verts[i]))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

inline int component_count(const SimpleGraph& g) {
    std::vector<bool> seen(g.vertex_count(), false);
    int comps = 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        ++comps;
        std::deque<int> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = true;
                    queue.push_back(u);
                }
        }
    }
    return comps;
}

inline int cycle_space_dimension(const SimpleGraph& g) {
    return g.edge_count() - g.vertex_count() + component_count(g);
}

/// Length of a shortest cycle; absent when the graph is acyclic. Per-root
/// BFS: a non-tree edge seen at depths d1, d2 closes a cycle of length
/// d1 + d2 + 1 through the root, and the minimum over roots is exact.
inline std::optional<int> girth(const SimpleGraph& g) {
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> depth(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(depth.begin(), depth.end(), -1);
        std::deque<int> queue{root};
        depth[root] = 0;
        parent[root] = -1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int u : g.neighbors(v)) {
                if (depth[u] < 0) {
                    depth[u] = depth[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if (u != parent[v]) {
                    const int len = depth[u] + depth[v] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

inline std::optional<int> diameter(const SimpleGraph& g) {
    const int n = g.vertex_count();
    int best = 0;
    std::vector<int> depth(n);
    for (int root = 0; root < n; ++root) {
        std::fill(depth.begin(), depth.end(), -1);
        std::deque<int> queue{root};
        depth[root] = 0;
        int reached = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            best = std::max(best, depth[v]);
            for (int u : g.neighbors(v))
                if (depth[u] < 0) {
                    depth[u] = depth[v] + 1;
                    queue.push_back(u);
                    ++reached;
                }
        }
        if (reached < n) return std::nullopt;  // disconnected
    }
    return best;
}

namespace detail {

struct BitRow {
    std::vector<std::uint64_t> w;

    int popcount() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }
    bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1; }
    void reset(int v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    int first() const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i]) return static_cast<int>(i * 64 + __builtin_ctzll(w[i]));
        return -1;
    }
    void and_with(const std::vector<std::uint64_t>& other) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= other[i];
    }
};

class MaxCliqueSolver {
public:
    explicit MaxCliqueSolver(const SimpleGraph& g) : g_(g) {}

    int solve() {
        const int n = g_.vertex_count();
        if (n == 0) return 0;
        order_ = degeneracy_order();
        best_ = 1;
        BitRow cand{std::vector<std::uint64_t>(g_.words(), 0)};
        for (int v = 0; v < n; ++v) cand.w[v >> 6] |= std::uint64_t{1} << (v & 63);
        expand(cand, 0);
        return best_;
    }

private:
    std::vector<int> degeneracy_order() const {
        const int n = g_.vertex_count();
        std::vector<int> deg(n), order;
        std::vector<bool> removed(n, false);
        for (int v = 0; v < n; ++v) deg[v] = g_.degree(v);
        for (int k = 0; k < n; ++k) {
            int v = -1;
            for (int u = 0; u < n; ++u)
                if (!removed[u] && (v < 0 || deg[u] < deg[v])) v = u;
            removed[v] = true;
            order.push_back(v);
            for (int u : g_.neighbors(v))
                if (!removed[u]) --deg[u];
        }
        std::reverse(order.begin(), order.end());  // highest core first
        return order;
    }

    // Greedy colouring of the candidate set; vertices are returned in
    // nondecreasing colour order so the bound tightens as we branch.
    void colour(const BitRow& cand, std::vector<int>& verts, std::vector<int>& bound) const {
        verts.clear();
        bound.clear();
        BitRow uncoloured = cand;
        int colour_count = 0;
        while (uncoloured.any()) {
            ++colour_count;
            BitRow cls = uncoloured;
            while (cls.any()) {
                int v = -1;
                for (int u : order_)
                    if (cls.test(u)) {
                        v = u;
                        break;
                    }
                cls.reset(v);
                uncoloured.reset(v);
                for (std::size_t i = 0; i < cls.w.size(); ++i) cls.w[i] &= ~g_.row(v)[i];
                verts.push_back(v);
                bound.push_back(colour_count);
            }
        }
    }

    void expand(const BitRow& cand, int size) {
        std::vector<int> verts, bound;
        colour(cand, verts, bound);
        for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
            if (size + bound[i] <= best_) return;
            const int v = verts[i];
            BitRow next = cand;
            for (int j = i; j < static_cast<int>(verts.size()); ++j) next.reset(verts[j]);
            next.and_with(g_.row(v));
            if (size + 1 > best_) best_ = size + 1;
            if (next.any()) expand(next, size + 1);
        }
    }

    const SimpleGraph& g_;
    std::vector<int> order_;
    int best_ = 0;
};

// Backtracking k-colourability with saturation-degree branching.
class ColouringSolver {
public:
    explicit ColouringSolver(const SimpleGraph& g) : g_(g) {}

    bool colourable(int k) {
        colour_.assign(g_.vertex_count(), -1);
        k_ = k;
        return place(0);
    }

private:
    bool place(int assigned) {
        const int n = g_.vertex_count();
        if (assigned == n) return true;
        // Pick the uncoloured vertex with the most distinctly coloured
        // neighbours, ties broken by degree.
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (colour_[v] >= 0) continue;
            std::uint64_t used = 0;
            for (int u : g_.neighbors(v))
                if (colour_[u] >= 0) used |= std::uint64_t{1} << colour_[u];
            const int sat = __builtin_popcountll(used);
            const int deg = g_.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        std::uint64_t used = 0;
        for (int u : g_.neighbors(pick))
            if (colour_[u] >= 0) used |= std::uint64_t{1} << colour_[u];
        // New-colour symmetry break: allow at most one colour index beyond
        // the highest used so far.
        int max_used = -1;
        for (int v = 0; v < n; ++v) max_used = std::max(max_used, colour_[v]);
        for (int c = 0; c < std::min(k_, max_used + 2); ++c) {
            if ((used >> c) & 1) continue;
            colour_[pick] = c;
            if (place(assigned + 1)) return true;
            colour_[pick] = -1;
        }
        return false;
    }

    const SimpleGraph& g_;
    std::vector<int> colour_;
    int k_ = 0;
};

}  // namespace detail

inline int clique_number(const SimpleGraph& g) {
    if (g.vertex_count() < 1) throw std::invalid_argument("clique number needs a vertex");
    return detail::MaxCliqueSolver(g).solve();
}

inline int chromatic_number(const SimpleGraph& g) {
    if (g.vertex_count() < 1) throw std::invalid_argument("chromatic number needs a vertex");
    const int lower = clique_number(g);
    detail::ColouringSolver solver(g);
    for (int k = lower;; ++k)
        if (solver.colourable(k)) return k;
}

/// Path x1 - ... - xk in the commuting graph with x1 != xk and
/// x1 xi = xk xi for every vertex xi of the path.
struct LeftPathWitness {
    std::vector<element> vertices;  // semigroup element indices

    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

inline bool check_left_path(const FiniteSemigroup& s, const SimpleGraph& g,
                            const LeftPathWitness& w) {
    const auto& verts = w.vertices;
    if (verts.size() < 2 || verts.front() == verts.back()) return false;
    std::vector<int> pos(s.order(), -1);
    for (int i = 0; i < g.vertex_count(); ++i) pos[g.vertex_labels()[i]] = i;
    const element a = verts.front(), b = verts.back();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (pos[verts[i]] < 0) return false;
        if (s.at(a, verts[i]) != s.at(b, verts[i])) return false;
        if (i + 1 < verts.size() && !g.adjacent(pos[verts[i]], pos[verts[i + 1]])) return false;
    }
    return true;
}

/// Knit degree: minimum length of a left path, with a witness. For each
/// vertex pair {a, b} satisfying the endpoint conditions aa = ba and
/// ab = bb, the shortest left path from a to b is a shortest a-b path in
/// the subgraph induced by { z : az = bz }.
inline std::optional<std::pair<int, LeftPathWitness>> knit_degree(const FiniteSemigroup& s) {
    const SimpleGraph g = commuting_graph(s);  // throws when commutative
    const auto& verts = g.vertex_labels();
    const int n = g.vertex_count();

    std::optional<std::pair<int, LeftPathWitness>> best;
    std::vector<bool> allowed(n);
    std::vector<int> prev(n);
    for (int ia = 0; ia < n && (!best || best->first > 1); ++ia)
        for (int ib = ia + 1; ib < n; ++ib) {
            const element a = verts[ia], b = verts[ib];
            if (s.at(a, a) != s.at(b, a) || s.at(a, b) != s.at(b, b)) continue;
            for (int v = 0; v < n; ++v) allowed[v] = s.at(a, verts[v]) == s.at(b, verts[v]);
            // BFS from a to b inside the induced subgraph.
            std::fill(prev.begin(), prev.end(), -2);
            std::deque<int> queue{ia};
            prev[ia] = -1;
            while (!queue.empty() && prev[ib] == -2) {
                int v = queue.front();
                queue.pop_front();
                for (int u : g.neighbors(v))
                    if (allowed[u] && prev[u] == -2) {
                        prev[u] = v;
                        queue.push_back(u);
                    }
            }
            if (prev[ib] == -2) continue;
            LeftPathWitness w;
            for (int v = ib; v != -1; v = prev[v]) w.vertices.push_back(verts[v]);
            std::reverse(w.vertices.begin(), w.vertices.end());
            const int len = w.length();
            if (!best || len < best->first) best = {len, std::move(w)};
            if (best->first == 1) break;
        }
    return best;
}

/// Full invariant record for a graph.
struct GraphMetrics {
    std::optional<int> girth;
    int clique_number = 0;
    int chromatic_number = 0;
    std::optional<int> diameter;
    int edge_count = 0;
    int component_count = 0;
    int cycle_space_dim = 0;
    int vertex_count = 0;
};

inline GraphMetrics graph_metrics(const SimpleGraph& g) {
    GraphMetrics m;
    m.vertex_count = g.vertex_count();
    m.edge_count = g.edge_count();
    m.component_count = component_count(g);
    m.cycle_space_dim = m.edge_count - m.vertex_count + m.component_count;
    m.girth = girth(g);
    m.clique_number = clique_number(g);
    m.chromatic_number = chromatic_number(g);
    m.diameter = diameter(g);
    return m;
}

}  // namespace sgt

#endif  // SGT_GRAPH_HPP
