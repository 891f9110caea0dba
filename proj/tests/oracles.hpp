// Independent brute-force reference implementations used only by the
// tests. Kept deliberately naive so they share no code or strategy with
// the solvers under test.
#ifndef SGT_TESTS_ORACLES_HPP
#define SGT_TESTS_ORACLES_HPP

#include <algorithm>
#include <deque>
#include <optional>
#include <random>
#include <vector>

#include "sgt/graph.hpp"

namespace oracle {

/// Shortest cycle by deleting each edge in turn and measuring the
/// shortest remaining path between its endpoints.
inline std::optional<int> girth(const sgt::SimpleGraph& g) {
    const int n = g.vertex_count();
    std::optional<int> best;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) continue;
            // BFS from u to v avoiding the edge u-v itself.
            std::vector<int> dist(n, -1);
            std::deque<int> queue{u};
            dist[u] = 0;
            while (!queue.empty()) {
                const int x = queue.front();
                queue.pop_front();
                for (int y = 0; y < n; ++y) {
                    if (!g.adjacent(x, y) || dist[y] >= 0) continue;
                    if ((x == u && y == v) || (x == v && y == u)) continue;
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
            if (dist[v] >= 0 && (!best || dist[v] + 1 < *best)) best = dist[v] + 1;
        }
    return best;
}

/// Largest clique by checking every vertex subset (graphs stay small).
inline int clique_number(const sgt::SimpleGraph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (!((mask >> u) & 1)) continue;
            for (int v = u + 1; v < n && ok; ++v)
                if (((mask >> v) & 1) && !g.adjacent(u, v)) ok = false;
        }
        if (ok) best = std::max(best, __builtin_popcountl(mask));
    }
    return best;
}

inline bool colourable(const sgt::SimpleGraph& g, std::vector<int>& colour, int v, int k) {
    if (v == g.vertex_count()) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.adjacent(u, v) && colour[u] == c) ok = false;
        if (!ok) continue;
        colour[v] = c;
        if (colourable(g, colour, v + 1, k)) return true;
    }
    colour[v] = -1;
    return false;
}

/// Chromatic number by plain first-to-last backtracking.
inline int chromatic_number(const sgt::SimpleGraph& g) {
    for (int k = 1;; ++k) {
        std::vector<int> colour(g.vertex_count(), -1);
        if (colourable(g, colour, 0, k)) return k;
    }
}

inline sgt::SimpleGraph random_graph(std::mt19937& rng, int max_vertices) {
    std::uniform_int_distribution<int> nv(1, max_vertices);
    std::uniform_real_distribution<double> prob(0.0, 1.0);
    const int n = nv(rng);
    const double p = prob(rng);
    sgt::SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (prob(rng) < p) g.add_edge(u, v);
    return g;
}

}  // namespace oracle

#endif  // SGT_TESTS_ORACLES_HPP
