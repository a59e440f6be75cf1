#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "cigraph/graph.hpp"

namespace test_helpers {

using cigraph::Graph;
using cigraph::VertexId;

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph::from_edges(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph::from_edges(n, edges);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
    return Graph::from_edges(a + b, edges);
}

// The paper's Example graph: v1..v7 (ids 0..6), edges e1..e9 in the figure's
// order, so edge id i corresponds to variable x_{i+1}.
inline Graph figure5() {
    return Graph::from_edges(7,
                             {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}, {5, 6}, {2, 6}},
                             {"v1", "v2", "v3", "v4", "v5", "v6", "v7"});
}

// Three vertex-disjoint triangles T1={0,1,2}, T2={3,4,5}, T3={6,7,8} with
// bridges 2-3 and 3-6 (a ring graph that is not a complete intersection).
inline Graph figure1() {
    return Graph::from_edges(9, {{0, 1},
                                 {1, 2},
                                 {0, 2},
                                 {3, 4},
                                 {4, 5},
                                 {3, 5},
                                 {6, 7},
                                 {7, 8},
                                 {6, 8},
                                 {2, 3},
                                 {3, 6}});
}

// Triangle {v1,v2,v3} plus square {v4..v7} joined by v3-v5 and v3-v7.
inline Graph contraejemplo() {
    return Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {3, 6}, {2, 4}, {2, 6}},
                             {"v1", "v2", "v3", "v4", "v5", "v6", "v7"});
}

// Bipartite 8-vertex graph of the contraction figure; v=0 has degree 2, its
// neighbors 1 (=u2) and 3 (=u1) are non-adjacent with common neighbor 6.
inline Graph figure4_left() {
    // A=0(v), B=1(u2), C=2, D=3(u1), E=4, F=5, H=6, I=7
    return Graph::from_edges(8, {{0, 1}, {0, 3}, {1, 6}, {2, 3}, {3, 4}, {5, 6}, {6, 7}, {2, 5}, {4, 7}, {3, 6}});
}

inline Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});          // outer C5
        edges.push_back({i, i + 5});                // spokes
        edges.push_back({i + 5, (i + 2) % 5 + 5});  // inner pentagram
    }
    return Graph::from_edges(10, edges);
}

// Triangular prism: two triangles joined by a perfect matching (odd band r=3).
inline Graph prism() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

inline Graph random_connected_graph(int n, int max_edges, std::mt19937_64& rng) {
    while (true) {
        std::vector<std::pair<int, int>> all;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) all.push_back({i, j});
        std::shuffle(all.begin(), all.end(), rng);
        // random spanning tree first
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i < n; ++i) {
            int j = static_cast<int>(rng() % i);
            edges.push_back({std::min(perm[i], perm[j]), std::max(perm[i], perm[j])});
        }
        auto has = [&](int a, int b) {
            for (auto& [x, y] : edges)
                if (x == std::min(a, b) && y == std::max(a, b)) return true;
            return false;
        };
        int extra = max_edges > n - 1 ? static_cast<int>(rng() % (max_edges - n + 2)) : 0;
        for (auto& [a, b] : all) {
            if (static_cast<int>(edges.size()) >= n - 1 + extra) break;
            if (!has(a, b)) edges.push_back({std::min(a, b), std::max(a, b)});
        }
        if (static_cast<int>(edges.size()) > max_edges) continue;
        return Graph::from_edges(n, edges);
    }
}

// Brute-force isomorphism test for small graphs.
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    int n = a.num_vertices();
    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) {
        da[v] = a.degree(v);
        db[v] = b.degree(v);
    }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> map(n, -1), used(n, 0);
    auto ok = [&](int v, int w) {
        if (da[v] != db[w]) return false;
        // adjacency and non-adjacency must both be preserved
        for (int u = 0; u < n; ++u) {
            if (map[u] < 0 || u == v) continue;
            bool ea = a.find_edge(v, u).has_value();
            bool eb = b.find_edge(w, map[u]).has_value();
            if (ea != eb) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || !ok(v, w)) continue;
            map[v] = w;
            used[w] = 1;
            if (self(self, v + 1)) return true;
            map[v] = -1;
            used[w] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace test_helpers
