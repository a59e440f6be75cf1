#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <unordered_map>
#include <vector>

#include "cigraph/graph.hpp"
#include "cigraph/walks.hpp"

namespace cigraph {

namespace detail {

/// Shared machinery for the exact even-walk search. States are
/// (vertex-in-W, parity, visited-subset-of-W); a closed walk with vertex set
/// exactly W corresponds to a path from (s, 0, {s}) to (s, 0, W) where s is
/// the smallest vertex of W (rotation makes this WLOG).
struct WalkStateSpace {
    const SubgraphView& g;
    std::vector<VertexId> w;             // sorted
    std::vector<int> idx_of;             // vertex -> index in w, -1 otherwise
    std::vector<std::vector<std::pair<int, EdgeId>>> adj; // per index: (index, edge)
    uint64_t full;

    WalkStateSpace(const SubgraphView& view, std::vector<VertexId> vertices)
        : g(view), w(std::move(vertices)) {
        std::sort(w.begin(), w.end());
        idx_of.assign(view.parent().num_vertices(), -1);
        for (size_t i = 0; i < w.size(); ++i) {
            if (!view.contains(w[i]))
                throw std::invalid_argument("walk search: W not contained in the graph");
            idx_of[w[i]] = static_cast<int>(i);
        }
        adj.resize(w.size());
        for (size_t i = 0; i < w.size(); ++i)
            for (const auto& [u, e] : view.parent().neighbors(w[i]))
                if (view.contains(u) && idx_of[u] >= 0)
                    adj[i].emplace_back(idx_of[u], e);
        full = (w.size() >= 64) ? ~uint64_t(0) : ((uint64_t(1) << w.size()) - 1);
    }

    uint64_t key(int vi, int parity, uint64_t mask) const {
        return (mask * w.size() + vi) * 2 + parity;
    }
    uint64_t start_key() const { return key(0, 0, 1); }
    uint64_t goal_key() const { return key(0, 0, full); }
};

struct WalkParent {
    uint64_t parent_key;
    EdgeId edge;
    int dist;
};

} // namespace detail

/// A minimum-length even closed walk with vertex set exactly W, searched
/// inside the induced subgraph [W] of g (V(w) = W forces this), or nullopt if
/// none exists. Deterministic: breadth-first layering with sorted adjacency,
/// result reported in canonical form.
inline std::optional<EvenClosedWalk> shortest_even_walk_exact_vertices(
    const SubgraphView& g, const std::vector<VertexId>& w_set, const Budget& budget = {}) {
    if (static_cast<int>(w_set.size()) > budget.walk_vertex_cap)
        throw ResourceLimitError("even-walk search: |W| = " + std::to_string(w_set.size()) +
                                 " exceeds cap " + std::to_string(budget.walk_vertex_cap));
    if (w_set.size() < 3) throw std::invalid_argument("even-walk search: |W| < 3");
    detail::WalkStateSpace ss(g, w_set);
    std::unordered_map<uint64_t, detail::WalkParent> seen;
    std::queue<std::tuple<uint64_t, int, uint64_t>> q; // key, vertex index, mask|parity packed
    seen[ss.start_key()] = {ss.start_key(), -1, 0};
    q.push({ss.start_key(), 0, 0});
    uint64_t goal = ss.goal_key();
    while (!q.empty()) {
        auto [k, vi, packed] = q.front();
        q.pop();
        if (k == goal) break;
        int parity = static_cast<int>(k & 1);
        uint64_t mask = (k >> 1) / ss.w.size();
        int dist = seen[k].dist;
        for (const auto& [ui, e] : ss.adj[vi]) {
            uint64_t nk = ss.key(ui, parity ^ 1, mask | (uint64_t(1) << ui));
            if (seen.count(nk)) continue;
            seen[nk] = {k, e, dist + 1};
            q.push({nk, ui, 0});
        }
    }
    auto it = seen.find(goal);
    if (it == seen.end() || it->second.dist == 0) return std::nullopt;
    // Reconstruct backwards from the goal.
    std::vector<VertexId> verts;
    std::vector<EdgeId> edges;
    uint64_t k = goal;
    while (true) {
        int vi = static_cast<int>((k >> 1) % ss.w.size());
        verts.push_back(ss.w[vi]);
        const auto& rec = seen.at(k);
        if (rec.edge < 0) break;
        edges.push_back(rec.edge);
        k = rec.parent_key;
    }
    std::reverse(verts.begin(), verts.end());
    std::reverse(edges.begin(), edges.end());
    EvenClosedWalk walk{std::move(verts), std::move(edges)};
    return canonical_walk(walk);
}

/// All minimum-length even closed walks with V(w) = W, up to max_count, in a
/// deterministic order. Used for degenerate-binomial avoidance and the
/// --retry-walks mode; the walks are reported in canonical form, deduplicated.
inline std::vector<EvenClosedWalk> enumerate_shortest_even_walks(
    const SubgraphView& g, const std::vector<VertexId>& w_set, const Budget& budget = {},
    int max_count = 0) {
    if (max_count <= 0) max_count = budget.shortest_walk_enum_cap;
    std::vector<EvenClosedWalk> out;
    if (static_cast<int>(w_set.size()) > budget.walk_vertex_cap)
        throw ResourceLimitError("even-walk enumeration: |W| exceeds cap");
    detail::WalkStateSpace ss(g, w_set);

    // Backward BFS from the goal over reversed transitions gives the exact
    // remaining distance; forward DFS then only follows distance-consistent
    // steps, which enumerates precisely the shortest walks.
    std::unordered_map<uint64_t, int> dist_b;
    std::queue<uint64_t> q;
    dist_b[ss.goal_key()] = 0;
    q.push(ss.goal_key());
    while (!q.empty()) {
        uint64_t k = q.front();
        q.pop();
        int vi = static_cast<int>((k >> 1) % ss.w.size());
        int parity = static_cast<int>(k & 1);
        uint64_t mask = (k >> 1) / ss.w.size();
        int d = dist_b[k];
        for (const auto& [ui, e] : ss.adj[vi]) {
            for (int strip = 0; strip < 2; ++strip) {
                uint64_t pm = strip ? (mask & ~(uint64_t(1) << vi)) : mask;
                if (strip && pm == mask) continue;
                if (!(pm & (uint64_t(1) << ui))) continue;
                if (!(pm & 1)) continue; // start vertex is index 0, always visited
                uint64_t pk = ss.key(ui, parity ^ 1, pm);
                if (dist_b.count(pk)) continue;
                dist_b[pk] = d + 1;
                q.push(pk);
            }
        }
    }
    auto it = dist_b.find(ss.start_key());
    if (it == dist_b.end()) return out;
    int total = it->second;
    if (total == 0) return out;

    std::vector<VertexId> verts{ss.w[0]};
    std::vector<EdgeId> edges;
    std::vector<EvenClosedWalk> raw;
    // Depth-first over distance-consistent transitions, adjacency order.
    auto dfs = [&](auto&& self, uint64_t k, int vi, int depth) -> bool {
        if (static_cast<int>(raw.size()) >= max_count) return true;
        if (depth == total) {
            if (k == ss.goal_key()) raw.push_back(EvenClosedWalk{verts, edges});
            return static_cast<int>(raw.size()) >= max_count;
        }
        int parity = static_cast<int>(k & 1);
        uint64_t mask = (k >> 1) / ss.w.size();
        for (const auto& [ui, e] : ss.adj[vi]) {
            uint64_t nk = ss.key(ui, parity ^ 1, mask | (uint64_t(1) << ui));
            auto jt = dist_b.find(nk);
            if (jt == dist_b.end() || jt->second != total - depth - 1) continue;
            verts.push_back(ss.w[ui]);
            edges.push_back(e);
            bool stop = self(self, nk, ui, depth + 1);
            verts.pop_back();
            edges.pop_back();
            if (stop) return true;
        }
        return false;
    };
    dfs(dfs, ss.start_key(), 0, 0);
    // Canonicalize and deduplicate (rotations/reflections coincide).
    for (auto& w : raw) {
        EvenClosedWalk c = canonical_walk(w);
        bool dup = false;
        for (const auto& o : out)
            if (o.vertices == c.vertices && o.edges == c.edges) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(std::move(c));
    }
    return out;
}

/// Test oracle: exhaustively enumerates closed walks in [W] by iterative
/// deepening up to max_len and returns a shortest even one with V(w) = W.
/// Independent of the state-space search above.
inline std::optional<EvenClosedWalk> walk_oracle(const SubgraphView& g,
                                                 const std::vector<VertexId>& w_set,
                                                 int max_len) {
    std::vector<VertexId> w = w_set;
    std::sort(w.begin(), w.end());
    for (VertexId v : w)
        if (!g.contains(v)) throw std::invalid_argument("walk oracle: W not in graph");
    std::vector<char> in_w(g.parent().num_vertices(), 0);
    for (VertexId v : w) in_w[v] = 1;
    VertexId start = w[0];

    // Pairwise BFS distances inside [W] for pruning.
    std::vector<int> dist_to_start(g.parent().num_vertices(), -1);
    {
        std::queue<VertexId> q;
        dist_to_start[start] = 0;
        q.push(start);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (const auto& [u, e] : g.parent().neighbors(v))
                if (g.contains(u) && in_w[u] && dist_to_start[u] < 0) {
                    dist_to_start[u] = dist_to_start[v] + 1;
                    q.push(u);
                }
        }
    }

    std::vector<VertexId> verts{start};
    std::vector<EdgeId> edges;
    std::vector<int> times_seen(g.parent().num_vertices(), 0);
    times_seen[start] = 1;
    int uncovered = static_cast<int>(w.size()) - 1;

    std::optional<EvenClosedWalk> found;
    auto dfs = [&](auto&& self, VertexId v, int len, int target) -> bool {
        if (len == target) {
            if (v == start && uncovered == 0) {
                found = canonical_walk(EvenClosedWalk{verts, edges});
                return true;
            }
            return false;
        }
        int remain = target - len;
        if (dist_to_start[v] < 0 || dist_to_start[v] > remain) return false;
        if (uncovered > remain) return false;
        for (const auto& [u, e] : g.parent().neighbors(v)) {
            if (!g.contains(u) || !in_w[u]) continue;
            verts.push_back(u);
            edges.push_back(e);
            if (times_seen[u]++ == 0) --uncovered;
            bool stop = self(self, u, len + 1, target);
            if (--times_seen[u] == 0) ++uncovered;
            verts.pop_back();
            edges.pop_back();
            if (stop) return true;
        }
        return false;
    };
    for (int target = 4; target <= max_len; target += 2)
        if (dfs(dfs, start, 0, target)) break;
    return found;
}

} // namespace cigraph
