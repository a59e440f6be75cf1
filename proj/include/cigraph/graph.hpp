#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cigraph/budget.hpp"

namespace cigraph {

using VertexId = int;
using EdgeId = int;

struct EdgePair {
    VertexId u, v; // u < v after normalization
};

/// Simple undirected graph. Vertices are dense ids 0..m-1; edges keep the
/// insertion order, and the edge id doubles as the variable index of the
/// toric ideal (edge i <-> x_{i+1} in 1-based reports). Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Rejects loops and duplicate edges.
    static Graph from_edges(int num_vertices,
                            const std::vector<std::pair<VertexId, VertexId>>& edges,
                            std::vector<std::string> labels = {}) {
        Graph g;
        g.num_vertices_ = num_vertices;
        if (labels.empty()) {
            labels.reserve(num_vertices);
            for (int i = 0; i < num_vertices; ++i) labels.push_back(std::to_string(i + 1));
        }
        if (static_cast<int>(labels.size()) != num_vertices)
            throw std::invalid_argument("label count does not match vertex count");
        g.labels_ = std::move(labels);
        g.adj_.assign(num_vertices, {});
        std::set<std::pair<VertexId, VertexId>> seen;
        for (const auto& [a, b] : edges) {
            if (a < 0 || b < 0 || a >= num_vertices || b >= num_vertices)
                throw std::invalid_argument("edge endpoint out of range");
            if (a == b)
                throw std::invalid_argument("loop at vertex " + g.labels_[a]);
            auto key = std::minmax(a, b);
            if (!seen.insert(key).second)
                throw std::invalid_argument("duplicate edge {" + g.labels_[a] + "," +
                                            g.labels_[b] + "}");
            EdgeId id = static_cast<EdgeId>(g.edges_.size());
            g.edges_.push_back({key.first, key.second});
            g.adj_[a].emplace_back(b, id);
            g.adj_[b].emplace_back(a, id);
        }
        for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
        return g;
    }

    int num_vertices() const { return num_vertices_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    EdgePair edge(EdgeId e) const { return edges_[e]; }
    const std::vector<EdgePair>& edges() const { return edges_; }
    const std::string& label(VertexId v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Neighbors of v as (vertex, edge id), sorted by vertex then edge id.
    const std::vector<std::pair<VertexId, EdgeId>>& neighbors(VertexId v) const {
        return adj_[v];
    }

    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }

    std::optional<EdgeId> find_edge(VertexId a, VertexId b) const {
        for (const auto& [w, e] : adj_[a])
            if (w == b) return e;
        return std::nullopt;
    }

    VertexId other_end(EdgeId e, VertexId v) const {
        const auto& ep = edges_[e];
        return ep.u == v ? ep.v : ep.u;
    }

private:
    int num_vertices_ = 0;
    std::vector<EdgePair> edges_;
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj_;
    std::vector<std::string> labels_;
};

/// Induced subgraph of a parent graph, addressed by a vertex mask. Edge ids
/// are the parent's: every retained edge maps to the identical vertex pair.
class SubgraphView {
public:
    explicit SubgraphView(const Graph& parent)
        : parent_(&parent), present_(parent.num_vertices(), true) {}

    SubgraphView(const Graph& parent, std::vector<char> present)
        : parent_(&parent), present_(std::move(present)) {
        if (static_cast<int>(present_.size()) != parent.num_vertices())
            throw std::invalid_argument("mask size mismatch");
    }

    const Graph& parent() const { return *parent_; }
    bool contains(VertexId v) const { return present_[v] != 0; }

    int num_vertices() const {
        return static_cast<int>(std::count(present_.begin(), present_.end(), char(1)));
    }

    /// Induced edge ids: exactly the parent edges with both endpoints retained.
    std::vector<EdgeId> edge_ids() const {
        std::vector<EdgeId> out;
        for (EdgeId e = 0; e < parent_->num_edges(); ++e) {
            auto ep = parent_->edge(e);
            if (present_[ep.u] && present_[ep.v]) out.push_back(e);
        }
        return out;
    }

    int num_edges() const { return static_cast<int>(edge_ids().size()); }

    int degree(VertexId v) const {
        int d = 0;
        for (const auto& [w, e] : parent_->neighbors(v))
            if (present_[w]) ++d;
        return d;
    }

    std::vector<VertexId> vertices() const {
        std::vector<VertexId> out;
        for (VertexId v = 0; v < parent_->num_vertices(); ++v)
            if (present_[v]) out.push_back(v);
        return out;
    }

    SubgraphView without(VertexId v) const {
        auto mask = present_;
        mask[v] = 0;
        return SubgraphView(*parent_, std::move(mask));
    }

    SubgraphView without(VertexId a, VertexId b) const {
        auto mask = present_;
        mask[a] = 0;
        mask[b] = 0;
        return SubgraphView(*parent_, std::move(mask));
    }

    SubgraphView restricted_to(const std::vector<VertexId>& vs) const {
        std::vector<char> mask(parent_->num_vertices(), 0);
        for (VertexId v : vs)
            if (present_[v]) mask[v] = 1;
        return SubgraphView(*parent_, std::move(mask));
    }

private:
    const Graph* parent_;
    std::vector<char> present_;
};

inline SubgraphView full_view(const Graph& g) { return SubgraphView(g); }

/// Induced subgraph on V(G) \ S; edge ids inherited from G.
inline SubgraphView delete_vertices(const SubgraphView& g, const std::vector<VertexId>& s) {
    std::vector<char> mask(g.parent().num_vertices(), 0);
    for (VertexId v = 0; v < g.parent().num_vertices(); ++v)
        if (g.contains(v)) mask[v] = 1;
    for (VertexId v : s) mask[v] = 0;
    return SubgraphView(g.parent(), std::move(mask));
}

inline SubgraphView delete_vertices(const Graph& g, const std::vector<VertexId>& s) {
    return delete_vertices(full_view(g), s);
}

struct BipartiteInfo {
    int components = 0;
    int bipartite_count = 0;              // b(G)
    std::vector<int> component_of;        // -1 for vertices outside the view
    std::vector<int> color;               // 0/1 per vertex in a bipartite component, else -1
    std::vector<char> component_bipartite;
};

/// Connected components and the number b of bipartite ones, via layered
/// traversal. Components are numbered by their smallest contained vertex id.
inline BipartiteInfo bipartite_components(const SubgraphView& g) {
    const Graph& p = g.parent();
    BipartiteInfo info;
    info.component_of.assign(p.num_vertices(), -1);
    info.color.assign(p.num_vertices(), -1);
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < p.num_vertices(); ++s) {
        if (!g.contains(s) || info.component_of[s] != -1) continue;
        int comp = info.components++;
        bool bip = true;
        info.component_of[s] = comp;
        info.color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (const auto& [w, e] : p.neighbors(v)) {
                if (!g.contains(w)) continue;
                if (info.component_of[w] == -1) {
                    info.component_of[w] = comp;
                    info.color[w] = info.color[v] ^ 1;
                    stack.push_back(w);
                } else if (info.color[w] == info.color[v]) {
                    bip = false;
                }
            }
        }
        info.component_bipartite.push_back(bip ? 1 : 0);
        if (bip) ++info.bipartite_count;
    }
    for (VertexId v = 0; v < p.num_vertices(); ++v)
        if (info.component_of[v] >= 0 && !info.component_bipartite[info.component_of[v]])
            info.color[v] = -1;
    return info;
}

inline BipartiteInfo bipartite_components(const Graph& g) {
    return bipartite_components(full_view(g));
}

/// b(G): number of connected components admitting a proper 2-coloring.
inline int bipartite_count(const SubgraphView& g) {
    return bipartite_components(g).bipartite_count;
}

inline bool is_connected(const SubgraphView& g) {
    auto info = bipartite_components(g);
    return info.components <= 1;
}

inline bool is_bipartite(const SubgraphView& g) {
    auto info = bipartite_components(g);
    return info.components == info.bipartite_count;
}

/// ht(P_G) = n - m + b(G), computed after stripping isolated vertices.
inline int height(const Graph& g) {
    std::vector<char> mask(g.num_vertices(), 0);
    int m = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) > 0) {
            mask[v] = 1;
            ++m;
        }
    SubgraphView stripped(g, std::move(mask));
    return g.num_edges() - m + bipartite_count(stripped);
}

struct IncidenceMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<int>> a; // entries in {0,1}; two ones per column
};

inline IncidenceMatrix incidence_matrix(const Graph& g) {
    IncidenceMatrix m;
    m.rows = g.num_vertices();
    m.cols = g.num_edges();
    m.a.assign(m.rows, std::vector<int>(m.cols, 0));
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto ep = g.edge(e);
        m.a[ep.u][e] = 1;
        m.a[ep.v][e] = 1;
    }
    return m;
}

/// Contraction of G in a degree-2 vertex v not lying in a triangle: v and its
/// neighbors u1 < u2 collapse into one vertex (keeping u1's slot and label);
/// the two edges through a common neighbor z merge into one edge keyed by the
/// smaller of the two parent edge ids. Surviving edges keep relative order.
inline Graph contract_deg2(const Graph& g, VertexId v) {
    if (g.degree(v) != 2)
        throw std::invalid_argument("contract_deg2: vertex " + g.label(v) +
                                    " has degree " + std::to_string(g.degree(v)));
    VertexId u1 = g.neighbors(v)[0].first;
    VertexId u2 = g.neighbors(v)[1].first;
    if (g.find_edge(u1, u2))
        throw std::invalid_argument("contract_deg2: vertex " + g.label(v) +
                                    " lies in triangle {" + g.label(v) + "," +
                                    g.label(u1) + "," + g.label(u2) + "}");
    // New vertex numbering: drop v and u2, merge into u1's position.
    std::vector<int> new_id(g.num_vertices(), -1);
    std::vector<std::string> labels;
    int next = 0;
    for (VertexId w = 0; w < g.num_vertices(); ++w) {
        if (w == v || w == u2) continue;
        new_id[w] = next++;
        labels.push_back(g.label(w));
    }
    int merged = new_id[u1];
    new_id[u2] = merged;
    new_id[v] = -1;

    // Map edges: drop the two edges at v; redirect u1/u2 edges to the merged
    // vertex; merge parallel pairs keeping the smaller parent id.
    std::vector<std::pair<EdgeId, std::pair<VertexId, VertexId>>> kept;
    std::set<std::pair<VertexId, VertexId>> seen;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto ep = g.edge(e);
        if (ep.u == v || ep.v == v) continue;
        VertexId a = new_id[ep.u], b = new_id[ep.v];
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second) continue; // parallel edge from a common neighbor
        kept.push_back({e, key});
    }
    std::sort(kept.begin(), kept.end());
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(kept.size());
    for (const auto& [e, pr] : kept) edges.push_back(pr);
    return Graph::from_edges(next, edges, std::move(labels));
}

/// Materializes a view as a standalone Graph, with maps back to the parent.
struct ExtractedGraph {
    Graph graph;
    std::vector<VertexId> vertex_to_parent;
    std::vector<EdgeId> edge_to_parent;
};

inline ExtractedGraph extract_graph(const SubgraphView& view) {
    ExtractedGraph out;
    const Graph& p = view.parent();
    std::vector<int> new_id(p.num_vertices(), -1);
    std::vector<std::string> labels;
    for (VertexId v = 0; v < p.num_vertices(); ++v) {
        if (!view.contains(v)) continue;
        new_id[v] = static_cast<int>(out.vertex_to_parent.size());
        out.vertex_to_parent.push_back(v);
        labels.push_back(p.label(v));
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (EdgeId e : view.edge_ids()) {
        auto ep = p.edge(e);
        edges.push_back({new_id[ep.u], new_id[ep.v]});
        out.edge_to_parent.push_back(e);
    }
    out.graph = Graph::from_edges(static_cast<int>(out.vertex_to_parent.size()), edges,
                                  std::move(labels));
    return out;
}

} // namespace cigraph
