#pragma once

#include <optional>
#include <vector>

#include "cigraph/graph.hpp"
#include "cigraph/walks.hpp"

namespace cigraph {

enum class BandKind { OddBand, EvenMoebiusBand };

/// Chain labeling of a 3-regular component: rails a_1..a_r and b_1..b_r,
/// rungs {a_i,b_i}, rail edges {a_i,a_{i+1}}, {b_i,b_{i+1}}, and the closing
/// edges {a_1,a_r},{b_1,b_r} (odd band, r odd) or {a_1,b_r},{a_r,b_1} (even
/// Moebius band, r even). These are exactly the 3-regular complete
/// intersections.
struct BandLabeling {
    BandKind kind;
    std::vector<VertexId> a, b; // both of length r
    int r() const { return static_cast<int>(a.size()); }
};

namespace detail {

/// Checks that the labeling's edge set equals the component's edge set.
inline bool labeling_matches_edges(const SubgraphView& g, const BandLabeling& lab) {
    const Graph& p = g.parent();
    int r = lab.r();
    std::set<std::pair<VertexId, VertexId>> expect;
    auto add = [&](VertexId x, VertexId y) { expect.insert(std::minmax(x, y)); };
    for (int i = 0; i < r; ++i) add(lab.a[i], lab.b[i]);
    for (int i = 0; i + 1 < r; ++i) {
        add(lab.a[i], lab.a[i + 1]);
        add(lab.b[i], lab.b[i + 1]);
    }
    if (lab.kind == BandKind::OddBand) {
        add(lab.a[0], lab.a[r - 1]);
        add(lab.b[0], lab.b[r - 1]);
    } else {
        add(lab.a[0], lab.b[r - 1]);
        add(lab.a[r - 1], lab.b[0]);
    }
    std::set<std::pair<VertexId, VertexId>> actual;
    for (EdgeId e : g.edge_ids()) {
        auto ep = p.edge(e);
        actual.insert(std::minmax(ep.u, ep.v));
    }
    return expect == actual;
}

} // namespace detail

/// Recognizes whether the connected graph H is an odd band or an even Moebius
/// band and returns the chain labeling, else nullopt. Classification of an
/// edge {u,v} as a rung uses the b-value fingerprint b(H \ {u,v}) = 1; the
/// rungs must form a perfect matching whose contraction is a single cycle.
/// K4 is special-cased (every edge passes the rung predicate there).
inline std::optional<BandLabeling> recognize_band(const SubgraphView& h) {
    const Graph& p = h.parent();
    auto vs = h.vertices();
    int m = static_cast<int>(vs.size());
    if (m < 4 || m % 2 != 0) return std::nullopt;
    for (VertexId v : vs)
        if (h.degree(v) != 3) return std::nullopt;
    auto info = bipartite_components(h);
    if (info.components != 1 || info.bipartite_count != 0) return std::nullopt;

    if (m == 4) {
        // 3-regular on 4 vertices means K4, an even Moebius band with r = 2.
        BandLabeling lab;
        lab.kind = BandKind::EvenMoebiusBand;
        lab.a = {vs[0], vs[2]};
        lab.b = {vs[1], vs[3]};
        if (detail::labeling_matches_edges(h, lab)) return lab;
        return std::nullopt;
    }

    // Rung classification.
    std::vector<EdgeId> rungs;
    std::vector<int> rung_of(p.num_vertices(), -1);
    for (EdgeId e : h.edge_ids()) {
        auto ep = p.edge(e);
        if (bipartite_count(h.without(ep.u, ep.v)) == 1) rungs.push_back(e);
    }
    if (static_cast<int>(rungs.size()) * 2 != m) return std::nullopt;
    for (size_t i = 0; i < rungs.size(); ++i) {
        auto ep = p.edge(rungs[i]);
        if (rung_of[ep.u] != -1 || rung_of[ep.v] != -1) return std::nullopt; // not a matching
        rung_of[ep.u] = static_cast<int>(i);
        rung_of[ep.v] = static_cast<int>(i);
    }

    int r = static_cast<int>(rungs.size());
    // Walk the rung cycle: start at the rung holding the smallest vertex.
    VertexId a1 = vs[0];
    VertexId b1 = p.other_end(rungs[rung_of[a1]], a1);
    BandLabeling lab;
    lab.a.push_back(a1);
    lab.b.push_back(b1);
    // Next rung: the one seen from a1's smaller rail neighbor.
    while (lab.r() < r) {
        VertexId av = lab.a.back(), bv = lab.b.back();
        VertexId prev_a = lab.r() >= 2 ? lab.a[lab.r() - 2] : -1;
        VertexId next_a = -1;
        for (const auto& [u, e] : p.neighbors(av)) {
            if (!h.contains(u) || u == bv || u == prev_a) continue;
            if (lab.r() == 1 && rung_of[u] == rung_of[a1]) continue;
            if (next_a == -1 || u < next_a) next_a = u;
        }
        if (next_a == -1) return std::nullopt;
        if (rung_of[next_a] < 0) return std::nullopt;
        VertexId next_b = p.other_end(rungs[rung_of[next_a]], next_a);
        if (!p.find_edge(bv, next_b)) return std::nullopt; // b-rail must follow
        for (int i = 0; i < lab.r(); ++i)
            if (lab.a[i] == next_a || lab.b[i] == next_a) return std::nullopt;
        lab.a.push_back(next_a);
        lab.b.push_back(next_b);
    }
    lab.kind = (r % 2 == 1) ? BandKind::OddBand : BandKind::EvenMoebiusBand;
    if (!detail::labeling_matches_edges(h, lab)) return std::nullopt;
    return lab;
}

inline std::optional<BandLabeling> recognize_band(const Graph& h) {
    return recognize_band(full_view(h));
}

/// The canonical generating walks of a band: r quadric 4-cycles, the last one
/// crossing the closing edges.
inline std::vector<EvenClosedWalk> band_generators(const SubgraphView& g,
                                                   const BandLabeling& lab) {
    const Graph& p = g.parent();
    int r = lab.r();
    std::vector<EvenClosedWalk> out;
    auto cycle = [&](VertexId w, VertexId x, VertexId y, VertexId z) {
        return make_walk(p, {w, x, y, z, w});
    };
    for (int i = 0; i + 1 < r; ++i)
        out.push_back(cycle(lab.a[i], lab.b[i], lab.b[i + 1], lab.a[i + 1]));
    if (lab.kind == BandKind::OddBand)
        out.push_back(cycle(lab.a[0], lab.b[0], lab.b[r - 1], lab.a[r - 1]));
    else
        out.push_back(cycle(lab.a[0], lab.b[0], lab.a[r - 1], lab.b[r - 1]));
    return out;
}

inline std::vector<EvenClosedWalk> band_generators(const Graph& g, const BandLabeling& lab) {
    return band_generators(full_view(g), lab);
}

} // namespace cigraph
