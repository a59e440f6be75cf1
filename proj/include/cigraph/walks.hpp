#pragma once

#include <map>
#include <set>
#include <vector>

#include "cigraph/graph.hpp"

namespace cigraph {

/// Closed walk of even length 2q >= 4: vertices v_0..v_{2q} with v_0 = v_{2q},
/// edges[j] joining vertices[j] and vertices[j+1].
struct EvenClosedWalk {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    int length() const { return static_cast<int>(edges.size()); }

    std::set<VertexId> vertex_set() const {
        return std::set<VertexId>(vertices.begin(), vertices.end());
    }
};

/// Resolves a closed vertex sequence against g and validates the walk shape.
inline EvenClosedWalk make_walk(const Graph& g, const std::vector<VertexId>& vs) {
    EvenClosedWalk w;
    w.vertices = vs;
    if (vs.size() < 5 || vs.front() != vs.back())
        throw std::invalid_argument("walk must be closed with length >= 4");
    if ((vs.size() - 1) % 2 != 0)
        throw std::invalid_argument("walk length must be even");
    for (size_t i = 0; i + 1 < vs.size(); ++i) {
        auto e = g.find_edge(vs[i], vs[i + 1]);
        if (!e)
            throw std::invalid_argument("walk step " + std::to_string(i) +
                                        ": no edge between " + g.label(vs[i]) + " and " +
                                        g.label(vs[i + 1]));
        w.edges.push_back(*e);
    }
    return w;
}

inline EvenClosedWalk reverse_walk(const EvenClosedWalk& w) {
    EvenClosedWalk r;
    r.vertices.assign(w.vertices.rbegin(), w.vertices.rend());
    r.edges.assign(w.edges.rbegin(), w.edges.rend());
    return r;
}

inline EvenClosedWalk rotate_walk(const EvenClosedWalk& w, int offset) {
    int q = w.length();
    EvenClosedWalk r;
    for (int i = 0; i <= q; ++i) r.vertices.push_back(w.vertices[(offset + i) % q]);
    for (int i = 0; i < q; ++i) r.edges.push_back(w.edges[(offset + i) % q]);
    return r;
}

/// Canonical form for reporting: among all rotations and the two directions,
/// the lexicographically smallest vertex sequence. Rotating by an odd offset
/// or reversing flips the binomial's sign; the sign is re-fixed separately.
inline EvenClosedWalk canonical_walk(const EvenClosedWalk& w) {
    EvenClosedWalk best = w;
    for (int dir = 0; dir < 2; ++dir) {
        EvenClosedWalk base = dir ? reverse_walk(w) : w;
        for (int off = 0; off < w.length(); ++off) {
            EvenClosedWalk cand = rotate_walk(base, off);
            if (cand.vertices < best.vertices) best = cand;
        }
    }
    return best;
}

/// Pair of coprime monomials over edge ids. plus/minus map an edge id to its
/// exponent; total degrees agree because the ideal is graded.
struct Binomial {
    std::map<EdgeId, int> plus;
    std::map<EdgeId, int> minus;

    bool is_zero() const { return plus.empty() && minus.empty(); }

    bool operator==(const Binomial& o) const = default;
};

/// Cancels common factors so gcd of the two monomials is 1.
inline Binomial reduce_coprime(const Binomial& b) {
    Binomial r;
    r.plus = b.plus;
    r.minus = b.minus;
    for (auto it = r.plus.begin(); it != r.plus.end();) {
        auto jt = r.minus.find(it->first);
        if (jt != r.minus.end()) {
            int c = std::min(it->second, jt->second);
            it->second -= c;
            jt->second -= c;
            if (jt->second == 0) r.minus.erase(jt);
            if (it->second == 0) {
                it = r.plus.erase(it);
                continue;
            }
        }
        ++it;
    }
    return r;
}

inline Binomial negate(const Binomial& b) { return Binomial{b.minus, b.plus}; }

struct WalkBinomial {
    Binomial raw;     // odd-position edges in plus, even-position in minus
    Binomial reduced; // coprime form of raw
};

/// B_w: product of the odd-position edge variables minus the product of the
/// even-position ones, with multiplicity; the reduced field carries the
/// coprime form required by the certificate matrix.
inline WalkBinomial binomial_of_walk(const EvenClosedWalk& w) {
    WalkBinomial out;
    for (int j = 0; j < w.length(); ++j) {
        if (j % 2 == 0)
            out.raw.plus[w.edges[j]]++;
        else
            out.raw.minus[w.edges[j]]++;
    }
    out.reduced = reduce_coprime(out.raw);
    return out;
}

/// Dense alpha - beta vector of length n.
inline std::vector<long long> exponent_row(const Binomial& b, int n) {
    std::vector<long long> row(n, 0);
    for (const auto& [e, k] : b.plus) {
        if (e < 0 || e >= n) throw std::invalid_argument("edge id out of range");
        row[e] += k;
    }
    for (const auto& [e, k] : b.minus) {
        if (e < 0 || e >= n) throw std::invalid_argument("edge id out of range");
        row[e] -= k;
    }
    return row;
}

/// Monomial comparison used for the reporting sign convention: compare
/// exponent vectors position by position from x_1.
inline bool monomial_lex_less(const std::map<EdgeId, int>& a, const std::map<EdgeId, int>& b,
                              int n) {
    for (int e = 0; e < n; ++e) {
        auto ia = a.find(e), ib = b.find(e);
        int ea = ia == a.end() ? 0 : ia->second;
        int eb = ib == b.end() ? 0 : ib->second;
        if (ea != eb) return ea < eb;
    }
    return false;
}

/// Sign convention for reports and certificates: the lexicographically larger
/// monomial goes to the plus side.
inline Binomial canonical_sign(const Binomial& b, int n) {
    if (monomial_lex_less(b.plus, b.minus, n)) return negate(b);
    return b;
}

/// True iff A.plus = A.minus as integer vectors, i.e. the binomial lies in
/// the toric ideal of the incidence matrix.
inline bool membership_check(const Binomial& b, const IncidenceMatrix& a) {
    std::vector<long long> lhs(a.rows, 0), rhs(a.rows, 0);
    for (const auto& [e, k] : b.plus)
        for (int i = 0; i < a.rows; ++i) lhs[i] += static_cast<long long>(a.a[i][e]) * k;
    for (const auto& [e, k] : b.minus)
        for (int i = 0; i < a.rows; ++i) rhs[i] += static_cast<long long>(a.a[i][e]) * k;
    return lhs == rhs;
}

enum class WalkShape { EvenCycle, TwoOddCyclesSharedVertex, TwoOddCyclesTwoPaths, Other };

namespace detail {

// Is vertices[from..to] (inclusive endpoints, closed) a cycle: all vertices
// distinct except the repeated endpoint?
inline bool segment_is_cycle(const std::vector<VertexId>& vs, int from, int to) {
    if (vs[from] != vs[to]) return false;
    std::set<VertexId> seen;
    for (int i = from; i < to; ++i)
        if (!seen.insert(vs[i]).second) return false;
    return true;
}

inline std::set<VertexId> segment_vertices(const std::vector<VertexId>& vs, int from, int to) {
    return std::set<VertexId>(vs.begin() + from, vs.begin() + to + 1);
}

} // namespace detail

/// Classifies w against the three shapes a primitive B_w can have: an even
/// cycle, two odd cycles sharing exactly one vertex, or two vertex-disjoint
/// odd cycles joined by a pair of walks traversed there and back.
inline WalkShape classify_walk_shape(const EvenClosedWalk& w) {
    int q = w.length();
    const auto distinct = [&](const EvenClosedWalk& x) {
        std::set<VertexId> seen(x.vertices.begin(), x.vertices.end() - 1);
        return static_cast<int>(seen.size()) == q;
    };
    if (distinct(w)) return WalkShape::EvenCycle;

    // Try every rotation/direction as a parse origin.
    for (int dir = 0; dir < 2; ++dir) {
        EvenClosedWalk base = dir ? reverse_walk(w) : w;
        for (int off = 0; off < q; ++off) {
            EvenClosedWalk r = rotate_walk(base, off);
            const auto& vs = r.vertices;
            // Shape (C1, C2): two odd cycles with exactly the start in common.
            for (int l1 = 3; l1 < q; l1 += 2) {
                if (vs[l1] != vs[0]) continue;
                if (!detail::segment_is_cycle(vs, 0, l1)) continue;
                if (!detail::segment_is_cycle(vs, l1, q)) continue;
                auto s1 = detail::segment_vertices(vs, 0, l1);
                auto s2 = detail::segment_vertices(vs, l1, q);
                std::vector<VertexId> inter;
                std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(),
                                      std::back_inserter(inter));
                if (inter.size() == 1) return WalkShape::TwoOddCyclesSharedVertex;
            }
        }
    }
    for (int dir = 0; dir < 2; ++dir) {
        EvenClosedWalk base = dir ? reverse_walk(w) : w;
        for (int off = 0; off < q; ++off) {
            EvenClosedWalk r = rotate_walk(base, off);
            const auto& vs = r.vertices;
            // Shape (C1, w1, C2, -w2): odd cycle at vs[0], walk to C2's base,
            // odd cycle there, walk back.
            for (int l1 = 3; l1 < q; l1 += 2) {
                if (!detail::segment_is_cycle(vs, 0, l1)) continue;
                auto c1 = detail::segment_vertices(vs, 0, l1);
                for (int l2 = 0; l1 + l2 + 3 <= q; ++l2) {
                    int c2from = l1 + l2;
                    for (int l3 = 3; c2from + l3 <= q; l3 += 2) {
                        int c2to = c2from + l3;
                        if (!detail::segment_is_cycle(vs, c2from, c2to)) continue;
                        auto c2 = detail::segment_vertices(vs, c2from, c2to);
                        std::vector<VertexId> inter;
                        std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(),
                                              std::back_inserter(inter));
                        if (!inter.empty()) continue;
                        // Remaining segment walks back from C2's base to vs[0];
                        // closure is already guaranteed, any vertices allowed.
                        return WalkShape::TwoOddCyclesTwoPaths;
                    }
                }
            }
        }
    }
    return WalkShape::Other;
}

} // namespace cigraph
