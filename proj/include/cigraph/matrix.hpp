#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cigraph/budget.hpp"

namespace cigraph {

using BigInt = boost::multiprecision::cpp_int;

/// Dense arbitrary-precision integer matrix. No floating point anywhere in
/// this module: determinantal divisors and minors grow past 64 bits quickly.
class ExactIntMatrix {
public:
    ExactIntMatrix() = default;
    ExactIntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
    }

    static ExactIntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
        int r = static_cast<int>(rows.size());
        int c = r ? static_cast<int>(rows[0].size()) : 0;
        ExactIntMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c)
                throw std::invalid_argument("ragged rows");
            for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const BigInt& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

/// Exact rank via fraction-free (Bareiss) elimination.
inline int integer_rank(ExactIntMatrix m) {
    int r = m.rows(), c = m.cols();
    int rank = 0;
    BigInt prev = 1;
    for (int col = 0; col < c && rank < r; ++col) {
        int pivot = -1;
        for (int i = rank; i < r; ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < c; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        for (int i = rank + 1; i < r; ++i) {
            for (int j = col + 1; j < c; ++j)
                m.at(i, j) = (m.at(rank, col) * m.at(i, j) - m.at(i, col) * m.at(rank, j)) / prev;
            m.at(i, col) = 0;
        }
        prev = m.at(rank, col);
        ++rank;
    }
    return rank;
}

namespace detail {

inline BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

} // namespace detail

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form,
/// returned positive. Pivoting on the smallest nonzero entry keeps the
/// intermediate values tame at desk scale.
inline std::vector<BigInt> smith_invariant_factors(ExactIntMatrix m) {
    int r = m.rows(), c = m.cols();
    std::vector<BigInt> factors;
    int s = 0;
    while (s < r && s < c) {
        // Locate the smallest nonzero |entry| in the trailing submatrix.
        int pi = -1, pj = -1;
        BigInt best = 0;
        for (int i = s; i < r; ++i)
            for (int j = s; j < c; ++j) {
                if (m.at(i, j) == 0) continue;
                BigInt v = detail::abs_big(m.at(i, j));
                if (pi < 0 || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break; // trailing submatrix is zero
        if (pi != s)
            for (int j = 0; j < c; ++j) std::swap(m.at(pi, j), m.at(s, j));
        if (pj != s)
            for (int i = 0; i < r; ++i) std::swap(m.at(i, pj), m.at(i, s));

        bool clean = true;
        for (int i = s + 1; i < r; ++i) {
            BigInt q = m.at(i, s) / m.at(s, s);
            if (q != 0)
                for (int j = s; j < c; ++j) m.at(i, j) -= q * m.at(s, j);
            if (m.at(i, s) != 0) clean = false;
        }
        for (int j = s + 1; j < c; ++j) {
            BigInt q = m.at(s, j) / m.at(s, s);
            if (q != 0)
                for (int i = s; i < r; ++i) m.at(i, j) -= q * m.at(i, s);
            if (m.at(s, j) != 0) clean = false;
        }
        if (!clean) continue; // remainder became the new smallest pivot; repeat
        // Divisibility condition: pivot must divide the trailing submatrix.
        int bi = -1, bj = -1;
        for (int i = s + 1; i < r && bi < 0; ++i)
            for (int j = s + 1; j < c; ++j)
                if (m.at(i, j) % m.at(s, s) != 0) {
                    bi = i;
                    bj = j;
                    break;
                }
        if (bi >= 0) {
            for (int j = s; j < c; ++j) m.at(s, j) += m.at(bi, j);
            continue;
        }
        factors.push_back(detail::abs_big(m.at(s, s)));
        ++s;
    }
    return factors;
}

struct DeltaResult {
    BigInt delta;     // gcd of all t x t minors (0 when all vanish)
    bool beyond_rank; // t exceeded rank(B): every t-minor is zero
};

/// Delta_t(B): the t-th determinantal divisor, computed as the product of the
/// first t invariant factors rather than by minor enumeration.
inline DeltaResult determinantal_divisor(const ExactIntMatrix& b, int t) {
    if (t <= 0) return {BigInt(1), false};
    if (t > std::min(b.rows(), b.cols())) return {BigInt(0), true};
    auto factors = smith_invariant_factors(b);
    if (t > static_cast<int>(factors.size())) return {BigInt(0), true};
    BigInt prod = 1;
    for (int i = 0; i < t; ++i) prod *= factors[i];
    return {prod, false};
}

struct MixedWitness {
    std::vector<int> rows; // 0-based row indices, |rows| == |cols| >= 2
    std::vector<int> cols; // 0-based column indices
};

struct DominatingResult {
    bool dominating = true;
    std::optional<MixedWitness> witness;
};

namespace detail {

// Exact branch-and-bound cover: can `k` of the deduplicated sign columns give
// every selected row both a positive and a negative entry?  Elements are
// (row, sign) pairs packed into a 2k-bit mask per column.
struct CoverSearch {
    const std::vector<uint64_t>& col_masks; // coverage per candidate column
    uint64_t universe;
    int limit;
    std::vector<int> chosen;
    std::vector<int> best;

    bool run(uint64_t covered, int used) {
        if (covered == universe) {
            best = chosen;
            return true;
        }
        if (used == limit) return false;
        // Branch on the uncovered element with the fewest covering columns.
        uint64_t remaining = universe & ~covered;
        int pick_bit = -1;
        int pick_count = -1;
        for (uint64_t bits = remaining; bits;) {
            int bit = __builtin_ctzll(bits);
            bits &= bits - 1;
            int cnt = 0;
            for (size_t c = 0; c < col_masks.size(); ++c)
                if (col_masks[c] >> bit & 1) ++cnt;
            if (cnt == 0) return false;
            if (pick_count < 0 || cnt < pick_count) {
                pick_count = cnt;
                pick_bit = bit;
            }
        }
        for (size_t c = 0; c < col_masks.size(); ++c) {
            if (!(col_masks[c] >> pick_bit & 1)) continue;
            chosen.push_back(static_cast<int>(c));
            if (run(covered | col_masks[c], used + 1)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

} // namespace detail

/// Dominating test: true iff B has no square mixed submatrix of any size
/// k >= 2 ("mixed" = every row has a positive and a negative entry). On
/// failure returns a smallest-k witness. Strategy: restrict to rows that are
/// mixed at all, iteratively strip columns with at most one nonzero entry,
/// deduplicate columns by sign pattern, then run an exact set-cover search
/// per row subset, padding to exactly k columns when fewer suffice.
inline DominatingResult is_dominating(const ExactIntMatrix& b, const Budget& budget = {}) {
    int r = b.rows(), n = b.cols();
    if (r > budget.dominating_row_cap)
        throw ResourceLimitError("is_dominating: " + std::to_string(r) +
                                 " rows exceed cap " +
                                 std::to_string(budget.dominating_row_cap));

    // Rows of a mixed submatrix must carry both signs somewhere.
    std::vector<int> rows;
    for (int i = 0; i < r; ++i) {
        bool pos = false, neg = false;
        for (int j = 0; j < n; ++j) {
            if (b.at(i, j) > 0) pos = true;
            if (b.at(i, j) < 0) neg = true;
        }
        if (pos && neg) rows.push_back(i);
    }
    if (static_cast<int>(rows.size()) < 2) return {true, std::nullopt};

    // Iteratively strip columns with at most one nonzero entry (restricted to
    // the candidate rows): they cannot change the verdict.
    std::vector<char> col_alive(n, 1);
    std::vector<char> row_alive_mask(r, 0);
    for (int i : rows) row_alive_mask[i] = 1;
    bool changed = true;
    std::vector<int> live_rows = rows;
    while (changed) {
        changed = false;
        for (int j = 0; j < n; ++j) {
            if (!col_alive[j]) continue;
            int nz = 0;
            for (int i : live_rows)
                if (b.at(i, j) != 0) ++nz;
            if (nz <= 1) {
                col_alive[j] = 0;
                changed = true;
            }
        }
        // Dropping columns can strand a row on one sign; drop such rows too.
        std::vector<int> still;
        for (int i : live_rows) {
            bool pos = false, neg = false;
            for (int j = 0; j < n; ++j) {
                if (!col_alive[j]) continue;
                if (b.at(i, j) > 0) pos = true;
                if (b.at(i, j) < 0) neg = true;
            }
            if (pos && neg) still.push_back(i);
            else changed = true;
        }
        live_rows.swap(still);
        if (static_cast<int>(live_rows.size()) < 2) return {true, std::nullopt};
    }

    int nr = static_cast<int>(live_rows.size());
    // Deduplicate surviving columns by sign pattern over the live rows.
    std::vector<std::vector<int>> patterns; // sign in {-1,0,1} per live row
    std::vector<int> pattern_col;           // representative original column
    for (int j = 0; j < n; ++j) {
        if (!col_alive[j]) continue;
        std::vector<int> sig(nr);
        for (int i = 0; i < nr; ++i) {
            const BigInt& v = b.at(live_rows[i], j);
            sig[i] = v > 0 ? 1 : (v < 0 ? -1 : 0);
        }
        bool dup = false;
        for (const auto& p : patterns)
            if (p == sig) {
                dup = true;
                break;
            }
        if (!dup) {
            patterns.push_back(std::move(sig));
            pattern_col.push_back(j);
        }
    }

    // Row subsets in increasing size: the first hit is a smallest witness.
    for (int k = 2; k <= std::min(nr, n); ++k) {
        std::vector<int> subset(k);
        // Enumerate k-combinations of live row indices in lexicographic order.
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            uint64_t universe = (uint64_t(1) << (2 * k)) - 1;
            std::vector<uint64_t> masks;
            std::vector<int> mask_col;
            for (size_t c = 0; c < patterns.size(); ++c) {
                uint64_t m = 0;
                for (int t = 0; t < k; ++t) {
                    int s = patterns[c][idx[t]];
                    if (s > 0) m |= uint64_t(1) << (2 * t);
                    if (s < 0) m |= uint64_t(1) << (2 * t + 1);
                }
                if (m) {
                    masks.push_back(m);
                    mask_col.push_back(pattern_col[c]);
                }
            }
            detail::CoverSearch search{masks, universe, k, {}, {}};
            if (search.run(0, 0)) {
                MixedWitness w;
                for (int t = 0; t < k; ++t) w.rows.push_back(live_rows[idx[t]]);
                for (int c : search.best) w.cols.push_back(mask_col[c]);
                std::sort(w.cols.begin(), w.cols.end());
                // Pad with arbitrary further columns: extra columns never
                // break row mixedness, and k <= n guarantees enough exist.
                for (int j = 0; j < n && static_cast<int>(w.cols.size()) < k; ++j)
                    if (std::find(w.cols.begin(), w.cols.end(), j) == w.cols.end())
                        w.cols.insert(std::lower_bound(w.cols.begin(), w.cols.end(), j), j);
                return {false, std::move(w)};
            }
            // next combination
            int t = k - 1;
            while (t >= 0 && idx[t] == nr - k + t) --t;
            if (t < 0) break;
            ++idx[t];
            for (int s = t + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
        }
    }
    return {true, std::nullopt};
}

} // namespace cigraph
