#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cigraph/graph.hpp"
#include "cigraph/matrix.hpp"
#include "cigraph/walks.hpp"

namespace cigraph {

/// Outcome of the generation test P_G = (g_1,...,g_r): the r x n exponent
/// matrix must be dominating with Delta_r(B) = 1.
struct FsCertificate {
    bool verified = false;
    BigInt delta_r = 0;
    bool dominating = false;
    std::optional<MixedWitness> mixed_witness;
    int r = 0;
};

struct GeneratorCountMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Theorem-fs check for a candidate generating set. Preconditions enforced:
/// every binomial lies in P_G and is coprime, and |gens| = ht(P_G); a count
/// mismatch is an error, not a verdict.
inline FsCertificate verify_fs(const Graph& g, const std::vector<Binomial>& gens,
                               const Budget& budget = {}) {
    int expected = height(g);
    if (static_cast<int>(gens.size()) != expected)
        throw GeneratorCountMismatch("generator count mismatch: got " +
                                     std::to_string(gens.size()) + ", height is " +
                                     std::to_string(expected));
    auto inc = incidence_matrix(g);
    for (const auto& b : gens) {
        if (!membership_check(b, inc))
            throw std::invalid_argument("generator outside the toric ideal");
        Binomial red = reduce_coprime(b);
        if (!(red == b)) throw std::invalid_argument("generator monomials not coprime");
    }
    FsCertificate cert;
    cert.r = expected;
    if (expected == 0) {
        // Height zero: the ideal is (0) and the empty set generates it.
        cert.delta_r = 1;
        cert.dominating = true;
        cert.verified = true;
        return cert;
    }
    int n = g.num_edges();
    ExactIntMatrix b(expected, n);
    for (int i = 0; i < expected; ++i) {
        auto row = exponent_row(gens[i], n);
        for (int j = 0; j < n; ++j) b.at(i, j) = row[j];
    }
    cert.delta_r = determinantal_divisor(b, expected).delta;
    auto dom = is_dominating(b, budget);
    cert.dominating = dom.dominating;
    cert.mixed_witness = dom.witness;
    cert.verified = (cert.delta_r == 1) && cert.dominating;
    return cert;
}

} // namespace cigraph
