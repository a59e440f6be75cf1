#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cigraph {

/// Thrown when a search exceeds its configured cap. Distinct from a negative
/// answer: callers that need "does not exist" must not catch this as "no".
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Search caps for the exponential-in-the-worst-case routines. All desk-scale
/// defaults; CI_TORIC_BUDGET=<k> multiplies every cap by k.
struct Budget {
    int walk_vertex_cap = 20;          // |W| limit in the even-walk state search
    int dominating_row_cap = 24;       // row limit for the mixed-submatrix search
    long long cycle_enum_cap = 100000; // chordless-cycle enumeration limit
    long long partition_node_cap = 1000000; // CR-partition backtracking nodes
    long long theta_path_cap = 4000;   // paths per vertex pair in theta search
    int fiber_edge_cap = 12;           // fiber oracle: max number of edges
    int fiber_degree_cap = 8;          // fiber oracle: max total degree
    long long fiber_vector_cap = 4000000; // fiber oracle: monomial count limit
    int diag_subgraph_cap = 7;         // degree2_diagnostics subgraph size
    int diag_candidate_cap = 400;      // degree2_diagnostics candidate list size
    int shortest_walk_enum_cap = 4096; // shortest-walk tie enumeration

    static Budget from_env() {
        Budget b;
        if (const char* s = std::getenv("CI_TORIC_BUDGET")) {
            long long k = std::strtoll(s, nullptr, 10);
            if (k > 0) b.scale(k);
        }
        return b;
    }

    void scale(long long k) {
        walk_vertex_cap = static_cast<int>(walk_vertex_cap * k);
        dominating_row_cap = static_cast<int>(dominating_row_cap * k);
        cycle_enum_cap *= k;
        partition_node_cap *= k;
        theta_path_cap *= k;
        fiber_edge_cap = static_cast<int>(fiber_edge_cap * k);
        fiber_degree_cap = static_cast<int>(fiber_degree_cap * k);
        fiber_vector_cap *= k;
        diag_candidate_cap = static_cast<int>(diag_candidate_cap * k);
        shortest_walk_enum_cap = static_cast<int>(shortest_walk_enum_cap * k);
    }
};

} // namespace cigraph
