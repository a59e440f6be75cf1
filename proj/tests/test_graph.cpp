#include <catch2/catch_amalgamated.hpp>

#include "cigraph/graph.hpp"
#include "cigraph/matrix.hpp"
#include "cigraph/parse.hpp"

#include "helpers.hpp"

using namespace cigraph;
using namespace test_helpers;

TEST_CASE("edge list parsing", "[graph]") {
    Graph tri = parse_edge_list("1 2\n2 3\n1 3");
    CHECK(tri.num_vertices() == 3);
    CHECK(tri.num_edges() == 3);

    Graph fig5 = parse_edge_list(
        "v1 v2\nv2 v3\nv1 v3\nv3 v4\nv4 v5\nv5 v6\nv4 v6\nv6 v7\nv3 v7\n");
    CHECK(fig5.num_vertices() == 7);
    CHECK(fig5.num_edges() == 9);

    Graph iso = parse_edge_list("vertices: 1 2\n");
    CHECK(iso.num_vertices() == 2);
    CHECK(iso.num_edges() == 0);

    CHECK_THROWS_AS(parse_edge_list("1 2\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("1 2 3\n"), ParseError);

    // comments and blank lines are fine
    Graph c = parse_edge_list("# comment\n1 2 # trailing\n\n2 3\n");
    CHECK(c.num_edges() == 2);
}

TEST_CASE("dot subset parsing", "[graph]") {
    Graph g = parse_dot_subset("graph { a -- b; b -- c; d; }");
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 2);
    CHECK(g.label(3) == "d");
    CHECK_THROWS_AS(parse_dot_subset("graph { a -- a; }"), ParseError);
    CHECK_THROWS_AS(parse_dot_subset("digraph { a -- b; }"), ParseError);
}

TEST_CASE("bipartite components", "[graph]") {
    auto c4 = cycle_graph(4);
    auto i4 = bipartite_components(c4);
    CHECK(i4.components == 1);
    CHECK(i4.bipartite_count == 1);
    for (int v = 0; v < 4; ++v) CHECK(i4.color[v] == (v % 2));

    auto k4 = complete_graph(4);
    auto ik = bipartite_components(k4);
    CHECK(ik.components == 1);
    CHECK(ik.bipartite_count == 0);

    auto f1 = figure1();
    REQUIRE(f1.num_vertices() == 9);
    REQUIRE(f1.num_edges() == 11);
    auto i1 = bipartite_components(f1);
    CHECK(i1.components == 1);
    CHECK(i1.bipartite_count == 0);
}

TEST_CASE("height formula", "[graph]") {
    CHECK(height(figure5()) == 2);
    CHECK(height(cycle_graph(4)) == 1);
    CHECK(height(complete_graph(4)) == 2);
    // isolated vertices are stripped before computing the formula
    Graph with_iso = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(height(with_iso) == 1);
}

TEST_CASE("delete vertices", "[graph]") {
    auto k4 = complete_graph(4);
    auto tri = delete_vertices(k4, {3});
    CHECK(tri.num_vertices() == 3);
    CHECK(tri.num_edges() == 3);

    auto fig5 = figure5();
    auto h = delete_vertices(fig5, {6}); // v7
    CHECK(h.num_vertices() == 6);
    auto ids = h.edge_ids();
    CHECK(ids == std::vector<EdgeId>{0, 1, 2, 3, 4, 5, 6}); // e1..e7 survive

    auto same = delete_vertices(fig5, {});
    CHECK(same.num_vertices() == 7);
    CHECK(same.num_edges() == 9);

    // edge-id stability: view ids address the identical vertex pair
    for (EdgeId e : ids) {
        auto ep = fig5.edge(e);
        CHECK(h.contains(ep.u));
        CHECK(h.contains(ep.v));
    }
}

TEST_CASE("degree-2 contraction", "[graph]") {
    // path a-v-b collapses to a single vertex with no edges
    Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
    Graph c = contract_deg2(path, 1);
    CHECK(c.num_vertices() == 1);
    CHECK(c.num_edges() == 0);

    // 4-cycle (v,u1,z,u2): the two merged edges collapse to one edge {u,z}
    Graph c4 = cycle_graph(4);
    Graph cc = contract_deg2(c4, 0);
    CHECK(cc.num_vertices() == 2);
    CHECK(cc.num_edges() == 1);

    // the contraction figure: result is two squares sharing an edge
    Graph g = figure4_left();
    REQUIRE(g.degree(0) == 2);
    Graph gc = contract_deg2(g, 0);
    CHECK(gc.num_vertices() == 6);
    CHECK(gc.num_edges() == 7);
    Graph expected = Graph::from_edges(
        6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {3, 4}, {3, 5}, {2, 5}});
    CHECK(isomorphic(gc, expected));

    // precondition violations are reported
    Graph tri = parse_edge_list("1 2\n2 3\n1 3");
    CHECK_THROWS_AS(contract_deg2(tri, 0), std::invalid_argument);
    CHECK_THROWS_AS(contract_deg2(complete_graph(4), 0), std::invalid_argument);
}

TEST_CASE("contraction preserves bipartiteness both ways", "[graph]") {
    std::mt19937_64 rng(7);
    int checked = 0;
    for (int it = 0; it < 200; ++it) {
        Graph g = random_connected_graph(4 + static_cast<int>(rng() % 5), 12, rng);
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            if (g.degree(v) != 2) continue;
            VertexId u1 = g.neighbors(v)[0].first, u2 = g.neighbors(v)[1].first;
            if (g.find_edge(u1, u2)) continue;
            Graph gc = contract_deg2(g, v);
            CHECK(is_bipartite(full_view(g)) == is_bipartite(full_view(gc)));
            ++checked;
            break;
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("incidence matrix", "[graph]") {
    Graph one = Graph::from_edges(2, {{0, 1}});
    auto m1 = incidence_matrix(one);
    CHECK(m1.rows == 2);
    CHECK(m1.cols == 1);
    CHECK(m1.a[0][0] == 1);
    CHECK(m1.a[1][0] == 1);

    auto tri = incidence_matrix(parse_edge_list("1 2\n2 3\n1 3"));
    for (int j = 0; j < 3; ++j) {
        int ones = 0;
        for (int i = 0; i < 3; ++i) ones += tri.a[i][j];
        CHECK(ones == 2);
    }
}

TEST_CASE("rank of incidence matrix equals m - b", "[graph]") {
    auto rank_of = [](const Graph& g) {
        auto inc = incidence_matrix(g);
        ExactIntMatrix m(inc.rows, inc.cols);
        for (int i = 0; i < inc.rows; ++i)
            for (int j = 0; j < inc.cols; ++j) m.at(i, j) = inc.a[i][j];
        return integer_rank(m);
    };
    CHECK(rank_of(cycle_graph(4)) == 3);

    std::mt19937_64 rng(11);
    for (int it = 0; it < 60; ++it) {
        int n = 3 + static_cast<int>(rng() % 8); // up to 10 vertices
        Graph g = random_connected_graph(n, 2 * n, rng);
        CHECK(rank_of(g) == g.num_vertices() - bipartite_count(full_view(g)));
    }
}

TEST_CASE("b changes by at most one on low-degree deletion", "[graph]") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 120; ++it) {
        Graph g = random_connected_graph(4 + static_cast<int>(rng() % 5), 12, rng);
        auto view = full_view(g);
        int b = bipartite_count(view);
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            int d = g.degree(v);
            int bv = bipartite_count(view.without(v));
            if (d == 1) CHECK(bv == b);
            if (d == 2) CHECK((bv - b == 0 || bv - b == 1));
        }
    }
}
