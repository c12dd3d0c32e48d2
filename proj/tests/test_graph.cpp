#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "indpoly/families.hpp"
#include "indpoly/graph.hpp"
#include "testutil.hpp"

using namespace indpoly;

TEST_CASE("graph construction basics") {
    SECTION("empty graph") {
        Graph g(0);
        REQUIRE(g.vertex_count() == 0);
        REQUIRE(g.edge_count() == 0);
        REQUIRE(g.full_mask() == 0);
        REQUIRE_FALSE(is_connected(g));
    }
    SECTION("edges and degrees") {
        Graph g = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
        REQUIRE(g.edge_count() == 3);
        REQUIRE(g.has_edge(1, 0));
        REQUIRE_FALSE(g.has_edge(0, 2));
        REQUIRE(g.degree(1) == 2);
        REQUIRE(g.closed_neighborhood(0) == 0b0011u);
    }
    SECTION("full 64-vertex mask") {
        Graph g(64);
        REQUIRE(g.full_mask() == ~std::uint64_t{0});
    }
    SECTION("rejects bad input") {
        REQUIRE_THROWS_AS(Graph(65), Error);
        REQUIRE_THROWS_AS(Graph(-1), Error);
        Graph g(3);
        REQUIRE_THROWS_AS(g.add_edge(0, 0), Error);
        REQUIRE_THROWS_AS(g.add_edge(0, 3), Error);
        REQUIRE_THROWS_AS(g.add_edge(-1, 2), Error);
    }
}

TEST_CASE("edge list reading") {
    SECTION("round trip") {
        std::istringstream in("4\n0 1\n1 2\n");
        Graph g = read_edge_list(in);
        REQUIRE(g.vertex_count() == 4);
        REQUIRE(g.edge_count() == 2);
        REQUIRE(g.has_edge(0, 1));
        REQUIRE(g.has_edge(1, 2));
        REQUIRE(g.degree(3) == 0);
    }
    SECTION("errors") {
        std::istringstream empty("");
        REQUIRE_THROWS_WITH(read_edge_list(empty),
                            Catch::Matchers::ContainsSubstring("vertex count"));
        std::istringstream dangling("3\n0 1\n2\n");
        REQUIRE_THROWS_WITH(read_edge_list(dangling),
                            Catch::Matchers::ContainsSubstring("dangling"));
        std::istringstream garbage("3\n0 1\nx y\n");
        REQUIRE_THROWS_AS(read_edge_list(garbage), Error);
        std::istringstream toobig("65\n");
        REQUIRE_THROWS_AS(read_edge_list(toobig), Error);
    }
    SECTION("missing file is an io error") {
        try {
            read_edge_list_file("/nonexistent/nowhere.edges");
            FAIL("expected an error");
        } catch (const Error& e) {
            REQUIRE(e.code() == ErrorCode::io);
        }
    }
}

TEST_CASE("graph constructions") {
    Graph p3 = path_graph(3);
    Graph k3 = complete_graph(3);

    SECTION("disjoint union") {
        Graph g = disjoint_union(p3, k3);
        REQUIRE(g.vertex_count() == 6);
        REQUIRE(g.edge_count() == 2 + 3);
        REQUIRE(g.has_edge(3, 4));
        REQUIRE_FALSE(g.has_edge(2, 3));
        REQUIRE(components(g).size() == 2);
    }
    SECTION("zykov sum adds all cross edges") {
        Graph g = zykov_sum(p3, k3);
        REQUIRE(g.edge_count() == 2 + 3 + 9);
        REQUIRE(g.has_edge(0, 5));
        REQUIRE(is_connected(g));
    }
    SECTION("star attaches one pendant per vertex") {
        Graph s = star(p3);
        REQUIRE(s.vertex_count() == 6);
        REQUIRE(s.edge_count() == 2 + 3);
        for (int v = 0; v < 3; ++v) {
            REQUIRE(s.has_edge(v, v + 3));
            REQUIRE(s.degree(v + 3) == 1);
        }
    }
    SECTION("edge join adds exactly one bridge") {
        Graph g = edge_join(p3, 2, k3, 0);
        REQUIRE(g.vertex_count() == 6);
        REQUIRE(g.edge_count() == 2 + 3 + 1);
        REQUIRE(g.has_edge(2, 3));
        REQUIRE_THROWS_AS(edge_join(p3, 3, k3, 0), Error);
        REQUIRE_THROWS_AS(edge_join(p3, 0, k3, -1), Error);
    }
    SECTION("capacity overflow") {
        REQUIRE_THROWS_AS(disjoint_union(Graph(33), Graph(32)), Error);
        REQUIRE_THROWS_AS(star(Graph(33)), Error);
    }
}

TEST_CASE("induced subgraphs keep original labels") {
    Graph p4 = path_graph(4);
    SECTION("vertex deletion") {
        Subgraph s = delete_vertex(p4, 1);
        REQUIRE(s.graph.vertex_count() == 3);
        REQUIRE(s.graph.edge_count() == 1);
        REQUIRE(s.original == std::vector<int>{0, 2, 3});
        REQUIRE(s.graph.has_edge(1, 2));
    }
    SECTION("closed neighborhood deletion") {
        Subgraph s = delete_closed_neighborhood(p4, 1);
        REQUIRE(s.graph.vertex_count() == 1);
        REQUIRE(s.original == std::vector<int>{3});
    }
    SECTION("induced on an explicit subset") {
        Subgraph s = induced(p4, VertexSet{0b1011});
        REQUIRE(s.graph.vertex_count() == 3);
        REQUIRE(s.graph.edge_count() == 1);
        REQUIRE_THROWS_AS(induced(p4, VertexSet{0b10000}), Error);
    }
    SECTION("bad indices") {
        REQUIRE_THROWS_AS(delete_vertex(p4, 4), Error);
        REQUIRE_THROWS_AS(delete_closed_neighborhood(p4, -1), Error);
    }
}

TEST_CASE("connectivity and trees") {
    REQUIRE(is_connected(path_graph(1)));
    REQUIRE(is_tree(path_graph(7)));
    REQUIRE_FALSE(is_tree(cycle_graph(7)));
    REQUIRE_FALSE(is_tree(disjoint_union(path_graph(2), path_graph(2))));
    REQUIRE(is_tree(star_graph(5)));

    Graph two = disjoint_union(complete_graph(3), path_graph(2));
    auto comps = components(two);
    REQUIRE(comps.size() == 2);
    REQUIRE(comps[0].size() == 3);
    REQUIRE(comps[1].size() == 2);
}

TEST_CASE("stability predicates") {
    Graph c5 = cycle_graph(5);
    REQUIRE(is_stable(c5, VertexSet{0b00101}));
    REQUIRE_FALSE(is_stable(c5, VertexSet{0b00011}));
    REQUIRE(is_stable(c5, VertexSet{0}));
    REQUIRE_THROWS_AS(is_stable(c5, VertexSet{0b100000}), Error);
}

TEST_CASE("claw detection") {
    REQUIRE_FALSE(is_claw_free(star_graph(3)));
    REQUIRE(is_claw_free(cycle_graph(5)));
    REQUIRE(is_claw_free(path_graph(9)));
    REQUIRE(is_claw_free(complete_graph(6)));
    // A star with 3 leaves buried inside a bigger graph.
    Graph g = from_edge_list(6, {{0, 1}, {0, 2}, {0, 3}, {4, 5}});
    REQUIRE_FALSE(is_claw_free(g));
    // Line graphs are claw-free by construction.
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        Graph base = testutil::random_graph(6, 50, rng);
        REQUIRE(is_claw_free(testutil::line_graph(base)));
    }
}

TEST_CASE("stability number") {
    REQUIRE(alpha(Graph(0)) == 0);
    REQUIRE(alpha(Graph(6)) == 6);
    REQUIRE(alpha(complete_graph(5)) == 1);
    REQUIRE(alpha(path_graph(4)) == 2);
    REQUIRE(alpha(path_graph(5)) == 3);
    REQUIRE(alpha(cycle_graph(5)) == 2);
    REQUIRE(alpha(cycle_graph(8)) == 4);
    REQUIRE(alpha(star_graph(7)) == 7);
}

TEST_CASE("maximal stable set enumeration") {
    Graph c5 = cycle_graph(5);
    int count = 0;
    for_each_maximal_stable_set(c5, [&](VertexSet s) {
        REQUIRE(s.size() == 2);
        REQUIRE(is_stable(c5, s));
        ++count;
        return true;
    });
    REQUIRE(count == 5);

    SECTION("visitor can stop early") {
        int seen = 0;
        for_each_maximal_stable_set(c5, [&](VertexSet) { return ++seen < 2; });
        REQUIRE(seen == 2);
    }
    SECTION("edgeless graph has one maximal stable set") {
        int n = 0;
        for_each_maximal_stable_set(Graph(4), [&](VertexSet s) {
            REQUIRE(s.size() == 4);
            ++n;
            return true;
        });
        REQUIRE(n == 1);
    }
}

TEST_CASE("well-coveredness") {
    REQUIRE(is_well_covered(path_graph(4)));
    REQUIRE_FALSE(is_well_covered(path_graph(5)));
    REQUIRE(is_well_covered(cycle_graph(4)));
    REQUIRE(is_well_covered(cycle_graph(5)));
    REQUIRE_FALSE(is_well_covered(cycle_graph(6)));
    REQUIRE(is_well_covered(complete_graph(4)));

    SECTION("very well-covered needs order = 2 alpha and no isolated vertices") {
        REQUIRE(is_very_well_covered(path_graph(4)));
        REQUIRE(is_very_well_covered(cycle_graph(4)));
        REQUIRE_FALSE(is_very_well_covered(complete_graph(3)));
        REQUIRE_FALSE(is_very_well_covered(cycle_graph(5)));
        REQUIRE_FALSE(is_very_well_covered(disjoint_union(path_graph(2), Graph(2))));
    }
    SECTION("pendant-extended graphs are always very well-covered") {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 25; ++i) {
            int n = 1 + static_cast<int>(rng() % 10);
            Graph g = testutil::random_graph(n, 40, rng);
            REQUIRE(is_very_well_covered(star(g)));
        }
    }
    SECTION("capped at 32 vertices") {
        REQUIRE_THROWS_AS(is_well_covered(Graph(33)), Error);
    }
}
