#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "indpoly/engine.hpp"
#include "indpoly/families.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/shape.hpp"
#include "testutil.hpp"

using namespace indpoly;

TEST_CASE("stable-set profile validation") {
    SECTION("well-formed profiles pass") {
        auto p = StableSetProfile::from_counts(4, {1, 4, 3});
        REQUIRE(p.alpha == 2);
        REQUIRE(p.to_polynomial() == Polynomial{1, 4, 3});
    }
    SECTION("trailing zero counts are trimmed") {
        auto p = StableSetProfile::from_counts(3, {1, 3, 2, 0});
        REQUIRE(p.alpha == 2);
    }
    SECTION("constant term must be one") {
        REQUIRE_THROWS_AS(StableSetProfile::from_counts(2, {2, 2}), Error);
    }
    SECTION("singleton count must match the order") {
        REQUIRE_THROWS_AS(StableSetProfile::from_counts(3, {1, 2}), Error);
    }
    SECTION("counts must be nonnegative") {
        REQUIRE_THROWS_AS(StableSetProfile::from_counts(2, {1, 2, -1}), Error);
    }
    SECTION("rejects a top count that breaks the descent bound") {
        // With n = 4, the bound alpha*s_alpha <= n*s_{alpha-1} forces
        // 2*s_2 <= 4*s_1 = 16; s_2 = 9 is impossible for any 4-vertex graph.
        REQUIRE_THROWS_AS(StableSetProfile::from_counts(4, {1, 4, 9}), Error);
    }
}

TEST_CASE("oracle counts on known graphs") {
    REQUIRE(oracle_profile(Graph(0)).to_polynomial() == Polynomial{1});
    REQUIRE(oracle_profile(Graph(3)).to_polynomial() == Polynomial{1, 3, 3, 1});
    REQUIRE(oracle_profile(complete_graph(4)).to_polynomial() == Polynomial{1, 4});
    REQUIRE(oracle_profile(path_graph(4)).to_polynomial() == Polynomial{1, 4, 3});
    REQUIRE(oracle_profile(cycle_graph(5)).to_polynomial() == Polynomial{1, 5, 5});
    REQUIRE(oracle_profile(cycle_graph(6)).to_polynomial() == Polynomial{1, 6, 9, 2});

    SECTION("the Petersen graph") {
        Graph petersen = from_edge_list(
            10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                 {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                 {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
        REQUIRE(oracle_profile(petersen).to_polynomial() ==
                Polynomial{1, 10, 30, 30, 5});
    }
    SECTION("subset enumeration is capped") {
        try {
            oracle_profile(Graph(27));
            FAIL("expected an error");
        } catch (const Error& e) {
            REQUIRE(e.code() == ErrorCode::capacity);
        }
    }
}

TEST_CASE("engine base cases") {
    REQUIRE(independence_poly(Graph(0)) == Polynomial{1});
    REQUIRE(independence_poly(Graph(1)) == Polynomial{1, 1});
    REQUIRE(independence_poly(complete_graph(2)) == Polynomial{1, 2});
    REQUIRE(independence_poly(Graph(64)) == pow(Polynomial{1, 1}, 64));
}

TEST_CASE("engine matches the subset oracle") {
    std::mt19937_64 rng(31415);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 14);
        int density = 10 + static_cast<int>(rng() % 80);
        Graph g = testutil::random_graph(n, density, rng);
        CAPTURE(n, density, trial);
        REQUIRE(independence_poly(g) == oracle_profile(g).to_polynomial());
    }
}

TEST_CASE("deletion recurrence holds at every vertex") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 11);
        Graph g = testutil::random_graph(n, 45, rng);
        int v = static_cast<int>(rng() % static_cast<unsigned>(n));
        Polynomial whole = independence_poly(g);
        Polynomial without_v = independence_poly(delete_vertex(g, v).graph);
        Polynomial without_nbhd =
            independence_poly(delete_closed_neighborhood(g, v).graph);
        REQUIRE(whole == add(without_v, shift_mul_x(without_nbhd)));
    }
}

TEST_CASE("disjoint components multiply") {
    std::mt19937_64 rng(5050);
    for (int trial = 0; trial < 20; ++trial) {
        Graph a = testutil::random_graph(2 + static_cast<int>(rng() % 9), 50, rng);
        Graph b = testutil::random_graph(2 + static_cast<int>(rng() % 9), 50, rng);
        REQUIRE(independence_poly(disjoint_union(a, b)) ==
                mul(independence_poly(a), independence_poly(b)));
    }
}

TEST_CASE("result does not depend on pivot choice") {
    std::mt19937_64 rng(777);
    EngineOptions lowest;
    lowest.pivot = [](const Graph&, VertexSet mask) {
        return std::countr_zero(mask.bits);
    };
    EngineOptions scrambled;
    scrambled.pivot = [](const Graph&, VertexSet mask) {
        // Deterministic but arbitrary: pick the k-th set bit by a mask hash.
        int size = mask.size();
        int k = static_cast<int>((mask.bits * 0x9e3779b97f4a7c15ULL >> 32) %
                                 static_cast<unsigned>(size));
        std::uint64_t bits = mask.bits;
        for (int i = 0; i < k; ++i) bits &= bits - 1;
        return std::countr_zero(bits);
    };
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = testutil::random_graph(3 + static_cast<int>(rng() % 10), 40, rng);
        Polynomial reference = independence_poly(g);
        REQUIRE(independence_poly(g, lowest) == reference);
        REQUIRE(independence_poly(g, scrambled) == reference);
    }
}

TEST_CASE("memo cap raises a resource error") {
    EngineOptions tiny;
    tiny.max_memo_entries = 2;
    try {
        independence_poly(path_graph(12), tiny);
        FAIL("expected an error");
    } catch (const Error& e) {
        REQUIRE(e.code() == ErrorCode::resource);
    }
}

TEST_CASE("profile alpha agrees with branch-and-bound") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = testutil::random_graph(1 + static_cast<int>(rng() % 14), 35, rng);
        REQUIRE(stable_set_profile(g).alpha == alpha(g));
    }
}

TEST_CASE("pendant transform") {
    SECTION("single vertex") {
        auto p = StableSetProfile::from_counts(1, {1, 1});
        REQUIRE(star_transform(p) == Polynomial{1, 2});
    }
    SECTION("degree is always the vertex count") {
        std::mt19937_64 rng(91);
        for (int trial = 0; trial < 20; ++trial) {
            int n = 1 + static_cast<int>(rng() % 12);
            Graph g = testutil::random_graph(n, 60, rng);
            REQUIRE(star_transform(stable_set_profile(g)).degree() == n);
        }
    }
    SECTION("matches the engine on the pendant-extended graph") {
        std::mt19937_64 rng(92);
        for (int trial = 0; trial < 25; ++trial) {
            int n = 1 + static_cast<int>(rng() % 12);
            Graph g = testutil::random_graph(n, 40, rng);
            REQUIRE(star_transform(stable_set_profile(g)) ==
                    independence_poly(star(g)));
        }
    }
    SECTION("leading coefficients follow the closed expressions") {
        std::mt19937_64 rng(93);
        for (int trial = 0; trial < 30; ++trial) {
            int n = 1 + static_cast<int>(rng() % 12);
            Graph g = testutil::random_graph(n, 55, rng);
            auto prof = stable_set_profile(g);
            Polynomial t = star_transform(prof);
            BigInt s2 = prof.to_polynomial()[2], s3 = prof.to_polynomial()[3];
            REQUIRE(t[0] == 1);
            REQUIRE(t[1] == 2 * BigInt(n));
            REQUIRE(t[2] == binomial(n, 2) + BigInt(n) * binomial(n - 1, 1) + s2);
            REQUIRE(t[3] == binomial(n, 3) + BigInt(n) * binomial(n - 1, 2) +
                                s2 * binomial(n - 2, 1) + s3);
            if (prof.alpha <= 3) {
                BigInt t4 = binomial(n, 4) + BigInt(n) * binomial(n - 1, 3) +
                            s2 * binomial(n - 2, 2) + s3 * binomial(n - 3, 1);
                BigInt t5 = binomial(n, 5) + BigInt(n) * binomial(n - 1, 4) +
                            s2 * binomial(n - 2, 3) + s3 * binomial(n - 3, 2);
                REQUIRE(t[4] == t4);
                REQUIRE(t[5] == t5);
            }
        }
    }
}

TEST_CASE("profile descent bounds") {
    std::mt19937_64 rng(616);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 16);
        Graph g = testutil::random_graph(n, 30 + static_cast<int>(rng() % 50), rng);
        auto prof = stable_set_profile(g);
        for (int k = 1; k <= prof.alpha; ++k) {
            BigInt sk = prof.s[static_cast<std::size_t>(k)];
            BigInt sk1 = prof.s[static_cast<std::size_t>(k) - 1];
            // Stated bound, and the sharper form that descends one element
            // of each k-set to a (k-1)-set avoiding double counting.
            REQUIRE(BigInt(k) * sk <= BigInt(n) * sk1);
            REQUIRE(BigInt(k) * sk <= BigInt(n - k + 1) * sk1);
        }
    }
}

TEST_CASE("join and union composition rules") {
    Graph k2 = complete_graph(2), k3 = complete_graph(3);
    SECTION("union is a product") {
        REQUIRE(union_poly({independence_poly(k2), independence_poly(k3)}) ==
                independence_poly(disjoint_union(k2, k3)));
    }
    SECTION("join keeps one shared empty set") {
        REQUIRE(zykov_poly({independence_poly(k2), independence_poly(k3)}) ==
                independence_poly(zykov_sum(k2, k3)));
        REQUIRE(zykov_poly({Polynomial{1, 2}, Polynomial{1, 3}}) == Polynomial{1, 5});
    }
    SECTION("m-fold join of one polynomial") {
        Polynomial p = independence_poly(Graph(2));
        REQUIRE(repeated_zykov(p, 1) == p);
        REQUIRE(repeated_zykov(p, 0) == Polynomial{1});
        Graph triple = zykov_sum(zykov_sum(Graph(2), Graph(2)), Graph(2));
        REQUIRE(repeated_zykov(p, 3) == independence_poly(triple));
        REQUIRE_THROWS_AS(repeated_zykov(p, -1), Error);
    }
    SECTION("operands must have constant term one") {
        REQUIRE_THROWS_AS(zykov_poly({Polynomial{0, 1}}), Error);
        REQUIRE_THROWS_AS(union_poly({Polynomial{2, 1}}), Error);
        REQUIRE_THROWS_AS(repeated_zykov(Polynomial::zero(), 2), Error);
    }
    SECTION("random cross-check against materialized graphs") {
        std::mt19937_64 rng(55);
        for (int trial = 0; trial < 15; ++trial) {
            Graph a = testutil::random_graph(1 + static_cast<int>(rng() % 8), 50, rng);
            Graph b = testutil::random_graph(1 + static_cast<int>(rng() % 8), 50, rng);
            REQUIRE(zykov_poly({independence_poly(a), independence_poly(b)}) ==
                    independence_poly(zykov_sum(a, b)));
        }
    }
}

TEST_CASE("claw-free graphs have log-concave polynomials") {
    for (int n = 1; n <= 16; ++n)
        REQUIRE(is_log_concave(independence_poly(path_graph(n))));
    for (int n = 3; n <= 16; ++n)
        REQUIRE(is_log_concave(independence_poly(cycle_graph(n))));
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 25; ++trial) {
        Graph base = testutil::random_graph(2 + static_cast<int>(rng() % 5), 60, rng);
        Graph lg = testutil::line_graph(base);
        if (lg.vertex_count() == 0) continue;
        REQUIRE(is_claw_free(lg));
        REQUIRE(is_log_concave(independence_poly(lg)));
    }
}

TEST_CASE("pendant transform of low-alpha graphs is log-concave") {
    std::mt19937_64 rng(303);
    int kept = 0;
    while (kept < 40) {
        int n = 3 + static_cast<int>(rng() % 12);
        Graph g = testutil::random_graph(n, 70, rng);
        if (alpha(g) > 3) continue;
        ++kept;
        Polynomial t = star_transform(stable_set_profile(g));
        REQUIRE(is_log_concave(t));
        REQUIRE(is_unimodal(t));
    }
}
