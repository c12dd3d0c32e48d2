#pragma once

/*
 * families.hpp
 * ------------
 * Parametric graph families with fixed, documented labelings, plus
 * closed-form polynomial builders for the families whose independence
 * polynomials are known without running the engine. Two kinds (graph_H and
 * oversized complete multipartite graphs) are polynomial-only: build()
 * refuses them with a closed-form-only error instead of materializing
 * hundreds of vertices.
 */

#include <string>
#include <utility>
#include <vector>

#include "indpoly/bigint.hpp"
#include "indpoly/engine.hpp"
#include "indpoly/errors.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly {

// ---- basic families --------------------------------------------------------

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph path_graph(int n) {
    if (n < 1) throw_error(ErrorCode::range, "path: need n >= 1, got " + std::to_string(n));
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw_error(ErrorCode::range, "cycle: need n >= 3, got " + std::to_string(n));
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

// K_{1,n}: hub 0, leaves 1..n.
inline Graph star_graph(int n) {
    if (n < 0) throw_error(ErrorCode::range, "star graph: need n >= 0");
    Graph g(n + 1);
    for (int v = 1; v <= n; ++v) g.add_edge(0, v);
    return g;
}

inline Graph complete_multipartite_graph(const std::vector<long long>& parts) {
    long long total = 0;
    for (long long p : parts) {
        if (p < 1) throw_error(ErrorCode::range, "complete multipartite: part sizes must be >= 1");
        total += p;
    }
    if (total > Graph::max_vertices)
        throw_error(ErrorCode::closed_form_only,
                    "complete multipartite on " + std::to_string(total) +
                        " vertices: use the closed-form polynomial");
    Graph g(static_cast<int>(total));
    int offset = 0;
    for (long long p : parts) {
        int end = offset + static_cast<int>(p);
        for (int u = offset; u < end; ++u)
            for (int v = end; v < static_cast<int>(total); ++v) g.add_edge(u, v);
        offset = end;
    }
    return g;
}

// ---- paper-shaped families -------------------------------------------------

// Spider: K_{1,n} with one pendant per vertex. Hub 0, leg tips 1..n,
// pendant of vertex i is i + n + 1.
inline Graph spider_graph(int n) {
    if (n < 2) throw_error(ErrorCode::range, "spider: need n >= 2, got " + std::to_string(n));
    return star(star_graph(n));
}

// Centipede: path on n spine vertices 0..n-1, pendant of i is i + n.
inline Graph centipede_graph(int n) {
    if (n < 1)
        throw_error(ErrorCode::range, "centipede: need n >= 1, got " + std::to_string(n));
    return star(path_graph(n));
}

// Chain of n triangles: triangle i (0-based) on {3i, 3i+1, 3i+2}, bridged to
// the next triangle by the edge (3i+1, 3i+3).
inline Graph triangle_chain_graph(int n) {
    if (n < 1)
        throw_error(ErrorCode::range, "triangle chain: need n >= 1, got " + std::to_string(n));
    if (3 * n > Graph::max_vertices)
        throw_error(ErrorCode::capacity, "triangle chain on " + std::to_string(3 * n) +
                                             " vertices exceeds the 64-vertex cap");
    Graph g(3 * n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(3 * i, 3 * i + 1);
        g.add_edge(3 * i, 3 * i + 2);
        g.add_edge(3 * i + 1, 3 * i + 2);
        if (i + 1 < n) g.add_edge(3 * i + 1, 3 * i + 3);
    }
    return g;
}

// Triangle chain with a K_2 tail bridged to the last chain vertex 3n-2:
// tail vertices 3n and 3n+1.
inline Graph triangle_chain_k2_graph(int n) {
    if (n < 1)
        throw_error(ErrorCode::range,
                    "triangle chain with tail: need n >= 1, got " + std::to_string(n));
    if (3 * n + 2 > Graph::max_vertices)
        throw_error(ErrorCode::capacity,
                    "triangle chain with tail on " + std::to_string(3 * n + 2) +
                        " vertices exceeds the 64-vertex cap");
    Graph chain = triangle_chain_graph(n);
    Graph g = edge_join(chain, 3 * n - 2, complete_graph(2), 0);
    return g;
}

// K_n joined to all of 3K_7 (every cross edge present).
inline Graph kn_join_3k7_graph(int n) {
    if (n < 1)
        throw_error(ErrorCode::range, "kn_join_3k7: need n >= 1, got " + std::to_string(n));
    if (n + 21 > Graph::max_vertices)
        throw_error(ErrorCode::closed_form_only,
                    "kn_join_3k7 on " + std::to_string(n + 21) +
                        " vertices: use the closed-form polynomial");
    Graph k7s = disjoint_union(complete_graph(7),
                               disjoint_union(complete_graph(7), complete_graph(7)));
    return zykov_sum(complete_graph(n), k7s);
}

// Two fixed 10- and 8-vertex sample trees used in tests and the DSL.
// tree_t1: spine 4-5-6-7 with leaves 0-1 hanging as a cherry on 5 via 1,
// a pendant path 8-9 on 5 via 9, and pendants 2 on 6, 3 on 7.
inline Graph tree_t1() {
    return from_edge_list(
        10, {{0, 1}, {4, 5}, {5, 6}, {6, 7}, {8, 9}, {1, 5}, {5, 9}, {2, 6}, {3, 7}});
}

// tree_t2: spine 3-4-5 with a cherry 0-1 on 4 via 1, pendant path 6-7 on 4
// via 7, and pendant 2 on 5.
inline Graph tree_t2() {
    return from_edge_list(8, {{0, 1}, {3, 4}, {4, 5}, {6, 7}, {1, 4}, {4, 7}, {2, 5}});
}

// ---- closed-form polynomials ----------------------------------------------

inline Polynomial complete_poly(long long n) {
    if (n < 0) throw_error(ErrorCode::range, "complete: need n >= 0");
    return Polynomial(std::vector<BigInt>{1, BigInt(n)});
}

// (1+x)^n as its binomial coefficient row.
inline Polynomial edgeless_poly(long long n) {
    if (n < 0) throw_error(ErrorCode::range, "edgeless: need n >= 0");
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    c[0] = 1;
    for (long long k = 1; k <= n; ++k)
        c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k) - 1] * (n - k + 1) / k;
    return Polynomial(std::move(c));
}

inline Polynomial complete_multipartite_poly(const std::vector<long long>& parts) {
    std::vector<Polynomial> blocks;
    blocks.reserve(parts.size());
    for (long long p : parts) {
        if (p < 1)
            throw_error(ErrorCode::range, "complete multipartite: part sizes must be >= 1");
        blocks.push_back(edgeless_poly(p));
    }
    return zykov_poly(blocks);
}

// I(S_n;x) = (1+x) * sum_k [ C(n,k)*2^k + C(n-1,k-1) ] x^k.
inline Polynomial spider_poly(long long n) {
    if (n < 2) throw_error(ErrorCode::range, "spider: need n >= 2, got " + std::to_string(n));
    std::vector<BigInt> inner(static_cast<std::size_t>(n) + 1);
    BigInt pow2 = 1, choose_n = 1, choose_prev = 1;
    for (long long k = 0; k <= n; ++k) {
        // Running rows: choose_n = C(n,k), choose_prev = C(n-1,k-1).
        inner[static_cast<std::size_t>(k)] = choose_n * pow2 + (k >= 1 ? choose_prev : 0);
        pow2 *= 2;
        choose_n = choose_n * (n - k) / (k + 1);
        if (k >= 1) choose_prev = choose_prev * (n - k) / k;
    }
    return mul(Polynomial{1, 1}, Polynomial(std::move(inner)));
}

// Index of the unique largest coefficient of spider_poly(n):
// 1 + (n-1) mod 3 + 2*(ceil(n/3) - 1).
inline long long spider_mode(long long n) {
    if (n < 2) throw_error(ErrorCode::range, "spider mode: need n >= 2, got " + std::to_string(n));
    return 1 + (n - 1) % 3 + 2 * ((n + 2) / 3 - 1);
}

namespace detail {

// Chain polynomials: plain[m] = I(triangle chain of m);
// tailed[m] = I(triangle chain of m with the K_2 tail), tailed[0] = I(K_2).
// They satisfy the coupled recurrences
//   plain[m+1]  = (1+2x)*plain[m]  + x*tailed[m-1]
//   tailed[m+1] = (1+2x)*tailed[m] + x(1+x)*plain[m]
// obtained by deleting/keeping the free vertices of the last triangle.
struct TriangleChainPolys {
    std::vector<Polynomial> plain;
    std::vector<Polynomial> tailed;
};

inline TriangleChainPolys triangle_chain_polys(long long m) {
    TriangleChainPolys t;
    t.plain = {Polynomial::one(), Polynomial{1, 3}};
    t.tailed = {Polynomial{1, 2}};
    Polynomial one_2x{1, 2};
    Polynomial x_1x{0, 1, 1};
    for (long long i = 1; i <= m; ++i) {
        t.tailed.push_back(add(mul(one_2x, t.tailed.back()),
                               mul(x_1x, t.plain[static_cast<std::size_t>(i) - 1])));
        if (static_cast<long long>(t.plain.size()) <= m)
            t.plain.push_back(add(mul(one_2x, t.plain.back()),
                                  shift_mul_x(t.tailed[static_cast<std::size_t>(i) - 1])));
    }
    return t;
}

}  // namespace detail

inline Polynomial triangle_chain_poly(long long n) {
    if (n < 0) throw_error(ErrorCode::range, "triangle chain: need n >= 0");
    return detail::triangle_chain_polys(n).plain[static_cast<std::size_t>(n)];
}

inline Polynomial triangle_chain_k2_poly(long long n) {
    if (n < 0) throw_error(ErrorCode::range, "triangle chain with tail: need n >= 0");
    return detail::triangle_chain_polys(n).tailed[static_cast<std::size_t>(n)];
}

// I(W_n;x) through the factorization I(W_{2m};x) = (1+x)^m * I(chain_m;x),
// I(W_{2m+1};x) = (1+x)^m * I(chain_m with tail;x).
inline Polynomial centipede_poly(long long n) {
    if (n < 1) throw_error(ErrorCode::range, "centipede: need n >= 1, got " + std::to_string(n));
    long long m = n / 2;
    Polynomial chain = (n % 2 == 0) ? triangle_chain_poly(m) : triangle_chain_k2_poly(m);
    return mul(pow(Polynomial{1, 1}, static_cast<unsigned long long>(m)), chain);
}

// I(K_n join 3K_7;x) = 1 + (n+21)x + 147x^2 + 343x^3, for any n.
inline Polynomial counterexample_poly_kn_3k7(long long n) {
    if (n < 1) throw_error(ErrorCode::range, "kn_join_3k7: need n >= 1, got " + std::to_string(n));
    return zykov_poly({complete_poly(n), pow(complete_poly(7), 3)});
}

// I(H;x) for H = 3K_10 joined to the complete multipartite graph with 120
// parts of size 3. 390 vertices, so polynomial-only.
inline Polynomial graph_H_poly() {
    return zykov_poly({pow(complete_poly(10), 3),
                       repeated_zykov(edgeless_poly(3), 120)});
}

// ---- FamilySpec dispatch ---------------------------------------------------

enum class FamilyKind {
    complete,
    empty,
    path,
    cycle,
    complete_multipartite,
    star_graph,
    spider,
    centipede,
    triangle_chain,
    triangle_chain_k2,
    kn_join_3k7,
    graph_H,
    tree_t1,
    tree_t2,
};

struct FamilySpec {
    FamilyKind kind;
    std::vector<long long> params;
};

namespace detail {
inline long long one_param(const FamilySpec& spec, const char* name) {
    if (spec.params.size() != 1)
        throw_error(ErrorCode::range, std::string(name) + ": expected one parameter");
    return spec.params[0];
}

inline int small_param(const FamilySpec& spec, const char* name) {
    long long n = one_param(spec, name);
    if (n < 0 || n > Graph::max_vertices)
        throw_error(ErrorCode::capacity,
                    std::string(name) + ": parameter " + std::to_string(n) +
                        " outside [0, 64]");
    return static_cast<int>(n);
}
}  // namespace detail

inline Graph build(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::complete: return complete_graph(detail::small_param(spec, "complete"));
        case FamilyKind::empty: return empty_graph(detail::small_param(spec, "empty"));
        case FamilyKind::path: return path_graph(detail::small_param(spec, "path"));
        case FamilyKind::cycle: return cycle_graph(detail::small_param(spec, "cycle"));
        case FamilyKind::complete_multipartite:
            return complete_multipartite_graph(spec.params);
        case FamilyKind::star_graph:
            return star_graph(detail::small_param(spec, "star graph"));
        case FamilyKind::spider: {
            long long n = detail::one_param(spec, "spider");
            if (n < 2) throw_error(ErrorCode::range, "spider: need n >= 2");
            if (n > (Graph::max_vertices - 2) / 2)
                throw_error(ErrorCode::capacity,
                            "spider with " + std::to_string(n) +
                                " legs exceeds the 64-vertex cap");
            return spider_graph(static_cast<int>(n));
        }
        case FamilyKind::centipede: {
            long long n = detail::one_param(spec, "centipede");
            if (n < 1) throw_error(ErrorCode::range, "centipede: need n >= 1");
            if (n > Graph::max_vertices / 2)
                throw_error(ErrorCode::capacity,
                            "centipede with " + std::to_string(n) +
                                " spine vertices exceeds the 64-vertex cap");
            return centipede_graph(static_cast<int>(n));
        }
        case FamilyKind::triangle_chain: {
            long long n = detail::one_param(spec, "triangle chain");
            if (n < 1) throw_error(ErrorCode::range, "triangle chain: need n >= 1");
            if (n > Graph::max_vertices)
                throw_error(ErrorCode::capacity, "triangle chain on " + std::to_string(n) +
                                                     " triangles exceeds the 64-vertex cap");
            return triangle_chain_graph(static_cast<int>(n));
        }
        case FamilyKind::triangle_chain_k2: {
            long long n = detail::one_param(spec, "triangle chain with tail");
            if (n < 1)
                throw_error(ErrorCode::range, "triangle chain with tail: need n >= 1");
            if (n > Graph::max_vertices)
                throw_error(ErrorCode::capacity,
                            "triangle chain with tail on " + std::to_string(n) +
                                " triangles exceeds the 64-vertex cap");
            return triangle_chain_k2_graph(static_cast<int>(n));
        }
        case FamilyKind::kn_join_3k7: {
            long long n = detail::one_param(spec, "kn_join_3k7");
            if (n < 1) throw_error(ErrorCode::range, "kn_join_3k7: need n >= 1");
            if (n > Graph::max_vertices - 21)
                throw_error(ErrorCode::closed_form_only,
                            "kn_join_3k7 on " + std::to_string(n) +
                                "+21 vertices: use the closed-form polynomial");
            return kn_join_3k7_graph(static_cast<int>(n));
        }
        case FamilyKind::graph_H:
            throw_error(ErrorCode::closed_form_only,
                        "graph_H has 390 vertices: use the closed-form polynomial");
        case FamilyKind::tree_t1: return tree_t1();
        case FamilyKind::tree_t2: return tree_t2();
    }
    throw std::logic_error("build: unhandled family kind");
}

}  // namespace indpoly
