#pragma once

/*
 * Shared test helpers: seeded generators and independent numeric oracles.
 * Random draws use raw modulo on mt19937_64 so every generated object is
 * identical across platforms and standard libraries.
 */

#include <algorithm>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "indpoly/bigint.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"

namespace testutil {

inline indpoly::Graph random_graph(int n, int edge_percent, std::mt19937_64& rng) {
    indpoly::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < edge_percent) g.add_edge(u, v);
    return g;
}

// Vertices of the result are the edges of g; two are adjacent iff the edges
// share an endpoint. Line graphs never contain an induced claw, which makes
// this a generator of guaranteed claw-free instances.
inline indpoly::Graph line_graph(const indpoly::Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.has_edge(u, v)) edges.emplace_back(u, v);
    indpoly::Graph lg(static_cast<int>(edges.size()));
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d)
                lg.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return lg;
}

// Smallest upper-triangular adjacency bitmask over all vertex relabelings.
// Factorial cost; meant for n <= 8 as an isomorphism oracle that shares no
// code with the tree canonicalization under test.
inline std::uint64_t brute_canonical_mask(const indpoly::Graph& g) {
    int n = g.vertex_count();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) edges.emplace_back(u, v);
    auto bit_index = [n](int a, int b) {
        if (a > b) std::swap(a, b);
        return a * n + b;
    };
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t mask = 0;
        for (auto [u, v] : edges)
            mask |= std::uint64_t{1}
                    << bit_index(perm[static_cast<std::size_t>(u)],
                                 perm[static_cast<std::size_t>(v)]);
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// ---- numeric root finding --------------------------------------------------

// All complex roots of a polynomial with double coefficients (low power
// first) by Durand-Kerner simultaneous iteration. Independent of the exact
// Sturm machinery; adequate for small degrees with well-separated roots.
inline std::vector<std::complex<double>> approximate_roots(std::vector<double> c) {
    while (!c.empty() && c.back() == 0.0) c.pop_back();
    if (c.size() <= 1) return {};
    std::size_t d = c.size() - 1;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] /= c[d];
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
        return acc;
    };
    std::vector<std::complex<double>> z(d);
    std::complex<double> seed(0.4, 0.9), cur(1.0, 0.0);
    for (auto& zi : z) {
        cur *= seed;
        zi = cur;
    }
    for (int iter = 0; iter < 600; ++iter) {
        double moved = 0;
        for (std::size_t i = 0; i < d; ++i) {
            std::complex<double> denom(1.0, 0.0);
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) denom *= z[i] - z[j];
            std::complex<double> step = eval(z[i]) / denom;
            z[i] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-13) break;
    }
    return z;
}

// Count of approximately-real roots; only trustworthy when the polynomial is
// square-free and its coefficients fit comfortably in doubles.
inline int numeric_real_root_count(const indpoly::Polynomial& p, double tol = 1e-6) {
    std::vector<double> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) c.push_back(static_cast<double>(a));
    int real = 0;
    for (const auto& z : approximate_roots(c))
        if (std::abs(z.imag()) < tol) ++real;
    return real;
}

// ---- shaped polynomial generators -------------------------------------------

// Product of random positive linear factors: positive real roots only, hence
// log-concave coefficients. Closure under multiplication is what the tests
// probe, so the guarantee must come from structure, not from the checker.
inline indpoly::Polynomial random_log_concave_poly(std::mt19937_64& rng) {
    indpoly::Polynomial p{1 + static_cast<long long>(rng() % 9)};
    int factors = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < factors; ++i)
        p = mul(p, indpoly::Polynomial{1 + static_cast<long long>(rng() % 9),
                                       1 + static_cast<long long>(rng() % 9)});
    return p;
}

// Weakly rises to a peak, then weakly falls; every coefficient positive.
inline indpoly::Polynomial random_unimodal_poly(std::mt19937_64& rng) {
    int up = static_cast<int>(rng() % 5), down = static_cast<int>(rng() % 5);
    std::vector<indpoly::BigInt> c;
    indpoly::BigInt cur = 1 + static_cast<long long>(rng() % 9);
    c.push_back(cur);
    for (int i = 0; i < up; ++i) {
        cur += static_cast<long long>(rng() % 10);
        c.push_back(cur);
    }
    for (int i = 0; i < down; ++i) {
        indpoly::BigInt drop = static_cast<long long>(rng() % 10);
        cur = cur > drop ? cur - drop : indpoly::BigInt(1);
        c.push_back(cur);
    }
    return indpoly::Polynomial(std::move(c));
}

}  // namespace testutil
