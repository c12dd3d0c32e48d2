#pragma once

/*
 * trees.hpp
 * ---------
 * Free-tree enumeration. Exhaustive mode decodes every Prüfer sequence on n
 * vertices (n^(n-2) labeled trees, tractable through n = 9) and keeps one
 * representative per isomorphism class, recognized by a canonical code:
 * the tree is rooted at its center(s); a rooted subtree's code is '(' +
 * its children's codes in sorted order + ')'; the tree's code is the
 * smallest of the at-most-two center-rooted codes. Codes are bit-packed
 * ('(' = 1) into a 32-bit word, which holds any tree up to 15 vertices.
 * The enumeration loop runs millions of times for n = 9, so it works in
 * fixed-size buffers with no heap traffic. Sampling mode draws uniform
 * labeled trees from random Prüfer sequences.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "indpoly/errors.hpp"
#include "indpoly/graph.hpp"

namespace indpoly {

namespace detail {

constexpr int code_tree_cap = 15;

// Standard linear-time Prüfer decode; seq[0..n-3] in [0, n), out gets n-1 edges.
inline void prufer_decode(int n, const int* seq, std::pair<int, int>* out) {
    std::array<int, Graph::max_vertices> degree{};
    for (int v = 0; v < n; ++v) degree[static_cast<std::size_t>(v)] = 1;
    for (int i = 0; i < n - 2; ++i) ++degree[static_cast<std::size_t>(seq[i])];
    int ptr = 0;
    while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int i = 0; i < n - 2; ++i) {
        int t = seq[i];
        out[i] = {leaf, t};
        if (--degree[static_cast<std::size_t>(t)] == 1 && t < ptr) {
            leaf = t;
        } else {
            ++ptr;
            while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
            leaf = ptr;
        }
    }
    out[n - 2] = {leaf, n - 1};
}

// Fixed-capacity adjacency lists for the canonical-code computation.
struct SmallTree {
    int n = 0;
    std::array<std::array<std::int8_t, code_tree_cap>, code_tree_cap> nbr{};
    std::array<std::int8_t, code_tree_cap> deg{};

    void assign(int n_, const std::pair<int, int>* edges) {
        n = n_;
        deg.fill(0);
        for (int i = 0; i < n - 1; ++i) {
            auto [u, v] = edges[i];
            nbr[static_cast<std::size_t>(u)][static_cast<std::size_t>(deg[static_cast<std::size_t>(u)]++)] =
                static_cast<std::int8_t>(v);
            nbr[static_cast<std::size_t>(v)][static_cast<std::size_t>(deg[static_cast<std::size_t>(v)]++)] =
                static_cast<std::int8_t>(u);
        }
    }
};

// Code of the subtree at v entered from parent, as (bit length, bits).
inline std::pair<int, std::uint32_t> rooted_code(const SmallTree& t, int v, int parent) {
    std::array<std::pair<int, std::uint32_t>, code_tree_cap> kids;
    int kid_count = 0;
    for (int j = 0; j < t.deg[static_cast<std::size_t>(v)]; ++j) {
        int w = t.nbr[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)];
        if (w != parent) kids[static_cast<std::size_t>(kid_count++)] = rooted_code(t, w, v);
    }
    std::sort(kids.begin(), kids.begin() + kid_count);
    int len = 0;
    std::uint32_t bits = 0;
    for (int j = 0; j < kid_count; ++j) {
        bits = (bits << kids[static_cast<std::size_t>(j)].first) |
               kids[static_cast<std::size_t>(j)].second;
        len += kids[static_cast<std::size_t>(j)].first;
    }
    return {len + 2, (std::uint32_t{1} << (len + 1)) | (bits << 1)};
}

// Center(s) by repeated leaf removal: one or two vertices remain.
inline int tree_centers(const SmallTree& t, std::array<int, 2>& centers) {
    if (t.n == 1) {
        centers[0] = 0;
        return 1;
    }
    std::array<std::int8_t, code_tree_cap> degree = t.deg;
    std::array<std::int8_t, code_tree_cap> layer{};
    int layer_size = 0;
    for (int v = 0; v < t.n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1)
            layer[static_cast<std::size_t>(layer_size++)] = static_cast<std::int8_t>(v);
    int remaining = t.n;
    while (remaining > 2) {
        remaining -= layer_size;
        std::array<std::int8_t, code_tree_cap> next{};
        int next_size = 0;
        for (int i = 0; i < layer_size; ++i) {
            int v = layer[static_cast<std::size_t>(i)];
            for (int j = 0; j < t.deg[static_cast<std::size_t>(v)]; ++j) {
                int w = t.nbr[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)];
                if (--degree[static_cast<std::size_t>(w)] == 1)
                    next[static_cast<std::size_t>(next_size++)] = static_cast<std::int8_t>(w);
            }
        }
        layer = next;
        layer_size = next_size;
    }
    for (int i = 0; i < layer_size; ++i) centers[static_cast<std::size_t>(i)] = layer[static_cast<std::size_t>(i)];
    if (layer_size == 2 && centers[0] > centers[1]) std::swap(centers[0], centers[1]);
    return layer_size;
}

// Canonical code with a sentinel bit marking the total length.
inline std::uint32_t canonical_tree_code(const SmallTree& t) {
    std::array<int, 2> centers{};
    int count = tree_centers(t, centers);
    std::uint32_t best = ~std::uint32_t{0};
    for (int i = 0; i < count; ++i) {
        auto [len, bits] = rooted_code(t, centers[static_cast<std::size_t>(i)], -1);
        best = std::min(best, (std::uint32_t{1} << len) | bits);
    }
    return best;
}

constexpr int exhaustive_tree_max = 9;

}  // namespace detail

// One representative per isomorphism class of trees on n vertices, ordered
// by canonical code. Exhaustive over all n^(n-2) Prüfer sequences.
inline std::vector<Graph> all_trees(int n) {
    if (n < 1 || n > detail::exhaustive_tree_max)
        throw_error(ErrorCode::range,
                    "all_trees: exhaustive enumeration supports 1 <= n <= 9, got " +
                        std::to_string(n));
    if (n == 1) return {Graph(1)};
    if (n == 2) return {from_edge_list(2, {{0, 1}})};

    std::vector<std::pair<std::uint32_t, Graph>> reps;
    std::unordered_set<std::uint32_t> seen;
    std::array<int, detail::code_tree_cap> seq{};
    std::array<std::pair<int, int>, detail::code_tree_cap> edges;
    detail::SmallTree tree;
    for (;;) {
        detail::prufer_decode(n, seq.data(), edges.data());
        tree.assign(n, edges.data());
        std::uint32_t code = detail::canonical_tree_code(tree);
        if (seen.insert(code).second) {
            std::vector<std::pair<int, int>> edge_list(edges.begin(),
                                                       edges.begin() + (n - 1));
            reps.emplace_back(code, from_edge_list(n, edge_list));
        }
        int i = n - 3;
        while (i >= 0 && seq[static_cast<std::size_t>(i)] == n - 1) {
            seq[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++seq[static_cast<std::size_t>(i)];
    }
    std::sort(reps.begin(), reps.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(reps.size());
    for (auto& [code, g] : reps) out.push_back(std::move(g));
    return out;
}

// Uniform random labeled tree via a random Prüfer sequence.
inline Graph random_tree(int n, std::mt19937_64& rng) {
    if (n < 1 || n > Graph::max_vertices)
        throw_error(ErrorCode::range,
                    "random_tree: need 1 <= n <= 64, got " + std::to_string(n));
    if (n == 1) return Graph(1);
    if (n == 2) return from_edge_list(2, {{0, 1}});
    // Raw modulo keeps sequences identical across standard libraries; the
    // sliver of bias over 64 labels is irrelevant for sampling purposes.
    std::vector<int> seq(static_cast<std::size_t>(n) - 2);
    for (int& t : seq) t = static_cast<int>(rng() % static_cast<unsigned>(n));
    std::vector<std::pair<int, int>> edges(static_cast<std::size_t>(n) - 1);
    detail::prufer_decode(n, seq.data(), edges.data());
    return from_edge_list(n, edges);
}

}  // namespace indpoly
