#pragma once

/*
 * graph.hpp
 * ---------
 * Labeled finite simple graphs over at most 64 vertices, stored as one
 * adjacency bitmask per vertex. All operations are pure; Graph values are
 * immutable after construction and safe to share across threads.
 */

#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "indpoly/errors.hpp"

namespace indpoly {

// Subset of {0,...,n-1} as a machine-word bitmask.
struct VertexSet {
    std::uint64_t bits = 0;

    bool contains(int v) const { return (bits >> v) & 1u; }
    int size() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }

    static VertexSet single(int v) { return VertexSet{std::uint64_t{1} << v}; }

    bool operator==(const VertexSet&) const = default;
};

class Graph {
public:
    static constexpr int max_vertices = 64;

    Graph() = default;

    explicit Graph(int n) {
        if (n < 0 || n > max_vertices)
            throw_error(ErrorCode::capacity,
                        "vertex count " + std::to_string(n) + " outside [0, 64]");
        n_ = n;
        adj_.assign(static_cast<std::size_t>(n), 0);
    }

    int vertex_count() const { return n_; }

    int edge_count() const {
        int twice = 0;
        for (std::uint64_t m : adj_) twice += std::popcount(m);
        return twice / 2;
    }

    std::uint64_t neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    std::uint64_t closed_neighborhood(int v) const {
        return neighbors(v) | (std::uint64_t{1} << v);
    }

    int degree(int v) const { return std::popcount(neighbors(v)); }

    bool has_edge(int u, int v) const { return (neighbors(u) >> v) & 1u; }

    std::uint64_t full_mask() const {
        return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw_error(ErrorCode::range, "self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw_error(ErrorCode::range, "vertex index " + std::to_string(v) +
                                              " outside [0, " + std::to_string(n_) + ")");
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

inline Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

// Text form: first line `n`, following lines `u v` (0-based).
inline Graph read_edge_list(std::istream& in) {
    int n = 0;
    if (!(in >> n)) throw_error(ErrorCode::parse, "edge-list input: missing vertex count");
    if (n < 0 || n > Graph::max_vertices)
        throw_error(ErrorCode::capacity,
                    "edge-list input: vertex count " + std::to_string(n) + " outside [0, 64]");
    Graph g(n);
    int u = 0;
    while (in >> u) {
        int v = 0;
        if (!(in >> v)) throw_error(ErrorCode::parse, "edge-list input: dangling endpoint");
        g.add_edge(u, v);
    }
    if (!in.eof()) {
        in.clear();
        std::string rest;
        in >> rest;
        throw_error(ErrorCode::parse, "edge-list input: unexpected token '" + rest + "'");
    }
    return g;
}

inline Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw_error(ErrorCode::io, "cannot open '" + path + "'");
    return read_edge_list(in);
}

// ---- constructions -------------------------------------------------------

inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
    int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    if (n1 + n2 > Graph::max_vertices)
        throw_error(ErrorCode::capacity, "disjoint union on " + std::to_string(n1 + n2) +
                                             " vertices exceeds the 64-vertex engine cap");
    Graph g(n1 + n2);
    for (int v = 0; v < n1; ++v)
        for (std::uint64_t m = g1.neighbors(v); m;) {
            int w = std::countr_zero(m);
            m &= m - 1;
            if (w > v) g.add_edge(v, w);
        }
    for (int v = 0; v < n2; ++v)
        for (std::uint64_t m = g2.neighbors(v); m;) {
            int w = std::countr_zero(m);
            m &= m - 1;
            if (w > v) g.add_edge(v + n1, w + n1);
        }
    return g;
}

// Disjoint union plus every cross edge between the two blocks.
inline Graph zykov_sum(const Graph& g1, const Graph& g2) {
    Graph g = disjoint_union(g1, g2);
    int n1 = g1.vertex_count();
    for (int u = 0; u < n1; ++u)
        for (int v = n1; v < g.vertex_count(); ++v) g.add_edge(u, v);
    return g;
}

// G* — one pendant vertex i+n attached to each original vertex i.
inline Graph star(const Graph& g) {
    int n = g.vertex_count();
    if (2 * n > Graph::max_vertices)
        throw_error(ErrorCode::capacity, "star of a " + std::to_string(n) +
                                             "-vertex graph exceeds the 64-vertex engine cap");
    Graph s(2 * n);
    for (int v = 0; v < n; ++v)
        for (std::uint64_t m = g.neighbors(v); m;) {
            int w = std::countr_zero(m);
            m &= m - 1;
            if (w > v) s.add_edge(v, w);
        }
    for (int v = 0; v < n; ++v) s.add_edge(v, v + n);
    return s;
}

// Disjoint union plus the single bridging edge (u, v + n1).
inline Graph edge_join(const Graph& g1, int u, const Graph& g2, int v) {
    if (u < 0 || u >= g1.vertex_count())
        throw_error(ErrorCode::range, "edge-join: left index " + std::to_string(u) +
                                          " outside left operand");
    if (v < 0 || v >= g2.vertex_count())
        throw_error(ErrorCode::range, "edge-join: right index " + std::to_string(v) +
                                          " outside right operand");
    Graph g = disjoint_union(g1, g2);
    g.add_edge(u, v + g1.vertex_count());
    return g;
}

// ---- induced subgraphs ---------------------------------------------------

// Result of vertex deletion / induction: indices compacted order-preservingly,
// with original[i_new] = i_old retained for reporting.
struct Subgraph {
    Graph graph;
    std::vector<int> original;
};

inline Subgraph induced(const Graph& g, VertexSet s) {
    if (s.bits & ~g.full_mask())
        throw_error(ErrorCode::range, "induced: subset leaves the vertex range");
    std::vector<int> original;
    std::vector<int> newindex(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::uint64_t m = s.bits; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        newindex[static_cast<std::size_t>(v)] = static_cast<int>(original.size());
        original.push_back(v);
    }
    Graph h(static_cast<int>(original.size()));
    for (int i = 0; i < h.vertex_count(); ++i) {
        int v = original[static_cast<std::size_t>(i)];
        for (std::uint64_t m = g.neighbors(v) & s.bits; m;) {
            int w = std::countr_zero(m);
            m &= m - 1;
            if (w > v) h.add_edge(i, newindex[static_cast<std::size_t>(w)]);
        }
    }
    return {std::move(h), std::move(original)};
}

inline Subgraph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw_error(ErrorCode::range, "delete_vertex: index " + std::to_string(v) +
                                          " outside vertex range");
    return induced(g, VertexSet{g.full_mask() & ~(std::uint64_t{1} << v)});
}

inline Subgraph delete_closed_neighborhood(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw_error(ErrorCode::range, "delete_closed_neighborhood: index " +
                                          std::to_string(v) + " outside vertex range");
    return induced(g, VertexSet{g.full_mask() & ~g.closed_neighborhood(v)});
}

// ---- structure -----------------------------------------------------------

namespace detail {

// Connected component of `start` within `within`, by mask-parallel BFS.
inline std::uint64_t component_of(const Graph& g, std::uint64_t within, int start) {
    std::uint64_t comp = std::uint64_t{1} << start;
    std::uint64_t frontier = comp;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            next |= g.neighbors(v) & within & ~comp;
        }
        comp |= next;
        frontier = next;
    }
    return comp;
}

}  // namespace detail

inline std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    std::uint64_t rest = g.full_mask();
    while (rest) {
        int v = std::countr_zero(rest);
        std::uint64_t comp = detail::component_of(g, rest, v);
        out.push_back(VertexSet{comp});
        rest &= ~comp;
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    return detail::component_of(g, g.full_mask(), 0) == g.full_mask();
}

inline bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && is_connected(g) &&
           g.edge_count() == g.vertex_count() - 1;
}

// True iff no edge inside s.
inline bool is_stable(const Graph& g, VertexSet s) {
    if (s.bits & ~g.full_mask())
        throw_error(ErrorCode::range, "is_stable: subset leaves the vertex range");
    for (std::uint64_t m = s.bits; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (g.neighbors(v) & s.bits) return false;
    }
    return true;
}

// True iff no vertex has three pairwise non-adjacent neighbors.
inline bool is_claw_free(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::uint64_t nb = g.neighbors(v);
        if (std::popcount(nb) < 3) continue;
        for (std::uint64_t ma = nb; ma;) {
            int a = std::countr_zero(ma);
            ma &= ma - 1;
            std::uint64_t rest_a = ma & ~g.neighbors(a);
            for (std::uint64_t mb = rest_a; mb;) {
                int b = std::countr_zero(mb);
                mb &= mb - 1;
                if (mb & ~g.neighbors(b)) return false;
            }
        }
    }
    return true;
}

// ---- stability number ----------------------------------------------------

namespace detail {

inline void max_stable_rec(const Graph& g, std::uint64_t rem, int cur, int& best) {
    if (cur + std::popcount(rem) <= best) return;
    if (!rem) {
        best = cur;
        return;
    }
    int v = -1, vdeg = -1;
    for (std::uint64_t m = rem; m;) {
        int w = std::countr_zero(m);
        m &= m - 1;
        int d = std::popcount(g.neighbors(w) & rem);
        if (d > vdeg) {
            vdeg = d;
            v = w;
        }
    }
    max_stable_rec(g, rem & ~g.closed_neighborhood(v), cur + 1, best);
    max_stable_rec(g, rem & ~(std::uint64_t{1} << v), cur, best);
}

}  // namespace detail

// alpha(G) by direct branch-and-bound, independent of the polynomial engine.
inline int alpha(const Graph& g) {
    int best = 0;
    detail::max_stable_rec(g, g.full_mask(), 0, best);
    return best;
}

// ---- well-coveredness ----------------------------------------------------

namespace detail {

// Enumerates maximal stable sets (maximal cliques of the complement) by
// recursive extension with pivot pruning. Visitor returns false to stop.
template <typename Visitor>
bool maximal_stable_rec(const std::vector<std::uint64_t>& nonadj, std::uint64_t r,
                        std::uint64_t p, std::uint64_t x, Visitor&& visit) {
    if (!p && !x) return visit(r);
    std::uint64_t px = p | x;
    int pivot = -1, best = -1;
    for (std::uint64_t m = px; m;) {
        int u = std::countr_zero(m);
        m &= m - 1;
        int d = std::popcount(p & nonadj[static_cast<std::size_t>(u)]);
        if (d > best) {
            best = d;
            pivot = u;
        }
    }
    std::uint64_t cand = p & ~nonadj[static_cast<std::size_t>(pivot)];
    for (std::uint64_t m = cand; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        std::uint64_t bit = std::uint64_t{1} << v;
        std::uint64_t nv = nonadj[static_cast<std::size_t>(v)];
        if (!maximal_stable_rec(nonadj, r | bit, p & nv, x & nv, visit)) return false;
        p &= ~bit;
        x |= bit;
    }
    return true;
}

inline std::vector<std::uint64_t> nonadjacency(const Graph& g) {
    std::vector<std::uint64_t> nonadj(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        nonadj[static_cast<std::size_t>(v)] =
            g.full_mask() & ~g.closed_neighborhood(v);
    return nonadj;
}

constexpr int well_covered_cap = 32;

}  // namespace detail

// Visits every maximal stable set; stops early when the visitor returns false.
template <typename Visitor>
void for_each_maximal_stable_set(const Graph& g, Visitor&& visit) {
    if (g.vertex_count() == 0) return;
    detail::maximal_stable_rec(detail::nonadjacency(g), 0, g.full_mask(), 0,
                               [&](std::uint64_t r) { return visit(VertexSet{r}); });
}

// True iff every maximal stable set has size alpha(G). Hard cap n <= 32.
inline bool is_well_covered(const Graph& g) {
    if (g.vertex_count() > detail::well_covered_cap)
        throw_error(ErrorCode::capacity,
                    "well-coveredness check capped at 32 vertices, got " +
                        std::to_string(g.vertex_count()));
    int seen = -1;
    bool uniform = true;
    for_each_maximal_stable_set(g, [&](VertexSet s) {
        if (seen < 0) {
            seen = s.size();
            return true;
        }
        if (s.size() != seen) {
            uniform = false;
            return false;
        }
        return true;
    });
    return uniform;
}

// Well-covered, no isolated vertices, and order = 2*alpha(G).
inline bool is_very_well_covered(const Graph& g) {
    if (!is_well_covered(g)) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) return false;
    return g.vertex_count() == 2 * alpha(g);
}

}  // namespace indpoly
