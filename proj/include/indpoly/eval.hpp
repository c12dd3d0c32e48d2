#pragma once

/*
 * eval.hpp
 * --------
 * Evaluates a parsed graph expression. If the whole expression fits in the
 * 64-vertex graph representation it is materialized; otherwise evaluation
 * falls back to closed-form polynomial identities (union -> product,
 * zykov -> sum minus overlap, rep -> power, star -> the pendant transform,
 * family atoms -> their closed forms). Expressions with no closed-form path
 * at the required size fail with a capacity error.
 */

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "indpoly/engine.hpp"
#include "indpoly/errors.hpp"
#include "indpoly/expr.hpp"
#include "indpoly/families.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly {

struct EvalResult {
    std::optional<Graph> graph;           // engaged when the expression fits
    std::optional<Polynomial> closed_form;  // engaged otherwise
};

class Evaluator {
public:
    // Degree guard for the closed-form path; beyond this the dense
    // representation stops being desk-scale.
    static constexpr long long max_closed_form_degree = 20000;

    long long size(const GraphExpr& e) {
        switch (e.kind) {
            case ExprKind::complete:
            case ExprKind::edgeless:
            case ExprKind::path:
            case ExprKind::cycle: return e.params[0];
            case ExprKind::multipartite: {
                long long total = 0;
                for (auto [part, count] : e.multi) total = checked_add(total, part * count);
                return total;
            }
            case ExprKind::spider: return 2 * e.params[0] + 2;
            case ExprKind::centipede: return 2 * e.params[0];
            case ExprKind::triangle_chain: return 3 * e.params[0];
            case ExprKind::triangle_chain_k2: return 3 * e.params[0] + 2;
            case ExprKind::tree1: return 10;
            case ExprKind::tree2: return 8;
            case ExprKind::explicit_graph: return e.explicit_n;
            case ExprKind::file_graph: return file_graph(e).vertex_count();
            case ExprKind::union_of:
            case ExprKind::zykov_of: {
                long long total = 0;
                for (const auto& c : e.children) total = checked_add(total, size(c));
                return total;
            }
            case ExprKind::star_of: return checked_add(size(e.children[0]), size(e.children[0]));
            case ExprKind::edge_join_of:
                return checked_add(size(e.children[0]), size(e.children[1]));
            case ExprKind::repeat_of: {
                long long child = size(e.children[0]);
                if (child > size_cap / e.params[0]) return size_cap;
                return e.params[0] * child;
            }
        }
        throw std::logic_error("size: unhandled expression kind");
    }

    Graph materialize(const GraphExpr& e) {
        switch (e.kind) {
            case ExprKind::complete:
                return complete_graph(require_small(e.params[0], "K"));
            case ExprKind::edgeless:
                return empty_graph(require_small(e.params[0], "Kbar"));
            case ExprKind::path: return path_graph(require_small(e.params[0], "P"));
            case ExprKind::cycle: return cycle_graph(require_small(e.params[0], "C"));
            case ExprKind::multipartite: {
                std::vector<long long> parts;
                for (auto [part, count] : e.multi)
                    parts.insert(parts.end(), static_cast<std::size_t>(count), part);
                return complete_multipartite_graph(parts);
            }
            case ExprKind::spider: return spider_graph(require_small(e.params[0], "S"));
            case ExprKind::centipede:
                return centipede_graph(require_small(e.params[0], "W"));
            case ExprKind::triangle_chain:
                return triangle_chain_graph(require_small(e.params[0], "Tri"));
            case ExprKind::triangle_chain_k2:
                return triangle_chain_k2_graph(require_small(e.params[0], "TriK2"));
            case ExprKind::tree1: return tree_t1();
            case ExprKind::tree2: return tree_t2();
            case ExprKind::explicit_graph:
                return from_edge_list(static_cast<int>(e.explicit_n), e.edges);
            case ExprKind::file_graph: return file_graph(e);
            case ExprKind::union_of: {
                Graph g(0);
                for (const auto& c : e.children) g = disjoint_union(g, materialize(c));
                return g;
            }
            case ExprKind::zykov_of: {
                Graph g(0);
                for (const auto& c : e.children) g = zykov_sum(g, materialize(c));
                return g;
            }
            case ExprKind::star_of: return star(materialize(e.children[0]));
            case ExprKind::edge_join_of: {
                Graph left = materialize(e.children[0]);
                Graph right = materialize(e.children[1]);
                long long u = e.params[0], v = e.params[1];
                if (u >= left.vertex_count())
                    throw_error(ErrorCode::range,
                                "ej: left vertex " + std::to_string(u) +
                                    " outside the left operand's " +
                                    std::to_string(left.vertex_count()) + " vertices");
                if (v >= right.vertex_count())
                    throw_error(ErrorCode::range,
                                "ej: right vertex " + std::to_string(v) +
                                    " outside the right operand's " +
                                    std::to_string(right.vertex_count()) + " vertices");
                return edge_join(left, static_cast<int>(u), right, static_cast<int>(v));
            }
            case ExprKind::repeat_of: {
                Graph unit = materialize(e.children[0]);
                Graph g(0);
                for (long long i = 0; i < e.params[0]; ++i) g = disjoint_union(g, unit);
                return g;
            }
        }
        throw std::logic_error("materialize: unhandled expression kind");
    }

    // I(expr;x) without materializing the root expression. Atoms with no
    // closed form are still computed by the engine when they individually fit.
    Polynomial closed_form_poly(const GraphExpr& e) {
        switch (e.kind) {
            case ExprKind::complete: return complete_poly(e.params[0]);
            case ExprKind::edgeless: {
                guarded(e.params[0]);
                return edgeless_poly(e.params[0]);
            }
            case ExprKind::multipartite: {
                std::vector<long long> parts;
                for (auto [part, count] : e.multi) {
                    guarded(part);
                    parts.insert(parts.end(), static_cast<std::size_t>(count), part);
                }
                return complete_multipartite_poly(parts);
            }
            case ExprKind::spider: return spider_poly(e.params[0]);
            case ExprKind::centipede: return centipede_poly(e.params[0]);
            case ExprKind::triangle_chain: return triangle_chain_poly(e.params[0]);
            case ExprKind::triangle_chain_k2: return triangle_chain_k2_poly(e.params[0]);
            case ExprKind::path:
            case ExprKind::cycle:
            case ExprKind::tree1:
            case ExprKind::tree2:
            case ExprKind::explicit_graph:
            case ExprKind::file_graph:
            case ExprKind::edge_join_of: {
                long long n = size(e);
                if (n > Graph::max_vertices)
                    throw_error(ErrorCode::capacity,
                                "no closed-form path for '" + to_string(e) + "' on " +
                                    std::to_string(n) + " vertices");
                return independence_poly(materialize(e));
            }
            case ExprKind::union_of: {
                std::vector<Polynomial> polys;
                long long degree_total = 0;
                for (const auto& c : e.children) {
                    polys.push_back(closed_form_poly(c));
                    degree_total += polys.back().degree();
                    guarded(degree_total);
                }
                return union_poly(polys);
            }
            case ExprKind::zykov_of: {
                std::vector<Polynomial> polys;
                for (const auto& c : e.children) polys.push_back(closed_form_poly(c));
                return zykov_poly(polys);
            }
            case ExprKind::star_of: {
                const GraphExpr& child = e.children[0];
                long long n = size(child);
                guarded(n);
                return star_transform(StableSetProfile::from_polynomial(
                    static_cast<int>(n), closed_form_poly(child)));
            }
            case ExprKind::repeat_of: {
                Polynomial unit = closed_form_poly(e.children[0]);
                guarded(unit.degree() * e.params[0]);
                return pow(unit, static_cast<unsigned long long>(e.params[0]));
            }
        }
        throw std::logic_error("closed_form_poly: unhandled expression kind");
    }

    EvalResult eval(const GraphExpr& e) {
        EvalResult r;
        if (size(e) <= Graph::max_vertices) {
            r.graph = materialize(e);
        } else {
            r.closed_form = closed_form_poly(e);
        }
        return r;
    }

private:
    static constexpr long long size_cap = 1LL << 50;

    static long long checked_add(long long a, long long b) {
        long long s = a + b;
        return s > size_cap ? size_cap : s;
    }

    static int require_small(long long n, const char* what) {
        if (n > Graph::max_vertices)
            throw_error(ErrorCode::capacity, std::string(what) + "(" + std::to_string(n) +
                                                 ") exceeds the 64-vertex cap");
        return static_cast<int>(n);
    }

    static void guarded(long long degree) {
        if (degree > max_closed_form_degree)
            throw_error(ErrorCode::capacity,
                        "closed-form polynomial degree " + std::to_string(degree) +
                            " exceeds the cap of " + std::to_string(max_closed_form_degree));
    }

    const Graph& file_graph(const GraphExpr& e) {
        auto it = file_cache_.find(&e);
        if (it == file_cache_.end())
            it = file_cache_.emplace(&e, read_edge_list_file(e.path)).first;
        return it->second;
    }

    std::unordered_map<const GraphExpr*, Graph> file_cache_;
};

}  // namespace indpoly
