#pragma once

/*
 * engine.hpp
 * ----------
 * Exact computation of I(G;x) by the deletion recurrence
 *
 *     I(G;x) = I(G - v;x) + x * I(G - N[v];x)
 *
 * with connected-component factorization, an edgeless base case of (1+x)^n,
 * and memoization keyed by the vertex-subset mask in the original labeling.
 * Also: the subset-enumeration oracle (independent cross-check path), stable
 * set profiles, the pendant-attachment coefficient transform, and the
 * polynomial identities for disjoint union and join-all (Zykov) sums.
 */

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "indpoly/bigint.hpp"
#include "indpoly/errors.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly {

// Counts of stable sets by cardinality: s[k] = number of stable sets of size k.
struct StableSetProfile {
    int n = 0;
    int alpha = 0;
    std::vector<BigInt> s;

    static StableSetProfile from_counts(int n, std::vector<BigInt> counts) {
        StableSetProfile p;
        p.n = n;
        while (!counts.empty() && counts.back() == 0) counts.pop_back();
        p.s = std::move(counts);
        p.alpha = static_cast<int>(p.s.size()) - 1;
        p.validate();
        return p;
    }

    static StableSetProfile from_polynomial(int n, const Polynomial& poly) {
        return from_counts(n, poly.coeffs());
    }

    Polynomial to_polynomial() const { return Polynomial(s); }

    void validate() const {
        if (n < 0) throw_error(ErrorCode::range, "profile: negative vertex count");
        if (alpha < 0 || s.empty() || s[0] != 1)
            throw_error(ErrorCode::range, "profile: s_0 must be 1");
        if (n >= 1 && (alpha < 1 || s[1] != n))
            throw_error(ErrorCode::range, "profile: s_1 must equal the vertex count");
        if (n == 0 && alpha != 0)
            throw_error(ErrorCode::range,
                        "profile: no stable sets of positive size on 0 vertices");
        for (const auto& c : s)
            if (c < 0) throw_error(ErrorCode::range, "profile: negative count");
        if (s.back() < 1) throw_error(ErrorCode::range, "profile: s_alpha must be positive");
        // Counting (set, removed element) pairs: alpha * s_alpha <= n * s_{alpha-1}.
        if (alpha >= 1 && BigInt(alpha) * s[static_cast<std::size_t>(alpha)] >
                              BigInt(n) * s[static_cast<std::size_t>(alpha) - 1])
            throw_error(ErrorCode::range, "profile: size-count bound violated");
    }
};

struct EngineOptions {
    std::size_t max_memo_entries = std::size_t{1} << 20;
    // Optional pivot override; must return a vertex of the mask. Used to
    // check that results do not depend on pivot choice.
    std::function<int(const Graph&, VertexSet)> pivot;
};

namespace detail {

inline bool mask_edgeless(const Graph& g, std::uint64_t mask) {
    for (std::uint64_t rest = mask; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (g.neighbors(v) & mask) return false;
    }
    return true;
}

inline int default_pivot(const Graph& g, std::uint64_t mask) {
    int best = -1, best_deg = -1;
    for (std::uint64_t rest = mask; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        int deg = std::popcount(g.neighbors(v) & mask);
        if (deg > best_deg) {
            best_deg = deg;
            best = v;
        }
    }
    return best;
}

struct IpContext {
    const Graph& g;
    const EngineOptions& opts;
    std::unordered_map<std::uint64_t, Polynomial> memo;
};

inline Polynomial ip_mask(IpContext& ctx, std::uint64_t mask);

inline Polynomial ip_connected(IpContext& ctx, std::uint64_t mask) {
    if (auto it = ctx.memo.find(mask); it != ctx.memo.end()) return it->second;
    int v = ctx.opts.pivot ? ctx.opts.pivot(ctx.g, VertexSet{mask})
                           : default_pivot(ctx.g, mask);
    if (v < 0 || !((mask >> v) & 1u))
        throw std::logic_error("independence_poly: pivot outside subgraph");
    std::uint64_t without_v = mask & ~(std::uint64_t{1} << v);
    std::uint64_t without_nbhd = mask & ~ctx.g.closed_neighborhood(v);
    Polynomial result =
        add(ip_mask(ctx, without_v), shift_mul_x(ip_mask(ctx, without_nbhd)));
    if (ctx.memo.size() >= ctx.opts.max_memo_entries)
        throw_error(ErrorCode::resource,
                    "independence_poly: memo entry cap exceeded (" +
                        std::to_string(ctx.opts.max_memo_entries) + ")");
    ctx.memo.emplace(mask, result);
    return result;
}

inline Polynomial ip_mask(IpContext& ctx, std::uint64_t mask) {
    if (mask_edgeless(ctx.g, mask))
        return pow(Polynomial{1, 1}, static_cast<unsigned>(std::popcount(mask)));
    Polynomial result = Polynomial::one();
    std::uint64_t rest = mask;
    while (rest) {
        int v = std::countr_zero(rest);
        std::uint64_t comp = component_of(ctx.g, rest, v);
        rest &= ~comp;
        if (comp == mask) return ip_connected(ctx, mask);
        result = mul(result, mask_edgeless(ctx.g, comp)
                                 ? pow(Polynomial{1, 1},
                                       static_cast<unsigned>(std::popcount(comp)))
                                 : ip_connected(ctx, comp));
    }
    return result;
}

}  // namespace detail

inline Polynomial independence_poly(const Graph& g, const EngineOptions& opts = {}) {
    detail::IpContext ctx{g, opts, {}};
    return detail::ip_mask(ctx, g.full_mask());
}

// Counts stable sets of every size by walking all 2^n vertex subsets,
// rejecting a subset at the first member with a neighbor inside it.
// Deliberately shares no code path with the recurrence.
inline StableSetProfile oracle_profile(const Graph& g) {
    constexpr int oracle_max_vertices = 26;
    int n = g.vertex_count();
    if (n > oracle_max_vertices)
        throw_error(ErrorCode::capacity, "oracle_profile: " + std::to_string(n) +
                                             " vertices exceeds the cap of " +
                                             std::to_string(oracle_max_vertices));
    std::vector<BigInt> counts(static_cast<std::size_t>(n) + 1);
    std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        bool stable = true;
        for (std::uint64_t rest = mask; rest;) {
            int v = std::countr_zero(rest);
            if (g.neighbors(v) & mask) {
                stable = false;
                break;
            }
            rest &= rest - 1;
        }
        if (stable) counts[static_cast<std::size_t>(std::popcount(mask))] += 1;
    }
    return StableSetProfile::from_counts(n, std::move(counts));
}

inline StableSetProfile stable_set_profile(const Graph& g,
                                           const EngineOptions& opts = {}) {
    return StableSetProfile::from_polynomial(g.vertex_count(),
                                             independence_poly(g, opts));
}

// Coefficients of I(G*;x) where G* attaches one pendant vertex to every
// vertex of G, computed directly from the profile of G:
//   t_k = sum_{j=0..k} s_j * C(n-j, n-k),   k = 0..n.
// The result always has degree exactly n.
inline Polynomial star_transform(const StableSetProfile& profile) {
    int n = profile.n;
    std::vector<BigInt> t(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        BigInt acc = 0;
        int j_max = k < profile.alpha ? k : profile.alpha;
        for (int j = 0; j <= j_max; ++j)
            acc += profile.s[static_cast<std::size_t>(j)] * binomial(n - j, n - k);
        t[static_cast<std::size_t>(k)] = acc;
    }
    Polynomial result{std::move(t)};
    if (result.degree() != n)
        throw std::logic_error("star_transform: degree must equal the vertex count");
    return result;
}

namespace detail {
inline void require_constant_term_one(const Polynomial& p, const char* op) {
    if (p[0] != 1)
        throw_error(ErrorCode::range,
                    std::string(op) + ": constant term must be 1, got " + p[0].str());
}
}  // namespace detail

// Disjoint union multiplies the polynomials.
inline Polynomial union_poly(const std::vector<Polynomial>& polys) {
    Polynomial result = Polynomial::one();
    for (const auto& p : polys) {
        detail::require_constant_term_one(p, "union_poly");
        result = mul(result, p);
    }
    return result;
}

// Joining every part to every other part keeps only the parts' own stable
// sets: the polynomials add, minus the over-counted empty sets.
inline Polynomial zykov_poly(const std::vector<Polynomial>& polys) {
    Polynomial result;
    for (const auto& p : polys) {
        detail::require_constant_term_one(p, "zykov_poly");
        result = add(result, p);
    }
    return add_constant(result, 1 - BigInt(polys.size()));
}

// Join-all sum of m copies of the same graph: m*p - (m-1).
inline Polynomial repeated_zykov(const Polynomial& p, long long m) {
    detail::require_constant_term_one(p, "repeated_zykov");
    if (m < 0) throw_error(ErrorCode::range, "repeated_zykov: negative copy count");
    return add_constant(scale(p, BigInt(m)), 1 - BigInt(m));
}

}  // namespace indpoly
