#pragma once

/*
 * sturm.hpp
 * ---------
 * Exact real-root counting. The input polynomial is split into square-free
 * factors with Yun's derivative-gcd algorithm over exact rationals; each
 * factor's distinct real roots are counted with a Sturm chain, and the
 * factor multiplicities recover the count with multiplicity. No floating
 * point anywhere, so "has a non-real root" is a certified statement.
 */

#include <stdexcept>
#include <utility>
#include <vector>

#include "indpoly/bigint.hpp"
#include "indpoly/errors.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly {

namespace detail {

using RatPoly = std::vector<BigRat>;  // low degree first, trailing nonzero

inline void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int rp_degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

inline RatPoly rp_from(const Polynomial& p) {
    RatPoly out(p.coeffs().size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = BigRat(p.coeffs()[k]);
    return out;
}

inline RatPoly rp_derivative(const RatPoly& p) {
    if (p.size() <= 1) return {};
    RatPoly out(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] = p[k] * k;
    return out;
}

inline RatPoly rp_monic(RatPoly p) {
    rp_trim(p);
    if (p.empty()) return p;
    BigRat lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

inline RatPoly rp_sub(const RatPoly& a, const RatPoly& b) {
    RatPoly out(std::max(a.size(), b.size()));
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (k < a.size()) out[k] += a[k];
        if (k < b.size()) out[k] -= b[k];
    }
    rp_trim(out);
    return out;
}

// Remainder of a by b under exact rational long division.
inline RatPoly rp_rem(RatPoly a, const RatPoly& b) {
    if (b.empty()) throw std::logic_error("rp_rem: division by zero polynomial");
    rp_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        BigRat q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= q * b[k];
        rp_trim(a);
    }
    return a;
}

inline RatPoly rp_quotient_exact(RatPoly a, const RatPoly& b) {
    if (b.empty()) throw std::logic_error("rp_quotient_exact: division by zero polynomial");
    rp_trim(a);
    if (a.size() < b.size()) {
        if (!a.empty()) throw std::logic_error("rp_quotient_exact: inexact division");
        return {};
    }
    RatPoly q(a.size() - b.size() + 1);
    while (a.size() >= b.size() && !a.empty()) {
        BigRat c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= c * b[k];
        rp_trim(a);
    }
    if (!a.empty()) throw std::logic_error("rp_quotient_exact: inexact division");
    rp_trim(q);
    return q;
}

inline RatPoly rp_gcd(RatPoly a, RatPoly b) {
    rp_trim(a);
    rp_trim(b);
    while (!b.empty()) {
        RatPoly r = rp_rem(a, b);
        a = std::move(b);
        b = rp_monic(std::move(r));
    }
    return rp_monic(std::move(a));
}

// Yun's algorithm: factors[i] = (square-free factor, multiplicity),
// input = constant * prod factor^multiplicity.
inline std::vector<std::pair<RatPoly, int>> square_free_decomposition(RatPoly f) {
    rp_trim(f);
    if (f.empty()) throw std::logic_error("square_free_decomposition: zero polynomial");
    std::vector<std::pair<RatPoly, int>> factors;
    if (rp_degree(f) == 0) return factors;
    f = rp_monic(std::move(f));
    RatPoly fp = rp_derivative(f);
    RatPoly a0 = rp_gcd(f, fp);
    RatPoly b = rp_quotient_exact(f, a0);
    RatPoly d = rp_sub(rp_quotient_exact(fp, a0), rp_derivative(b));
    for (int i = 1; rp_degree(b) > 0; ++i) {
        RatPoly ai = rp_gcd(b, d);
        b = rp_quotient_exact(b, ai);
        RatPoly c = rp_quotient_exact(d, ai);
        d = rp_sub(c, rp_derivative(b));
        if (rp_degree(ai) > 0) factors.emplace_back(std::move(ai), i);
    }
    return factors;
}

inline int rp_sign(const BigRat& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }

// Distinct real roots of a square-free polynomial: sign variations of the
// Sturm chain at -infinity minus those at +infinity.
inline int sturm_distinct_roots(const RatPoly& squarefree) {
    int deg = rp_degree(squarefree);
    if (deg <= 0) return 0;
    std::vector<RatPoly> chain;
    chain.push_back(squarefree);
    chain.push_back(rp_derivative(squarefree));
    rp_trim(chain.back());
    while (!chain.back().empty() && rp_degree(chain.back()) > 0) {
        RatPoly r = rp_rem(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        rp_trim(r);
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    auto variations = [&](bool at_minus_inf) {
        int count = 0;
        int prev = 0;
        for (const auto& p : chain) {
            if (p.empty()) continue;
            int s = rp_sign(p.back());
            if (at_minus_inf && (rp_degree(p) % 2 == 1)) s = -s;
            if (prev != 0 && s != 0 && s != prev) ++count;
            if (s != 0) prev = s;
        }
        return count;
    };
    return variations(true) - variations(false);
}

}  // namespace detail

// Real roots counted with multiplicity. Exact; defined for nonzero input.
inline int real_root_count(const Polynomial& p) {
    if (p.is_zero()) throw_error(ErrorCode::range, "real_root_count: zero polynomial");
    int total = 0;
    for (const auto& [factor, mult] : detail::square_free_decomposition(detail::rp_from(p)))
        total += mult * detail::sturm_distinct_roots(factor);
    return total;
}

inline int distinct_real_root_count(const Polynomial& p) {
    if (p.is_zero()) throw_error(ErrorCode::range, "distinct_real_root_count: zero polynomial");
    int total = 0;
    for (const auto& factor_mult : detail::square_free_decomposition(detail::rp_from(p)))
        total += detail::sturm_distinct_roots(factor_mult.first);
    return total;
}

inline bool all_roots_real(const Polynomial& p) {
    return real_root_count(p) == p.degree();
}

}  // namespace indpoly
