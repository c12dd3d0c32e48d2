#pragma once

/*
 * shape.hpp
 * ---------
 * Coefficient-sequence shape analysis: modes (argmax indices), unimodality,
 * log-concavity, and the combined per-polynomial report. Unimodality and
 * log-concavity are defined for nonnegative sequences only.
 */

#include <vector>

#include "indpoly/bigint.hpp"
#include "indpoly/errors.hpp"
#include "indpoly/polynomial.hpp"
#include "indpoly/sturm.hpp"

namespace indpoly {

namespace detail {
inline void require_nonnegative(const Polynomial& p, const char* op) {
    for (const auto& c : p.coeffs())
        if (c < 0)
            throw_error(ErrorCode::range,
                        std::string(op) + ": negative coefficient " + c.str());
}
}  // namespace detail

// Indices attaining the maximum coefficient; empty only for the zero polynomial.
inline std::vector<int> modes(const Polynomial& p) {
    detail::require_nonnegative(p, "modes");
    std::vector<int> out;
    if (p.is_zero()) return out;
    BigInt best = p.coeffs()[0];
    for (const auto& c : p.coeffs())
        if (c > best) best = c;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
        if (p.coeffs()[k] == best) out.push_back(static_cast<int>(k));
    return out;
}

// Weakly rises to some index, then weakly falls. All-equal sequences qualify.
inline bool is_unimodal(const Polynomial& p) {
    detail::require_nonnegative(p, "is_unimodal");
    bool falling = false;
    for (std::size_t k = 1; k < p.coeffs().size(); ++k) {
        if (p.coeffs()[k] < p.coeffs()[k - 1]) {
            falling = true;
        } else if (p.coeffs()[k] > p.coeffs()[k - 1] && falling) {
            return false;
        }
    }
    return true;
}

// a_k^2 >= a_{k-1} * a_{k+1} at every internal index, taken literally:
// an internal zero between positive entries fails the inequality.
inline bool is_log_concave(const Polynomial& p) {
    detail::require_nonnegative(p, "is_log_concave");
    for (std::size_t k = 1; k + 1 < p.coeffs().size(); ++k)
        if (p.coeffs()[k] * p.coeffs()[k] < p.coeffs()[k - 1] * p.coeffs()[k + 1])
            return false;
    return true;
}

struct ShapeReport {
    int degree = -1;
    bool unimodal = false;
    std::vector<int> mode_indices;
    bool log_concave = false;
    int real_root_count = 0;
    bool all_roots_real = false;
};

inline ShapeReport analyze_shape(const Polynomial& p) {
    if (p.is_zero()) throw_error(ErrorCode::range, "analyze_shape: zero polynomial");
    ShapeReport r;
    r.degree = p.degree();
    r.unimodal = is_unimodal(p);
    r.mode_indices = modes(p);
    r.log_concave = is_log_concave(p);
    r.real_root_count = real_root_count(p);
    r.all_roots_real = (r.real_root_count == r.degree);
    return r;
}

}  // namespace indpoly
