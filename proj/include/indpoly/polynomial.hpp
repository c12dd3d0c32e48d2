#pragma once

/*
 * polynomial.hpp
 * --------------
 * Dense univariate polynomials with exact arbitrary-precision integer
 * coefficients, low degree first. Zero is the empty coefficient vector;
 * otherwise the trailing coefficient is nonzero.
 */

#include <cctype>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "indpoly/bigint.hpp"
#include "indpoly/errors.hpp"

namespace indpoly {

class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }

    Polynomial(std::initializer_list<long long> coeffs) {
        coeffs_.reserve(coeffs.size());
        for (long long c : coeffs) coeffs_.emplace_back(c);
        normalize();
    }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial({1}); }
    static Polynomial constant(BigInt c) {
        Polynomial p;
        if (c != 0) p.coeffs_.push_back(std::move(c));
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    BigInt operator[](std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
    }

    bool operator==(const Polynomial&) const = default;

    std::string to_string() const {
        if (coeffs_.empty()) return "[0]";
        std::string out = "[";
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (k) out += ", ";
            out += coeffs_[k].str();
        }
        out += "]";
        return out;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

inline Polynomial add(const Polynomial& p, const Polynomial& q) {
    std::vector<BigInt> c(std::max(p.coeffs().size(), q.coeffs().size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = p[k] + q[k];
    return Polynomial(std::move(c));
}

inline Polynomial sub(const Polynomial& p, const Polynomial& q) {
    std::vector<BigInt> c(std::max(p.coeffs().size(), q.coeffs().size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = p[k] - q[k];
    return Polynomial(std::move(c));
}

inline Polynomial mul(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return Polynomial::zero();
    std::vector<BigInt> c(p.coeffs().size() + q.coeffs().size() - 1);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        for (std::size_t j = 0; j < q.coeffs().size(); ++j)
            c[i + j] += p.coeffs()[i] * q.coeffs()[j];
    return Polynomial(std::move(c));
}

// x * p — the weight a pivot vertex contributes in the deletion recurrence.
inline Polynomial shift_mul_x(const Polynomial& p) {
    if (p.is_zero()) return Polynomial::zero();
    std::vector<BigInt> c(p.coeffs().size() + 1);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) c[k + 1] = p.coeffs()[k];
    return Polynomial(std::move(c));
}

inline Polynomial scale(const Polynomial& p, const BigInt& c) {
    std::vector<BigInt> out(p.coeffs().size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = p.coeffs()[k] * c;
    return Polynomial(std::move(out));
}

inline Polynomial add_constant(const Polynomial& p, const BigInt& c) {
    std::vector<BigInt> out = p.coeffs();
    if (out.empty()) out.emplace_back(0);
    out[0] += c;
    return Polynomial(std::move(out));
}

inline Polynomial pow(const Polynomial& p, unsigned long long k) {
    Polynomial result = Polynomial::one();
    Polynomial base = p;
    while (k) {
        if (k & 1) result = mul(result, base);
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return result;
}

inline Polynomial derivative(const Polynomial& p) {
    if (p.coeffs().size() <= 1) return Polynomial::zero();
    std::vector<BigInt> c(p.coeffs().size() - 1);
    for (std::size_t k = 1; k < p.coeffs().size(); ++k) c[k - 1] = p.coeffs()[k] * k;
    return Polynomial(std::move(c));
}

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return sub(p, q); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }

// Accepts the bracketed decimal form, e.g. "[1, 390, 660, 1120]"; brackets optional.
inline Polynomial parse_polynomial(const std::string& text) {
    std::vector<BigInt> coeffs;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto parse_int = [&] {
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        std::size_t digits = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits)
            throw_error(ErrorCode::parse, "polynomial text: expected integer at offset " +
                                              std::to_string(start));
        coeffs.emplace_back(text.substr(start, i - start));
    };
    skip_ws();
    bool bracketed = i < text.size() && text[i] == '[';
    if (bracketed) ++i;
    skip_ws();
    parse_int();
    for (;;) {
        skip_ws();
        if (i < text.size() && text[i] == ',') {
            ++i;
            skip_ws();
            parse_int();
            continue;
        }
        break;
    }
    if (bracketed) {
        if (i < text.size() && text[i] == ']')
            ++i;
        else
            throw_error(ErrorCode::parse,
                        "polynomial text: expected ']' at offset " + std::to_string(i));
    }
    skip_ws();
    if (i != text.size())
        throw_error(ErrorCode::parse, "polynomial text: trailing characters at offset " +
                                          std::to_string(i));
    return Polynomial(std::move(coeffs));
}

}  // namespace indpoly
