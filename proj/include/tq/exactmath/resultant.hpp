#pragma once

#include "tq/exactmath/unipoly.hpp"

#include <utility>
#include <vector>

namespace tq {

/// Ring operations needed by fraction-free elimination.
template <class R>
struct RingOps;

template <>
struct RingOps<Rational> {
    static Rational zero() { return 0; }
    static Rational one() { return 1; }
    static bool is_zero(const Rational& a) { return a == 0; }
    static Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
};

template <>
struct RingOps<UniPoly> {
    static UniPoly zero() { return {}; }
    static UniPoly one() { return UniPoly::constant(1); }
    static bool is_zero(const UniPoly& a) { return a.is_zero(); }
    static UniPoly exact_div(const UniPoly& a, const UniPoly& b) { return tq::exact_div(a, b); }
};

template <class R>
using Matrix = std::vector<std::vector<R>>;

/// Determinant by Bareiss fraction-free elimination with row pivoting.
template <class R>
R bareiss_determinant(Matrix<R> m) {
    using Ops = RingOps<R>;
    const std::size_t n = m.size();
    if (n == 0)
        return Ops::one();
    bool negate = false;
    R prev = Ops::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (Ops::is_zero(m[k][k])) {
            std::size_t p = k + 1;
            while (p < n && Ops::is_zero(m[p][k]))
                ++p;
            if (p == n)
                return Ops::zero();
            std::swap(m[k], m[p]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = Ops::exact_div(num, prev);
            }
            m[i][k] = Ops::zero();
        }
        prev = m[k][k];
    }
    R det = m[n - 1][n - 1];
    if (negate)
        det = Ops::zero() - det;
    return det;
}

/// Sylvester matrix of p, q given as coefficient lists (lowest degree first,
/// highest coefficient nonzero). Rows of p come first.
template <class R>
Matrix<R> sylvester_matrix(const std::vector<R>& p, const std::vector<R>& q) {
    using Ops = RingOps<R>;
    const std::size_t m = p.size() - 1, n = q.size() - 1, size = m + n;
    Matrix<R> s(size, std::vector<R>(size, Ops::zero()));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k)
            s[r][r + k] = p[m - k];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k)
            s[n + r][r + k] = q[n - k];
    return s;
}

/// Resultant of two polynomials with coefficients in R (lowest degree first,
/// trailing coefficient nonzero). Both inputs must be nonzero.
template <class R>
R resultant_generic(const std::vector<R>& p, const std::vector<R>& q) {
    using Ops = RingOps<R>;
    if (p.empty() || q.empty())
        throw ZeroPolynomial("resultant with the zero polynomial");
    const std::size_t m = p.size() - 1, n = q.size() - 1;
    if (m == 0 && n == 0)
        return Ops::one();
    if (m == 0) {
        R r = Ops::one();
        for (std::size_t k = 0; k < n; ++k)
            r = r * p[0];
        return r;
    }
    if (n == 0) {
        R r = Ops::one();
        for (std::size_t k = 0; k < m; ++k)
            r = r * q[0];
        return r;
    }
    return bareiss_determinant(sylvester_matrix(p, q));
}

Rational resultant(const UniPoly& p, const UniPoly& q);

/// Coefficients in y (lowest first) of polynomials whose coefficients are
/// polynomials in a parameter; result is a polynomial in that parameter.
using ParamPoly = std::vector<UniPoly>;
UniPoly resultant(const ParamPoly& p, const ParamPoly& q);
ParamPoly trim(ParamPoly p);

/// Discriminant with the classical sign: (-1)^(n(n-1)/2) Res(p, p') / lc(p).
Rational discriminant_univariate(const UniPoly& p);

}  // namespace tq
