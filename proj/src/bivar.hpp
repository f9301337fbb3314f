/*
 * bivar.hpp
 * ---------
 * Private helpers for bivariate pencils G(lambda, x), represented as
 * polynomials in x whose coefficients live in Q[lambda]. Used by the
 * ramification counter, the totally-multiple-fiber census, and the exact
 * powerful locus.
 *
 * sres_coeff computes principal subresultant coefficients as Sylvester
 * submatrix determinants (fraction-free Bareiss). Determinants commute
 * with specializing lambda as long as the formal leading coefficients
 * survive, which is exactly the regime the callers restrict to; degree
 * drops are enumerated separately from the roots of lc_x.
 */
#pragma once

#include <algorithm>
#include <vector>

#include "buchiff/funcfield.hpp"

namespace buchiff {
namespace detail {

using BiPoly = Poly<QPoly>; // outer variable x, coefficients in Q[lambda]

// p(x) - lambda q(x)
inline BiPoly pencil(const QPoly& p, const QPoly& q) {
    long d = std::max(p.deg_i(), q.deg_i());
    std::vector<QPoly> xc(static_cast<size_t>(d) + 1);
    for (long i = 0; i <= d; ++i)
        xc[static_cast<size_t>(i)] = QPoly::from_coeffs({p.coeff(i), -q.coeff(i)});
    return BiPoly::from_coeffs(std::move(xc));
}

// sum_i cs[i](x) * lambda^i
inline BiPoly from_lambda_major(const std::vector<QPoly>& cs) {
    long d = -1;
    for (const auto& c : cs) d = std::max(d, c.deg_i());
    if (d < 0) return BiPoly();
    std::vector<QPoly> xc(static_cast<size_t>(d) + 1);
    for (long j = 0; j <= d; ++j) {
        std::vector<Rational> lam(cs.size());
        for (size_t i = 0; i < cs.size(); ++i) lam[i] = cs[i].coeff(j);
        xc[static_cast<size_t>(j)] = QPoly::from_coeffs(std::move(lam));
    }
    return BiPoly::from_coeffs(std::move(xc));
}

// x-polynomial lifted to constant lambda-coefficients
inline BiPoly lift_x(const QPoly& p) {
    std::vector<QPoly> xc(static_cast<size_t>(p.deg_i() + 1));
    for (long i = 0; i <= p.deg_i(); ++i)
        xc[static_cast<size_t>(i)] = QPoly::constant(p.coeff(i));
    return BiPoly::from_coeffs(std::move(xc));
}

// G(l, x) as a polynomial in x
inline QPoly eval_lambda(const BiPoly& G, const Rational& l) {
    std::vector<Rational> xc(static_cast<size_t>(G.deg_i() + 1));
    for (long i = 0; i <= G.deg_i(); ++i) xc[static_cast<size_t>(i)] = G.coeff(i).eval(l);
    return QPoly::from_coeffs(std::move(xc));
}

// monic gcd of the x-coefficients; nonconstant iff some lambda makes G
// vanish identically in x
inline QPoly content_lambda(const BiPoly& G) {
    QPoly g;
    for (long i = 0; i <= G.deg_i(); ++i) {
        const QPoly& c = G.coeff(i);
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : gcd_monic(g, c);
        if (g.deg_i() == 0) return QPoly::one();
    }
    return g;
}

// fraction-free determinant; consumes the matrix
template <class R>
R bareiss_det(std::vector<std::vector<R>>& M) {
    size_t s = M.size();
    if (s == 0) return ring_one<R>();
    bool neg = false;
    R prev = ring_one<R>();
    for (size_t p = 0; p + 1 < s; ++p) {
        size_t r = p;
        while (r < s && M[r][p].is_zero()) ++r;
        if (r == s) return R{};
        if (r != p) {
            std::swap(M[r], M[p]);
            neg = !neg;
        }
        for (size_t i = p + 1; i < s; ++i) {
            for (size_t j = p + 1; j < s; ++j)
                M[i][j] = exact_div(M[i][j] * M[p][p] - M[i][p] * M[p][j], prev);
            M[i][p] = R{};
        }
        prev = M[p][p];
    }
    R det = M[s - 1][s - 1];
    return neg ? -det : det;
}

// principal subresultant coefficient sres_j(A, B), deg A > deg B >= 0,
// 0 <= j <= deg B; sres_0 is the Sylvester resultant
template <class R>
R sres_coeff(const Poly<R>& A, const Poly<R>& B, long j) {
    long m = A.deg_i(), n = B.deg_i();
    if (m <= n || n < 0 || j < 0 || j > n)
        throw DomainError("subresultant index out of range");
    long size = m + n - 2 * j;
    std::vector<std::vector<R>> M(static_cast<size_t>(size),
                                  std::vector<R>(static_cast<size_t>(size)));
    for (long r = 0; r < n - j; ++r) {
        long shift = n - j - 1 - r;
        for (long c = 0; c < size; ++c)
            M[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                A.coeff(m + n - j - 1 - c - shift);
    }
    for (long r = 0; r < m - j; ++r) {
        long shift = m - j - 1 - r;
        for (long c = 0; c < size; ++c)
            M[static_cast<size_t>(n - j + r)][static_cast<size_t>(c)] =
                B.coeff(m + n - j - 1 - c - shift);
    }
    return bareiss_det(M);
}

// gcd over Q[lambda] of sres_j(G, G_x) for j < k: vanishing at lambda0
// (with lc_x(G)(lambda0) != 0) is equivalent to
// deg gcd(G(lambda0), G_x(lambda0)) >= k. Returns the zero polynomial when
// every sres_j vanishes identically (repeated bivariate factor).
inline QPoly sres_gcd_below(const BiPoly& G, long k) {
    BiPoly Gx = G.derivative();
    QPoly acc;
    for (long j = 0; j < k; ++j) {
        QPoly s = sres_coeff(G, Gx, j);
        if (s.is_zero()) continue;
        acc = acc.is_zero() ? s.monic() : gcd_monic(acc, s);
        if (acc.deg_i() == 0) return QPoly::one();
    }
    return acc;
}

} // namespace detail
} // namespace buchiff
