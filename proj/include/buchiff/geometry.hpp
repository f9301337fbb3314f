/*
 * geometry.hpp
 * ------------
 * Ramification counting for rational self-maps of the projective line, the
 * Zeuthen identity checker for parametrized correspondences, and the census
 * of totally-multiple fibers of a non-constant map.
 *
 * Everything is exact over Q. Fibers are counted with the point at infinity
 * included: the fiber of u = p/q over a finite lambda consists of the roots
 * of p - lambda q plus x = infinity exactly when the x-degree drops, and
 * the fiber over lambda = infinity consists of the roots of q plus
 * x = infinity when deg p > deg q.
 */
#pragma once

#include <vector>

#include "buchiff/funcfield.hpp"
#include "buchiff/ratfunc.hpp"

namespace buchiff {

// degree of u as a morphism P^1 -> P^1
long map_degree(const QX& u);

// sum over all branch values (finite and infinite) of
// deg u - #fiber; equals 2 deg u - 2 for self-maps of the line, and that
// identity is asserted internally (VerificationFailed on mismatch)
long ramification_total(const QX& u);

struct ZeuthenResult {
    long lhs = 0; // 2 eps - ramification_total(u)
    long rhs = 0; // 2 delta - ramification_total(v)
    bool equal = false;
};

// both sides of the Zeuthen identity for the correspondence parametrized by
// (u, v); both equal the Euler characteristic of the common source line
ZeuthenResult zeuthen_check(const QX& u, const QX& v);

struct LemmaCensusResult {
    std::vector<QPoint> points;         // b = [-lambda : 1], verified exactly
    std::vector<long> residual_degrees; // irrational branch-value blocks
    Int residual_bound() const {
        Int b(0);
        for (long d : residual_degrees) b += Int(d);
        return b;
    }
    Int total_bound() const {
        return Int(static_cast<long>(points.size())) + residual_bound();
    }
};

// all b = [s0:t0] for which s0 + c t0 has at least one zero and every zero
// (the one at infinity included) has multiplicity >= 2; b = [1:0] never
// qualifies (no zeros). Rational fiber values are verified exactly;
// irrational ones contribute only to the residual bound. Throws
// TheoremViolation if the census exceeds 4 (the genus-0 bound).
LemmaCensusResult lemma_linear_census(const QX& c);

} // namespace buchiff
