/*
 * roots.hpp
 * ---------
 * Exact root machinery for polynomials over Q. Rational roots are found
 * without factoring integers: clear denominators, apply the monic transform
 * g(u) = L^(d-1) f(u/L) (integer coefficients, integer candidate roots),
 * isolate real roots of the squarefree part with Sturm bisection to width
 * below one, and verify the at-most-one integer in each interval exactly.
 */
#pragma once

#include <vector>

#include "buchiff/poly.hpp"
#include "buchiff/rational.hpp"

namespace buchiff {

using QPoly = Poly<Rational>;

struct RationalRoot {
    Rational value;
    long multiplicity;
};

// distinct real roots of f over R (whole line)
long sturm_real_root_count(const QPoly& f);

// distinct real roots in the half-open interval (a, b]
long sturm_count_interval(const QPoly& f, const Rational& a, const Rational& b);

// all rational roots of f with multiplicities, sorted ascending; exact
std::vector<RationalRoot> rational_roots(const QPoly& f);

// squarefree part of f with every rational root divided out; its degree
// bounds the number of remaining distinct roots over the closure
QPoly rational_root_free_part(const QPoly& f);

} // namespace buchiff
