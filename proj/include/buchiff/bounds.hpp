/*
 * bounds.hpp
 * ----------
 * The explicit counting bounds: how many powerful specializations a form
 * that is neither constant-coefficient nor an n-th power of a linear form
 * can admit, and the supporting per-case counts. All formulas are exact
 * integer arithmetic; the final inequality is checked over the rationals
 * with no rounding anywhere.
 */
#pragma once

#include "buchiff/rational.hpp"

namespace buchiff {

// master bound M(n, g) = 2n(n+1) (g + n C(3n-1, n)); requires n >= 2, g >= 0
Int bound_M(long n, long g);

// bound on linear specializations forced by the one-zero lemma: 4 + 4g
Int bound_lemma_linear(long g);

// bound on zeros of the relevant discriminant-type divisor:
// C(3v-1, v) (2v - 2) d, for forms of degree v with coefficient height d
Int bound_disc_zeros(long v, long d);

// bound on the exceptional set: disc zeros plus 2d
Int bound_E(long v, long d);

// the contradiction step: with |B| = card, multiplicities m < mu on a
// genus-g curve, does |B| < |B| m / mu + 2 n g + 2 n^2 C(3n-1, n) FAIL?
// Returns true when the inequality HOLDS (no contradiction), false when it
// fails. Exact rational comparison.
bool check_final_inequality(long m, long mu, long n, long g, const Int& card);

} // namespace buchiff
