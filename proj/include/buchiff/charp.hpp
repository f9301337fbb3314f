/*
 * charp.hpp
 * ---------
 * The odd-characteristic counterexample family: the quadratic form over
 * F_p(x) that is 2-powerful at every lambda in F_q yet is neither
 * constant-coefficient nor a square of a linear form. All verification is
 * exhaustive over F_q, with probes outside F_q taken in F_{p^{2e}}.
 *
 * Everything lives in the single field L = F_{p^{2e}}; F_q sits inside it
 * as the fixed points of lambda -> lambda^q. No subfield embedding
 * machinery is needed because every checked identity is stable under
 * extension.
 */
#pragma once

#include <vector>

#include "buchiff/finite_field.hpp"
#include "buchiff/poly.hpp"

namespace buchiff {

using FqPoly = Poly<FqElement>;        // polynomials in x over L
using FqForm = Poly<FqPoly>;           // forms in t with FqPoly coefficients

struct CharPWitness {
    long p = 0;
    long e = 0;
    long long q = 0;       // p^e
    FqCtx field;           // L = F_{p^{2e}}
    FqForm form;           // t^2 + (x^q + x) t + x^{q+1}
    FqForm factor_left;    // t + x^q
    FqForm factor_right;   // t + x
};

// constructs the witness and checks the factorization identity
// (t + (x^q+x)/2)^2 - ((x^q-x)/2)^2 = (t + x^q)(t + x) coefficientwise
CharPWitness build_witness(long p, long e);

struct SquareWitness {
    FqElement lambda;
    FqPoly value; // F(lambda) in L[x]
    FqPoly root;  // (lambda + x)^{(q+1)/2}; value == root^2
};

struct CharPReport {
    bool all_squares = false;
    std::vector<SquareWitness> witnesses; // one per lambda in F_q
};

// enumerates all lambda in F_q and checks F(lambda) = (lambda + x)^{q+1}
// exactly; throws VerificationFailed on any mismatch (the identity is a
// theorem, failure means a bug)
CharPReport verify_all_squares(const CharPWitness& w);

// disc_t(F) = (x^q - x)^2 as a polynomial identity, and some coefficient
// non-constant; both exact
bool verify_nondegenerate(const CharPWitness& w);

struct OutsideProbe {
    FqElement lambda;         // in L \ F_q
    bool two_powerful = true; // must come back false
    long min_multiplicity = 0;
};

// samples lambda in L \ F_q and checks F(lambda) has a simple zero, so the
// squares statement is tight to F_q; count caps the number of probes
std::vector<OutsideProbe> probe_outside(const CharPWitness& w, long count = 5);

} // namespace buchiff
