/*
 * buchi.hpp
 * ---------
 * Everything built on top of forms: finite differences and the
 * sequence-to-form bridge, the powerful-specialization census over a point
 * list, the exact powerful locus of a form, brute-force integer sequence
 * search, and the randomized theorem harness.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "buchiff/bounds.hpp"
#include "buchiff/funcfield.hpp"

namespace buchiff {

/* ---- finite differences and sequences ---- */

// order-fold forward differences; throws TooShort on length <= order
template <class T>
std::vector<T> nth_differences(const std::vector<T>& u, long order) {
    if (order < 0) throw DomainError("difference order must be >= 0");
    if (u.empty()) throw TooShort("empty sequence");
    std::vector<T> v = u;
    for (long r = 0; r < order; ++r) {
        if (v.size() < 2) throw TooShort("not enough terms to difference");
        std::vector<T> w;
        w.reserve(v.size() - 1);
        for (size_t i = 0; i + 1 < v.size(); ++i) w.push_back(v[i + 1] - v[i]);
        v = std::move(w);
    }
    return v;
}

// P(k) interpolating u_k at k = 1..len, returned iff the sequence is a
// genuine degree-n Buchi sequence (n-th differences constantly n!).
// buchi = false means "not one"; coeffs then empty.
template <class T>
struct SequenceForm {
    bool buchi = false;
    std::vector<T> coeffs; // lowest-first, the monic part implied by caller
};

// interpolate u_1..u_m, m >= n + 1, by the monic degree-n Newton forward
// difference polynomial and verify it reproduces every term; buchi is
// false unless the n-th differences are constantly n!
SequenceForm<Rational> sequence_to_form(const std::vector<Rational>& u, long n);

/* ---- census over explicit points ---- */

struct CensusEntry {
    QPoint point;
    std::optional<long> max_k; // nullopt = no zeros, powerful for every k
    bool degenerate = false;   // F(point) = 0
};

struct CensusReport {
    std::vector<CensusEntry> tested;
    std::vector<CensusEntry> powerful;   // max_k >= mu (or unbounded)
    std::vector<QPoint> degenerate;
    long mu = 0;
    FormClass kind = FormClass::Other;
    Int bound_m;
    bool consistent = false;
};

CensusReport census(const QForm& F, const std::vector<QPoint>& points, long mu);

/* ---- exact powerful locus ---- */

struct LocusResult {
    FormClass kind = FormClass::Other;
    std::vector<Rational> rational_points;   // lambda with F(lambda) n-powerful
    std::vector<Rational> degenerate_points; // lambda with F(lambda) = 0
    std::vector<long> residual_degrees;      // irrational candidate blocks
    Int residual_bound() const {
        Int b(0);
        for (long d : residual_degrees) b += Int(d);
        return b;
    }
    Int total_bound() const { return Int(static_cast<long>(rational_points.size())) + residual_bound(); }
};

// all lambda in Q where F(lambda) is n-powerful, plus a bound on how many
// further algebraic lambda could qualify; requires classify(F) = Other
LocusResult exact_powerful_locus(const QForm& F, long n);

/* ---- integer sequence search ---- */

struct IntegerSequenceHit {
    long long x1 = 0;                 // first square root
    long long x2 = 0;                 // second square root
    std::vector<long long> squares;   // the run u_1.. with 2nd differences 2
    bool trivial = false;             // u_i = (i + nu)^2 for some integer nu
};

// maximal runs of squares with constant second difference 2 seeded by
// u_1 = x1^2, u_2 = x2^2 over the given seed ranges, extended while values
// stay square; runs shorter than min_length are dropped; max_length caps
// the everywhere-square trivial runs
std::vector<IntegerSequenceHit> search_integer_buchi(long long x1_lo, long long x1_hi,
                                                     long long x2_lo, long long x2_hi,
                                                     long min_length,
                                                     long max_length = 100);

/* ---- randomized harness ---- */

struct HarnessConfig {
    long coeff_height = 6;   // coefficient numerators/denominators in [-h, h]
    long coeff_max_deg = 3;  // max x-degree of random coefficients
    long lambda_lo = -50;    // sample evaluation points for the power and
    long lambda_hi = 50;     // constant families
};

struct HarnessCase {
    std::string form;
    FormClass kind = FormClass::Other;
    Int locus_bound;
    bool ok = false;
};

struct HarnessReport {
    long n = 0;
    std::uint64_t seed = 0;
    long trials_other = 0;
    long trials_power = 0;
    long trials_constant = 0;
    long failures = 0;
    Int bound_m;
    Int max_locus_bound;            // largest exact-locus size seen
    std::vector<HarnessCase> worst; // cases attaining max_locus_bound
};

// random Other forms: exact locus size (rational points + residual bound)
// must stay under M(n, 0); random n-th powers of linear forms and random
// powerful constant-coefficient forms: every sampled specialization must be
// n-powerful. Deterministic in seed. Throws TheoremViolation on any breach.
HarnessReport theorem_harness(long n, long trials, std::uint64_t seed,
                              const HarnessConfig& cfg = {});

} // namespace buchiff
