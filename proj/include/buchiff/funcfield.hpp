/*
 * funcfield.hpp
 * -------------
 * Forms F(t) over K(x) and the predicates the whole artifact revolves
 * around: zero multiplicity profiles on the projective line (finite zeros
 * plus the zero at infinity), k-powerfulness, the multiplicity profile of a
 * form, and the classifier separating constant-coefficient forms and n-th
 * powers of linear forms from everything else.
 *
 * Conventions: a zero of f = num/den at infinity exists exactly when
 * deg den > deg num, with that difference as its order; poles are ignored
 * everywhere. The zero function is Degenerate, never powerful or
 * unpowerful.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "buchiff/poly.hpp"
#include "buchiff/ratfunc.hpp"
#include "buchiff/rational.hpp"

namespace buchiff {

/* ---- zero profiles and powerfulness ---- */

template <class K>
struct ZeroProfile {
    SquarefreeDecomposition<K> finite_part; // of the reduced numerator
    long order_at_infinity = 0;             // deg den - deg num when positive

    bool has_zero() const {
        return order_at_infinity > 0 || !finite_part.parts.empty();
    }
    // smallest zero multiplicity; 0 when there are no zeros at all
    long min_multiplicity() const {
        long m = 0;
        for (const auto& p : finite_part.parts)
            if (m == 0 || p.multiplicity < m) m = p.multiplicity;
        if (order_at_infinity > 0 && (m == 0 || order_at_infinity < m))
            m = order_at_infinity;
        return m;
    }
    long total_zero_degree() const {
        long t = order_at_infinity;
        for (const auto& p : finite_part.parts) t += p.multiplicity * p.factor.deg_i();
        return t;
    }
};

template <class K>
ZeroProfile<K> zero_profile(const RationalFunction<K>& f,
                            CharPPolicy policy = CharPPolicy::Allow) {
    if (f.is_zero()) throw ZeroFunction("zero profile of the zero function");
    ZeroProfile<K> pr;
    pr.finite_part = squarefree_decompose(f.num(), policy);
    long d = f.den().deg_i() - f.num().deg_i();
    pr.order_at_infinity = d > 0 ? d : 0;
    return pr;
}

enum class Powerful { Yes, No, Degenerate };

template <class K>
Powerful is_k_powerful(const RationalFunction<K>& f, long k,
                       CharPPolicy policy = CharPPolicy::Allow) {
    if (k < 1) throw DomainError("powerfulness threshold must be >= 1");
    if (f.is_zero()) return Powerful::Degenerate;
    ZeroProfile<K> pr = zero_profile(f, policy);
    if (!pr.has_zero()) return Powerful::Yes; // vacuous
    return pr.min_multiplicity() >= k ? Powerful::Yes : Powerful::No;
}

// largest k for which f is k-powerful; nullopt = unbounded (no zeros);
// requires f nonzero
template <class K>
std::optional<long> max_powerful(const RationalFunction<K>& f,
                                 CharPPolicy policy = CharPPolicy::Allow) {
    ZeroProfile<K> pr = zero_profile(f, policy);
    if (!pr.has_zero()) return std::nullopt;
    return pr.min_multiplicity();
}

/* ---- forms ---- */

// monic form t^n + a_{n-1} t^{n-1} + ... + a_0 over K(x), n >= 2
template <class K>
class BuchiForm {
public:
    explicit BuchiForm(Poly<RationalFunction<K>> f) : f_(std::move(f)) {
        if (f_.deg_i() < 2) throw PreconditionViolated("form degree must be >= 2");
        if (!f_.leading_coeff().is_one()) throw PreconditionViolated("form must be monic");
    }
    static BuchiForm from_coeffs(std::vector<RationalFunction<K>> low_coeffs) {
        // a_0..a_{n-1}, leading 1 appended
        low_coeffs.push_back(RationalFunction<K>(1));
        return BuchiForm(Poly<RationalFunction<K>>::from_coeffs(std::move(low_coeffs)));
    }

    long n() const { return f_.deg_i(); }
    const Poly<RationalFunction<K>>& poly() const { return f_; }
    RationalFunction<K> coeff(long i) const { return f_.coeff(i); }
    std::string str() const { return poly_str(f_, "t"); }

    bool operator==(const BuchiForm& o) const { return f_ == o.f_; }

private:
    Poly<RationalFunction<K>> f_;
};

/* ---- projective points [a : b], normalized to [tau : 1] or [1 : 0] ---- */

template <class K>
struct ProjPoint {
    K a{};
    K b{};

    static ProjPoint finite(K v) { return ProjPoint{std::move(v), K(1)}; }
    static ProjPoint infinity() { return ProjPoint{K(1), K(0)}; }
    static ProjPoint make(const K& s, const K& t) {
        if (t.is_zero()) {
            if (s.is_zero()) throw DomainError("projective point needs a nonzero coordinate");
            return infinity();
        }
        return finite(s / t);
    }

    bool is_infinity() const { return b.is_zero(); }
    bool operator==(const ProjPoint& o) const { return a == o.a && b == o.b; }

    std::string str() const {
        return is_infinity() ? std::string("[1:0]") : "[" + a.str() + ":1]";
    }
};

/* ---- evaluation ---- */

// homogeneous value sum a_i s0^i t0^(n-i) (a_n = 1); canonical only up to a
// nonzero scalar, which no powerfulness question can see
template <class K>
RationalFunction<K> evaluate_homogeneous(const BuchiForm<K>& F, const K& s0, const K& t0) {
    using RF = RationalFunction<K>;
    if (s0.is_zero() && t0.is_zero())
        throw DomainError("projective point needs a nonzero coordinate");
    RF s(Poly<K>::constant(s0)), t(Poly<K>::constant(t0));
    RF acc(0), spow(1);
    std::vector<RF> tp(static_cast<size_t>(F.n()) + 1);
    tp[0] = RF(1);
    for (long i = 1; i <= F.n(); ++i) tp[static_cast<size_t>(i)] = tp[static_cast<size_t>(i - 1)] * t;
    for (long i = 0; i <= F.n(); ++i) {
        acc = acc + F.coeff(i) * spow * tp[static_cast<size_t>(F.n() - i)];
        spow = spow * s;
    }
    return acc;
}

template <class K>
RationalFunction<K> evaluate(const BuchiForm<K>& F, const K& lambda) {
    return F.poly().eval(RationalFunction<K>(Poly<K>::constant(lambda)));
}

template <class K>
RationalFunction<K> evaluate(const BuchiForm<K>& F, const ProjPoint<K>& b) {
    if (b.is_infinity()) return RationalFunction<K>(1);
    return evaluate(F, b.a);
}

/* ---- multiplicity profile and classification ---- */

template <class K>
SquarefreeDecomposition<RationalFunction<K>> multiplicity_profile(const BuchiForm<K>& F) {
    return squarefree_decompose(F.poly());
}

enum class FormClass { ConstantCoefficients, PowerOfLinear, Other };

template <class K>
struct Classification {
    FormClass kind;
    std::optional<RationalFunction<K>> nu; // set for PowerOfLinear: F = (t + nu)^n
};

template <class K>
Classification<K> classify(const BuchiForm<K>& F) {
    using RF = RationalFunction<K>;
    bool constant = true;
    for (long i = 0; i < F.n(); ++i) {
        RF c = F.coeff(i);
        if (!(c.is_polynomial() && c.num().deg_i() <= 0)) {
            constant = false;
            break;
        }
    }
    if (constant) return {FormClass::ConstantCoefficients, std::nullopt};

    // closed-form candidate nu = a_{n-1}/n, checked coefficientwise
    bool power = false;
    RF nu;
    RF n_scalar(static_cast<long long>(F.n()));
    if (!n_scalar.is_zero()) { // always true in characteristic 0
        nu = F.coeff(F.n() - 1) / n_scalar;
        Poly<RF> lin = Poly<RF>::from_coeffs({nu, RF(1)});
        power = (lin.pow(F.n()) == F.poly());
    }

    // independent route: max multiplicity = n in the squarefree profile
    auto prof = multiplicity_profile(F);
    bool power_by_profile = (prof.max_multiplicity() == F.n());
    if (!n_scalar.is_zero() && power != power_by_profile)
        throw Error("internal: power-of-linear criteria disagree");

    if (power) return {FormClass::PowerOfLinear, nu};
    return {FormClass::Other, std::nullopt};
}

/* ---- concrete aliases over the rationals ---- */

using QPoly = Poly<Rational>;
using QX = RationalFunction<Rational>;
using QForm = BuchiForm<Rational>;
using QPoint = ProjPoint<Rational>;

} // namespace buchiff
