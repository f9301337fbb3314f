#include <algorithm>

#include "buchiff/buchi.hpp"
#include "buchiff/roots.hpp"
#include "bivar.hpp"

namespace buchiff {

namespace {

void add_rational_roots(const QPoly& f, std::vector<Rational>& cands) {
    if (f.deg_i() < 1) return;
    for (const auto& r : rational_roots(f)) cands.push_back(r.value);
}

// collect candidate lambdas from the squarefree decomposition of G over the
// field Q(lambda): collisions within a part, collisions across parts, and
// per-part leading/content degeneracies. Used only when G has a repeated
// bivariate factor, where the plain subresultant chain vanishes.
void fallback_candidates(const detail::BiPoly& G, const QPoly& den, long n,
                         const QForm& F, std::vector<Rational>& cands,
                         std::vector<QPoly>& residual_srcs) {
    using LF = RationalFunction<Rational>;
    std::vector<LF> xc(static_cast<size_t>(G.deg_i()) + 1);
    for (long i = 0; i <= G.deg_i(); ++i) xc[static_cast<size_t>(i)] = LF(G.coeff(i));
    auto parts = squarefree_decompose(Poly<LF>::from_coeffs(std::move(xc))).parts;

    // clear lambda-denominators part by part
    std::vector<detail::BiPoly> cleared;
    long min_mult = 0;
    for (const auto& part : parts) {
        if (min_mult == 0 || part.multiplicity < min_mult) min_mult = part.multiplicity;
        QPoly l = QPoly::one();
        for (long i = 0; i <= part.factor.deg_i(); ++i) {
            QPoly d = part.factor.coeff(i).den();
            l = exact_div(l * d, gcd_monic(l, d));
        }
        std::vector<QPoly> pc(static_cast<size_t>(part.factor.deg_i()) + 1);
        for (long i = 0; i <= part.factor.deg_i(); ++i) {
            LF scaled = part.factor.coeff(i) * LF(l);
            pc[static_cast<size_t>(i)] = scaled.num(); // denominator cancelled
        }
        cleared.push_back(detail::BiPoly::from_coeffs(std::move(pc)));
    }

    if (min_mult >= n) {
        // the generic multiplicity profile is already n-powerful: the locus
        // is cofinite unless the fixed order at infinity blocks it
        long o_inf = den.deg_i() - G.deg_i();
        if (o_inf <= 0 || o_inf >= n)
            throw TheoremViolation("powerful locus of a non-exceptional form is cofinite",
                                   F.str());
        return; // no non-degenerate specialization can be n-powerful
    }

    auto note = [&](const QPoly& f) {
        if (f.is_zero())
            throw VerificationFailed("vanishing resultant between coprime parts");
        add_rational_roots(f, cands);
        if (f.deg_i() >= 1) residual_srcs.push_back(f);
    };
    for (const auto& W : cleared) {
        add_rational_roots(W.leading_coeff(), cands);
        residual_srcs.push_back(W.leading_coeff());
        note(detail::content_lambda(W));
        if (W.deg_i() >= 2) note(resultant(W, W.derivative()));
    }
    for (size_t i = 0; i < cleared.size(); ++i)
        for (size_t j = i + 1; j < cleared.size(); ++j)
            note(resultant(cleared[i], cleared[j]));
}

} // namespace

LocusResult exact_powerful_locus(const QForm& F, long n) {
    if (n < 2) throw DomainError("powerfulness threshold must be >= 2");
    Classification<Rational> cls = classify(F);
    if (cls.kind != FormClass::Other)
        throw PreconditionViolated("locus of a conclusion-branch form is not finite");

    // common denominator and cleared numerator pencil G(lambda, x)
    QPoly den = QPoly::one();
    for (long i = 0; i < F.n(); ++i) {
        QPoly d = F.coeff(i).den();
        den = exact_div(den * d, gcd_monic(den, d));
    }
    std::vector<QPoly> lam_coeffs(static_cast<size_t>(F.n()) + 1);
    for (long i = 0; i <= F.n(); ++i) {
        QX cleared = F.coeff(i) * QX(den);
        lam_coeffs[static_cast<size_t>(i)] = cleared.num(); // exact by construction
    }
    detail::BiPoly G = detail::from_lambda_major(lam_coeffs);
    long d = G.deg_i();

    LocusResult out;
    out.kind = cls.kind;
    std::vector<Rational> cands;
    std::vector<QPoly> residual_srcs;

    // degree drops and specializations vanishing identically
    add_rational_roots(G.leading_coeff(), cands);
    residual_srcs.push_back(G.leading_coeff());
    QPoly cont = detail::content_lambda(G);
    add_rational_roots(cont, cands);
    residual_srcs.push_back(cont);

    // denominator cancellation
    if (den.deg_i() >= 1) {
        QPoly cancel = resultant(G, detail::lift_x(den));
        if (cancel.is_zero())
            throw VerificationFailed("cleared numerator shares a factor with the denominator");
        add_rational_roots(cancel, cands);
        residual_srcs.push_back(cancel);
    }

    // main chain: every finite zero multiplicity >= n forces the gcd degree
    // up to at least k
    QPoly C = detail::sres_gcd_below(G, d - d / n);
    if (!C.is_zero()) {
        add_rational_roots(C, cands);
        residual_srcs.push_back(C);
    } else {
        fallback_candidates(G, den, n, F, cands, residual_srcs);
    }

    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const Rational& l : cands) {
        QX value(detail::eval_lambda(G, l), den);
        if (value.is_zero())
            out.degenerate_points.push_back(l);
        else if (is_k_powerful(value, n) == Powerful::Yes)
            out.rational_points.push_back(l);
    }

    // one combined certificate block: squarefree, rational-root-free part of
    // the product of every candidate polynomial
    QPoly prod = QPoly::one();
    for (const auto& f : residual_srcs)
        if (f.deg_i() >= 1) prod = prod * f;
    if (prod.deg_i() >= 1) {
        QPoly res = rational_root_free_part(prod);
        if (res.deg_i() >= 1) out.residual_degrees.push_back(res.deg_i());
    }
    return out;
}

} // namespace buchiff
