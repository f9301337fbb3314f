#include "buchiff/charp.hpp"

#include "buchiff/errors.hpp"

namespace buchiff {

namespace {

FqPoly eval_form(const FqForm& F, const FqPoly& t) {
    FqPoly out;
    for (long i = F.deg_i(); i >= 0; --i) out = out * t + F.coeff(i);
    return out;
}

FqPoly x_poly(const FqCtx& L) {
    return FqPoly::monomial(FqElement(L, 1), 1);
}

} // namespace

CharPWitness build_witness(long p, long e) {
    if (p == 2) throw EvenCharacteristic("the squares family needs odd characteristic");
    if (e < 1) throw DomainError("extension degree must be >= 1");
    CharPWitness w;
    w.field = FqContext::create(p, 2 * e); // validates primality and size
    w.p = p;
    w.e = e;
    w.q = 1;
    for (long i = 0; i < e; ++i) w.q *= p;

    const FqCtx& L = w.field;
    FqPoly x = x_poly(L);
    FqPoly xq = FqPoly::monomial(FqElement(L, 1), static_cast<long>(w.q));
    FqPoly one = FqPoly::constant(FqElement(L, 1));

    w.form = FqForm::from_coeffs({xq * x, xq + x, one});
    w.factor_left = FqForm::from_coeffs({xq, one});
    w.factor_right = FqForm::from_coeffs({x, one});

    // completing the square: (t + (x^q+x)/2)^2 - ((x^q-x)/2)^2
    FqElement half = FqElement(L, 2).inverse();
    FqPoly hs = (xq + x).scaled(half);
    FqPoly hd = (xq - x).scaled(half);
    FqForm shifted = FqForm::from_coeffs({hs, one});
    FqForm completed = shifted * shifted - FqForm::constant(hd * hd);
    if (!(completed == w.form))
        throw VerificationFailed("completing the square does not reproduce the form");
    if (!(w.factor_left * w.factor_right == w.form))
        throw VerificationFailed("factorization identity failed");
    return w;
}

CharPReport verify_all_squares(const CharPWitness& w) {
    CharPReport r;
    FqPoly x = x_poly(w.field);
    for (const FqElement& l : FqElement::enumerate(w.field)) {
        if (!(l.pow(w.q) == l)) continue; // outside F_q
        FqPoly value = eval_form(w.form, FqPoly::constant(l));
        FqPoly lin = x + FqPoly::constant(l);
        if (!(value == lin.pow(static_cast<long>(w.q) + 1)))
            throw VerificationFailed("specialization is not (lambda + x)^(q+1)");
        FqPoly root = lin.pow(static_cast<long>((w.q + 1) / 2));
        if (!(root * root == value))
            throw VerificationFailed("claimed square root fails to square back");
        r.witnesses.push_back({l, value, root});
    }
    if (r.witnesses.size() != static_cast<size_t>(w.q))
        throw VerificationFailed("fixed-point count of frobenius is not q");
    r.all_squares = true;
    return r;
}

bool verify_nondegenerate(const CharPWitness& w) {
    const FqCtx& L = w.field;
    FqPoly a1 = w.form.coeff(1);
    FqPoly a0 = w.form.coeff(0);
    FqPoly disc = a1 * a1 - a0.scaled(FqElement(L, 4));
    FqPoly diff = FqPoly::monomial(FqElement(L, 1), static_cast<long>(w.q)) - x_poly(L);
    if (!(disc == diff * diff))
        throw VerificationFailed("t-discriminant is not (x^q - x)^2");
    bool nonconstant = a1.deg_i() > 0 || a0.deg_i() > 0;
    return nonconstant && !disc.is_zero();
}

std::vector<OutsideProbe> probe_outside(const CharPWitness& w, long count) {
    if (count < 0) throw DomainError("probe count must be nonnegative");
    std::vector<OutsideProbe> out;
    for (const FqElement& l : FqElement::enumerate(w.field)) {
        if (out.size() == static_cast<size_t>(count)) break;
        if (l.pow(w.q) == l) continue; // inside F_q
        FqPoly value = eval_form(w.form, FqPoly::constant(l));
        OutsideProbe pr;
        pr.lambda = l;
        pr.min_multiplicity = squarefree_decompose(value).min_multiplicity();
        pr.two_powerful = pr.min_multiplicity >= 2;
        if (pr.two_powerful)
            throw VerificationFailed("specialization outside F_q must have a simple zero");
        out.push_back(pr);
    }
    return out;
}

} // namespace buchiff
