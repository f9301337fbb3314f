#include "buchiff/geometry.hpp"

#include <algorithm>

#include "buchiff/roots.hpp"
#include "bivar.hpp"

namespace buchiff {

long map_degree(const QX& u) {
    if (u.is_zero()) return 0;
    return std::max(u.num().deg_i(), u.den().deg_i());
}

namespace {

// distinct points of the zero set over the algebraic closure
long fiber_distinct_points(const QPoly& f) {
    if (f.deg_i() < 1) return 0;
    return distinct_root_count(f);
}

} // namespace

long ramification_total(const QX& u) {
    long D = map_degree(u);
    if (D < 1) throw ConstantMap();
    const QPoly& p = u.num();
    const QPoly& q = u.den();
    detail::BiPoly N = detail::pencil(p, q);
    QPoly R = resultant(N, N.derivative());
    if (R.is_zero())
        throw VerificationFailed("discriminant resultant of a reduced map vanished");

    long total = 0;
    // the degree of the fiber polynomial drops at exactly one finite lambda
    // (the value of u at infinity), where the resultant's vanishing order
    // overshoots the fiber defect; count that fiber directly instead
    long v = 0;
    if (p.deg_i() <= q.deg_i()) {
        Rational drop = p.deg_i() == q.deg_i() ? p.leading_coeff() : Rational(0);
        QPoly lin = QPoly::from_coeffs({-drop, Rational(1)});
        QPoly w = R;
        for (;;) {
            auto [quot, rem] = w.divrem(lin);
            if (!rem.is_zero()) break;
            w = quot;
            ++v;
        }
        QPoly f0 = detail::eval_lambda(N, drop);
        total += D - (fiber_distinct_points(f0) + 1); // infinity joins the fiber
    }
    // every other finite branch value contributes its defect as its exact
    // order in R
    total += R.deg_i() - v;
    // fiber over lambda = infinity: the poles, plus infinity itself when
    // deg p > deg q
    total += D - (fiber_distinct_points(q) + (p.deg_i() > q.deg_i() ? 1 : 0));

    if (total != 2 * D - 2)
        throw VerificationFailed("ramification total disagrees with 2 deg - 2");
    return total;
}

ZeuthenResult zeuthen_check(const QX& u, const QX& v) {
    ZeuthenResult z;
    z.lhs = 2 * map_degree(u) - ramification_total(u);
    z.rhs = 2 * map_degree(v) - ramification_total(v);
    z.equal = z.lhs == z.rhs;
    return z;
}

LemmaCensusResult lemma_linear_census(const QX& c) {
    long D = map_degree(c);
    if (c.is_zero() || D < 1) throw ConstantInput();
    const QPoly& p = c.num();
    const QPoly& q = c.den();
    detail::BiPoly N = detail::pencil(p, q);

    // a totally multiple fiber over lambda0 with no degree drop forces
    // deg gcd(N(lambda0), N_x(lambda0)) >= ceil(D / 2)
    QPoly C = detail::sres_gcd_below(N, D - D / 2);
    if (C.is_zero())
        throw VerificationFailed("subresultant chain of a reduced map vanished");

    std::vector<Rational> cands;
    auto add_roots = [&cands](const QPoly& f) {
        if (f.deg_i() < 1) return;
        for (const auto& r : rational_roots(f)) cands.push_back(r.value);
    };
    add_roots(N.leading_coeff());
    add_roots(C);

    LemmaCensusResult out;
    if (C.deg_i() >= 1) {
        QPoly res = rational_root_free_part(C);
        if (res.deg_i() >= 1) out.residual_degrees.push_back(res.deg_i());
    }

    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const Rational& l : cands) {
        QPoly f0 = detail::eval_lambda(N, l);
        long inf_mult = q.deg_i() - f0.deg_i(); // fiber multiplicity at infinity
        if (inf_mult < 0) inf_mult = 0;
        if (f0.deg_i() < 1 && inf_mult < 1) continue; // no zeros
        bool multiple = inf_mult != 1;
        if (multiple && f0.deg_i() >= 1)
            multiple = squarefree_decompose(f0).min_multiplicity() >= 2;
        if (multiple) out.points.push_back(QPoint::finite(-l));
    }
    std::sort(out.points.begin(), out.points.end(),
              [](const QPoint& a, const QPoint& b) { return a.a < b.a; });

    if (out.total_bound() > Int(4))
        throw TheoremViolation("totally-multiple fiber census exceeds 4", c.str());
    return out;
}

} // namespace buchiff
