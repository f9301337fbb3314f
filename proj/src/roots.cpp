#include "buchiff/roots.hpp"

#include <algorithm>

namespace buchiff {
namespace {

// Sturm chain of the squarefree part of f
std::vector<QPoly> sturm_chain(const QPoly& f) {
    QPoly g = gcd_monic(f, f.derivative());
    QPoly f0 = g.deg_i() > 0 ? exact_div(f, g) : f;
    std::vector<QPoly> chain{f0.monic()};
    QPoly d = f0.derivative();
    if (!d.is_zero()) {
        chain.push_back(d.monic());
        while (true) {
            const QPoly& a = chain[chain.size() - 2];
            const QPoly& b = chain.back();
            QPoly r = a.divrem(b).second;
            if (r.is_zero()) break;
            // normalize by a positive scalar only: the sign pattern is the
            // whole point of the chain
            QPoly m = -r;
            chain.push_back(m.scaled(m.leading_coeff().abs().inverse()));
        }
    }
    return chain;
}

long sign_variations_at(const std::vector<QPoly>& chain, const Rational& x) {
    long v = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = p.eval(x).sign();
        if (s != 0) {
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
    }
    return v;
}

// B with all real roots of f in (-B, B)
Rational cauchy_bound(const QPoly& f) {
    Rational m(0);
    Rational lc = f.leading_coeff().abs();
    for (long i = 0; i < f.deg_i(); ++i) {
        Rational a = f.coeff(i).abs() / lc;
        if (m < a) m = a;
    }
    return m + Rational(2);
}

// integer roots of a monic integer-coefficient polynomial, via Sturm bisection
std::vector<Int> integer_roots_monic(const QPoly& g) {
    std::vector<Int> found;
    if (g.deg_i() < 1) return found;
    Rational bound = cauchy_bound(g);
    auto chain = sturm_chain(g);
    auto count = [&](const Rational& a, const Rational& b) {
        return sign_variations_at(chain, a) - sign_variations_at(chain, b);
    };
    std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        long n = count(a, b);
        if (n == 0) continue;
        if (n == 1 && b - a < Rational(1)) {
            // at most one integer c with a < c <= b
            Int c = b.floor();
            if (Rational(c) > a && g.eval(Rational(c)).is_zero()) found.push_back(c);
            continue;
        }
        Rational m = (a + b) / Rational(2);
        stack.push_back({a, m});
        stack.push_back({m, b});
    }
    std::sort(found.begin(), found.end());
    return found;
}

// scale f to integer coefficients (roots unchanged)
QPoly clear_denominators(const QPoly& f) {
    Int l(1);
    for (const auto& c : f.coeffs()) l = lcm_int(l, c.den());
    return f.scaled(Rational(l));
}

} // namespace

long sturm_real_root_count(const QPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("root count of zero polynomial");
    if (f.deg_i() == 0) return 0;
    auto chain = sturm_chain(f);
    Rational b = cauchy_bound(f);
    return sign_variations_at(chain, -b) - sign_variations_at(chain, b);
}

long sturm_count_interval(const QPoly& f, const Rational& a, const Rational& b) {
    if (f.is_zero()) throw ZeroPolynomial("root count of zero polynomial");
    if (f.deg_i() == 0) return 0;
    if (!(a < b)) return 0;
    auto chain = sturm_chain(f);
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

std::vector<RationalRoot> rational_roots(const QPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("rational roots of zero polynomial");
    std::vector<RationalRoot> out;
    if (f.deg_i() < 1) return out;

    QPoly fi = clear_denominators(f);
    Rational lc = fi.leading_coeff();
    // monic transform g(u) = lc^(d-1) fi(u/lc); rational roots of fi are
    // integer roots of g divided by lc
    long d = fi.deg_i();
    std::vector<Rational> gc(static_cast<size_t>(d) + 1);
    gc[static_cast<size_t>(d)] = Rational(1);
    Rational pw(1); // lc^(d-1-i), starting at i = d-1
    for (long i = d - 1; i >= 0; --i) {
        gc[static_cast<size_t>(i)] = fi.coeff(i) * pw;
        pw = pw * lc;
    }
    QPoly g = QPoly::from_coeffs(std::move(gc));

    for (const Int& c : integer_roots_monic(g)) {
        Rational r = Rational(c) / lc;
        // multiplicity by repeated exact division
        QPoly lin = QPoly::from_coeffs({-r, Rational(1)});
        QPoly rest = f;
        long m = 0;
        while (true) {
            auto [q, rem] = rest.divrem(lin);
            if (!rem.is_zero()) break;
            ++m;
            rest = q;
        }
        if (m == 0) throw Error("internal: candidate root failed verification");
        out.push_back({r, m});
    }
    std::sort(out.begin(), out.end(),
              [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
    return out;
}

QPoly rational_root_free_part(const QPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("squarefree part of zero polynomial");
    QPoly g = gcd_monic(f, f.derivative());
    QPoly sf = g.deg_i() > 0 ? exact_div(f, g).monic() : f.monic();
    for (const auto& r : rational_roots(sf)) {
        QPoly lin = QPoly::from_coeffs({-r.value, Rational(1)});
        sf = exact_div(sf, lin);
    }
    return sf;
}

} // namespace buchiff
