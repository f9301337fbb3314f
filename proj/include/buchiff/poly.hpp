/*
 * poly.hpp
 * --------
 * Dense univariate polynomials over an exact coefficient type K, plus the
 * kernel algorithms the rest of the library is built on: division, monic
 * gcd, squarefree decomposition (Yun in characteristic 0, the derivative/
 * p-th-root variant in characteristic p), pseudo-division, subresultant
 * remainder sequences, resultants and discriminants.
 *
 * K must provide: default construction = 0, construction from long long,
 * + - * (and / when a field), unary -, ==, is_zero(), str(),
 * characteristic(). Coefficients are stored lowest degree first with no
 * trailing zeros; the zero polynomial is the empty vector and its degree is
 * the -infinity sentinel (see degree.hpp).
 *
 * Ring-coefficient instantiations (K itself a Poly) may only touch the
 * ring-safe subset: + - *, prem, exact_div, subresultant_prs, resultant,
 * discriminant. Field-only members (divrem, gcd_monic, squarefree) are not
 * instantiated for them.
 */
#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "buchiff/degree.hpp"
#include "buchiff/errors.hpp"

namespace buchiff {

template <class K>
class Poly {
public:
    Poly() = default; // zero polynomial

    // constant polynomial through K's literal constructor; lets nested
    // Poly<Poly<...>> towers satisfy the same K(integer) shape as scalars
    explicit Poly(long long v) {
        c_.push_back(K(v));
        trim();
    }

    static Poly from_coeffs(std::vector<K> c) {
        Poly p;
        p.c_ = std::move(c);
        p.trim();
        return p;
    }
    static Poly constant(K c) { return from_coeffs({std::move(c)}); }
    static Poly one() { return constant(K(1)); }
    static Poly monomial(K c, long e) {
        if (e < 0) throw DomainError("monomial exponent must be non-negative");
        std::vector<K> v(static_cast<size_t>(e) + 1, K());
        v.back() = std::move(c);
        return from_coeffs(std::move(v));
    }
    static Poly variable() { return monomial(K(1), 1); }

    bool is_zero() const { return c_.empty(); }
    Degree degree() const {
        return c_.empty() ? Degree::neg_inf() : Degree(static_cast<long>(c_.size()) - 1);
    }
    // degree as a plain long, -1 for the zero polynomial; internal convenience
    long deg_i() const { return static_cast<long>(c_.size()) - 1; }

    const std::vector<K>& coeffs() const { return c_; }
    K coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c_.size())) return K();
        return c_[static_cast<size_t>(i)];
    }
    const K& leading_coeff() const {
        if (c_.empty()) throw ZeroPolynomial("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool operator==(const Poly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    Poly operator+(const Poly& o) const {
        const Poly& a = c_.size() >= o.c_.size() ? *this : o;
        const Poly& b = c_.size() >= o.c_.size() ? o : *this;
        Poly r = a;
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
        r.trim();
        return r;
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<K> out(c_.size() + o.c_.size() - 1, K());
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                out[i + j] = out[i + j] + c_[i] * o.c_[j];
        }
        return from_coeffs(std::move(out));
    }

    Poly scaled(const K& s) const {
        Poly r = *this;
        for (auto& c : r.c_) c = c * s;
        r.trim();
        return r;
    }

    // derivative; the integer multiplier goes through K's literal constructor
    // so it reduces correctly in positive characteristic
    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> out;
        out.reserve(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i)
            out.push_back(c_[i] * K(static_cast<long long>(i)));
        return from_coeffs(std::move(out));
    }

    K eval(const K& x) const {
        if (is_zero()) return K();
        K acc = c_.back();
        for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly pow(long e) const {
        if (e < 0) throw DomainError("negative polynomial power");
        Poly r = one();
        Poly b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    /* ---- field-coefficient operations ---- */

    // quotient and remainder; requires K division
    std::pair<Poly, Poly> divrem(const Poly& b) const {
        if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
        Poly q, r = *this;
        long db = b.deg_i();
        if (r.deg_i() >= db) {
            std::vector<K> qc(static_cast<size_t>(r.deg_i() - db) + 1, K());
            while (!r.is_zero() && r.deg_i() >= db) {
                K t = r.leading_coeff() / b.leading_coeff();
                long k = r.deg_i() - db;
                qc[static_cast<size_t>(k)] = t;
                r = r - b.scaled(t).shifted(k);
            }
            q = from_coeffs(std::move(qc));
        }
        return {q, r};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        K inv = K(1) / leading_coeff();
        return scaled(inv);
    }

    Poly shifted(long k) const { // multiply by x^k
        if (is_zero() || k == 0) return *this;
        Poly r;
        r.c_.assign(static_cast<size_t>(k), K());
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

/* monic gcd via the Euclidean algorithm with per-step normalization;
   gcd(f, 0) = monic(f), gcd(0, 0) = 0 */
template <class K>
Poly<K> gcd_monic(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        a = a.divrem(b).second;
        std::swap(a, b);
        if (!b.is_zero()) b = b.monic();
    }
    return a.monic();
}

/* exact division: a = q*b with zero remainder, else DomainError */
template <class K>
Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b) {
    auto [q, r] = a.divrem(b);
    if (!r.is_zero()) throw DomainError("polynomial division was not exact");
    return q;
}

template <class K>
K exact_div(const K& a, const K& b) {
    return a / b;
}

/* multiplicative identity of a coefficient ring */
template <class R>
R ring_one() {
    if constexpr (requires { R::one(); }) return R::one();
    else return R(1);
}

template <class R>
R ring_pow(R b, long e) {
    if (e < 0) throw DomainError("negative ring power");
    R r = ring_one<R>();
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

/* pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + prem(a,b).
   Ring-safe: no coefficient division. */
template <class R>
Poly<R> prem(const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) throw DivisionByZero("pseudo-division by zero");
    long db = b.deg_i();
    Poly<R> r = a;
    long e = a.deg_i() - db + 1;
    while (!r.is_zero() && r.deg_i() >= db) {
        Poly<R> t = Poly<R>::monomial(r.leading_coeff(), r.deg_i() - db);
        r = r.scaled(b.leading_coeff()) - t * b;
        --e;
    }
    if (e > 0) r = r.scaled(ring_pow(b.leading_coeff(), e));
    return r;
}

/* coefficient-wise exact division by a ring scalar */
template <class R>
Poly<R> exact_div_coeffs(const Poly<R>& a, const R& d) {
    std::vector<R> out;
    out.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) out.push_back(exact_div(c, d));
    return Poly<R>::from_coeffs(std::move(out));
}

/*
 * Subresultant pseudo-remainder sequence (Brown's divisor bookkeeping) plus
 * the exact resultant with its sign. members holds the full sequence
 * starting with the two inputs; each later member is similar to a
 * subresultant of the pair, so a member of degree j has leading coefficient
 * proportional to the j-th principal subresultant coefficient. That is all
 * the callers here rely on; the internal scalings are not normalized.
 *
 * The resultant is tracked separately through the exact relations
 *   Res(A,B) = (-1)^(deg A * deg B) Res(B,A)
 *   Res(A,B) = lc(B)^(deg A - deg R) (-1)^(deg A * deg B) Res(B,R)
 *     for the true remainder R of A by B, together with
 *   Res(B, cR) = c^(deg B) Res(B,R)
 * so it is correct including sign for any integral coefficient domain.
 */
template <class R>
struct SubresultantSeq {
    std::vector<Poly<R>> members;
    R resultant{};
};

template <class R>
SubresultantSeq<R> subresultant_prs(const Poly<R>& A, const Poly<R>& B) {
    if (A.is_zero() || B.is_zero()) throw ZeroPolynomial("resultant of zero polynomial");
    SubresultantSeq<R> out;

    long da = A.deg_i(), db = B.deg_i();
    if (da == 0 && db == 0) {
        out.members = {A, B};
        out.resultant = ring_one<R>();
        return out;
    }
    if (da == 0) {
        out.members = {A, B};
        out.resultant = ring_pow(A.leading_coeff(), db);
        return out;
    }
    if (db == 0) {
        out.members = {A, B};
        out.resultant = ring_pow(B.leading_coeff(), da);
        return out;
    }

    bool neg = false;
    Poly<R> F = A, G = B;
    if (da < db) {
        std::swap(F, G);
        neg = (da & 1) && (db & 1);
    }
    out.members = {F, G};

    R num = ring_one<R>(), den = ring_one<R>();
    R g = ring_one<R>(), h = ring_one<R>();
    R base{};
    bool vanished = false;

    for (;;) {
        long a = F.deg_i(), b = G.deg_i();
        if (b == 0) {
            base = ring_pow(G.leading_coeff(), a);
            break;
        }
        long delta = a - b;
        Poly<R> rt = prem(F, G);
        if (rt.is_zero()) {
            vanished = true; // common factor of positive degree
            break;
        }
        R d = g * ring_pow(h, delta);
        Poly<R> next = exact_div_coeffs(rt, d);
        out.members.push_back(next);

        long r = rt.deg_i();
        if ((a & 1) && (b & 1)) neg = !neg;
        num = num * ring_pow(G.leading_coeff(), a - r) * ring_pow(d, b);
        den = den * ring_pow(G.leading_coeff(), (delta + 1) * b);

        g = G.leading_coeff();
        if (delta == 1) h = g;
        else if (delta > 1) h = exact_div(ring_pow(g, delta), ring_pow(h, delta - 1));
        F = G;
        G = next;
    }

    if (vanished) {
        out.resultant = R{};
    } else {
        R res = exact_div(num * base, den);
        out.resultant = neg ? -res : res;
    }
    return out;
}

template <class R>
R resultant(const Poly<R>& a, const Poly<R>& b) {
    return subresultant_prs(a, b).resultant;
}

/* disc(f) = (-1)^(v(v-1)/2) Res(f, f') / lc(f), v = deg f >= 1 */
template <class R>
R discriminant(const Poly<R>& f) {
    long v = f.deg_i();
    if (v < 1) throw DegreeTooSmall("discriminant needs degree >= 1");
    Poly<R> fp = f.derivative();
    if (fp.is_zero()) return R{}; // inseparable (positive characteristic)
    R r = resultant(f, fp);
    R d = exact_div(r, f.leading_coeff());
    return ((v * (v - 1) / 2) & 1) ? -d : d;
}

/* ---- characteristic plumbing ---- */

template <class K>
long poly_characteristic(const Poly<K>& f) {
    for (const auto& c : f.coeffs()) {
        long p = c.characteristic();
        if (p != 0) return p;
    }
    return 0;
}

/* ---- squarefree decomposition ---- */

enum class CharPPolicy { Allow, Strict };

template <class K>
struct SquarefreeDecomposition {
    struct Part {
        Poly<K> factor;      // monic, squarefree, pairwise coprime
        long multiplicity{}; // strictly increasing across parts
    };
    K unit{};
    std::vector<Part> parts;

    Poly<K> reconstruct() const {
        Poly<K> r = Poly<K>::constant(unit);
        for (const auto& p : parts) r = r * p.factor.pow(p.multiplicity);
        return r;
    }

    long max_multiplicity() const {
        long m = 0;
        for (const auto& p : parts)
            if (p.multiplicity > m) m = p.multiplicity;
        return m;
    }
    long min_multiplicity() const {
        long m = 0;
        for (const auto& p : parts)
            if (m == 0 || p.multiplicity < m) m = p.multiplicity;
        return m;
    }
};

namespace detail {

// polynomial p-th root of w, valid when w' = 0 in characteristic p:
// w = H^p with H_j the coefficient p-th root of w_{pj}
template <class K>
Poly<K> poly_pth_root(const Poly<K>& w, long p) {
    std::vector<K> h;
    h.reserve(static_cast<size_t>(w.deg_i() / p) + 1);
    for (long j = 0; j * p <= w.deg_i(); ++j) {
        for (long r = 1; r < p; ++r)
            if (!w.coeff(j * p + r).is_zero())
                throw CharPUnsupportedShape("polynomial is not a p-th power");
        if constexpr (requires(const K& k) { k.pth_root(); }) {
            h.push_back(w.coeff(j * p).pth_root());
        } else {
            throw CharPUnsupportedShape("coefficient field lacks p-th roots");
        }
    }
    return Poly<K>::from_coeffs(std::move(h));
}

template <class K>
void squarefree_char_p(const Poly<K>& w, long p, long scale, CharPPolicy policy,
                       std::vector<typename SquarefreeDecomposition<K>::Part>& parts) {
    if (w.deg_i() <= 0) return;
    Poly<K> d = w.derivative();
    if (d.is_zero()) {
        if (policy == CharPPolicy::Strict)
            throw CharPUnsupportedShape("input has a p-th-power factor");
        squarefree_char_p(poly_pth_root(w, p), p, scale * p, policy, parts);
        return;
    }
    Poly<K> c = gcd_monic(w, d);
    Poly<K> wp = exact_div(w, c);
    long i = 1;
    while (wp.deg_i() > 0) {
        Poly<K> y = gcd_monic(wp, c);
        Poly<K> z = exact_div(wp, y);
        if (z.deg_i() > 0)
            parts.push_back({z, i * scale});
        c = exact_div(c, y);
        wp = y;
        ++i;
    }
    if (c.deg_i() > 0) // leftover p-th-power part, handled by the branch above
        squarefree_char_p(c, p, scale, policy, parts);
}

} // namespace detail

template <class K>
SquarefreeDecomposition<K> squarefree_decompose(const Poly<K>& f,
                                                CharPPolicy policy = CharPPolicy::Allow) {
    if (f.is_zero()) throw ZeroPolynomial("squarefree decomposition of zero");
    SquarefreeDecomposition<K> out;
    out.unit = f.leading_coeff();
    Poly<K> w = f.monic();
    if (w.deg_i() == 0) return out;

    long p = poly_characteristic(f);
    if (p == 0) {
        // Yun's algorithm
        Poly<K> d = w.derivative();
        Poly<K> g = gcd_monic(w, d);
        if (g.deg_i() == 0) {
            out.parts.push_back({w, 1});
            return out;
        }
        Poly<K> v = exact_div(w, g);
        Poly<K> s = exact_div(d, g) - v.derivative();
        long i = 1;
        while (v.deg_i() > 0) {
            Poly<K> gi = gcd_monic(v, s);
            v = exact_div(v, gi);
            s = exact_div(s, gi) - v.derivative();
            if (gi.deg_i() > 0) out.parts.push_back({gi, i});
            ++i;
        }
    } else {
        detail::squarefree_char_p(w, p, 1, policy, out.parts);
        std::sort(out.parts.begin(), out.parts.end(),
                  [](const auto& a, const auto& b) { return a.multiplicity < b.multiplicity; });
        for (size_t i = 1; i < out.parts.size(); ++i)
            if (out.parts[i].multiplicity == out.parts[i - 1].multiplicity)
                throw Error("internal: duplicate multiplicity in squarefree decomposition");
    }
    return out;
}

/* number of distinct roots over the algebraic closure */
template <class K>
long distinct_root_count(const Poly<K>& f) {
    if (f.is_zero()) throw ZeroPolynomial("root count of zero polynomial");
    if (f.deg_i() == 0) return 0;
    auto sf = squarefree_decompose(f);
    long n = 0;
    for (const auto& p : sf.parts) n += p.factor.deg_i();
    return n;
}

/* generic printer: coefficients via K::str(), composite ones parenthesized.
   For K = Rational this is the canonical form the parser round-trips. */
template <class K>
std::string poly_str(const Poly<K>& f, const std::string& var) {
    if (f.is_zero()) return "0";
    auto needs_parens = [](const std::string& s) {
        for (size_t i = 0; i < s.size(); ++i)
            if (s[i] == '+' || (s[i] == '-' && i > 0)) return true;
        return false;
    };
    std::string out;
    for (long i = f.deg_i(); i >= 0; --i) {
        K c = f.coeff(i);
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool negative = !cs.empty() && cs[0] == '-' && !needs_parens(cs);
        if (negative) cs = cs.substr(1);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (needs_parens(cs)) cs = "(" + cs + ")";
        std::string head;
        if (i == 0) {
            head = cs;
        } else {
            if (cs == "1") head = "";
            else head = cs + "*";
            head += var;
            if (i > 1) head += "^" + std::to_string(i);
        }
        out += head;
    }
    return out;
}

} // namespace buchiff
