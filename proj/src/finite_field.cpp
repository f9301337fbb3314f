#include "buchiff/finite_field.hpp"

#include <algorithm>

namespace buchiff {
namespace {

/* arithmetic in F_p[y] on raw coefficient vectors, used both to build the
   context (irreducibility search) and to run element arithmetic */

using PV = std::vector<long>;

void trim(PV& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

long mod_inverse(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    while (nr != 0) {
        long q = r / nr;
        t -= q * nt; std::swap(t, nt);
        r -= q * nr; std::swap(r, nr);
    }
    if (r != 1) throw DivisionByZero("element has no inverse");
    return ((t % p) + p) % p;
}

PV pv_add(const PV& a, const PV& b, long p) {
    PV r = a.size() >= b.size() ? a : b;
    const PV& s = a.size() >= b.size() ? b : a;
    for (size_t i = 0; i < s.size(); ++i) r[i] = (r[i] + s[i]) % p;
    trim(r);
    return r;
}

PV pv_sub(const PV& a, const PV& b, long p) {
    PV r = a;
    if (r.size() < b.size()) r.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) r[i] = ((r[i] - b[i]) % p + p) % p;
    trim(r);
    return r;
}

PV pv_mul(const PV& a, const PV& b, long p) {
    if (a.empty() || b.empty()) return {};
    PV r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<long>((r[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
    }
    trim(r);
    return r;
}

PV pv_rem(PV a, const PV& m, long p) {
    long dm = static_cast<long>(m.size()) - 1;
    long lc_inv = mod_inverse(m.back(), p);
    while (static_cast<long>(a.size()) - 1 >= dm && !a.empty()) {
        long d = static_cast<long>(a.size()) - 1;
        long c = static_cast<long>(static_cast<long long>(a.back()) * lc_inv % p);
        if (c != 0)
            for (long k = 0; k <= dm; ++k)
                a[d - dm + k] = static_cast<long>(((a[d - dm + k] - static_cast<long long>(c) * m[k]) % p + p) % p);
        a.pop_back();
        trim(a);
    }
    return a;
}

PV pv_gcd(PV a, PV b, long p) {
    while (!b.empty()) {
        a = pv_rem(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

PV pv_powmod(PV base, long long n, const PV& m, long p) {
    PV r = {1};
    base = pv_rem(std::move(base), m, p);
    while (n > 0) {
        if (n & 1) r = pv_rem(pv_mul(r, base, p), m, p);
        base = pv_rem(pv_mul(base, base, p), m, p);
        n >>= 1;
    }
    return r;
}

// extended Euclid: inverse of a modulo m in F_p[y]
PV pv_invmod(const PV& a, const PV& m, long p) {
    PV r0 = m, r1 = pv_rem(a, m, p);
    PV t0 = {}, t1 = {1};
    while (!r1.empty()) {
        // quotient of r0 by r1
        PV q;
        {
            PV rem = r0;
            long d1 = static_cast<long>(r1.size()) - 1;
            long lc_inv = mod_inverse(r1.back(), p);
            q.assign(std::max<size_t>(r0.size(), 1), 0);
            while (static_cast<long>(rem.size()) - 1 >= d1 && !rem.empty()) {
                long d = static_cast<long>(rem.size()) - 1;
                long c = static_cast<long>(static_cast<long long>(rem.back()) * lc_inv % p);
                q[d - d1] = c;
                if (c != 0)
                    for (long k = 0; k <= d1; ++k)
                        rem[d - d1 + k] = static_cast<long>(((rem[d - d1 + k] - static_cast<long long>(c) * r1[k]) % p + p) % p);
                rem.pop_back();
                trim(rem);
            }
            trim(q);
            r0 = r1;
            r1 = rem;
        }
        PV nt = pv_sub(t0, pv_mul(q, t1, p), p);
        t0 = t1;
        t1 = nt;
    }
    if (r0.size() != 1) throw DivisionByZero("element has no inverse");
    long s = mod_inverse(r0[0], p);
    return pv_mul(t0, {s}, p);
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible(const PV& m, long p, long e) {
    // y^(p^e) = y mod m, and gcd(y^(p^(e/r)) - y, m) = 1 for prime r | e
    PV y = {0, 1};
    PV t = y;
    std::vector<PV> powers(static_cast<size_t>(e) + 1); // powers[k] = y^(p^k) mod m
    powers[0] = pv_rem(y, m, p);
    for (long k = 1; k <= e; ++k)
        powers[k] = pv_powmod(powers[k - 1], p, m, p);
    if (powers[static_cast<size_t>(e)] != pv_rem(y, m, p)) return false;
    for (long r = 2; r <= e; ++r) {
        if (e % r != 0) continue;
        bool rprime = is_prime(r);
        if (!rprime) continue;
        PV g = pv_gcd(pv_sub(powers[static_cast<size_t>(e / r)], y, p), m, p);
        if (g.size() != 1) return false;
    }
    return true;
}

} // namespace

std::shared_ptr<const FqContext> FqContext::create(long p, long e) {
    if (!is_prime(p)) throw NotPrime("characteristic must be prime, got " + std::to_string(p));
    if (e < 1) throw DomainError("extension degree must be >= 1");
    long long q = 1;
    for (long i = 0; i < e; ++i) {
        q *= p;
        if (q > (1LL << 50)) throw DomainError("field too large");
    }
    std::vector<long> m;
    if (e == 1) {
        m = {0, 1}; // y, so y = 0 in F_p
    } else {
        // first monic irreducible in counter order on the low coefficients
        for (long long c = 0;; ++c) {
            if (c >= q) throw IrreducibleSearchFailed("no irreducible modulus found (internal bug)");
            std::vector<long> cand(static_cast<size_t>(e) + 1, 0);
            long long v = c;
            for (long i = 0; i < e; ++i) {
                cand[static_cast<size_t>(i)] = static_cast<long>(v % p);
                v /= p;
            }
            cand.back() = 1;
            if (is_irreducible(cand, p, e)) {
                m = std::move(cand);
                break;
            }
        }
    }
    return std::shared_ptr<const FqContext>(new FqContext(p, e, q, std::move(m)));
}

FqElement::FqElement(FqCtx ctx, long long v) : ctx_(std::move(ctx)) {
    long p = ctx_->p();
    long r = static_cast<long>(((v % p) + p) % p);
    if (r != 0) rep_ = {r};
}

FqElement::FqElement(FqCtx ctx, std::vector<long> coeffs) : ctx_(std::move(ctx)) {
    long p = ctx_->p();
    if (static_cast<long>(coeffs.size()) > ctx_->e())
        throw DomainError("element representation exceeds extension degree");
    for (auto& c : coeffs) c = ((c % p) + p) % p;
    trim(coeffs);
    rep_ = std::move(coeffs);
}

FqElement FqElement::attached(const FqCtx& c) const {
    if (ctx_) return *this;
    return FqElement(c, lit_);
}

void FqElement::require_same(const FqElement& o) const {
    if (!ctx_->same(*o.ctx_)) throw FieldMismatch("elements of different fields");
}

FqElement FqElement::operator-() const {
    if (!ctx_) return FqElement(-lit_);
    FqElement r = *this;
    long p = ctx_->p();
    for (auto& c : r.rep_) c = (p - c) % p;
    trim(r.rep_);
    return r;
}

FqElement FqElement::operator+(const FqElement& o) const {
    if (!ctx_ && !o.ctx_) return FqElement(lit_ + o.lit_);
    if (!ctx_) return attached(o.ctx_) + o;
    if (!o.ctx_) return *this + o.attached(ctx_);
    require_same(o);
    FqElement r;
    r.ctx_ = ctx_;
    r.rep_ = pv_add(rep_, o.rep_, ctx_->p());
    return r;
}

FqElement FqElement::operator-(const FqElement& o) const { return *this + (-o); }

FqElement FqElement::operator*(const FqElement& o) const {
    if (!ctx_ && !o.ctx_) return FqElement(lit_ * o.lit_);
    if (!ctx_) return attached(o.ctx_) * o;
    if (!o.ctx_) return *this * o.attached(ctx_);
    require_same(o);
    FqElement r;
    r.ctx_ = ctx_;
    r.rep_ = pv_rem(pv_mul(rep_, o.rep_, ctx_->p()), ctx_->modulus(), ctx_->p());
    return r;
}

FqElement FqElement::operator/(const FqElement& o) const {
    if (!ctx_ && !o.ctx_) {
        if (o.lit_ == 0) throw DivisionByZero("division by zero");
        if (o.lit_ == 1) return *this;
        if (o.lit_ == -1) return FqElement(-lit_);
        throw DomainError("integer literals cannot be divided without a field context");
    }
    if (!ctx_) return attached(o.ctx_) / o;
    return *this * o.attached(ctx_).inverse();
}

bool FqElement::operator==(const FqElement& o) const {
    if (!ctx_ && !o.ctx_) return lit_ == o.lit_;
    if (!ctx_) return attached(o.ctx_) == o;
    if (!o.ctx_) return *this == o.attached(ctx_);
    require_same(o);
    return rep_ == o.rep_;
}

FqElement FqElement::inverse() const {
    if (!ctx_) {
        if (lit_ == 1 || lit_ == -1) return *this;
        throw DomainError("integer literals cannot be inverted without a field context");
    }
    if (rep_.empty()) throw DivisionByZero("inverse of zero");
    FqElement r;
    r.ctx_ = ctx_;
    r.rep_ = pv_invmod(rep_, ctx_->modulus(), ctx_->p());
    return r;
}

FqElement FqElement::pow(long long n) const {
    if (!ctx_) throw DomainError("power of an integer literal without a field context");
    if (n < 0) return inverse().pow(-n);
    FqElement r(ctx_, 1);
    FqElement b = *this;
    while (n > 0) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

FqElement FqElement::frobenius() const {
    if (!ctx_) throw DomainError("frobenius of an integer literal");
    return pow(ctx_->p());
}

FqElement FqElement::pth_root() const {
    if (!ctx_) {
        if (lit_ == 0 || lit_ == 1 || lit_ == -1) return *this;
        throw DomainError("p-th root of an integer literal");
    }
    if (ctx_->e() == 1) return *this;
    long long n = 1;
    for (long i = 0; i < ctx_->e() - 1; ++i) n *= ctx_->p();
    return pow(n);
}

long long FqElement::ordinal() const {
    if (!ctx_) throw DomainError("ordinal of an integer literal");
    long long v = 0, pk = 1;
    for (size_t i = 0; i < rep_.size(); ++i) {
        v += rep_[i] * pk;
        pk *= ctx_->p();
    }
    return v;
}

std::string FqElement::str() const {
    if (!ctx_) return std::to_string(lit_);
    if (rep_.empty()) return "0";
    if (ctx_->e() == 1) return std::to_string(rep_[0]);
    std::string out;
    for (long i = static_cast<long>(rep_.size()) - 1; i >= 0; --i) {
        long c = rep_[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += "y";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::vector<FqElement> FqElement::enumerate(const FqCtx& ctx) {
    if (ctx->q() > (1LL << 22)) throw DomainError("field too large to enumerate");
    std::vector<FqElement> out;
    out.reserve(static_cast<size_t>(ctx->q()));
    for (long long v = 0; v < ctx->q(); ++v) {
        std::vector<long> coeffs;
        long long t = v;
        for (long i = 0; i < ctx->e(); ++i) {
            coeffs.push_back(static_cast<long>(t % ctx->p()));
            t /= ctx->p();
        }
        out.emplace_back(ctx, std::move(coeffs));
    }
    return out;
}

} // namespace buchiff
