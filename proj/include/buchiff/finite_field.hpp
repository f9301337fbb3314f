/*
 * finite_field.hpp
 * ----------------
 * F_q = F_p[y]/(m) for q = p^e, with m the first monic irreducible of
 * degree e in base-p counter order over (c_0, c_1, ...). Elements either
 * carry a shared context or sit in an "integer literal" state so generic
 * polynomial code can write K(0), K(1), K(j) before any context is known;
 * a literal adopts the context of the first contextual operand it meets.
 */
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "buchiff/errors.hpp"

namespace buchiff {

class FqContext {
public:
    // p must be prime; q = p^e is capped to keep exponent arithmetic exact
    static std::shared_ptr<const FqContext> create(long p, long e = 1);

    long p() const { return p_; }
    long e() const { return e_; }
    long long q() const { return q_; }
    // monic modulus, degree e, coefficients in [0, p); y itself when e = 1
    const std::vector<long>& modulus() const { return mod_; }

    bool same(const FqContext& o) const {
        return p_ == o.p_ && e_ == o.e_ && mod_ == o.mod_;
    }

private:
    FqContext(long p, long e, long long q, std::vector<long> mod)
        : p_(p), e_(e), q_(q), mod_(std::move(mod)) {}
    long p_, e_;
    long long q_;
    std::vector<long> mod_;
};

using FqCtx = std::shared_ptr<const FqContext>;

class FqElement {
public:
    FqElement() = default;                      // literal 0
    FqElement(long long v) : lit_(v) {}         // literal integer
    FqElement(FqCtx ctx, long long v);
    FqElement(FqCtx ctx, std::vector<long> coeffs); // coeffs of y^0, y^1, ...

    bool has_context() const { return static_cast<bool>(ctx_); }
    const FqCtx& context() const { return ctx_; }
    long characteristic() const { return ctx_ ? ctx_->p() : 0; }

    bool is_zero() const { return ctx_ ? rep_.empty() : lit_ == 0; }
    bool is_one() const {
        return ctx_ ? (rep_.size() == 1 && rep_[0] == 1) : lit_ == 1;
    }

    FqElement operator-() const;
    FqElement operator+(const FqElement& o) const;
    FqElement operator-(const FqElement& o) const;
    FqElement operator*(const FqElement& o) const;
    FqElement operator/(const FqElement& o) const;
    bool operator==(const FqElement& o) const;
    bool operator!=(const FqElement& o) const { return !(*this == o); }

    FqElement inverse() const;
    FqElement pow(long long n) const; // negative n goes through inverse()
    FqElement frobenius() const;      // x -> x^p
    FqElement pth_root() const;       // inverse of frobenius within F_q

    // counter value sum(rep[i] * p^i); total order used for deterministic output
    long long ordinal() const;
    std::string str() const;

    static std::vector<FqElement> enumerate(const FqCtx& ctx);

private:
    FqElement attached(const FqCtx& c) const;
    void require_same(const FqElement& o) const;

    FqCtx ctx_;              // null = literal state
    std::vector<long> rep_;  // contextual: trimmed, coeffs in [0, p)
    long long lit_ = 0;
};

} // namespace buchiff
