/*
 * ratfunc.hpp
 * -----------
 * The field K(x) of rational functions over a coefficient field K, stored
 * as a reduced fraction num/den with den monic and nonzero. This is itself
 * a valid coefficient field for Poly, which is how forms in t over K(x)
 * are represented.
 */
#pragma once

#include <string>
#include <utility>

#include "buchiff/poly.hpp"

namespace buchiff {

template <class K>
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Poly<K>::one()) {}
    RationalFunction(long long v)
        : num_(Poly<K>::constant(K(v))), den_(Poly<K>::one()) {}
    explicit RationalFunction(K c)
        : num_(Poly<K>::constant(std::move(c))), den_(Poly<K>::one()) {}
    explicit RationalFunction(Poly<K> p) : num_(std::move(p)), den_(Poly<K>::one()) {}
    RationalFunction(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        reduce();
    }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.deg_i() == 0 && num_ == den_; }
    bool is_polynomial() const { return den_.deg_i() == 0; }

    long characteristic() const {
        long p = poly_characteristic(den_);
        return p != 0 ? p : poly_characteristic(num_);
    }

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RationalFunction operator+(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator-(const RationalFunction& o) const { return *this + (-o); }
    RationalFunction operator*(const RationalFunction& o) const {
        return RationalFunction(num_ * o.num_, den_ * o.den_);
    }
    RationalFunction operator/(const RationalFunction& o) const {
        if (o.is_zero()) throw DivisionByZero("division by zero rational function");
        return RationalFunction(num_ * o.den_, den_ * o.num_);
    }
    RationalFunction inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero rational function");
        return RationalFunction(den_, num_);
    }

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_; // canonical form
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    // value at x = c; the pole case surfaces as DomainError
    K eval(const K& c) const {
        K d = den_.eval(c);
        if (d.is_zero()) throw DomainError("evaluation at a pole");
        return num_.eval(c) / d;
    }

    std::string str(const std::string& var = "x") const {
        if (is_polynomial()) return poly_str(num_, var);
        return "(" + poly_str(num_, var) + ")/(" + poly_str(den_, var) + ")";
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly<K>::one();
            return;
        }
        Poly<K> g = gcd_monic(num_, den_);
        if (g.deg_i() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        K lc = den_.leading_coeff();
        if (!lc.is_one()) {
            K inv = K(1) / lc;
            den_ = den_.scaled(inv);
            num_ = num_.scaled(inv);
        }
    }

    Poly<K> num_, den_;
};

} // namespace buchiff
