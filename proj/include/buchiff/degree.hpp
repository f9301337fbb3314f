/*
 * degree.hpp
 * ----------
 * Degree of a polynomial with the zero polynomial mapped to a real -infinity
 * sentinel, never an ordinary integer. Addition absorbs -infinity, max works
 * as expected, and value() refuses to leak the sentinel as an int.
 */
#pragma once

#include <algorithm>
#include <string>

#include "buchiff/errors.hpp"

namespace buchiff {

class Degree {
public:
    static Degree neg_inf() { return Degree(true, 0); }
    explicit Degree(long v) : neg_inf_(false), v_(v) {}

    bool is_neg_inf() const { return neg_inf_; }
    long value() const {
        if (neg_inf_) throw DomainError("degree of zero polynomial has no integer value");
        return v_;
    }

    Degree operator+(const Degree& o) const {
        if (neg_inf_ || o.neg_inf_) return neg_inf();
        return Degree(v_ + o.v_);
    }

    bool operator==(const Degree& o) const {
        return neg_inf_ == o.neg_inf_ && (neg_inf_ || v_ == o.v_);
    }
    bool operator!=(const Degree& o) const { return !(*this == o); }
    bool operator<(const Degree& o) const {
        if (neg_inf_) return !o.neg_inf_;
        if (o.neg_inf_) return false;
        return v_ < o.v_;
    }
    bool operator<=(const Degree& o) const { return *this < o || *this == o; }
    bool operator>(const Degree& o) const { return o < *this; }
    bool operator>=(const Degree& o) const { return o <= *this; }

    // comparisons against plain ints treat the int as a finite degree
    bool operator==(long v) const { return !neg_inf_ && v_ == v; }
    bool operator<(long v) const { return neg_inf_ || v_ < v; }
    bool operator>=(long v) const { return !(*this < v); }

    std::string str() const { return neg_inf_ ? "-inf" : std::to_string(v_); }

private:
    Degree(bool ni, long v) : neg_inf_(ni), v_(v) {}
    bool neg_inf_;
    long v_;
};

inline Degree max(const Degree& a, const Degree& b) { return a < b ? b : a; }

} // namespace buchiff
