#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "buchiff/buchi.hpp"

namespace buchiff {

SequenceForm<Rational> sequence_to_form(const std::vector<Rational>& u, long n) {
    if (n < 1) throw DomainError("form degree must be >= 1");
    if (static_cast<long>(u.size()) < n + 1)
        throw TooShort("need at least n + 1 terms");

    // difference table rows 0..n; row j holds the j-th differences
    std::vector<std::vector<Rational>> rows;
    rows.push_back(u);
    for (long j = 1; j <= n; ++j) {
        const auto& prev = rows.back();
        std::vector<Rational> next;
        next.reserve(prev.size() - 1);
        for (size_t i = 0; i + 1 < prev.size(); ++i) next.push_back(prev[i + 1] - prev[i]);
        rows.push_back(std::move(next));
    }
    Rational nf(factorial(n));
    for (const auto& d : rows.back())
        if (!(d == nf)) return {};

    // P(k) = sum_j D^j u_1 * C(k-1, j), expanded in k
    QPoly k = QPoly::variable();
    QPoly P = QPoly::constant(rows[0][0]);
    QPoly binom = QPoly::one();
    for (long j = 1; j <= n; ++j) {
        // C(k-1, j) = C(k-1, j-1) * (k - j) / j
        binom = binom * (k - QPoly::constant(Rational(j))).scaled(Rational(Int(1), Int(j)));
        P = P + binom.scaled(rows[static_cast<size_t>(j)][0]);
    }
    if (P.deg_i() != n || !(P.leading_coeff() == Rational(1)))
        throw VerificationFailed("interpolant is not monic of the right degree");
    for (size_t i = 0; i < u.size(); ++i)
        if (!(P.eval(Rational(static_cast<long long>(i + 1))) == u[i]))
            throw VerificationFailed("interpolant misses a term");

    SequenceForm<Rational> out;
    out.buchi = true;
    out.coeffs.assign(P.coeffs().begin(), P.coeffs().end() - 1); // a_0..a_{n-1}
    return out;
}

namespace {

long long isqrt_ll(long long v) {
    if (v < 0) return -1;
    auto sq = [](long long r) { return static_cast<__int128>(r) * r; };
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && sq(r) > v) --r;
    while (sq(r + 1) <= v) ++r;
    return sq(r) == v ? r : -1;
}

bool matches_shift(const std::vector<long long>& u, long long nu) {
    for (size_t i = 0; i < u.size(); ++i) {
        long long base = static_cast<long long>(i) + 1 + nu;
        if (static_cast<__int128>(base) * base != u[i]) return false;
    }
    return true;
}

std::vector<IntegerSequenceHit> search_shard(long long x1_lo, long long x1_hi,
                                             long long x2_lo, long long x2_hi,
                                             long min_length, long max_length) {
    std::vector<IntegerSequenceHit> hits;
    for (long long x1 = x1_lo; x1 <= x1_hi; ++x1) {
        for (long long x2 = x2_lo; x2 <= x2_hi; ++x2) {
            std::vector<long long> u = {x1 * x1, x2 * x2};
            while (static_cast<long>(u.size()) < max_length) {
                long long next = 2 * u[u.size() - 1] - u[u.size() - 2] + 2;
                if (isqrt_ll(next) < 0) break;
                u.push_back(next);
            }
            if (static_cast<long>(u.size()) < min_length) continue;
            IntegerSequenceHit h;
            h.x1 = x1;
            h.x2 = x2;
            h.trivial = matches_shift(u, x1 - 1) || matches_shift(u, -x1 - 1);
            h.squares = std::move(u);
            hits.push_back(std::move(h));
        }
    }
    return hits;
}

} // namespace

std::vector<IntegerSequenceHit> search_integer_buchi(long long x1_lo, long long x1_hi,
                                                     long long x2_lo, long long x2_hi,
                                                     long min_length, long max_length) {
    if (min_length < 2) throw DomainError("min_length must be >= 2");
    if (x1_hi < x1_lo || x2_hi < x2_lo) return {};

    unsigned hw = std::thread::hardware_concurrency();
    long long span = x1_hi - x1_lo + 1;
    long long shards = std::min<long long>(span, hw ? hw : 1);
    std::vector<std::future<std::vector<IntegerSequenceHit>>> jobs;
    for (long long s = 0; s < shards; ++s) {
        long long lo = x1_lo + span * s / shards;
        long long hi = x1_lo + span * (s + 1) / shards - 1;
        jobs.push_back(std::async(std::launch::async, search_shard, lo, hi, x2_lo,
                                  x2_hi, min_length, max_length));
    }
    std::vector<IntegerSequenceHit> hits;
    for (auto& j : jobs) {
        auto part = j.get();
        hits.insert(hits.end(), std::make_move_iterator(part.begin()),
                    std::make_move_iterator(part.end()));
    }
    std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
        return a.x1 != b.x1 ? a.x1 < b.x1 : a.x2 < b.x2;
    });
    return hits;
}

} // namespace buchiff
