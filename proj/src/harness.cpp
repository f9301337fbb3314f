#include <random>

#include "buchiff/buchi.hpp"
#include "buchiff/bounds.hpp"

namespace buchiff {

namespace {

// raw engine draws only: std distributions vary across standard libraries
// and would break seed reproducibility
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    long range(long lo, long hi) {
        return lo + static_cast<long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rational rational(long h) { return Rational(Int(range(-h, h)), Int(range(1, h))); }
    QPoly poly(long maxdeg, long h, bool nonzero) {
        for (;;) {
            long d = range(0, maxdeg);
            std::vector<Rational> c(static_cast<size_t>(d) + 1);
            for (auto& v : c) v = rational(h);
            QPoly p = QPoly::from_coeffs(std::move(c));
            if (!nonzero || !p.is_zero()) return p;
        }
    }
    QX ratfunc(const HarnessConfig& cfg, bool allow_den) {
        QPoly num = poly(cfg.coeff_max_deg, cfg.coeff_height, false);
        QPoly den = allow_den && range(0, 2) == 0
                        ? poly(cfg.coeff_max_deg > 1 ? cfg.coeff_max_deg - 1 : 1,
                               cfg.coeff_height, true)
                        : QPoly::one();
        return QX(num, den);
    }
};

} // namespace

HarnessReport theorem_harness(long n, long trials, std::uint64_t seed,
                              const HarnessConfig& cfg) {
    if (n < 2) throw DomainError("form degree must be >= 2");
    if (trials < 0) throw DomainError("trial count must be nonnegative");
    Rng rng(seed);
    HarnessReport r;
    r.n = n;
    r.seed = seed;
    r.bound_m = bound_M(n, 0);
    r.max_locus_bound = Int(0);

    // family 1: generic forms, exact locus must stay under the census bound
    while (r.trials_other < trials) {
        std::vector<QX> cs;
        for (long i = 0; i < n; ++i) cs.push_back(rng.ratfunc(cfg, true));
        QForm F = QForm::from_coeffs(cs);
        if (classify(F).kind != FormClass::Other) continue;
        LocusResult loc = exact_powerful_locus(F, n);
        Int size = loc.total_bound();
        if (size >= r.bound_m)
            throw TheoremViolation("exact locus size reaches the census bound", F.str());
        HarnessCase c{F.str(), FormClass::Other, size, true};
        if (size > r.max_locus_bound) {
            r.max_locus_bound = size;
            r.worst.clear();
        }
        if (size == r.max_locus_bound && r.worst.size() < 3) r.worst.push_back(c);
        ++r.trials_other;
    }

    long span = cfg.lambda_hi - cfg.lambda_lo;
    long samples = span + 1 < 100 ? span + 1 : 100;

    // family 2: n-th powers of a linear form, powerful at every specialization
    while (r.trials_power < trials) {
        QX nu = rng.ratfunc(cfg, true);
        if (nu.is_polynomial() && nu.num().deg_i() <= 0) continue; // want PowerOfLinear
        QForm F(Poly<QX>::from_coeffs({nu, QX(1)}).pow(n));
        if (classify(F).kind != FormClass::PowerOfLinear)
            throw VerificationFailed("constructed power form not recognized");
        for (long j = 0; j < samples; ++j) {
            Rational lam(cfg.lambda_lo + j);
            QX value = evaluate(F, lam);
            if (value.is_zero() || is_k_powerful(value, n) != Powerful::Yes)
                throw TheoremViolation("power form specialization is not powerful", F.str());
        }
        ++r.trials_power;
    }

    // family 3: constant coefficients, every nonzero value is a constant and
    // vacuously powerful for every threshold
    while (r.trials_constant < trials) {
        std::vector<QX> cs;
        for (long i = 0; i < n; ++i) cs.push_back(QX(rng.rational(cfg.coeff_height)));
        QForm F = QForm::from_coeffs(cs);
        if (classify(F).kind != FormClass::ConstantCoefficients)
            throw VerificationFailed("constant form not recognized");
        for (long j = 0; j < samples; ++j) {
            Rational lam(cfg.lambda_lo + j);
            QX value = evaluate(F, lam);
            if (value.is_zero()) continue; // degenerate specialization
            if (max_powerful(value).has_value())
                throw TheoremViolation("constant specialization claims bounded powerfulness",
                                       F.str());
        }
        ++r.trials_constant;
    }
    return r;
}

} // namespace buchiff
