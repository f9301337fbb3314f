#include "doctest.h"

#include <algorithm>

#include "buchiff/buchi.hpp"
#include "support/oracles.hpp"

using namespace buchiff;
using testsupport::Gen;
using testsupport::sample_locus;

namespace {
QPoly X() { return QPoly::monomial(Rational(1), 1); }
QX x() { return QX(X()); }

QForm product_form(std::vector<std::pair<QX, long>> linear_factors) {
    Poly<QX> f = Poly<QX>::one();
    for (auto& [nu, mult] : linear_factors)
        f = f * Poly<QX>::from_coeffs({nu, QX(1)}).pow(mult);
    return QForm(f);
}

bool contains(const std::vector<Rational>& v, const Rational& r) {
    return std::find(v.begin(), v.end(), r) != v.end();
}
} // namespace

TEST_CASE("locus of a split quadratic form") {
    // t^2 - x^2: lambda^2 - x^2 has simple zeros unless lambda = 0
    QForm F = QForm::from_coeffs({-(x() * x()), QX(0)});
    auto L = exact_powerful_locus(F, 2);
    CHECK(L.kind == FormClass::Other);
    REQUIRE(L.rational_points.size() == 1);
    CHECK(L.rational_points[0].is_zero());
    CHECK(L.degenerate_points.empty());
    CHECK(L.residual_bound() == Int(0));
}

TEST_CASE("locus can be empty") {
    // t^2 + x: lambda^2 + x is linear in x with a simple zero for every lambda
    QForm F = QForm::from_coeffs({x(), QX(0)});
    auto L = exact_powerful_locus(F, 2);
    CHECK(L.rational_points.empty());
    CHECK(L.degenerate_points.empty());
    CHECK(L.total_bound() == Int(0));
}

TEST_CASE("degenerate specialization is reported separately") {
    // t^3 + x t vanishes identically at lambda = 0
    QForm F = QForm::from_coeffs({QX(0), x(), QX(0)});
    auto L = exact_powerful_locus(F, 3);
    CHECK(L.rational_points.empty());
    REQUIRE(L.degenerate_points.size() == 1);
    CHECK(L.degenerate_points[0].is_zero());
}

TEST_CASE("denominator coefficients are handled") {
    // t^2 - 1/x: lambda^2 - 1/x = (lambda^2 x - 1)/x, simple zero always
    QForm F = QForm::from_coeffs({-QX(QPoly::one(), X()), QX(0)});
    auto L = exact_powerful_locus(F, 2);
    CHECK(L.rational_points.empty());
    CHECK(L.degenerate_points.empty());
}

TEST_CASE("irrational candidates survive as a residual bound") {
    // t^2 - x^4/(x^2+1): powerful at 0; the drop candidates lambda^2 = -4
    // are algebraic, so they stay in the residual count
    QX c(-(X().pow(4)), X() * X() + QPoly::one());
    QForm F = QForm::from_coeffs({c, QX(0)});
    auto L = exact_powerful_locus(F, 2);
    REQUIRE(L.rational_points.size() == 1);
    CHECK(L.rational_points[0].is_zero());
    CHECK(L.residual_bound() == Int(2));
    CHECK(L.total_bound() == Int(3));
}

TEST_CASE("repeated factor forms take the fallback path") {
    // (t+x)^2 (t+x^2): the candidate engine's gcd column vanishes
    // identically, so candidates come from the squarefree structure
    QForm F = product_form({{x(), 2}, {x() * x(), 1}});
    for (long n : {2L, 3L}) {
        auto L = exact_powerful_locus(F, n);
        REQUIRE(L.rational_points.size() == 1);
        CHECK(L.rational_points[0].is_zero());
    }
}

TEST_CASE("order at infinity can make a specialization powerful") {
    // (t+1/x)^2 (t+2/x) at lambda = 0 gives 2/x^3: no finite zeros, but a
    // zero of order 3 at infinity
    QX inv1(QPoly::one(), X());
    QX inv2(QPoly::constant(Rational(2)), X());
    QForm F = product_form({{inv1, 2}, {inv2, 1}});
    auto L = exact_powerful_locus(F, 3);
    REQUIRE(L.rational_points.size() == 1);
    CHECK(L.rational_points[0].is_zero());
}

TEST_CASE("locus preconditions") {
    QForm cc = QForm::from_coeffs({QX(-1), QX(0)});
    CHECK_THROWS_AS(exact_powerful_locus(cc, 2), PreconditionViolated);
    QForm pol = product_form({{x(), 2}});
    CHECK_THROWS_AS(exact_powerful_locus(pol, 2), PreconditionViolated);
    QForm other = QForm::from_coeffs({-(x() * x()), QX(0)});
    CHECK_THROWS_AS(exact_powerful_locus(other, 1), DomainError);
}

TEST_CASE("locus is deterministic") {
    QForm F = QForm::from_coeffs({-(x() * x()), QX(0)});
    auto a = exact_powerful_locus(F, 2);
    auto b = exact_powerful_locus(F, 2);
    CHECK(a.rational_points == b.rational_points);
    CHECK(a.degenerate_points == b.degenerate_points);
    CHECK(a.residual_degrees == b.residual_degrees);
}

TEST_CASE("sampled powerful points always appear in the exact locus") {
    Gen g(808);
    int checked = 0;
    while (checked < 30) {
        long n = g.range(2, 3);
        std::vector<QX> cs;
        for (long j = 0; j < n; ++j) cs.push_back(g.ratfunc(2, 4));
        QForm F = QForm::from_coeffs(std::move(cs));
        if (classify(F).kind != FormClass::Other) continue;
        ++checked;
        auto exact = exact_powerful_locus(F, n);
        auto sampled = sample_locus(F, n, -50, 50);
        for (const auto& lam : sampled.powerful) {
            CAPTURE(F.str());
            CAPTURE(lam.str());
            CHECK(contains(exact.rational_points, lam));
        }
        for (const auto& lam : sampled.degenerate)
            CHECK(contains(exact.degenerate_points, lam));
        // and conversely every reported rational point really is powerful
        for (const auto& lam : exact.rational_points) {
            QX v = evaluate(F, lam);
            CHECK(is_k_powerful(v, n) == Powerful::Yes);
        }
    }
}

TEST_CASE("census over an integer window") {
    QForm F = QForm::from_coeffs({-(x() * x()), QX(0)});
    std::vector<QPoint> pts;
    for (long v = -5; v <= 5; ++v) pts.push_back(QPoint::finite(Rational(v)));
    auto r = census(F, pts, 2);
    CHECK(r.kind == FormClass::Other);
    CHECK(r.tested.size() == 11);
    REQUIRE(r.powerful.size() == 1);
    CHECK(r.powerful[0].point == QPoint::finite(Rational(0)));
    CHECK(r.powerful[0].max_k == 2);
    CHECK(r.degenerate.empty());
    CHECK(r.bound_m == Int(240));
    CHECK(r.consistent);
}

TEST_CASE("census counts the point at infinity as unbounded") {
    QForm F = QForm::from_coeffs({-(x() * x()), QX(0)});
    std::vector<QPoint> pts{QPoint::infinity()};
    auto r = census(F, pts, 7);
    REQUIRE(r.powerful.size() == 1);
    CHECK(!r.powerful[0].max_k.has_value());
}

TEST_CASE("census separates degenerate points and respects the threshold") {
    // t^3 + x t: lambda = 0 is degenerate, never powerful
    QForm F = QForm::from_coeffs({QX(0), x(), QX(0)});
    std::vector<QPoint> pts;
    for (long v = -3; v <= 3; ++v) pts.push_back(QPoint::finite(Rational(v)));
    auto r = census(F, pts, 1);
    REQUIRE(r.degenerate.size() == 1);
    CHECK(r.degenerate[0] == QPoint::finite(Rational(0)));
    for (const auto& e : r.powerful) CHECK(!e.point.a.is_zero());
    CHECK_THROWS_AS(census(F, pts, 0), DomainError);
}

TEST_CASE("census powerful set shrinks as the threshold grows") {
    Gen g(909);
    std::vector<QPoint> pts;
    for (long v = -10; v <= 10; ++v) pts.push_back(QPoint::finite(Rational(v)));
    for (int trial = 0; trial < 10; ++trial) {
        long n = g.range(2, 3);
        std::vector<QX> cs;
        for (long j = 0; j < n; ++j) cs.push_back(g.ratfunc(2, 4));
        QForm F = QForm::from_coeffs(std::move(cs));
        auto lo = census(F, pts, 1);
        auto hi = census(F, pts, 3);
        for (const auto& e : hi.powerful) {
            bool found = false;
            for (const auto& d : lo.powerful) found = found || d.point == e.point;
            CHECK(found);
        }
    }
}
