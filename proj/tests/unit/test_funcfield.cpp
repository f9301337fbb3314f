#include "doctest.h"

#include "buchiff/funcfield.hpp"
#include "support/oracles.hpp"

using namespace buchiff;
using testsupport::Gen;

namespace {
QPoly X() { return QPoly::monomial(Rational(1), 1); }
QX rf(QPoly n) { return QX(std::move(n)); }
QX rf(QPoly n, QPoly d) { return QX(std::move(n), std::move(d)); }
} // namespace

TEST_CASE("zero profiles of basic functions") {
    // x^2: one finite zero of order 2, nothing at infinity
    auto p1 = zero_profile(rf(X() * X()));
    CHECK(p1.order_at_infinity == 0);
    CHECK(p1.min_multiplicity() == 2);
    CHECK(p1.total_zero_degree() == 2);

    // 1/x^2: no finite zeros, order 2 at infinity
    auto p2 = zero_profile(rf(QPoly::one(), X() * X()));
    CHECK(p2.finite_part.parts.empty());
    CHECK(p2.order_at_infinity == 2);
    CHECK(p2.min_multiplicity() == 2);

    // x/(x+1): simple zero at 0, none at infinity (deg num == deg den)
    auto p3 = zero_profile(rf(X(), X() + QPoly::one()));
    CHECK(p3.order_at_infinity == 0);
    CHECK(p3.min_multiplicity() == 1);

    // nonzero constant: no zeros anywhere
    auto p4 = zero_profile(rf(QPoly::constant(Rational(7))));
    CHECK(!p4.has_zero());
    CHECK(p4.min_multiplicity() == 0);

    CHECK_THROWS_AS(zero_profile(QX()), ZeroFunction);
}

TEST_CASE("k-powerfulness") {
    CHECK(is_k_powerful(rf(QPoly::constant(Rational(3))), 100) == Powerful::Yes);
    CHECK(is_k_powerful(QX(), 2) == Powerful::Degenerate);
    CHECK_THROWS_AS(is_k_powerful(rf(X()), 0), DomainError);

    QX x2 = rf(X() * X());
    CHECK(is_k_powerful(x2, 2) == Powerful::Yes);
    CHECK(is_k_powerful(x2, 3) == Powerful::No);

    // pole at 0 is ignored; zero at infinity has order 1
    QX invx = rf(QPoly::one(), X());
    CHECK(is_k_powerful(invx, 1) == Powerful::Yes);
    CHECK(is_k_powerful(invx, 2) == Powerful::No);
}

TEST_CASE("max powerful level") {
    CHECK(max_powerful(rf(X() * X())) == 2);
    CHECK(!max_powerful(rf(QPoly::constant(Rational(5)))).has_value());
    CHECK(max_powerful(rf(QPoly::one(), X())) == 1);
    // mixed orders: min over all zeros including infinity
    // x^3 / (x^5 + 1): zero order 3 at 0, order 2 at infinity
    QX f = rf(X().pow(3), X().pow(5) + QPoly::one());
    CHECK(max_powerful(f) == 2);
}

TEST_CASE("form validation") {
    using FormPoly = Poly<QX>;
    CHECK_THROWS_AS(QForm(FormPoly::from_coeffs({QX(1), QX(1)})), PreconditionViolated);
    CHECK_THROWS_AS(
        QForm(FormPoly::from_coeffs({QX(0), QX(0), QX(2)})), PreconditionViolated);
    QForm F = QForm::from_coeffs({QX(-1), QX(0)}); // t^2 - 1
    CHECK(F.n() == 2);
    CHECK(F.coeff(0) == QX(-1));
    CHECK(F.coeff(2) == QX(1));
}

TEST_CASE("classification of the three archetypes") {
    QX x = rf(X());
    // t^2 - x^2
    QForm other = QForm::from_coeffs({-(x * x), QX(0)});
    CHECK(classify(other).kind == FormClass::Other);

    // (t + x)^2 = t^2 + 2x t + x^2
    QForm pol = QForm::from_coeffs({x * x, QX(2) * x});
    auto cp = classify(pol);
    CHECK(cp.kind == FormClass::PowerOfLinear);
    REQUIRE(cp.nu.has_value());
    CHECK(*cp.nu == x);

    // t^2 + 1
    QForm cc = QForm::from_coeffs({QX(1), QX(0)});
    CHECK(classify(cc).kind == FormClass::ConstantCoefficients);

    // constant-coefficient wins even when the form is also a power:
    // (t + 1)^2 has constant coefficients
    QForm both = QForm::from_coeffs({QX(1), QX(2)});
    CHECK(classify(both).kind == FormClass::ConstantCoefficients);
}

TEST_CASE("power classification matches the multiplicity profile on random forms") {
    Gen g(404);
    for (int i = 0; i < 60; ++i) {
        long n = g.range(2, 4);
        QForm F = [&] {
            if (g.range(0, 1) == 0) {
                // genuine n-th power of t + nu
                QX nu = g.ratfunc_nonconstant(2);
                return QForm(Poly<QX>::from_coeffs({nu, QX(1)}).pow(n));
            }
            std::vector<QX> cs;
            for (long j = 0; j < n; ++j) cs.push_back(g.ratfunc(2));
            return QForm::from_coeffs(std::move(cs));
        }();
        auto cls = classify(F);
        bool profile_says_power = (multiplicity_profile(F).max_multiplicity() == F.n());
        if (cls.kind == FormClass::ConstantCoefficients) continue;
        CHECK((cls.kind == FormClass::PowerOfLinear) == profile_says_power);
        if (cls.nu) {
            Poly<QX> lin = Poly<QX>::from_coeffs({*cls.nu, QX(1)});
            CHECK(lin.pow(F.n()) == F.poly());
        }
    }
}

TEST_CASE("projective points") {
    CHECK_THROWS_AS(QPoint::make(Rational(0), Rational(0)), DomainError);
    QPoint p = QPoint::make(Rational(6), Rational(2));
    CHECK(!p.is_infinity());
    CHECK(p.a == Rational(3));
    QPoint inf = QPoint::make(Rational(5), Rational(0));
    CHECK(inf.is_infinity());
    CHECK(inf == QPoint::infinity());
    CHECK(inf.str() == "[1:0]");
    CHECK(p.str() == "[3:1]");
}

TEST_CASE("evaluation at points") {
    QX x = rf(X());
    QForm F = QForm::from_coeffs({-(x * x), QX(0)}); // t^2 - x^2
    CHECK(evaluate(F, Rational(3)) == rf(QPoly::constant(Rational(9)) - X() * X()));
    CHECK(evaluate(F, Rational(0)) == -(x * x));
    // the point at infinity evaluates to the leading coefficient, 1
    CHECK(evaluate(F, QPoint::infinity()) == QX(1));
    // homogeneous value at [s:1] matches the affine value
    CHECK(evaluate_homogeneous(F, Rational(3), Rational(1)) == evaluate(F, Rational(3)));
    CHECK_THROWS_AS(evaluate_homogeneous(F, Rational(0), Rational(0)), DomainError);
}
