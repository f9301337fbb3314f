#include "doctest.h"

#include <algorithm>

#include "buchiff/roots.hpp"
#include "support/oracles.hpp"

using namespace buchiff;
using testsupport::Gen;

namespace {
QPoly X() { return QPoly::monomial(Rational(1), 1); }
QPoly lin(const Rational& r) {
    // x - r
    return QPoly::from_coeffs({-r, Rational(1)});
}
} // namespace

TEST_CASE("rational roots with multiplicities on a constructed product") {
    // (2x-1)^2 (x+3)
    QPoly f = QPoly::from_coeffs({Rational(-1), Rational(2)});
    f = f * f * QPoly::from_coeffs({Rational(3), Rational(1)});
    auto rs = rational_roots(f);
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].value == Rational(-3));
    CHECK(rs[0].multiplicity == 1);
    CHECK(rs[1].value == Rational(Int(1), Int(2)));
    CHECK(rs[1].multiplicity == 2);
}

TEST_CASE("high-multiplicity root at zero") {
    // l^6 + 4 l^4 = l^4 (l^2 + 4): only rational root is 0 with mult 4.
    // Regression: the bisection must terminate even though the nonzero
    // factor has no real roots at all.
    QPoly f = QPoly::monomial(Rational(1), 6) + QPoly::monomial(Rational(4), 4);
    auto rs = rational_roots(f);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].value.is_zero());
    CHECK(rs[0].multiplicity == 4);
}

TEST_CASE("real root counting") {
    CHECK(sturm_real_root_count(X() * X() + QPoly::one()) == 0);
    CHECK(sturm_real_root_count(X() * X() - QPoly::constant(Rational(2))) == 2);
    CHECK(sturm_real_root_count(X()) == 1);
    // counts distinct roots, not multiplicities
    CHECK(sturm_real_root_count(X() * X()) == 1);
}

TEST_CASE("interval root counting is half-open on the left") {
    QPoly f = X() * (X() - QPoly::one()); // roots 0, 1
    CHECK(sturm_count_interval(f, Rational(-1), Rational(2)) == 2);
    CHECK(sturm_count_interval(f, Rational(0), Rational(2)) == 1);  // 0 excluded
    CHECK(sturm_count_interval(f, Rational(-1), Rational(0)) == 1); // 0 included
    CHECK(sturm_count_interval(f, Rational(-1), Rational(1)) == 2);
}

TEST_CASE("rational root free part strips exactly the rational roots") {
    // (x-1)(x+2)^2 (x^2+1): free part has degree 2 and no rational roots
    QPoly f = lin(Rational(1)) * lin(Rational(-2)) * lin(Rational(-2)) *
              (X() * X() + QPoly::one());
    QPoly g = rational_root_free_part(f);
    CHECK(g.deg_i() == 2);
    CHECK(rational_roots(g).empty());
    // already root-free input passes through with the same degree
    QPoly h = X() * X() - QPoly::constant(Rational(2));
    CHECK(rational_root_free_part(h).deg_i() == 2);
}

TEST_CASE("planted rational roots are all recovered") {
    Gen g(77);
    for (int trial = 0; trial < 40; ++trial) {
        // plant 1..3 distinct rational roots with multiplicities 1..3 and
        // multiply by a rootless quadratic scaled by a random nonzero lead
        std::vector<Rational> roots;
        std::vector<long> mult;
        int nroots = static_cast<int>(g.range(1, 3));
        while (static_cast<int>(roots.size()) < nroots) {
            Rational r = g.rational(5);
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) {
                roots.push_back(r);
                mult.push_back(g.range(1, 3));
            }
        }
        QPoly f = QPoly::constant(g.rational_nonzero(4));
        for (size_t i = 0; i < roots.size(); ++i)
            for (long m = 0; m < mult[i]; ++m) f = f * lin(roots[i]);
        f = f * (X() * X() + QPoly::one());

        auto rs = rational_roots(f);
        REQUIRE(rs.size() == roots.size());
        for (size_t i = 0; i < roots.size(); ++i) {
            auto it = std::find_if(rs.begin(), rs.end(), [&](const RationalRoot& rr) {
                return rr.value == roots[i];
            });
            REQUIRE(it != rs.end());
            CHECK(it->multiplicity == mult[i]);
        }
        // output is sorted ascending
        for (size_t i = 1; i < rs.size(); ++i) CHECK(rs[i - 1].value < rs[i].value);
    }
}

TEST_CASE("degenerate inputs") {
    CHECK_THROWS_AS(rational_roots(QPoly()), ZeroPolynomial);
    CHECK_THROWS_AS(sturm_real_root_count(QPoly()), ZeroPolynomial);
    CHECK(rational_roots(QPoly::constant(Rational(5))).empty());
    CHECK(sturm_real_root_count(QPoly::one()) == 0);
}
