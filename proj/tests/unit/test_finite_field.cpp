#include "doctest.h"

#include "buchiff/finite_field.hpp"
#include "buchiff/poly.hpp"

using namespace buchiff;

TEST_CASE("context creation validates input") {
    CHECK_THROWS_AS(FqContext::create(4), NotPrime);
    CHECK_THROWS_AS(FqContext::create(1), NotPrime);
    CHECK_THROWS_AS(FqContext::create(15), NotPrime);
    auto f9 = FqContext::create(3, 2);
    CHECK(f9->p() == 3);
    CHECK(f9->e() == 2);
    CHECK(f9->q() == 9);
    CHECK(f9->modulus().size() == 3); // monic degree-2 modulus
}

TEST_CASE("prime field arithmetic") {
    auto f7 = FqContext::create(7);
    FqElement a(f7, 3), b(f7, 5);
    CHECK((a + b).ordinal() == 1);
    CHECK((a * b).ordinal() == 1);
    CHECK((a - b).ordinal() == 5);
    CHECK((a / b).ordinal() == 2); // 3 * 5^{-1} = 3 * 3 = 2
    CHECK(a.pow(6).is_one());      // Fermat
    CHECK_THROWS_AS(a / FqElement(f7, 0), DivisionByZero);
}

TEST_CASE("extension field squares the generator correctly") {
    auto f9 = FqContext::create(3, 2);
    // y is the residue of the generator; y*y must reduce mod the modulus
    FqElement y(f9, {0, 1});
    FqElement yy = y * y;
    CHECK(yy == FqElement(f9, 2)); // modulus y^2 + 1: y^2 = -1 = 2
}

TEST_CASE("field axioms over every element of small fields") {
    for (auto [p, e] : {std::pair<long, long>{3, 1}, {5, 1}, {3, 2}, {7, 1}}) {
        auto ctx = FqContext::create(p, e);
        auto all = FqElement::enumerate(ctx);
        CHECK(static_cast<long long>(all.size()) == ctx->q());
        for (const auto& a : all) {
            CHECK(a.pow(ctx->q()) == a); // q-th power map is the identity
            if (!a.is_zero()) {
                CHECK((a * a.inverse()).is_one());
                CHECK(a.pow(ctx->q() - 1).is_one());
            }
            CHECK(a.pth_root().pow(p) == a);
        }
    }
}

TEST_CASE("frobenius fixed field inside the quadratic extension") {
    auto big = FqContext::create(5, 2); // F_25 contains F_5 as x -> x^5 fixed points
    long fixed = 0;
    for (const auto& a : FqElement::enumerate(big))
        if (a.pow(5) == a) ++fixed;
    CHECK(fixed == 5);
}

TEST_CASE("null-context literals adopt a context on contact") {
    auto f5 = FqContext::create(5);
    FqElement lit(3); // no context yet
    FqElement a(f5, 4);
    CHECK((lit + a).ordinal() == 2);
    CHECK((a * lit).ordinal() == 2);
    CHECK(FqElement(7).has_context() == false);
}

TEST_CASE("freshman's dream in characteristic 3") {
    auto f3 = FqContext::create(3);
    using FP = Poly<FqElement>;
    FP x = FP::monomial(FqElement(f3, 1), 1);
    FP one = FP::constant(FqElement(f3, 1));
    FP cube = (x + one).pow(3);
    CHECK(cube == x.pow(3) + one);
}

TEST_CASE("char-p squarefree decomposition handles p-th powers") {
    auto f3 = FqContext::create(3);
    using FP = Poly<FqElement>;
    FP x = FP::monomial(FqElement(f3, 1), 1);
    FP one = FP::constant(FqElement(f3, 1));
    FP f = (x + one).pow(3) * x; // derivative of the cube vanishes
    auto sf = squarefree_decompose(f);
    REQUIRE(sf.parts.size() == 2);
    CHECK(sf.parts[0].multiplicity == 1);
    CHECK(sf.parts[1].multiplicity == 3);
    CHECK_THROWS_AS(squarefree_decompose((x + one).pow(3), CharPPolicy::Strict),
                    CharPUnsupportedShape);
}
