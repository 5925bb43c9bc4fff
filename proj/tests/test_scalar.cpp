#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "semreg/scalar.hpp"
#include "support/random_gen.hpp"

using namespace semreg;
using testgen::Rng;

namespace {
const DomainMode S = DomainMode::Slice;
const DomainMode P = DomainMode::Product;

QPoly poly(std::vector<Rat> c) { return QPoly(std::move(c)); }
}  // namespace

TEST_CASE("field arithmetic basics") {
    ScalarElem x = ScalarElem::x(S);
    ScalarElem one = ScalarElem::constant(1, S);
    CHECK(x + one == ScalarElem(RatFun(poly({1, 1})), S));

    ScalarElem J = ScalarElem::J(P);
    CHECK(J * J == ScalarElem::constant(-1, P));

    RatFun a(poly({0, 1}), poly({-1, 1}));  // x/(x-1)
    RatFun b(poly({-1, 1}), poly({0, 1}));  // (x-1)/x
    CHECK(ScalarElem(a, S) * ScalarElem(b, S) == ScalarElem::constant(1, S));
}

TEST_CASE("slice mode rejects a J component") {
    CHECK_THROWS_AS(ScalarElem(RatFun(0), RatFun(1), S), error);
    CHECK_THROWS_AS(ScalarElem::J(S), error);
}

TEST_CASE("mode mismatch is an error") {
    CHECK_THROWS_AS(ScalarElem::x(S) + ScalarElem::x(P), error);
}

TEST_CASE("inversion") {
    ScalarElem J = ScalarElem::J(P);
    CHECK(J.inverse() == -J);

    ScalarElem onePlusJ = ScalarElem::constant(1, P) + J;
    ScalarElem expected(RatFun(Rat(1, 2)), RatFun(Rat(-1, 2)), P);
    CHECK(onePlusJ.inverse() == expected);

    ScalarElem x2(RatFun(poly({0, 0, 1})), S);
    CHECK(x2.inverse() == ScalarElem(RatFun(QPoly(1), poly({0, 0, 1})), S));

    CHECK_THROWS_AS(ScalarElem(S).inverse(), error);
}

TEST_CASE("square roots in the model field") {
    ScalarElem sq(RatFun(poly({1, -2, 1})), S);  // (x-1)^2
    auto r = sq.sqrt();
    REQUIRE(r);
    CHECK(*r * *r == sq);

    auto rm1 = ScalarElem::constant(-1, P).sqrt();
    REQUIRE(rm1);
    CHECK(*rm1 * *rm1 == ScalarElem::constant(-1, P));

    CHECK_FALSE(ScalarElem::constant(-1, S).has_square_root());
    CHECK_FALSE(ScalarElem::constant(2, P).has_square_root());
    CHECK(ScalarElem(P).sqrt().has_value());
}

TEST_CASE("square root of a mixed product-mode element") {
    // (1 + J x)^2 = 1 - x^2 + 2x J
    ScalarElem s(RatFun(poly({1, 0, -1})), RatFun(poly({0, 2})), P);
    auto r = s.sqrt();
    REQUIRE(r);
    CHECK(*r * *r == s);
}

TEST_CASE("squarefree decomposition") {
    auto d = squarefree_decomposition(poly({0, 0, 1, 1}));  // x^2 (x+1)
    REQUIRE(d.factors.size() == 2);
    CHECK(d.reassemble() == poly({0, 0, 1, 1}));
    bool saw_sq = false, saw_lin = false;
    for (const auto& [s, e] : d.factors) {
        if (s == poly({0, 1}) && e == 2) saw_sq = true;
        if (s == poly({1, 1}) && e == 1) saw_lin = true;
    }
    CHECK(saw_sq);
    CHECK(saw_lin);

    auto dx = squarefree_decomposition(poly({0, 1}));
    REQUIRE(dx.factors.size() == 1);
    CHECK(dx.factors[0].exponent == 1);

    QPoly q = poly({1, 0, 1});
    auto dq = squarefree_decomposition(q * q);
    REQUIRE(dq.factors.size() == 1);
    CHECK(dq.factors[0].factor == q);
    CHECK(dq.factors[0].exponent == 2);

    CHECK_THROWS_AS(squarefree_decomposition(QPoly()), error);
}

TEST_CASE("randomized inverse and canonical-form properties") {
    Rng rng(7);
    for (int n = 0; n < 200; ++n) {
        DomainMode m = (n % 2 == 0) ? S : P;
        ScalarElem s = testgen::rand_scalar(rng, m, 3);
        if (s.is_zero()) continue;
        CHECK(s * s.inverse() == ScalarElem::constant(1, m));
        // cross-multiplied equality agrees with canonical-form equality
        ScalarElem t = testgen::rand_scalar(rng, m, 3);
        if (s == t) CHECK((s - t).is_zero());
    }
}

TEST_CASE("sums of squares vanish only at zero in slice mode") {
    Rng rng(8);
    for (int n = 0; n < 100; ++n) {
        RatFun a = testgen::rand_ratfun(rng, 3);
        RatFun b = testgen::rand_ratfun(rng, 3);
        RatFun c = testgen::rand_ratfun(rng, 3);
        RatFun d = testgen::rand_ratfun(rng, 3);
        RatFun sum = a * a + b * b + c * c + d * d;
        if (sum.is_zero()) {
            CHECK(a.is_zero());
            CHECK(b.is_zero());
            CHECK(c.is_zero());
            CHECK(d.is_zero());
        }
    }
}

TEST_CASE("sqrt verdicts are consistent with squaring") {
    Rng rng(9);
    for (int n = 0; n < 100; ++n) {
        DomainMode m = (n % 2 == 0) ? S : P;
        ScalarElem s = testgen::rand_scalar(rng, m, 2);
        ScalarElem sq = s * s;
        auto r = sq.sqrt();
        REQUIRE(r);
        CHECK(*r * *r == sq);
    }
    // a negative verdict really has no low-degree square
    ScalarElem two = ScalarElem::constant(2, P);
    REQUIRE_FALSE(two.has_square_root());
    for (int n = 0; n < 1000; ++n) {
        ScalarElem cand = testgen::rand_scalar(rng, P, 2);
        CHECK(cand * cand != two);
    }
}
