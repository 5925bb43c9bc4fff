#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "semreg/parser.hpp"
#include "support/random_gen.hpp"

using namespace semreg;
using testgen::Rng;

namespace {
const DomainMode S = DomainMode::Slice;
const DomainMode P = DomainMode::Product;
}  // namespace

TEST_CASE("literals and constants") {
    CHECK(parse_slice_fn("(1 - J*i)/2", P) == basic_idempotent(IdemSign::Plus, QuatConst::i(), P));

    SliceFn f = parse_slice_fn("x^2 + (x/(x-1))*j", S);
    CHECK(f[0] == ScalarElem(RatFun(QPoly(std::vector<Rat>{0, 0, 1})), S));
    CHECK(f[2] == ScalarElem(RatFun(QPoly::x(), QPoly(std::vector<Rat>{-1, 1})), S));
    CHECK(f[1].is_zero());

    CHECK(parse_slice_fn("3/2", S) == SliceFn::scalar(ScalarElem::constant(Rat(3, 2), S)));
}

TEST_CASE("mode and divisor errors carry a column") {
    CHECK_THROWS_AS(parse_slice_fn("J*i", S), error);
    try {
        parse_slice_fn("1 + $", S);
        FAIL("expected a parse error");
    } catch (const error& e) {
        CHECK(std::string(e.what()).find("column") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_slice_fn("1/(1 - J*i)", P), error);  // zero divisor
    CHECK_THROWS_AS(parse_slice_fn("1/0", S), error);
    CHECK_THROWS_AS(parse_slice_fn("(1 + i", S), error);
    CHECK_THROWS_AS(parse_slice_fn("", S), error);
}

TEST_CASE("precedence") {
    CHECK(parse_slice_fn("-2^2", S) == SliceFn::scalar(ScalarElem::constant(-4, S)));
    CHECK(parse_slice_fn("i*j", P) == SliceFn::basis_unit(3, P));
    CHECK(parse_slice_fn("1 + 2*3", S) == SliceFn::scalar(ScalarElem::constant(7, S)));
    CHECK(parse_slice_fn("i^2", S) == SliceFn::scalar(ScalarElem::constant(-1, S)));
    CHECK(parse_slice_fn("i^(-1)", S) == -SliceFn::basis_unit(1, S));
    CHECK(parse_slice_fn("x^3", S) ==
          SliceFn::scalar(ScalarElem(RatFun(QPoly(std::vector<Rat>{0, 0, 0, 1})), S)));
}

TEST_CASE("noncommutative order is preserved") {
    // i*j = k but j*i = -k
    CHECK(parse_slice_fn("j*i", P) == -SliceFn::basis_unit(3, P));
    // division multiplies by the inverse on the right
    CHECK(parse_slice_fn("k/i", P) ==
          star_product(SliceFn::basis_unit(3, P), star_inverse(SliceFn::basis_unit(1, P))));
}

TEST_CASE("printer output is parseable and exact") {
    Rng rng(71);
    for (int n = 0; n < 200; ++n) {
        DomainMode m = (n % 2 == 0) ? S : P;
        SliceFn f = testgen::rand_fn(rng, m, 3);
        CHECK(parse_slice_fn(to_string(f), m) == f);
    }
}

TEST_CASE("printer formats") {
    QPoly p(std::vector<Rat>{1, -2, 3});
    CHECK(to_string(p) == "3*x^2 - 2*x + 1");
    CHECK(to_string(QPoly()) == "0");
    CHECK(to_string(QPoly::x()) == "x");
    CHECK(to_string(RatFun(QPoly::x(), QPoly(std::vector<Rat>{-2, 1}))) == "(x)/(x - 2)");

    ScalarElem s(RatFun(QPoly(std::vector<Rat>{1, 0, 1}), QPoly(std::vector<Rat>{-2, 1})),
                 RatFun(3), P);
    CHECK(to_string(s) == "(x^2 + 1)/(x - 2) + J*(3)/(1)");
}
