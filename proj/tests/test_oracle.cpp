#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "semreg/oracle.hpp"
#include "semreg/parser.hpp"
#include "support/random_gen.hpp"

using namespace semreg;
using testgen::Rng;

namespace {
const DomainMode S = DomainMode::Slice;
const DomainMode P = DomainMode::Product;

bool close(const QuatF& a, const QuatF& b, double tol = 1e-9) {
    return (a - b).norm() <= tol * (1 + a.norm() + b.norm());
}

QuatF rand_point(Rng& rng) {
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (;;) {
        QuatF q{d(rng), d(rng), d(rng), d(rng)};
        if (q.vec_norm() > 0.5) return q;
    }
}
}  // namespace

TEST_CASE("scalar evaluation") {
    QuatF q{1, 2, 0, 0};
    CHECK(close(eval_scalar(ScalarElem::x(S), q), q));

    CHECK(close(eval_scalar(ScalarElem::J(P), QuatF{3, 0, 4, 0}), QuatF{0, 0, 1, 0}));
    CHECK(close(eval_scalar(ScalarElem::J(P), QuatF{3, 0, -4, 0}), QuatF{0, 0, -1, 0}));

    CHECK_THROWS_AS(eval_scalar(ScalarElem::x(S), QuatF{1, 0.01, 0, 0}), error);

    ScalarElem pole(RatFun(QPoly(1), QPoly::x()), S);  // 1/x
    CHECK_THROWS_AS(eval_scalar(pole, QuatF{0, 1e-9, 0, 0}), error);
}

TEST_CASE("function evaluation") {
    SliceFn lp = basic_idempotent(IdemSign::Plus, QuatConst::i(), P);
    CHECK(close(eval_slicefn(lp, QuatF{2, 0, 3, 0}), QuatF{0.5, 0, 0, 0.5}));

    QuatF q{1, 1, 1, 0};
    CHECK(close(eval_slicefn(SliceFn::one(P), q), QuatF{1, 0, 0, 0}));
    CHECK(close(eval_slicefn(SliceFn::basis_unit(1, P), q), QuatF{0, 1, 0, 0}));
}

TEST_CASE("evaluation lands in the slice plane") {
    Rng rng(61);
    for (int n = 0; n < 50; ++n) {
        QuatF q = rand_point(rng);
        QuatF ax = q.axis();
        CHECK(std::abs((ax * ax + QuatF{1, 0, 0, 0}).norm()) < 1e-12);
        ScalarElem s = testgen::rand_scalar(rng, P, 3);
        QuatF v;
        try {
            v = eval_scalar(s, q);
        } catch (const error&) {
            continue;  // resample poles
        }
        // component orthogonal to span{1, axis}
        QuatF vec{0, v.x, v.y, v.z};
        double along = vec.x * ax.x + vec.y * ax.y + vec.z * ax.z;
        QuatF residual = vec - along * ax;
        CHECK(residual.norm() < 1e-9 * (1 + v.norm()));
    }
}

TEST_CASE("pointwise product identity") {
    SliceFn i = SliceFn::basis_unit(1, P);
    SliceFn j = SliceFn::basis_unit(2, P);
    CHECK(check_star_pointwise(i, j, QuatF{1, 0, 0, 2}, 1e-9));

    SliceFn x = SliceFn::scalar(ScalarElem::x(P));
    CHECK(check_star_pointwise(x, i, QuatF{1, 0, 2, 0}, 1e-9));

    Rng rng(62);
    for (int n = 0; n < 60; ++n) {
        DomainMode m = (n % 2 == 0) ? S : P;
        SliceFn f = testgen::rand_fn(rng, m, 3);
        SliceFn g = testgen::rand_fn(rng, m, 3);
        for (int p = 0; p < 5; ++p) {
            QuatF q = rand_point(rng);
            try {
                CHECK(check_star_pointwise(f, g, q, 1e-9));
            } catch (const error&) {
                // pole of a coordinate; resampling is the caller's job
            }
        }
    }
}

TEST_CASE("exact identities hold pointwise") {
    Rng rng(63);
    for (int n = 0; n < 20; ++n) {
        SliceFn f = testgen::rand_invertible(rng, P, 2);
        SliceFn inv = star_inverse(f);
        for (int p = 0; p < 5; ++p) {
            QuatF q = rand_point(rng);
            try {
                QuatF lhs = eval_slicefn(star_product(f, conjugate(f)), q);
                QuatF sym = eval_scalar(symmetrized(f), q);
                CHECK(close(lhs, sym));
                QuatF prod = eval_slicefn(star_product(f, inv), q);
                CHECK(close(prod, QuatF{1, 0, 0, 0}));
            } catch (const error&) {
            }
        }
    }
}
