#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "semreg/sylvester.hpp"
#include "support/random_gen.hpp"

using namespace semreg;
using testgen::Rng;

namespace {
const DomainMode S = DomainMode::Slice;
const DomainMode P = DomainMode::Product;

SliceFn unit(int n, DomainMode m = P) { return SliceFn::basis_unit(n, m); }
SliceFn Jfn(int n) { return ScalarElem::J(P) * unit(n); }
ScalarElem c(int v, DomainMode m = P) { return ScalarElem::constant(v, m); }

FieldPoly poly_from(std::vector<int> ascending, DomainMode m) {
    std::vector<ScalarElem> cs;
    for (int v : ascending) cs.push_back(ScalarElem::constant(v, m));
    return FieldPoly(std::move(cs), m);
}

SliceFn apply_S(const SliceFn& f, const SliceFn& g, const SliceFn& chi) {
    return star_product(f, chi) + star_product(chi, g);
}

SliceFn conj_by(const SliceFn& h, const SliceFn& v) {
    return star_product(h, star_product(v, star_inverse(h)));
}

// f0 + g0 = 0 and f_v^s = g_v^s: rank 2 by construction
std::pair<SliceFn, SliceFn> make_rank2(Rng& rng, DomainMode m) {
    SliceFn f = testgen::rand_noncentral(rng, m, 1);
    SliceFn h = testgen::rand_invertible(rng, m, 1);
    SliceFn gv = conj_by(h, f.vector_part());
    return {f, SliceFn::scalar(-f[0]) + gv};
}

// f0 + g0 = 1, f_v^s = -(tau-1/2)^2, g_v^s = -(tau+1/2)^2: singular, rank 3
std::pair<SliceFn, SliceFn> make_rank3(Rng& rng, DomainMode m, const Rat& tau) {
    ScalarElem J = ScalarElem::J(m);
    ScalarElem half = ScalarElem(RatFun(Rat(1, 2)), m);
    ScalarElem t = ScalarElem(RatFun(tau), m);
    SliceFn fv = (J * (half - t)) * unit(1, m);
    SliceFn gv = (J * (half + t)) * unit(1, m);
    SliceFn h1 = testgen::rand_invertible(rng, m, 1);
    SliceFn h2 = testgen::rand_invertible(rng, m, 1);
    if (!fv.is_zero()) fv = conj_by(h1, fv);
    if (!gv.is_zero()) gv = conj_by(h2, gv);
    Rat f0 = testgen::rand_rat(rng);
    SliceFn f = SliceFn::scalar(ScalarElem::constant(f0, m)) + fv;
    SliceFn g = SliceFn::scalar(ScalarElem::constant(1 - f0, m)) + gv;
    return {f, g};
}
}  // namespace

TEST_CASE("sylvester matrix shapes") {
    CHECK(sylvester_matrix(SliceFn(P), SliceFn(P)) == FieldMat4(P));

    FieldMat4 M = sylvester_matrix(unit(1), c(2) * unit(2));
    for (int r = 0; r < 4; ++r) {
        CHECK(M.at(r, r).is_zero());
        for (int col = 0; col < 4; ++col) CHECK(M.at(r, col) == -M.at(col, r));
    }

    FieldMat4 D = sylvester_matrix(Jfn(1), SliceFn::one(P) + c(2) * Jfn(3));
    for (int r = 0; r < 4; ++r) CHECK(D.at(r, r) == c(1));
}

TEST_CASE("characteristic polynomials of the two reference pairs") {
    SliceFn f1 = Jfn(1);
    SliceFn g1 = SliceFn::one(P) + c(2) * Jfn(3);
    CHECK(char_poly_closed(f1, g1) == poly_from({0, 16, -4, -4, 1}, P));
    CHECK(classify(f1, g1).rank == 3);

    SliceFn f2 = SliceFn::one(P) - Jfn(1);
    SliceFn g2 = unit(2) - Jfn(3);
    CHECK(char_poly_closed(f2, g2) == poly_from({0, 0, 4, -4, 1}, P));
    CHECK(classify(f2, g2).rank == 3);
    // the conjugate of f lies in the kernel
    CHECK(apply_S(f2, g2, conjugate(f2)).is_zero());
}

TEST_CASE("closed characteristic polynomial equals the matrix route") {
    CHECK(char_poly_closed(unit(1), unit(1)) == poly_from({0, 0, 4, 0, 1}, P));
    Rng rng(31);
    for (int n = 0; n < 40; ++n) {
        DomainMode m = (n % 2 == 0) ? S : P;
        SliceFn f = testgen::rand_fn(rng, m, 2);
        SliceFn g = testgen::rand_fn(rng, m, 2);
        CHECK(char_poly_closed(f, g) == char_poly(sylvester_matrix(f, g)));
    }
}

TEST_CASE("classification branches") {
    CHECK(classify(unit(1), unit(2)).branch == SylvesterBranch::Rank2);
    CHECK(classify(Jfn(1), SliceFn::one(P) + c(2) * Jfn(3)).branch == SylvesterBranch::Rank3);
    auto r4 = classify(unit(1), c(2) * unit(2));
    CHECK(r4.branch == SylvesterBranch::Rank4);
    CHECK(r4.lambda_L);
    CHECK_FALSE(r4.rerouted);
}

TEST_CASE("central inputs are rerouted") {
    auto rep = classify(SliceFn::one(P), unit(1));
    CHECK(rep.rerouted);
    CHECK(rep.rank == 4);

    auto sing = classify(basic_idempotent(IdemSign::Plus, QuatConst::i(), P), SliceFn(P));
    CHECK(sing.rerouted);
    CHECK(sing.rank < 4);
    for (const auto& v : sing.kernel)
        CHECK(apply_S(basic_idempotent(IdemSign::Plus, QuatConst::i(), P), SliceFn(P), v).is_zero());
}

TEST_CASE("rank trichotomy on random pairs") {
    Rng rng(32);
    for (int n = 0; n < 40; ++n) {
        DomainMode m = (n % 2 == 0) ? S : P;
        SliceFn f = testgen::rand_noncentral(rng, m, 2);
        SliceFn g = testgen::rand_noncentral(rng, m, 2);
        auto rep = classify(f, g);
        CHECK(rep.rank >= 2);
        CHECK(rep.rank == rank(sylvester_matrix(f, g)));
        bool r2 = (f[0] + g[0]).is_zero() &&
                  symmetrized(f.vector_part()) == symmetrized(g.vector_part());
        bool singular = det(sylvester_matrix(f, g)).is_zero();
        if (r2) CHECK(rep.rank == 2);
        if (singular && !r2) CHECK(rep.rank == 3);
        if (!singular) CHECK(rep.rank == 4);
    }
}

TEST_CASE("shift regularization") {
    SliceFn inv1 = SliceFn::one(P) + unit(1);
    CHECK(shift_regularize(inv1, inv1).alpha == 0);

    SliceFn lp = basic_idempotent(IdemSign::Plus, QuatConst::i(), P);
    CHECK(shift_regularize(lp, unit(1)).alpha == 1);
    CHECK(shift_regularize(lp, SliceFn::one(P) + basic_idempotent(IdemSign::Plus, QuatConst::j(), P)).alpha == 3);

    // the operator is invariant under the shift
    Rng rng(33);
    SliceFn f = testgen::rand_fn(rng, P, 2);
    SliceFn g = testgen::rand_fn(rng, P, 2);
    Rat a(7, 2);
    SliceFn fa = f + SliceFn::scalar(ScalarElem::constant(a, P));
    SliceFn ga = g - SliceFn::scalar(ScalarElem::constant(a, P));
    CHECK(sylvester_matrix(f, g) == sylvester_matrix(fa, ga));
}

TEST_CASE("lambda factors") {
    auto [zl, zr] = lambda_LR(unit(1), unit(1));
    CHECK(zl.is_zero());
    CHECK(zr.is_zero());

    auto [lL, lR] = lambda_LR(unit(1), c(2) * unit(2));
    CHECK(lL == c(-3) * unit(1));
    CHECK(lR == ScalarElem(RatFun(Rat(3, 2)), P) * unit(2));

    CHECK_THROWS_AS(lambda_LR(basic_idempotent(IdemSign::Plus, QuatConst::i(), P), unit(1)), error);

    Rng rng(34);
    for (int n = 0; n < 20; ++n) {
        DomainMode m = (n % 2 == 0) ? S : P;
        SliceFn f = testgen::rand_invertible(rng, m, 1);
        SliceFn g = testgen::rand_invertible(rng, m, 1);
        auto [L, R] = lambda_LR(f, g);
        CHECK(symmetrized(f) * symmetrized(L) == det(sylvester_matrix(f, g)));
        CHECK(symmetrized(g) * symmetrized(R) == det(sylvester_matrix(f, g)));
    }
}

TEST_CASE("rank-4 solver") {
    SliceFn chi = solve_rank4(unit(1), c(2) * unit(2), SliceFn::one(P));
    ScalarElem third = ScalarElem(RatFun(Rat(1, 3)), P);
    CHECK(chi == third * (unit(1) - c(2) * unit(2)));
    CHECK(apply_S(unit(1), c(2) * unit(2), chi) == SliceFn::one(P));

    CHECK(solve_rank4(unit(1), c(2) * unit(2), SliceFn(P)).is_zero());
    CHECK_THROWS_AS(solve_rank4(unit(1), unit(2), SliceFn::one(P)), error);

    Rng rng(35);
    int solved = 0;
    while (solved < 20) {
        DomainMode m = (solved % 2 == 0) ? S : P;
        SliceFn f = testgen::rand_noncentral(rng, m, 1);
        SliceFn g = testgen::rand_noncentral(rng, m, 1);
        if (det(sylvester_matrix(f, g)).is_zero()) continue;
        SliceFn b = testgen::rand_fn(rng, m, 1);
        SliceFn x = solve_rank4(f, g, b);
        CHECK(apply_S(f, g, x) == b);
        ++solved;
    }
}

TEST_CASE("rank-2 kernel bases") {
    auto kb = rank2_kernel(unit(1), unit(2));
    for (const SliceFn& t : {kb.tau1, kb.tau2}) {
        CHECK(apply_S(unit(1), unit(2), t).is_zero());
        CHECK_FALSE(symmetrized(t).is_zero());
    }
    REQUIRE(kb.closed);
    CHECK(kb.closed->first == unit(1) - unit(2));
    CHECK(kb.closed->second == c(2) * SliceFn::one(P) + c(2) * unit(3));
    CHECK(apply_S(unit(1), unit(2), kb.closed->first).is_zero());
    CHECK(apply_S(unit(1), unit(2), kb.closed->second).is_zero());

    SliceFn sigma = basic_idempotent(IdemSign::Plus, QuatConst::i(), P);
    CHECK(apply_S(sigma, -sigma, SliceFn::one(P)).is_zero());
    CHECK(apply_S(sigma, -sigma, conjugate(sigma)).is_zero());
    auto kbs = rank2_kernel(sigma, -sigma);
    CHECK_FALSE(symmetrized(kbs.tau1).is_zero());
    CHECK_FALSE(symmetrized(kbs.tau2).is_zero());

    CHECK_THROWS_AS(rank2_kernel(unit(1), c(2) * unit(2)), error);

    Rng rng(36);
    for (int n = 0; n < 15; ++n) {
        DomainMode m = (n % 2 == 0) ? S : P;
        auto [f, g] = make_rank2(rng, m);
        auto k = rank2_kernel(f, g);
        for (const SliceFn& t : {k.tau1, k.tau2}) {
            CHECK(apply_S(f, g, t).is_zero());
            CHECK_FALSE(symmetrized(t).is_zero());
        }
        if (k.closed) {
            CHECK(apply_S(f, g, k.closed->first).is_zero());
            CHECK(apply_S(f, g, k.closed->second).is_zero());
        }
    }
}

TEST_CASE("zero divisors in rank-2 kernels") {
    auto one = rank2_zero_divisor_in_kernel(Jfn(1), Jfn(1));
    CHECK(one.present);
    CHECK(one.which_case == 1);

    auto three = rank2_zero_divisor_in_kernel(unit(1), unit(2));
    CHECK(three.present);
    CHECK(three.which_case == 3);
    REQUIRE(three.witness);
    CHECK(symmetrized(*three.witness).is_zero());
    CHECK(apply_S(unit(1), unit(2), *three.witness).is_zero());

    // (f_v - g_v)^s = 0 with f_v != g_v
    SliceFn fv = unit(1) + unit(2) - Jfn(3);
    SliceFn gv = unit(1) - unit(2) + Jfn(3);
    auto two = rank2_zero_divisor_in_kernel(fv, gv);
    CHECK(two.present);
    CHECK(two.which_case == 2);

    // slice mode never has one
    auto none = rank2_zero_divisor_in_kernel(unit(1, S), unit(2, S));
    CHECK_FALSE(none.present);

    // f_v = g_v with no model square root of f_v^s
    SliceFn fq = unit(1, P) + unit(2, P);  // f_v^s = 2
    auto absent = rank2_zero_divisor_in_kernel(fq, fq);
    CHECK_FALSE(absent.present);
    CHECK(absent.which_case == 1);
}

TEST_CASE("rank-2 particular solutions") {
    SliceFn b = SliceFn::one(P) - unit(3);
    auto chi = rank2_solve(unit(1), unit(2), b);
    REQUIRE(chi);
    ScalarElem mhalf = ScalarElem(RatFun(Rat(-1, 2)), P);
    CHECK(*chi == mhalf * (unit(1) + unit(2)));
    CHECK(apply_S(unit(1), unit(2), *chi) == b);

    CHECK_FALSE(rank2_solve(unit(1), unit(2), SliceFn::one(P)).has_value());
    auto z = rank2_solve(unit(1), unit(2), SliceFn(P));
    REQUIRE(z);
    CHECK(z->is_zero());

    Rng rng(37);
    for (int n = 0; n < 15; ++n) {
        DomainMode m = (n % 2 == 0) ? S : P;
        auto [f, g] = make_rank2(rng, m);
        // manufacture a solvable right-hand side
        SliceFn b2 = apply_S(f, g, testgen::rand_fn(rng, m, 1));
        auto sol = rank2_solve(f, g, b2);
        REQUIRE(sol);
        CHECK(apply_S(f, g, *sol) == b2);
        bool condition = (star_product(conjugate(f), b2) + star_product(b2, g)).is_zero();
        CHECK(condition);
    }
}

TEST_CASE("rank-2 image condition matches matrix solvability") {
    Rng rng(38);
    auto [f, g] = make_rank2(rng, P);
    FieldMat4 M = sylvester_matrix(f, g);
    for (int n = 0; n < 30; ++n) {
        SliceFn b = testgen::rand_fn(rng, P, 1);
        bool closed = (star_product(conjugate(f), b) + star_product(b, g)).is_zero();
        bool matrix = solve(M, FieldVec4(b)).has_value();
        CHECK(closed == matrix);
    }
}

TEST_CASE("rank-3 structure, generic subcase") {
    SliceFn f = Jfn(1);
    SliceFn g = SliceFn::one(P) + c(2) * Jfn(3);
    auto st = rank3_structure(f, g);
    CHECK(st.subcase == Rank3Subcase::BothNonzero);
    REQUIRE(st.kernel.size() == 1);
    CHECK(apply_S(f, g, st.kernel[0]).is_zero());
    REQUIRE(st.tau);
    ScalarElem half = ScalarElem(RatFun(Rat(1, 2)), P);
    ScalarElem dm = *st.tau - half;
    CHECK(symmetrized(f.vector_part()) == -(dm * dm));
    REQUIRE(st.closed_generator);
    CHECK(apply_S(f, g, *st.closed_generator).is_zero());

    CHECK_THROWS_AS(rank3_structure(unit(1), unit(2)), error);

    Rng rng(39);
    for (Rat tau : {Rat(3, 2), Rat(5, 2), Rat(-3, 2)}) {
        auto [rf, rg] = make_rank3(rng, P, tau);
        auto str = rank3_structure(rf, rg);
        CHECK(str.subcase == Rank3Subcase::BothNonzero);
        REQUIRE(str.kernel.size() == 1);
        CHECK(apply_S(rf, rg, str.kernel[0]).is_zero());
        CHECK(symmetrized(str.kernel[0]).is_zero());  // only zero divisors in a rank-3 kernel
        REQUIRE(str.tau);
    }
}

TEST_CASE("rank-3 structure, degenerate subcases") {
    SliceFn f = SliceFn::one(P) - Jfn(1);
    SliceFn g = unit(2) - Jfn(3);
    auto st = rank3_structure(f, g);
    CHECK(st.subcase == Rank3Subcase::GvsZero);
    REQUIRE(st.kernel.size() == 1);
    CHECK(apply_S(f, g, st.kernel[0]).is_zero());
    REQUIRE(st.closed_generator);

    // swapped roles: the f-side vector part is the zero divisor
    auto sw = rank3_structure(g, f);
    CHECK(sw.subcase == Rank3Subcase::FvsZero);
    CHECK(apply_S(g, f, sw.kernel[0]).is_zero());

    // solvability in the degenerate subcase: (1-f_v)*b*g_v = 0 iff solvable
    Rng rng(40);
    ScalarElem u = (f[0] + g[0]).inverse();
    SliceFn fv = (u * f).vector_part();
    SliceFn gv = (u * g).vector_part();
    FieldMat4 M = sylvester_matrix(f, g);
    for (int n = 0; n < 20; ++n) {
        SliceFn b = testgen::rand_fn(rng, P, 1);
        bool closed = star_product(SliceFn::one(P) - fv, star_product(b, gv)).is_zero();
        bool matrix = solve(M, FieldVec4(b)).has_value();
        CHECK(closed == matrix);
    }
}

TEST_CASE("idempotents in rank-3 kernels") {
    SliceFn f = SliceFn::one(P) - Jfn(1);
    SliceFn g = unit(2) - Jfn(3);
    auto idem = rank3_idempotent_in_kernel(f, g);
    REQUIRE(idem);
    CHECK(is_idempotent(*idem));
    CHECK(apply_S(f, g, *idem).is_zero());

    // presence is not symmetric in f and g: the swapped pair has a kernel
    // generator with vanishing real part
    CHECK_FALSE(rank3_idempotent_in_kernel(g, f).has_value());

    // generic rank-3 pairs carry the idempotent in both directions
    Rng rng(41);
    for (int n = 0; n < 3; ++n) {
        auto [rf, rg] = make_rank3(rng, P, Rat(3, 2));
        auto fwd = rank3_idempotent_in_kernel(rf, rg);
        REQUIRE(fwd);
        CHECK(is_idempotent(*fwd));
        CHECK(apply_S(rf, rg, *fwd).is_zero());
        CHECK(rank3_idempotent_in_kernel(rg, rf).has_value());
    }
}
