#ifndef SEMREG_SYLVESTER_HPP
#define SEMREG_SYLVESTER_HPP

#include "semreg/operators.hpp"

namespace semreg {

enum class SylvesterBranch { Rank4, Rank3, Rank2 };

/// Outcome of classifying chi -> f*chi + chi*g.
struct SylvesterReport {
    int rank = 0;
    FieldPoly char_poly;
    SylvesterBranch branch = SylvesterBranch::Rank4;
    /// True when f or g is central; such inputs reduce to one-sided
    /// multiplication operators and skip the rank trichotomy.
    bool rerouted = false;
    std::vector<SliceFn> kernel;                 // singular branches
    std::optional<SliceFn> lambda_L, lambda_R;   // rank 4, for the shifted pair
    Rat shift = 0;                               // shift used for lambda_L/lambda_R
    bool zero_divisor_in_kernel = false;         // rank 2 only
    int zero_divisor_case = 0;                   // 1..3 when the flag is set
};

struct ShiftChoice {
    Rat alpha;
};

/// Matrix of the operator on coordinates: iota_L(f) + iota_R(g).
FieldMat4 sylvester_matrix(const SliceFn& f, const SliceFn& g);

/// Closed form of det(S - lambda Id):
/// (f0+g0-lambda)^2 [(f0+g0-lambda)^2 + 2(f_v^s+g_v^s)] + (f_v^s-g_v^s)^2.
FieldPoly char_poly_closed(const SliceFn& f, const SliceFn& g);

SylvesterReport classify(const SliceFn& f, const SliceFn& g);

/// Smallest integer alpha (0, 1, 2, ... then -1, -2, ...) making f+alpha and
/// g-alpha both non zero divisors; the operator is invariant under the shift.
ShiftChoice shift_regularize(const SliceFn& f, const SliceFn& g);

/// lambda_L = 2 g0 + f + g^s f^{-*}, lambda_R = 2 f0 + g + f^s g^{-*}.
/// Satisfies f^s lambda_L^s = det(S_{f,g}). Throws on zero-divisor input.
std::pair<SliceFn, SliceFn> lambda_LR(const SliceFn& f, const SliceFn& g);

/// Closed-form solution of f*chi + chi*g = b in the invertible case, via
/// chi = lambda_L^{-*} * (b + f^{-*}*b*g^c) after an alpha-shift; the
/// lambda_R route is computed too and must agree.
SliceFn solve_rank4(const SliceFn& f, const SliceFn& g, const SliceFn& b);

struct Rank2Kernel {
    SliceFn tau1, tau2;  // invertible kernel basis
    /// (f_v - g_v, f_v^s + g_v^s + 2 f_v*g_v) when (f_v - g_v)^s != 0.
    std::optional<std::pair<SliceFn, SliceFn>> closed;
};

Rank2Kernel rank2_kernel(const SliceFn& f, const SliceFn& g);

struct ZeroDivisorKernelReport {
    bool present = false;
    std::optional<SliceFn> witness;  // in the kernel, symmetrization zero
    int which_case = 0;              // 1: f_v = g_v; 2: (f_v-g_v)^s = 0; 3: otherwise
};

ZeroDivisorKernelReport rank2_zero_divisor_in_kernel(const SliceFn& f, const SliceFn& g);

/// Particular solution in the rank-2 case; nullopt iff f^c*b + b*g != 0.
std::optional<SliceFn> rank2_solve(const SliceFn& f, const SliceFn& g, const SliceFn& b);

enum class Rank3Subcase { BothNonzero, GvsZero, FvsZero };

struct Rank3Structure {
    Rank3Subcase subcase = Rank3Subcase::BothNonzero;
    /// Central tau with f_v^s = -(tau - 1/2)^2 and g_v^s = -(tau + 1/2)^2
    /// after dividing f, g by f0+g0; absent when the square root needed to
    /// recover it lies outside the model field.
    std::optional<ScalarElem> tau;
    std::vector<SliceFn> kernel;  // from matrix elimination, dimension 1
    /// Closed-form kernel generator when constructible: conjugated J j + k in
    /// the BothNonzero subcase, (1 - f_v)*delta*g_v style otherwise.
    std::optional<SliceFn> closed_generator;
};

Rank3Structure rank3_structure(const SliceFn& f, const SliceFn& g);

/// The unique idempotent in the rank-3 kernel, when the kernel generator has
/// nonzero real part; nullopt otherwise.
std::optional<SliceFn> rank3_idempotent_in_kernel(const SliceFn& f, const SliceFn& g);

}  // namespace semreg

#endif
