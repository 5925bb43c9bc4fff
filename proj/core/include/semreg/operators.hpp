#ifndef SEMREG_OPERATORS_HPP
#define SEMREG_OPERATORS_HPP

#include "semreg/linalg.hpp"

namespace semreg {

/// Central-linear operator chi -> sum_n F[n] * chi * G[n].
struct OperatorSpec {
    std::vector<SliceFn> F;
    std::vector<SliceFn> G;

    OperatorSpec(std::vector<SliceFn> F_, std::vector<SliceFn> G_) : F(std::move(F_)), G(std::move(G_)) {
        if (F.size() != G.size()) throw error("OperatorSpec: tuple length mismatch");
        if (F.empty()) throw error("OperatorSpec: empty tuples");
        for (const auto& f : F)
            if (f.is_zero()) throw error("OperatorSpec: zero function in tuple");
        for (const auto& g : G)
            if (g.is_zero()) throw error("OperatorSpec: zero function in tuple");
    }

    FieldMat4 matrix() const { return assemble_LFG(F, G); }
};

SliceFn apply(const OperatorSpec& op, const SliceFn& chi);

/// Invertibility of the operator; determinant test on the assembled matrix.
bool is_isomorphism(const OperatorSpec& op);

/// Solves f * chi * g = b. Invertible case: chi = f^{-*} * b * g^{-*}.
/// Zero-divisor cases: solvable iff sigma_f * b = b (resp. b * rho_g = b)
/// with the idempotents from zero_divisor_decompose; nullopt otherwise.
std::optional<SliceFn> solve_L1(const SliceFn& f, const SliceFn& g, const SliceFn& b);

/// Membership of chi in ker(chi -> f*chi*g) for a singular operator, decided
/// through the idempotent factors of f and g; throws on an isomorphism.
bool kernel_condition_L1(const SliceFn& f, const SliceFn& g, const SliceFn& chi);

enum class SandwichForm { LeftKill, ConjSandwich, SameSandwich };

/// Normal form of rho relative to an idempotent sigma = h * e * h^{-*},
/// where e = (1 - J*i)/2 is the canonical idempotent with axis i:
///   LeftKill     (sigma*rho = 0):         rho = h * e^c * (alpha0 + beta2 j) * h^{-*}
///   ConjSandwich (sigma*rho*sigma^c = 0): rho = h * (alpha0 + alpha1 i + beta2 e^c * j) * h^{-*}
///   SameSandwich (sigma*rho*sigma = 0):   rho = h * (alpha0 e^c + (beta2 + beta3 i) * j) * h^{-*}
struct SandwichDecomposition {
    SandwichForm form;
    SliceFn conjugator;  // invertible h above; 1 when sigma is canonical
    ScalarElem alpha0;
    ScalarElem alpha1;
    ScalarElem beta2;
    ScalarElem beta3;
};

/// Rebuilds rho from its normal form; inverse of the extraction.
SliceFn reassemble(const SandwichDecomposition& d);

/// Decides the annihilation condition selected by `form` and, when it holds,
/// extracts the normal form of rho. sigma must be an idempotent outside {0,1}.
std::optional<SandwichDecomposition> image_membership_extensional(const SliceFn& sigma,
                                                                  const SliceFn& rho,
                                                                  SandwichForm form);

}  // namespace semreg

#endif
