#include "semreg/equivalence.hpp"

#include "semreg/sylvester.hpp"

namespace semreg {

namespace {

ScalarElem vec_sym(const SliceFn& f) { return symmetrized(f.vector_part()); }

}  // namespace

bool are_equivalent(const SliceFn& f, const SliceFn& g) {
    SliceFn::check_mode(f, g);
    bool fc = f.is_central();
    bool gc = g.is_central();
    if (fc || gc) return fc && gc && f == g;  // conjugation fixes the center
    return f[0] == g[0] && vec_sym(f) == vec_sym(g);
}

EquivalenceWitness conjugator(const SliceFn& f, const SliceFn& g) {
    if (!are_equivalent(f, g)) throw error("conjugator: functions are not equivalent");
    if (f.is_central()) return {SliceFn::one(f.mode())};
    // ker(S_{f,-g}) carries an invertible basis; any invertible element
    // conjugates: f*h = h*g.
    SliceFn h = rank2_kernel(f, -g).tau1;
    if (star_product(f, h) != star_product(h, g)) throw error("conjugator: verification failed");
    return {h};
}

std::pair<bool, std::optional<SliceFn>> equivalent_to_one_slice_preserving(const SliceFn& f) {
    if (f.is_central()) return {true, f};
    ScalarElem fvs = vec_sym(f);
    if (fvs.is_zero()) return {false, std::nullopt};
    auto gamma = fvs.sqrt();
    if (!gamma) return {false, std::nullopt};
    SliceFn canonical = SliceFn::scalar(f[0]) + *gamma * SliceFn::basis_unit(1, f.mode());
    return {true, canonical};
}

std::optional<SliceFn> intertwines_with_zero_divisor(const SliceFn& f, const SliceFn& g) {
    SliceFn::check_mode(f, g);
    DomainMode mode = f.mode();
    if (mode == DomainMode::Slice) return std::nullopt;

    auto verified = [&](const SliceFn& sigma) -> std::optional<SliceFn> {
        if (sigma.is_zero() || !symmetrized(sigma).is_zero()) return std::nullopt;
        if (star_product(f, sigma) != star_product(sigma, g)) return std::nullopt;
        return sigma;
    };

    FieldMat4 S = sylvester_matrix(f, -g);
    auto kb = kernel_basis(S);
    if (kb.empty()) {
        // S identically zero means every function intertwines
        bool all_zero = true;
        for (int r = 0; r < 4 && all_zero; ++r)
            for (int c = 0; c < 4 && all_zero; ++c)
                if (!S.at(r, c).is_zero()) all_zero = false;
        if (all_zero) return verified(basic_idempotent(IdemSign::Plus, QuatConst::i(), mode));
        return std::nullopt;
    }

    std::vector<SliceFn> basis;
    for (const auto& v : kb) basis.push_back(v.to_slice_fn());
    for (const auto& b : basis)
        if (symmetrized(b).is_zero())
            if (auto w = verified(b)) return w;

    // Look for a zero divisor alpha*v + w inside a 2-plane of the kernel:
    // alpha^2 v^s + 2 alpha <v,w>_* + w^s = 0 over the central field.
    for (size_t n = 0; n < basis.size(); ++n) {
        for (size_t m = 0; m < basis.size(); ++m) {
            if (n == m) continue;
            ScalarElem a = symmetrized(basis[n]);
            if (a.is_zero()) continue;
            ScalarElem b = star_scalar(basis[n], basis[m]);
            ScalarElem c = symmetrized(basis[m]);
            auto root = (b * b - a * c).sqrt();
            if (!root) continue;
            for (const ScalarElem& r : {*root, -*root}) {
                ScalarElem alpha = (r - b) / a;
                SliceFn cand = alpha * basis[n] + basis[m];
                if (auto w = verified(cand)) return w;
            }
        }
    }
    return std::nullopt;
}

}  // namespace semreg
