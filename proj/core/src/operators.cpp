#include "semreg/operators.hpp"

#include "semreg/equivalence.hpp"

namespace semreg {

SliceFn apply(const OperatorSpec& op, const SliceFn& chi) {
    SliceFn acc(chi.mode());
    for (size_t n = 0; n < op.F.size(); ++n)
        acc = acc + star_product(op.F[n], star_product(chi, op.G[n]));
    return acc;
}

bool is_isomorphism(const OperatorSpec& op) { return !det(op.matrix()).is_zero(); }

std::optional<SliceFn> solve_L1(const SliceFn& f, const SliceFn& g, const SliceFn& b) {
    if (f.is_zero() || g.is_zero()) throw error("solve_L1: zero factor");
    bool fzd = is_zero_divisor(f);
    bool gzd = is_zero_divisor(g);
    if (!fzd && !gzd) return star_product(star_inverse(f), star_product(b, star_inverse(g)));

    if (fzd) {
        auto d = zero_divisor_decompose(f, DecomposeSide::RightIdem);
        if (star_product(d.idem, b) != b) return std::nullopt;
        SliceFn delta = SliceFn::constant(d.probe, f.mode());
        if (!gzd) {
            return d.scale.inverse() *
                   star_product(delta, star_product(b, star_inverse(g)));
        }
        auto e = zero_divisor_decompose(g, DecomposeSide::LeftIdem);
        if (star_product(b, e.idem) != b) return std::nullopt;
        SliceFn eta = SliceFn::constant(e.probe, g.mode());
        return (d.scale * e.scale).inverse() * star_product(delta, star_product(b, eta));
    }

    auto e = zero_divisor_decompose(g, DecomposeSide::LeftIdem);
    if (star_product(b, e.idem) != b) return std::nullopt;
    SliceFn eta = SliceFn::constant(e.probe, g.mode());
    return e.scale.inverse() * star_product(star_inverse(f), star_product(b, eta));
}

bool kernel_condition_L1(const SliceFn& f, const SliceFn& g, const SliceFn& chi) {
    if (f.is_zero() || g.is_zero()) throw error("kernel_condition_L1: zero factor");
    bool fzd = is_zero_divisor(f);
    bool gzd = is_zero_divisor(g);
    if (!fzd && !gzd) throw error("kernel_condition_L1: operator is an isomorphism");
    if (fzd && !gzd) {
        auto rho_f = zero_divisor_decompose(f, DecomposeSide::LeftIdem).idem;
        return star_product(rho_f, chi).is_zero();
    }
    if (gzd && !fzd) {
        auto sigma_g = zero_divisor_decompose(g, DecomposeSide::RightIdem).idem;
        return star_product(chi, sigma_g).is_zero();
    }
    auto rho_f = zero_divisor_decompose(f, DecomposeSide::LeftIdem).idem;
    auto sigma_g = zero_divisor_decompose(g, DecomposeSide::RightIdem).idem;
    return star_product(rho_f, star_product(chi, sigma_g)).is_zero();
}

namespace {

SliceFn canonical_form(const SandwichDecomposition& d, DomainMode mode) {
    SliceFn ec = conjugate(basic_idempotent(IdemSign::Plus, QuatConst::i(), mode));
    SliceFn i = SliceFn::basis_unit(1, mode);
    SliceFn j = SliceFn::basis_unit(2, mode);
    SliceFn k = SliceFn::basis_unit(3, mode);
    switch (d.form) {
        case SandwichForm::LeftKill:
            return star_product(ec, SliceFn::scalar(d.alpha0) + d.beta2 * j);
        case SandwichForm::ConjSandwich:
            return SliceFn::scalar(d.alpha0) + d.alpha1 * i + d.beta2 * star_product(ec, j);
        case SandwichForm::SameSandwich:
            return d.alpha0 * ec + d.beta2 * j + d.beta3 * k;
    }
    throw error("canonical_form: bad form");
}

}  // namespace

SliceFn reassemble(const SandwichDecomposition& d) {
    DomainMode mode = d.conjugator.mode();
    SliceFn core = canonical_form(d, mode);
    if (d.conjugator == SliceFn::one(mode)) return core;
    return star_product(d.conjugator, star_product(core, star_inverse(d.conjugator)));
}

std::optional<SandwichDecomposition> image_membership_extensional(const SliceFn& sigma,
                                                                  const SliceFn& rho,
                                                                  SandwichForm form) {
    if (!is_idempotent(sigma)) throw error("image_membership_extensional: sigma is not idempotent");
    DomainMode mode = sigma.mode();
    if (sigma.is_zero() || sigma == SliceFn::one(mode))
        throw error("image_membership_extensional: sigma must be a proper idempotent");

    SliceFn test(mode);
    switch (form) {
        case SandwichForm::LeftKill: test = star_product(sigma, rho); break;
        case SandwichForm::ConjSandwich:
            test = star_product(sigma, star_product(rho, conjugate(sigma)));
            break;
        case SandwichForm::SameSandwich:
            test = star_product(sigma, star_product(rho, sigma));
            break;
    }
    if (!test.is_zero()) return std::nullopt;

    SliceFn canon = basic_idempotent(IdemSign::Plus, QuatConst::i(), mode);
    SliceFn h = SliceFn::one(mode);
    SliceFn r = rho;
    if (sigma != canon) {
        h = conjugator(sigma, canon).h;
        r = star_product(star_inverse(h), star_product(rho, h));
    }

    ScalarElem two = ScalarElem::constant(2, mode);
    SandwichDecomposition d{form, h, ScalarElem(mode), ScalarElem(mode), ScalarElem(mode),
                            ScalarElem(mode)};
    switch (form) {
        case SandwichForm::LeftKill:
            d.alpha0 = two * r[0];
            d.beta2 = two * r[2];
            break;
        case SandwichForm::ConjSandwich:
            d.alpha0 = r[0];
            d.alpha1 = r[1];
            d.beta2 = two * r[2];
            break;
        case SandwichForm::SameSandwich:
            d.alpha0 = two * r[0];
            d.beta2 = r[2];
            d.beta3 = r[3];
            break;
    }
    if (reassemble(d) != rho) throw error("image_membership_extensional: extraction failed to round-trip");
    return d;
}

}  // namespace semreg
