#include "semreg/slice_fn.hpp"

namespace semreg {

SliceFn star_product(const SliceFn& f, const SliceFn& g) {
    SliceFn::check_mode(f, g);
    const ScalarElem &f0 = f[0], &f1 = f[1], &f2 = f[2], &f3 = f[3];
    const ScalarElem &g0 = g[0], &g1 = g[1], &g2 = g[2], &g3 = g[3];
    return {f0 * g0 - f1 * g1 - f2 * g2 - f3 * g3,
            f1 * g0 + f0 * g1 - f3 * g2 + f2 * g3,
            f2 * g0 + f3 * g1 + f0 * g2 - f1 * g3,
            f3 * g0 - f2 * g1 + f1 * g2 + f0 * g3};
}

ScalarElem star_scalar(const SliceFn& f, const SliceFn& g) {
    SliceFn::check_mode(f, g);
    return f[0] * g[0] + f[1] * g[1] + f[2] * g[2] + f[3] * g[3];
}

SliceFn star_wedge(const SliceFn& f, const SliceFn& g) {
    SliceFn::check_mode(f, g);
    return {ScalarElem(f.mode()),
            f[2] * g[3] - f[3] * g[2],
            f[3] * g[1] - f[1] * g[3],
            f[1] * g[2] - f[2] * g[1]};
}

SliceFn conjugate(const SliceFn& f) { return {f[0], -f[1], -f[2], -f[3]}; }

ScalarElem symmetrized(const SliceFn& f) { return star_scalar(f, f); }

SliceFn star_inverse(const SliceFn& f) {
    ScalarElem s = symmetrized(f);
    if (s.is_zero()) {
        throw error(f.is_zero() ? "star_inverse: zero function"
                                : "star_inverse: zero divisor");
    }
    return s.inverse() * conjugate(f);
}

SliceFn star_pow(const SliceFn& f, long n) {
    if (n < 0) throw error("star_pow: negative exponent");
    SliceFn acc = SliceFn::one(f.mode());
    SliceFn base = f;
    while (n > 0) {
        if (n & 1) acc = star_product(acc, base);
        base = star_product(base, base);
        n >>= 1;
    }
    return acc;
}

bool is_zero_divisor(const SliceFn& f) { return !f.is_zero() && symmetrized(f).is_zero(); }

bool is_idempotent(const SliceFn& f) { return star_product(f, f) == f; }

SliceFn basic_idempotent(IdemSign sign, const QuatConst& I, DomainMode mode) {
    if (mode != DomainMode::Product) throw error("basic_idempotent: requires product mode");
    if (!I.is_unit_imaginary()) throw error("basic_idempotent: axis must be a unit imaginary quaternion");
    ScalarElem half = ScalarElem(RatFun(Rat(1, 2)), mode);
    ScalarElem coef = half * ScalarElem::J(mode);
    if (sign == IdemSign::Plus) coef = -coef;
    return SliceFn::scalar(half) + coef * SliceFn::constant(I, mode);
}

QuatConst find_probe_direction(const SliceFn& f) {
    if (!f[0].is_zero()) return QuatConst::one();
    if (!f[1].is_zero()) return QuatConst::i();
    if (!f[2].is_zero()) return QuatConst::j();
    if (!f[3].is_zero()) return QuatConst::k();
    throw error("find_probe_direction: zero function");
}

ZeroDivisorDecomposition zero_divisor_decompose(const SliceFn& f, DecomposeSide side) {
    if (!is_zero_divisor(f)) throw error("zero_divisor_decompose: input is not a zero divisor");
    QuatConst probe = find_probe_direction(f);
    SliceFn delta = SliceFn::constant(probe, f.mode());
    ScalarElem scale = ScalarElem::constant(2, f.mode()) * star_product(f, delta)[0];
    SliceFn idem = side == DecomposeSide::RightIdem
                       ? scale.inverse() * star_product(f, delta)
                       : scale.inverse() * star_product(delta, f);
    return {scale, probe, idem};
}

SliceFn reassemble(const ZeroDivisorDecomposition& d, DecomposeSide side, DomainMode mode) {
    SliceFn dc = SliceFn::constant(d.probe.conj(), mode);
    SliceFn prod = side == DecomposeSide::RightIdem ? star_product(d.idem, dc)
                                                    : star_product(dc, d.idem);
    return d.scale * prod;
}

}  // namespace semreg
