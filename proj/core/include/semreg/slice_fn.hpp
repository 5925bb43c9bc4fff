#ifndef SEMREG_SLICE_FN_HPP
#define SEMREG_SLICE_FN_HPP

#include <array>

#include "semreg/scalar.hpp"

namespace semreg {

/// Constant quaternion with exact rational components.
struct QuatConst {
    std::array<Rat, 4> q{Rat(0), Rat(0), Rat(0), Rat(0)};

    QuatConst() = default;
    QuatConst(Rat q0, Rat q1, Rat q2, Rat q3) : q{std::move(q0), std::move(q1), std::move(q2), std::move(q3)} {}

    static QuatConst one() { return {1, 0, 0, 0}; }
    static QuatConst i() { return {0, 1, 0, 0}; }
    static QuatConst j() { return {0, 0, 1, 0}; }
    static QuatConst k() { return {0, 0, 0, 1}; }

    QuatConst conj() const { return {q[0], -q[1], -q[2], -q[3]}; }
    Rat norm2() const { return q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]; }
    bool is_unit() const { return norm2() == 1; }
    bool is_unit_imaginary() const { return sgn(q[0]) == 0 && is_unit(); }

    friend bool operator==(const QuatConst& a, const QuatConst& b) { return a.q == b.q; }
    friend bool operator!=(const QuatConst& a, const QuatConst& b) { return !(a == b); }
};

/// A slice semi-regular function as coordinates (f0, f1, f2, f3) over the
/// scalar field in the fixed orthonormal basis (1, i, j, k).
class SliceFn {
  public:
    explicit SliceFn(DomainMode mode = DomainMode::Slice)
        : c_{ScalarElem(mode), ScalarElem(mode), ScalarElem(mode), ScalarElem(mode)}, mode_(mode) {}
    SliceFn(ScalarElem f0, ScalarElem f1, ScalarElem f2, ScalarElem f3)
        : c_{std::move(f0), std::move(f1), std::move(f2), std::move(f3)}, mode_(c_[0].mode()) {
        for (const auto& c : c_)
            if (c.mode() != mode_) throw error("SliceFn: mixed domain modes");
    }

    static SliceFn scalar(ScalarElem s) {
        DomainMode m = s.mode();
        return {std::move(s), ScalarElem(m), ScalarElem(m), ScalarElem(m)};
    }
    static SliceFn constant(const QuatConst& q, DomainMode mode) {
        return {ScalarElem::constant(q.q[0], mode), ScalarElem::constant(q.q[1], mode),
                ScalarElem::constant(q.q[2], mode), ScalarElem::constant(q.q[3], mode)};
    }
    static SliceFn one(DomainMode mode) { return scalar(ScalarElem::constant(1, mode)); }
    static SliceFn basis_unit(int n, DomainMode mode) {
        SliceFn f(mode);
        f.c_[static_cast<size_t>(n)] = ScalarElem::constant(1, mode);
        return f;
    }

    const ScalarElem& operator[](int n) const { return c_[static_cast<size_t>(n)]; }
    DomainMode mode() const { return mode_; }

    bool is_zero() const {
        return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
    }
    /// True when the function lies in the scalar (slice preserving) model.
    bool is_central() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

    SliceFn real_part() const { return scalar(c_[0]); }
    SliceFn vector_part() const {
        return {ScalarElem(mode_), c_[1], c_[2], c_[3]};
    }

    friend SliceFn operator+(const SliceFn& f, const SliceFn& g) {
        check_mode(f, g);
        return {f.c_[0] + g.c_[0], f.c_[1] + g.c_[1], f.c_[2] + g.c_[2], f.c_[3] + g.c_[3]};
    }
    friend SliceFn operator-(const SliceFn& f, const SliceFn& g) {
        check_mode(f, g);
        return {f.c_[0] - g.c_[0], f.c_[1] - g.c_[1], f.c_[2] - g.c_[2], f.c_[3] - g.c_[3]};
    }
    friend SliceFn operator-(const SliceFn& f) { return {-f.c_[0], -f.c_[1], -f.c_[2], -f.c_[3]}; }
    friend SliceFn operator*(const ScalarElem& s, const SliceFn& f) {
        return {s * f.c_[0], s * f.c_[1], s * f.c_[2], s * f.c_[3]};
    }

    friend bool operator==(const SliceFn& f, const SliceFn& g) { return f.c_ == g.c_; }
    friend bool operator!=(const SliceFn& f, const SliceFn& g) { return !(f == g); }

    static void check_mode(const SliceFn& f, const SliceFn& g) {
        if (f.mode_ != g.mode_) throw error("SliceFn: domain mode mismatch");
    }

  private:
    std::array<ScalarElem, 4> c_;
    DomainMode mode_;
};

/// The *-product in coordinates; the formal quaternion product with central
/// coefficients.
SliceFn star_product(const SliceFn& f, const SliceFn& g);

/// <f,g>_* = (f * g^c)_0.
ScalarElem star_scalar(const SliceFn& f, const SliceFn& g);

/// f /\_* g = (f*g - g*f)/2; depends only on the vector parts.
SliceFn star_wedge(const SliceFn& f, const SliceFn& g);

/// Regular conjugate f0 - (f1 i + f2 j + f3 k).
SliceFn conjugate(const SliceFn& f);

/// Symmetrization f^s = f0^2 + f1^2 + f2^2 + f3^2 = (f * f^c)_0.
ScalarElem symmetrized(const SliceFn& f);

/// *-inverse (f^s)^{-1} f^c; throws if f is zero or a zero divisor.
SliceFn star_inverse(const SliceFn& f);

/// Integer *-power, n >= 0.
SliceFn star_pow(const SliceFn& f, long n);

bool is_zero_divisor(const SliceFn& f);
bool is_idempotent(const SliceFn& f);

enum class IdemSign { Plus, Minus };

/// The basic idempotent (1 -/+ J I)/2 for a unit imaginary I; Product mode only.
SliceFn basic_idempotent(IdemSign sign, const QuatConst& I, DomainMode mode);

/// First delta in (1, i, j, k) with (f * delta)_0 not identically zero.
QuatConst find_probe_direction(const SliceFn& f);

enum class DecomposeSide { RightIdem, LeftIdem };

/// Zero divisor factored through an idempotent:
///   RightIdem: f = scale * idem * probe^c    (scale = 2 (f probe)_0)
///   LeftIdem:  f = scale * probe^c * idem
struct ZeroDivisorDecomposition {
    ScalarElem scale;
    QuatConst probe;
    SliceFn idem;
};

ZeroDivisorDecomposition zero_divisor_decompose(const SliceFn& f, DecomposeSide side);

/// Reassembles the decomposition; used to validate round trips.
SliceFn reassemble(const ZeroDivisorDecomposition& d, DecomposeSide side, DomainMode mode);

}  // namespace semreg

#endif
