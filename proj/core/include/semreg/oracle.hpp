#ifndef SEMREG_ORACLE_HPP
#define SEMREG_ORACLE_HPP

#include <cmath>

#include "semreg/slice_fn.hpp"

namespace semreg {

/// Floating-point quaternion for pointwise cross-checks of the exact layer.
struct QuatF {
    double w = 0, x = 0, y = 0, z = 0;

    friend QuatF operator+(const QuatF& a, const QuatF& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend QuatF operator-(const QuatF& a, const QuatF& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend QuatF operator*(const QuatF& a, const QuatF& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
    friend QuatF operator*(double s, const QuatF& a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }

    QuatF conj() const { return {w, -x, -y, -z}; }
    double norm2() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }
    double vec_norm() const { return std::sqrt(x * x + y * y + z * z); }
    QuatF inverse() const { return (1.0 / norm2()) * conj(); }

    /// Unit vector part; the value of the slice constant at this point.
    QuatF axis() const {
        double n = vec_norm();
        return {0, x / n, y / n, z / n};
    }
};

/// Value a(q) + b(q) axis(q); throws when q is too close to a pole or to the
/// real axis.
QuatF eval_scalar(const ScalarElem& s, const QuatF& q);

/// Coordinate-wise value f0(q) + f1(q) i + f2(q) j + f3(q) k.
QuatF eval_slicefn(const SliceFn& f, const QuatF& q);

/// Compares the algebraic product evaluated at q with the compositional
/// definition f(q) g(f(q)^{-1} q f(q)); the zero branch of the definition is
/// used when |f(q)| is negligible.
bool check_star_pointwise(const SliceFn& f, const SliceFn& g, const QuatF& q, double tol);

}  // namespace semreg

#endif
