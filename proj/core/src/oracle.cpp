#include "semreg/oracle.hpp"

#include <sstream>

namespace semreg {

namespace {

constexpr double kVecFloor = 0.1;
constexpr double kDenFloor = 1e-6;

QuatF eval_poly(const QPoly& p, const QuatF& q) {
    QuatF acc{};
    for (int n = p.degree(); n >= 0; --n) {
        acc = acc * q;
        acc.w += p.coeff(n).get_d();
    }
    return acc;
}

QuatF eval_ratfun(const RatFun& r, const QuatF& q) {
    QuatF den = eval_poly(r.den(), q);
    if (den.norm() < kDenFloor) {
        std::ostringstream msg;
        msg << "eval: denominator magnitude " << den.norm() << " below " << kDenFloor
            << " (near a pole)";
        throw error(msg.str());
    }
    return eval_poly(r.num(), q) * den.inverse();
}

}  // namespace

QuatF eval_scalar(const ScalarElem& s, const QuatF& q) {
    if (q.vec_norm() < kVecFloor) throw error("eval: point too close to the real axis");
    QuatF value = eval_ratfun(s.a(), q);
    if (!s.b().is_zero()) value = value + eval_ratfun(s.b(), q) * q.axis();
    return value;
}

QuatF eval_slicefn(const SliceFn& f, const QuatF& q) {
    static const QuatF units[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    QuatF acc{};
    for (int n = 0; n < 4; ++n) acc = acc + eval_scalar(f[n], q) * units[n];
    return acc;
}

bool check_star_pointwise(const SliceFn& f, const SliceFn& g, const QuatF& q, double tol) {
    QuatF lhs = eval_slicefn(star_product(f, g), q);
    QuatF fq = eval_slicefn(f, q);
    if (fq.norm() < tol) return lhs.norm() <= tol * (1 + lhs.norm());
    QuatF moved = fq.inverse() * q * fq;
    QuatF rhs = fq * eval_slicefn(g, moved);
    return (lhs - rhs).norm() <= tol * (1 + lhs.norm() + rhs.norm());
}

}  // namespace semreg
