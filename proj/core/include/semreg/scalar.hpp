#ifndef SEMREG_SCALAR_HPP
#define SEMREG_SCALAR_HPP

#include "semreg/ratfun.hpp"

namespace semreg {

/// Slice domains meet the real axis and carry no zero divisors; product
/// domains are disjoint from it and admit the slice constant J with J^2 = -1.
enum class DomainMode { Slice, Product };

inline const char* to_string(DomainMode m) {
    return m == DomainMode::Slice ? "slice" : "product";
}

/// Element a + b*J of the computable model of the slice preserving field:
/// a, b rational functions over Q. In Slice mode b is identically zero.
///
/// Square-root existence is decided relative to this model field, not the
/// full field of slice preserving semi-regular functions; a negative answer
/// means "no root with rational-function coordinates".
class ScalarElem {
  public:
    explicit ScalarElem(DomainMode mode = DomainMode::Slice) : mode_(mode) {}
    ScalarElem(RatFun a, DomainMode mode) : a_(std::move(a)), mode_(mode) {}
    ScalarElem(RatFun a, RatFun b, DomainMode mode) : a_(std::move(a)), b_(std::move(b)), mode_(mode) {
        if (mode_ == DomainMode::Slice && !b_.is_zero())
            throw error("ScalarElem: nonzero J-component in slice mode");
    }

    static ScalarElem constant(const Rat& c, DomainMode mode) { return {RatFun(c), mode}; }
    static ScalarElem constant(int c, DomainMode mode) { return {RatFun(c), mode}; }
    static ScalarElem x(DomainMode mode) { return {RatFun::x(), mode}; }
    static ScalarElem J(DomainMode mode) {
        if (mode == DomainMode::Slice) throw error("ScalarElem: J is not defined in slice mode");
        return {RatFun(0), RatFun(1), mode};
    }

    const RatFun& a() const { return a_; }
    const RatFun& b() const { return b_; }
    DomainMode mode() const { return mode_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_constant() const { return a_.is_constant() && b_.is_constant(); }

    friend ScalarElem operator+(const ScalarElem& x, const ScalarElem& y) {
        check_mode(x, y);
        return {x.a_ + y.a_, x.b_ + y.b_, x.mode_};
    }
    friend ScalarElem operator-(const ScalarElem& x, const ScalarElem& y) {
        check_mode(x, y);
        return {x.a_ - y.a_, x.b_ - y.b_, x.mode_};
    }
    friend ScalarElem operator-(const ScalarElem& x) { return {-x.a_, -x.b_, x.mode_}; }
    friend ScalarElem operator*(const ScalarElem& x, const ScalarElem& y) {
        check_mode(x, y);
        return {x.a_ * y.a_ - x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, x.mode_};
    }

    /// Conjugate a - b*J; (a+bJ)(a-bJ) = a^2 + b^2 is the norm form.
    ScalarElem conj() const { return {a_, -b_, mode_}; }
    RatFun norm() const { return a_ * a_ + b_ * b_; }

    ScalarElem inverse() const {
        if (is_zero()) throw error("ScalarElem: division by zero");
        RatFun n = norm();
        return {a_ / n, -b_ / n, mode_};
    }
    friend ScalarElem operator/(const ScalarElem& x, const ScalarElem& y) {
        return x * y.inverse();
    }

    friend bool operator==(const ScalarElem& x, const ScalarElem& y) {
        return x.mode_ == y.mode_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const ScalarElem& x, const ScalarElem& y) { return !(x == y); }

    /// Square root within the model field (Q(x) in Slice mode, Q(x)[J] in
    /// Product mode), or nullopt if none exists there.
    std::optional<ScalarElem> sqrt() const;
    bool has_square_root() const { return sqrt().has_value(); }

    static void check_mode(const ScalarElem& x, const ScalarElem& y) {
        if (x.mode_ != y.mode_) throw error("ScalarElem: domain mode mismatch");
    }

  private:
    RatFun a_;
    RatFun b_;
    DomainMode mode_;
};

}  // namespace semreg

#endif
