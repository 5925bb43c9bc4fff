#ifndef SEMREG_RATFUN_HPP
#define SEMREG_RATFUN_HPP

#include "semreg/polynomial.hpp"

namespace semreg {

using QPoly = Poly<Rat>;

/// Rational function in one indeterminate over Q, kept in canonical form:
/// gcd(num, den) = 1, den monic, zero is 0/1.
class RatFun {
  public:
    RatFun() : num_(), den_(1) {}
    RatFun(const Rat& c) : num_(c), den_(1) {}
    RatFun(int c) : num_(c), den_(1) {}
    RatFun(QPoly num) : num_(std::move(num)), den_(1) {}
    RatFun(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

    static RatFun x() { return RatFun(QPoly::x()); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    // Sums and products pre-reduce by denominator gcds so intermediate
    // polynomials stay small; inputs are already in lowest terms.
    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        QPoly g = QPoly::gcd(a.den_, b.den_);
        if (g.degree() <= 0) {
            RatFun r;
            r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
            r.den_ = a.den_ * b.den_;
            r.normalize_lc();
            return r;
        }
        QPoly bd = b.den_ / g;
        return RatFun(a.num_ * bd + b.num_ * (a.den_ / g), a.den_ * bd);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    friend RatFun operator-(const RatFun& a) {
        RatFun r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        if (a.is_zero() || b.is_zero()) return RatFun();
        QPoly g1 = QPoly::gcd(a.num_, b.den_);
        QPoly g2 = QPoly::gcd(b.num_, a.den_);
        QPoly n1 = g1.degree() > 0 ? a.num_ / g1 : a.num_;
        QPoly d2 = g1.degree() > 0 ? b.den_ / g1 : b.den_;
        QPoly n2 = g2.degree() > 0 ? b.num_ / g2 : b.num_;
        QPoly d1 = g2.degree() > 0 ? a.den_ / g2 : a.den_;
        RatFun r;
        r.num_ = n1 * n2;
        r.den_ = d1 * d2;
        r.normalize_lc();
        return r;
    }
    RatFun inverse() const {
        if (is_zero()) throw error("RatFun: division by zero");
        return RatFun(den_, num_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    /// Square root within Q(x), if one exists. Picks the root with positive
    /// leading numerator coefficient.
    std::optional<RatFun> sqrt() const {
        auto unit_root = [](const Rat& c) { return rat_sqrt(c); };
        auto rn = poly_sqrt(num_, unit_root);
        if (!rn) return std::nullopt;
        auto rd = poly_sqrt(den_, unit_root);
        if (!rd) return std::nullopt;
        return RatFun(*rn, *rd);
    }

  private:
    /// Monic denominator, zero as 0/1; for results already in lowest terms.
    void normalize_lc() {
        if (num_.is_zero()) {
            den_ = QPoly(1);
            return;
        }
        if (den_.lc() != Rat(1)) {
            Rat inv = Rat(1) / den_.lc();
            num_ = QPoly(inv) * num_;
            den_ = den_.monic();
        }
    }

    void canonicalize() {
        if (den_.is_zero()) throw error("RatFun: zero denominator");
        if (num_.is_zero()) {
            den_ = QPoly(1);
            return;
        }
        QPoly g = QPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        Rat inv = Rat(1) / den_.lc();
        num_ = QPoly(inv) * num_;
        den_ = den_.monic();
    }

    QPoly num_;
    QPoly den_;
};

}  // namespace semreg

#endif
