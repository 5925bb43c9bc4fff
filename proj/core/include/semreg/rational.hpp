#ifndef SEMREG_RATIONAL_HPP
#define SEMREG_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace semreg {

/// Exact rational number.
using Rat = mpq_class;

/// Thrown on precondition violations (mode mismatch, division by zero, ...).
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_perfect_square(const mpz_class& z) {
    return sgn(z) >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

/// Square root of a rational, if it exists in Q. Result is >= 0.
inline std::optional<Rat> rat_sqrt(const Rat& c) {
    if (sgn(c) < 0) return std::nullopt;
    if (!is_perfect_square(c.get_num()) || !is_perfect_square(c.get_den()))
        return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), c.get_den().get_mpz_t());
    return Rat(n, d);
}

/// Element of Q(i), used as the coefficient field when deciding square
/// roots of product-domain scalars.
struct GaussRat {
    Rat re{0};
    Rat im{0};

    GaussRat() = default;
    GaussRat(int n) : re(n) {}
    GaussRat(Rat r) : re(std::move(r)) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    GaussRat conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussRat inverse() const {
        if (is_zero()) throw error("GaussRat: division by zero");
        Rat n = norm();
        return {re / n, -im / n};
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        return a * b.inverse();
    }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

/// Square root in Q(i), if it exists.
inline std::optional<GaussRat> gauss_sqrt(const GaussRat& z) {
    if (z.is_zero()) return GaussRat{};
    // (u+vi)^2 = z requires u^2 - v^2 = re, 2uv = im and
    // (u^2 + v^2)^2 = re^2 + im^2.
    auto n = rat_sqrt(z.norm());
    if (!n) return std::nullopt;
    Rat u2 = (z.re + *n) / 2;
    auto u = rat_sqrt(u2);
    if (!u) return std::nullopt;
    if (sgn(*u) != 0) return GaussRat{*u, z.im / (2 * (*u))};
    // z.re = -v^2, z.im = 0
    auto v = rat_sqrt(-z.re);
    if (!v) return std::nullopt;
    return GaussRat{Rat(0), *v};
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace semreg

#endif
