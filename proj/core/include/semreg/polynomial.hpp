#ifndef SEMREG_POLYNOMIAL_HPP
#define SEMREG_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "semreg/rational.hpp"

namespace semreg {

/// Dense univariate polynomial over a field K. Coefficients are stored in
/// ascending order with no trailing zeros; the zero polynomial has an empty
/// coefficient vector and degree -1.
template <class K>
class Poly {
  public:
    Poly() = default;
    Poly(const K& c) {
        if (!(c == K(0))) coeffs_.push_back(c);
    }
    Poly(int c) : Poly(K(c)) {}

    static Poly x() { return Poly(std::vector<K>{K(0), K(1)}); }

    explicit Poly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^n (zero beyond the degree).
    K coeff(int n) const {
        if (n < 0 || n >= static_cast<int>(coeffs_.size())) return K(0);
        return coeffs_[static_cast<size_t>(n)];
    }
    const std::vector<K>& coeffs() const { return coeffs_; }

    K lc() const {
        if (is_zero()) throw error("Poly: leading coefficient of zero");
        return coeffs_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> c(std::max(a.coeffs_.size(), b.coeffs_.size()), K(0));
        for (size_t n = 0; n < a.coeffs_.size(); ++n) c[n] = a.coeffs_[n];
        for (size_t n = 0; n < b.coeffs_.size(); ++n) c[n] = c[n] + b.coeffs_[n];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator-(const Poly& a) {
        std::vector<K> c = a.coeffs_;
        for (auto& v : c) v = -v;
        Poly r;
        r.coeffs_ = std::move(c);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> c(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
        for (size_t n = 0; n < a.coeffs_.size(); ++n)
            for (size_t m = 0; m < b.coeffs_.size(); ++m)
                c[n + m] = c[n + m] + a.coeffs_[n] * b.coeffs_[m];
        return Poly(std::move(c));
    }
    friend Poly operator*(const K& s, const Poly& a) { return Poly(s) * a; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Euclidean division; b must be nonzero.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        if (b.is_zero()) throw error("Poly: division by zero");
        q = Poly();
        r = a;
        K inv_lb = K(1) / b.lc();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int d = r.degree() - b.degree();
            K c = r.lc() * inv_lb;
            std::vector<K> mono(static_cast<size_t>(d) + 1, K(0));
            mono.back() = c;
            Poly m(std::move(mono));
            q = q + m;
            r = r - m * b;
        }
    }
    friend Poly operator/(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend Poly operator%(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        return r;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        K inv = K(1) / lc();
        std::vector<K> c = coeffs_;
        for (auto& v : c) v = v * inv;
        Poly r;
        r.coeffs_ = std::move(c);
        return r;
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<K> c(coeffs_.size() - 1);
        for (size_t n = 1; n < coeffs_.size(); ++n) c[n - 1] = K(static_cast<int>(n)) * coeffs_[n];
        return Poly(std::move(c));
    }

    /// Monic gcd. Remainders are rescaled each step to curb coefficient swell.
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            b = b.monic();
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    template <class T>
    T eval(const T& at) const {
        T acc(0);
        for (size_t n = coeffs_.size(); n-- > 0;) acc = acc * at + T(coeffs_[n]);
        return acc;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == K(0)) coeffs_.pop_back();
    }
    std::vector<K> coeffs_;
};

/// Rational coefficients admit a faster route: clear denominators and run a
/// primitive pseudo-remainder sequence over the integers, where gcds are
/// cheap and coefficients stay small.
template <>
inline Poly<Rat> Poly<Rat>::gcd(Poly<Rat> a, Poly<Rat> b) {
    auto primitive = [](const Poly<Rat>& p) {
        std::vector<mpz_class> c(p.coeffs_.size());
        mpz_class l = 1;
        for (const auto& v : p.coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
        for (size_t n = 0; n < c.size(); ++n) {
            Rat scaled = p.coeffs_[n] * Rat(l);
            c[n] = scaled.get_num();
        }
        mpz_class g = 0;
        for (const auto& v : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g != 0)
            for (auto& v : c) v /= g;
        return c;
    };
    auto prim_inplace = [](std::vector<mpz_class>& c) {
        mpz_class g = 0;
        for (const auto& v : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g > 1)
            for (auto& v : c) v /= g;
    };
    // pseudo-remainder of u by v (deg u >= deg v), integer coefficients
    auto prem = [](std::vector<mpz_class> u, const std::vector<mpz_class>& v) {
        const mpz_class& lv = v.back();
        while (u.size() >= v.size()) {
            mpz_class lu = u.back();
            for (auto& c : u) c *= lv;
            size_t off = u.size() - v.size();
            for (size_t n = 0; n < v.size(); ++n) u[off + n] -= lu * v[n];
            while (!u.empty() && u.back() == 0) u.pop_back();
            if (u.empty()) break;
        }
        return u;
    };

    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<mpz_class> u = primitive(a);
    std::vector<mpz_class> v = primitive(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        std::vector<mpz_class> r = prem(u, v);
        prim_inplace(r);
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rat> out(u.size());
    for (size_t n = 0; n < u.size(); ++n) out[n] = Rat(u[n]);
    return Poly<Rat>(std::move(out)).monic();
}

template <class K>
struct SquarefreeFactor {
    Poly<K> factor;  // monic, squarefree, nonconstant
    int exponent;
};

template <class K>
struct SquarefreeDecomposition {
    K unit;  // leading coefficient of the input
    std::vector<SquarefreeFactor<K>> factors;

    Poly<K> reassemble() const {
        Poly<K> p{unit};
        for (const auto& [s, e] : factors)
            for (int n = 0; n < e; ++n) p = p * s;
        return p;
    }
};

/// Yun's algorithm: p = unit * prod factor_i^exponent_i with the factors
/// monic, squarefree and pairwise coprime.
template <class K>
SquarefreeDecomposition<K> squarefree_decomposition(const Poly<K>& p) {
    if (p.is_zero()) throw error("squarefree_decomposition: zero polynomial");
    SquarefreeDecomposition<K> out;
    out.unit = p.lc();
    Poly<K> f = p.monic();
    if (f.degree() == 0) return out;
    Poly<K> fp = f.derivative();
    Poly<K> u = Poly<K>::gcd(f, fp);
    Poly<K> v = f / u;
    Poly<K> w = fp / u;
    int i = 1;
    while (v.degree() > 0) {
        Poly<K> a = Poly<K>::gcd(v, w - v.derivative());
        if (a.degree() > 0) out.factors.push_back({a, i});
        w = (w - v.derivative()) / a;
        v = v / a;
        ++i;
    }
    return out;
}

/// Square root of a polynomial within K[x], when the leading-coefficient
/// square root is supplied by `unit_sqrt`.
template <class K, class UnitSqrt>
std::optional<Poly<K>> poly_sqrt(const Poly<K>& p, UnitSqrt unit_sqrt) {
    if (p.is_zero()) return Poly<K>();
    auto dec = squarefree_decomposition(p);
    auto root_unit = unit_sqrt(dec.unit);
    if (!root_unit) return std::nullopt;
    Poly<K> r{*root_unit};
    for (const auto& [s, e] : dec.factors) {
        if (e % 2 != 0) return std::nullopt;
        for (int n = 0; n < e / 2; ++n) r = r * s;
    }
    return r;
}

}  // namespace semreg

#endif
