#include "semreg/linalg.hpp"

namespace semreg {

bool FieldVec4::is_zero() const {
    return v_[0].is_zero() && v_[1].is_zero() && v_[2].is_zero() && v_[3].is_zero();
}

FieldVec4 operator+(const FieldVec4& a, const FieldVec4& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

FieldVec4 operator-(const FieldVec4& a, const FieldVec4& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

FieldVec4 operator*(const ScalarElem& s, const FieldVec4& a) {
    return {s * a[0], s * a[1], s * a[2], s * a[3]};
}

FieldPoly operator+(const FieldPoly& a, const FieldPoly& b) {
    size_t n = std::max(a.c_.size(), b.c_.size());
    std::vector<ScalarElem> c(n, ScalarElem(a.mode_));
    for (size_t m = 0; m < a.c_.size(); ++m) c[m] = a.c_[m];
    for (size_t m = 0; m < b.c_.size(); ++m) c[m] = c[m] + b.c_[m];
    return {std::move(c), a.mode_};
}

FieldPoly operator-(const FieldPoly& a) {
    std::vector<ScalarElem> c = a.c_;
    for (auto& v : c) v = -v;
    return {std::move(c), a.mode_};
}

FieldPoly operator-(const FieldPoly& a, const FieldPoly& b) { return a + (-b); }

FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
    if (a.is_zero() || b.is_zero()) return FieldPoly(a.mode_);
    std::vector<ScalarElem> c(a.c_.size() + b.c_.size() - 1, ScalarElem(a.mode_));
    for (size_t n = 0; n < a.c_.size(); ++n)
        for (size_t m = 0; m < b.c_.size(); ++m) c[n + m] = c[n + m] + a.c_[n] * b.c_[m];
    return {std::move(c), a.mode_};
}

ScalarElem FieldPoly::eval(const ScalarElem& at) const {
    ScalarElem acc(mode_);
    for (size_t n = c_.size(); n-- > 0;) acc = acc * at + c_[n];
    return acc;
}

FieldMat4 FieldMat4::identity(DomainMode mode) {
    FieldMat4 m(mode);
    for (int n = 0; n < 4; ++n) m.at(n, n) = ScalarElem::constant(1, mode);
    return m;
}

FieldMat4 operator+(const FieldMat4& a, const FieldMat4& b) {
    FieldMat4 r(a.mode_);
    for (int n = 0; n < 16; ++n) r.e_[static_cast<size_t>(n)] = a.e_[static_cast<size_t>(n)] + b.e_[static_cast<size_t>(n)];
    return r;
}

FieldMat4 operator-(const FieldMat4& a, const FieldMat4& b) {
    FieldMat4 r(a.mode_);
    for (int n = 0; n < 16; ++n) r.e_[static_cast<size_t>(n)] = a.e_[static_cast<size_t>(n)] - b.e_[static_cast<size_t>(n)];
    return r;
}

FieldMat4 operator*(const FieldMat4& a, const FieldMat4& b) {
    FieldMat4 r(a.mode_);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            ScalarElem s(a.mode_);
            for (int k = 0; k < 4; ++k) s = s + a.at(i, k) * b.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

FieldVec4 operator*(const FieldMat4& a, const FieldVec4& v) {
    FieldVec4 r(a.mode_);
    for (int i = 0; i < 4; ++i) {
        ScalarElem s(a.mode_);
        for (int k = 0; k < 4; ++k) s = s + a.at(i, k) * v[k];
        r[i] = s;
    }
    return r;
}

FieldMat4 iota_L(const SliceFn& f) {
    FieldMat4 m(f.mode());
    const ScalarElem &f0 = f[0], &f1 = f[1], &f2 = f[2], &f3 = f[3];
    const ScalarElem rows[4][4] = {{f0, -f1, -f2, -f3},
                                   {f1, f0, -f3, f2},
                                   {f2, f3, f0, -f1},
                                   {f3, -f2, f1, f0}};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m.at(r, c) = rows[r][c];
    return m;
}

FieldMat4 iota_R(const SliceFn& f) {
    FieldMat4 m(f.mode());
    const ScalarElem &f0 = f[0], &f1 = f[1], &f2 = f[2], &f3 = f[3];
    const ScalarElem rows[4][4] = {{f0, -f1, -f2, -f3},
                                   {f1, f0, f3, -f2},
                                   {f2, -f3, f0, f1},
                                   {f3, f2, -f1, f0}};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m.at(r, c) = rows[r][c];
    return m;
}

namespace {

// Elimination runs fraction-free: rows are cleared of denominators, entries
// become polynomials over Q(J) (an integral domain in both modes), and the
// Bareiss scheme keeps every division exact. This avoids the rational-function
// gcd churn a field-of-fractions pivot causes.
using GP = Poly<GaussRat>;

GP gp_from(const QPoly& re, const QPoly& im) {
    int d = std::max(re.degree(), im.degree());
    if (d < 0) return GP();
    std::vector<GaussRat> c(static_cast<size_t>(d) + 1);
    for (int n = 0; n <= d; ++n) c[static_cast<size_t>(n)] = GaussRat(re.coeff(n), im.coeff(n));
    return GP(std::move(c));
}

GP exact_div(const GP& a, const GP& b) {
    GP q, r;
    GP::divmod(a, b, q, r);
    if (!r.is_zero()) throw error("linalg: inexact division in fraction-free elimination");
    return q;
}

ScalarElem from_gp(const GP& p, const QPoly& den, DomainMode mode) {
    std::vector<Rat> re(p.coeffs().size()), im(p.coeffs().size());
    bool has_im = false;
    for (size_t n = 0; n < p.coeffs().size(); ++n) {
        re[n] = p.coeffs()[n].re;
        im[n] = p.coeffs()[n].im;
        if (sgn(im[n]) != 0) has_im = true;
    }
    RatFun a(QPoly(std::move(re)), den);
    if (!has_im) return {a, mode};
    return {a, RatFun(QPoly(std::move(im)), den), mode};
}

struct Echelon {
    std::vector<std::vector<GP>> m;       // 4 x width, upper echelon after build
    std::vector<QPoly> dens;              // per-row denominators cleared up front
    std::vector<std::pair<int, int>> pivots;
    int sign = 1;
    GP last_pivot = GP(GaussRat(1));      // det of the scaled matrix when rank 4
};

Echelon echelon(const FieldMat4& mat, const FieldVec4* aug) {
    Echelon E;
    for (int r = 0; r < 4; ++r) {
        std::vector<ScalarElem> row;
        for (int c = 0; c < 4; ++c) row.push_back(mat.at(r, c));
        if (aug) row.push_back((*aug)[r]);

        QPoly D(1);
        auto absorb = [&D](const QPoly& d) {
            QPoly g = QPoly::gcd(D, d);
            D = D * (d / g);
        };
        for (const auto& s : row) {
            absorb(s.a().den());
            absorb(s.b().den());
        }
        std::vector<GP> scaled;
        for (const auto& s : row)
            scaled.push_back(gp_from(s.a().num() * (D / s.a().den()),
                                     s.b().num() * (D / s.b().den())));
        E.m.push_back(std::move(scaled));
        E.dens.push_back(std::move(D));
    }

    int width = aug ? 5 : 4;
    GP prev(GaussRat(1));
    int row = 0;
    for (int col = 0; col < 4 && row < 4; ++col) {
        int p = -1;
        for (int r = row; r < 4; ++r)
            if (!E.m[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row) {
            std::swap(E.m[static_cast<size_t>(p)], E.m[static_cast<size_t>(row)]);
            std::swap(E.dens[static_cast<size_t>(p)], E.dens[static_cast<size_t>(row)]);
            E.sign = -E.sign;
        }
        auto& pr = E.m[static_cast<size_t>(row)];
        for (int r = row + 1; r < 4; ++r) {
            auto& cur = E.m[static_cast<size_t>(r)];
            for (int c = col + 1; c < width; ++c)
                cur[static_cast<size_t>(c)] = exact_div(
                    pr[static_cast<size_t>(col)] * cur[static_cast<size_t>(c)] -
                        cur[static_cast<size_t>(col)] * pr[static_cast<size_t>(c)],
                    prev);
            cur[static_cast<size_t>(col)] = GP();
        }
        prev = pr[static_cast<size_t>(col)];
        E.pivots.emplace_back(row, col);
        ++row;
    }
    E.last_pivot = prev;
    return E;
}

}  // namespace

ScalarElem det(const FieldMat4& m) {
    Echelon E = echelon(m, nullptr);
    if (E.pivots.size() < 4) return ScalarElem(m.mode());
    QPoly D(1);
    for (const auto& d : E.dens) D = D * d;
    ScalarElem top = from_gp(E.last_pivot, D, m.mode());
    return E.sign > 0 ? top : -top;
}

int rank(const FieldMat4& m) { return static_cast<int>(echelon(m, nullptr).pivots.size()); }

std::vector<FieldVec4> kernel_basis(const FieldMat4& m) {
    DomainMode mode = m.mode();
    QPoly one(1);
    Echelon E = echelon(m, nullptr);
    std::vector<bool> is_pivot(4, false);
    for (auto [r, c] : E.pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<FieldVec4> basis;
    for (int free = 0; free < 4; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        FieldVec4 v(mode);
        v[free] = ScalarElem::constant(1, mode);
        for (size_t n = E.pivots.size(); n-- > 0;) {
            auto [r, c] = E.pivots[n];
            ScalarElem sum(mode);
            for (int j = c + 1; j < 4; ++j) {
                if (v[j].is_zero()) continue;
                sum = sum + from_gp(E.m[static_cast<size_t>(r)][static_cast<size_t>(j)], one, mode) * v[j];
            }
            v[c] = -sum / from_gp(E.m[static_cast<size_t>(r)][static_cast<size_t>(c)], one, mode);
        }
        for (int n = 0; n < 4; ++n) {
            if (v[n].is_zero()) continue;
            v = v[n].inverse() * v;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<FieldVec4> solve(const FieldMat4& m, const FieldVec4& b) {
    DomainMode mode = m.mode();
    QPoly one(1);
    Echelon E = echelon(m, &b);
    for (int r = static_cast<int>(E.pivots.size()); r < 4; ++r)
        if (!E.m[static_cast<size_t>(r)][4].is_zero()) return std::nullopt;
    FieldVec4 x(mode);
    for (size_t n = E.pivots.size(); n-- > 0;) {
        auto [r, c] = E.pivots[n];
        ScalarElem acc = from_gp(E.m[static_cast<size_t>(r)][4], one, mode);
        for (int j = c + 1; j < 4; ++j) {
            if (x[j].is_zero()) continue;
            acc = acc - from_gp(E.m[static_cast<size_t>(r)][static_cast<size_t>(j)], one, mode) * x[j];
        }
        x[c] = acc / from_gp(E.m[static_cast<size_t>(r)][static_cast<size_t>(c)], one, mode);
    }
    return x;
}

FieldPoly char_poly(const FieldMat4& m) {
    // Evaluate det(M - t Id) at five points and interpolate; the result is
    // monic of degree 4 up to the sign of (-t)^4.
    DomainMode mode = m.mode();
    std::vector<ScalarElem> vals;
    for (int t = 0; t < 5; ++t) {
        FieldMat4 shifted = m;
        for (int n = 0; n < 4; ++n)
            shifted.at(n, n) = shifted.at(n, n) - ScalarElem::constant(t, mode);
        vals.push_back(det(shifted));
    }
    std::vector<ScalarElem> coeffs(5, ScalarElem(mode));
    for (int t = 0; t < 5; ++t) {
        QPoly L(1);
        Rat denom = 1;
        for (int s = 0; s < 5; ++s) {
            if (s == t) continue;
            L = L * (QPoly::x() - QPoly(s));
            denom *= Rat(t - s);
        }
        for (int n = 0; n < 5; ++n) {
            Rat c = L.coeff(n) / denom;
            if (sgn(c) == 0) continue;
            coeffs[static_cast<size_t>(n)] =
                coeffs[static_cast<size_t>(n)] + ScalarElem::constant(c, mode) * vals[static_cast<size_t>(t)];
        }
    }
    return FieldPoly(std::move(coeffs), mode);
}

FieldMat4 assemble_LFG(const std::vector<SliceFn>& F, const std::vector<SliceFn>& G) {
    if (F.size() != G.size()) throw error("assemble_LFG: tuple length mismatch");
    if (F.empty()) throw error("assemble_LFG: empty tuples");
    for (const auto& f : F)
        if (f.is_zero()) throw error("assemble_LFG: zero function in tuple");
    for (const auto& g : G)
        if (g.is_zero()) throw error("assemble_LFG: zero function in tuple");
    FieldMat4 acc(F[0].mode());
    for (size_t n = 0; n < F.size(); ++n) acc = acc + iota_L(F[n]) * iota_R(G[n]);
    return acc;
}

}  // namespace semreg
