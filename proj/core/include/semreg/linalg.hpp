#ifndef SEMREG_LINALG_HPP
#define SEMREG_LINALG_HPP

#include <vector>

#include "semreg/slice_fn.hpp"

namespace semreg {

/// Coordinate vector of a SliceFn in the basis (1, i, j, k).
class FieldVec4 {
  public:
    explicit FieldVec4(DomainMode mode = DomainMode::Slice)
        : v_{ScalarElem(mode), ScalarElem(mode), ScalarElem(mode), ScalarElem(mode)}, mode_(mode) {}
    FieldVec4(ScalarElem v0, ScalarElem v1, ScalarElem v2, ScalarElem v3)
        : v_{std::move(v0), std::move(v1), std::move(v2), std::move(v3)}, mode_(v_[0].mode()) {}
    explicit FieldVec4(const SliceFn& f) : FieldVec4(f[0], f[1], f[2], f[3]) {}

    const ScalarElem& operator[](int n) const { return v_[static_cast<size_t>(n)]; }
    ScalarElem& operator[](int n) { return v_[static_cast<size_t>(n)]; }
    DomainMode mode() const { return mode_; }
    bool is_zero() const;

    SliceFn to_slice_fn() const { return {v_[0], v_[1], v_[2], v_[3]}; }

    friend FieldVec4 operator+(const FieldVec4& a, const FieldVec4& b);
    friend FieldVec4 operator-(const FieldVec4& a, const FieldVec4& b);
    friend FieldVec4 operator*(const ScalarElem& s, const FieldVec4& a);
    friend bool operator==(const FieldVec4& a, const FieldVec4& b) { return a.v_ == b.v_; }
    friend bool operator!=(const FieldVec4& a, const FieldVec4& b) { return !(a == b); }

  private:
    std::array<ScalarElem, 4> v_;
    DomainMode mode_;
};

/// Univariate polynomial in the eigenvalue variable with ScalarElem
/// coefficients, ascending order, no trailing zeros.
class FieldPoly {
  public:
    explicit FieldPoly(DomainMode mode = DomainMode::Slice) : mode_(mode) {}
    FieldPoly(std::vector<ScalarElem> coeffs, DomainMode mode) : c_(std::move(coeffs)), mode_(mode) {
        trim();
    }
    static FieldPoly constant(ScalarElem s) {
        DomainMode m = s.mode();
        return FieldPoly({std::move(s)}, m);
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    DomainMode mode() const { return mode_; }
    ScalarElem coeff(int n) const {
        if (n < 0 || n >= static_cast<int>(c_.size())) return ScalarElem(mode_);
        return c_[static_cast<size_t>(n)];
    }

    friend FieldPoly operator+(const FieldPoly& a, const FieldPoly& b);
    friend FieldPoly operator-(const FieldPoly& a, const FieldPoly& b);
    friend FieldPoly operator-(const FieldPoly& a);
    friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b);
    friend bool operator==(const FieldPoly& a, const FieldPoly& b) {
        return a.mode_ == b.mode_ && a.c_ == b.c_;
    }
    friend bool operator!=(const FieldPoly& a, const FieldPoly& b) { return !(a == b); }

    ScalarElem eval(const ScalarElem& at) const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<ScalarElem> c_;
    DomainMode mode_;
};

/// 4x4 matrix over the scalar field, row-major.
class FieldMat4 {
  public:
    explicit FieldMat4(DomainMode mode = DomainMode::Slice) : mode_(mode) {
        e_.assign(16, ScalarElem(mode));
    }

    static FieldMat4 identity(DomainMode mode);

    const ScalarElem& at(int r, int c) const { return e_[static_cast<size_t>(4 * r + c)]; }
    ScalarElem& at(int r, int c) { return e_[static_cast<size_t>(4 * r + c)]; }
    DomainMode mode() const { return mode_; }

    friend FieldMat4 operator+(const FieldMat4& a, const FieldMat4& b);
    friend FieldMat4 operator-(const FieldMat4& a, const FieldMat4& b);
    friend FieldMat4 operator*(const FieldMat4& a, const FieldMat4& b);
    friend FieldVec4 operator*(const FieldMat4& a, const FieldVec4& v);
    friend bool operator==(const FieldMat4& a, const FieldMat4& b) {
        return a.mode_ == b.mode_ && a.e_ == b.e_;
    }
    friend bool operator!=(const FieldMat4& a, const FieldMat4& b) { return !(a == b); }

  private:
    std::vector<ScalarElem> e_;
    DomainMode mode_;
};

/// Left and right regular representations: F(f*g) = iota_L(f) F(g) = iota_R(g) F(f).
FieldMat4 iota_L(const SliceFn& f);
FieldMat4 iota_R(const SliceFn& f);

ScalarElem det(const FieldMat4& m);
int rank(const FieldMat4& m);

/// Kernel basis; each vector has its first nonzero coordinate scaled to 1.
std::vector<FieldVec4> kernel_basis(const FieldMat4& m);

/// Solves M x = b; nullopt when b is outside the column span.
std::optional<FieldVec4> solve(const FieldMat4& m, const FieldVec4& b);

/// det(M - lambda Id); degree-4, leading coefficient 1.
FieldPoly char_poly(const FieldMat4& m);

/// Matrix of chi -> sum_n f[n] * chi * g[n] on coordinates.
FieldMat4 assemble_LFG(const std::vector<SliceFn>& F, const std::vector<SliceFn>& G);

}  // namespace semreg

#endif
