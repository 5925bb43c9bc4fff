#include "semreg/scalar.hpp"

namespace semreg {

namespace {

using GPoly = Poly<GaussRat>;

GPoly lift(const QPoly& re, const QPoly& im) {
    int d = std::max(re.degree(), im.degree());
    std::vector<GaussRat> c(static_cast<size_t>(d + 1), GaussRat{});
    for (int n = 0; n <= d; ++n) c[static_cast<size_t>(n)] = GaussRat{re.coeff(n), im.coeff(n)};
    return GPoly(std::move(c));
}

void split(const GPoly& p, QPoly& re, QPoly& im) {
    std::vector<Rat> r, i;
    for (int n = 0; n <= p.degree(); ++n) {
        r.push_back(p.coeff(n).re);
        i.push_back(p.coeff(n).im);
    }
    re = QPoly(std::move(r));
    im = QPoly(std::move(i));
}

GPoly gconj(const GPoly& p) {
    std::vector<GaussRat> c;
    for (int n = 0; n <= p.degree(); ++n) c.push_back(p.coeff(n).conj());
    return GPoly(std::move(c));
}

}  // namespace

std::optional<ScalarElem> ScalarElem::sqrt() const {
    if (is_zero()) return ScalarElem(mode_);
    if (mode_ == DomainMode::Slice) {
        auto r = a_.sqrt();
        if (!r) return std::nullopt;
        return ScalarElem(*r, mode_);
    }
    // Product mode: a + bJ maps to Q(i)(x) via J -> i.
    GPoly num = lift(a_.num() * b_.den(), b_.num() * a_.den());
    GPoly den = lift(a_.den() * b_.den(), QPoly());
    GPoly g = GPoly::gcd(num, den);
    if (g.degree() > 0) {
        num = num / g;
        den = den / g;
    }
    GaussRat inv = GaussRat(1) / den.lc();
    num = inv * num;
    den = den.monic();

    auto unit_root = [](const GaussRat& c) { return gauss_sqrt(c); };
    auto rn = poly_sqrt(num, unit_root);
    if (!rn) return std::nullopt;
    auto rd = poly_sqrt(den, unit_root);
    if (!rd) return std::nullopt;

    // Back to (a, b) coordinates: rn/rd = rn * conj(rd) / (rd * conj(rd)),
    // whose denominator has real coefficients.
    GPoly p = *rn * gconj(*rd);
    GPoly q = *rd * gconj(*rd);
    QPoly pre, pim, qre, qim;
    split(p, pre, pim);
    split(q, qre, qim);
    ScalarElem root(RatFun(pre, qre), RatFun(pim, qre), mode_);
    return root;
}

}  // namespace semreg
