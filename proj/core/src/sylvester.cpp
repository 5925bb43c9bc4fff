#include "semreg/sylvester.hpp"

#include "semreg/equivalence.hpp"

namespace semreg {

namespace {

ScalarElem vec_sym(const SliceFn& f) { return symmetrized(f.vector_part()); }

SliceFn add_const(const SliceFn& f, const Rat& a) {
    return f + SliceFn::scalar(ScalarElem::constant(a, f.mode()));
}

bool rank2_conditions(const SliceFn& f, const SliceFn& g) {
    return !f.is_central() && !g.is_central() && (f[0] + g[0]).is_zero() &&
           vec_sym(f) == vec_sym(g);
}

void require_rank2(const SliceFn& f, const SliceFn& g, const char* who) {
    if (!rank2_conditions(f, g)) throw error(std::string(who) + ": operator does not have rank 2");
}

SliceFn apply_sylvester(const SliceFn& f, const SliceFn& g, const SliceFn& chi) {
    return star_product(f, chi) + star_product(chi, g);
}

bool proportional(const SliceFn& a, const SliceFn& b) {
    // b = c*a for central c; a assumed nonzero
    for (int n = 0; n < 4; ++n) {
        if (a[n].is_zero()) continue;
        ScalarElem c = b[n] / a[n];
        return c * a == b;
    }
    return b.is_zero();
}

}  // namespace

FieldMat4 sylvester_matrix(const SliceFn& f, const SliceFn& g) {
    SliceFn::check_mode(f, g);
    return iota_L(f) + iota_R(g);
}

FieldPoly char_poly_closed(const SliceFn& f, const SliceFn& g) {
    SliceFn::check_mode(f, g);
    DomainMode mode = f.mode();
    ScalarElem one = ScalarElem::constant(1, mode);
    ScalarElem two = ScalarElem::constant(2, mode);
    ScalarElem fvs = vec_sym(f);
    ScalarElem gvs = vec_sym(g);
    FieldPoly t({f[0] + g[0], -one}, mode);  // f0 + g0 - lambda
    FieldPoly t2 = t * t;
    ScalarElem diff = fvs - gvs;
    return t2 * (t2 + FieldPoly::constant(two * (fvs + gvs))) +
           FieldPoly::constant(diff * diff);
}

ShiftChoice shift_regularize(const SliceFn& f, const SliceFn& g) {
    SliceFn::check_mode(f, g);
    auto good = [&](const Rat& a) {
        return !symmetrized(add_const(f, a)).is_zero() && !symmetrized(add_const(g, -a)).is_zero();
    };
    for (long n = 0; n <= 10000; ++n)
        if (good(Rat(n))) return {Rat(n)};
    for (long n = 1; n <= 10000; ++n)
        if (good(Rat(-n))) return {Rat(-n)};
    throw error("shift_regularize: no admissible shift found");
}

std::pair<SliceFn, SliceFn> lambda_LR(const SliceFn& f, const SliceFn& g) {
    SliceFn::check_mode(f, g);
    ScalarElem fs = symmetrized(f);
    ScalarElem gs = symmetrized(g);
    if (fs.is_zero() || gs.is_zero())
        throw error("lambda_LR: zero-divisor input, apply shift_regularize first");
    DomainMode mode = f.mode();
    ScalarElem two = ScalarElem::constant(2, mode);
    SliceFn lambda_L = SliceFn::scalar(two * g[0]) + f + gs * star_inverse(f);
    SliceFn lambda_R = SliceFn::scalar(two * f[0]) + g + fs * star_inverse(g);
    return {lambda_L, lambda_R};
}

SliceFn solve_rank4(const SliceFn& f, const SliceFn& g, const SliceFn& b) {
    FieldMat4 S = sylvester_matrix(f, g);
    if (det(S).is_zero()) throw error("solve_rank4: operator is singular");
    Rat alpha = shift_regularize(f, g).alpha;
    SliceFn fs = add_const(f, alpha);
    SliceFn gs = add_const(g, -alpha);
    auto [lambda_L, lambda_R] = lambda_LR(fs, gs);
    SliceFn left = star_product(star_inverse(lambda_L),
                                b + star_product(star_inverse(fs), star_product(b, conjugate(gs))));
    SliceFn right = star_product(b + star_product(conjugate(fs), star_product(b, star_inverse(gs))),
                                 star_inverse(lambda_R));
    if (left != right) throw error("solve_rank4: route disagreement");
    if (apply_sylvester(f, g, left) != b) throw error("solve_rank4: verification failed");
    return left;
}

Rank2Kernel rank2_kernel(const SliceFn& f, const SliceFn& g) {
    require_rank2(f, g, "rank2_kernel");
    DomainMode mode = f.mode();
    SliceFn fv = f.vector_part();
    SliceFn gv = g.vector_part();

    std::optional<SliceFn> tau1;
    for (int n = 0; n < 4; ++n) {
        SliceFn delta = SliceFn::basis_unit(n, mode);
        SliceFn tau = star_product(fv, delta) - star_product(delta, gv);
        if (!symmetrized(tau).is_zero()) {
            tau1 = tau;
            break;
        }
    }
    if (!tau1) throw error("rank2_kernel: no invertible probe element");

    auto kb = kernel_basis(sylvester_matrix(f, g));
    if (kb.size() != 2) throw error("rank2_kernel: kernel dimension is not 2");
    std::optional<SliceFn> tau2;
    for (const auto& v : kb) {
        SliceFn cand = v.to_slice_fn();
        if (!proportional(*tau1, cand)) {
            tau2 = cand;
            break;
        }
    }
    if (!tau2) throw error("rank2_kernel: could not complete the basis");

    if (symmetrized(*tau2).is_zero()) {
        bool repaired = false;
        for (long n = 1; n <= 100 && !repaired; ++n) {
            for (Rat a : {Rat(n), Rat(-n)}) {
                SliceFn cand = ScalarElem::constant(a, mode) * *tau1 + *tau2;
                if (!symmetrized(cand).is_zero()) {
                    tau2 = cand;
                    repaired = true;
                    break;
                }
            }
        }
        if (!repaired) throw error("rank2_kernel: basis repair failed");
    }

    Rank2Kernel out{*tau1, *tau2, std::nullopt};
    SliceFn d = fv - gv;
    if (!symmetrized(d).is_zero()) {
        ScalarElem two = ScalarElem::constant(2, mode);
        SliceFn second = SliceFn::scalar(vec_sym(f) + vec_sym(g)) + two * star_product(fv, gv);
        out.closed = {{d, second}};
    }
    for (const SliceFn& t : {out.tau1, out.tau2})
        if (!apply_sylvester(f, g, t).is_zero()) throw error("rank2_kernel: basis verification failed");
    return out;
}

ZeroDivisorKernelReport rank2_zero_divisor_in_kernel(const SliceFn& f, const SliceFn& g) {
    require_rank2(f, g, "rank2_zero_divisor_in_kernel");
    DomainMode mode = f.mode();
    if (mode == DomainMode::Slice) return {};

    SliceFn fv = f.vector_part();
    SliceFn gv = g.vector_part();
    ScalarElem fvs = vec_sym(f);
    ZeroDivisorKernelReport out;
    std::optional<SliceFn> witness;

    if (fv == gv) {
        out.which_case = 1;
        auto rho = fvs.sqrt();
        if (rho) {
            // rotate the imaginary basis cyclically so the I-coordinate of f_v
            // is nonzero; the kernel is spanned by f_v /\ J and f_v /\ K
            int base = 1;
            while (fv[base].is_zero()) ++base;
            int jdx = base % 3 + 1;
            int kdx = jdx % 3 + 1;
            SliceFn J = SliceFn::basis_unit(jdx, mode);
            SliceFn K = SliceFn::basis_unit(kdx, mode);
            ScalarElem f1 = fv[base], f2 = fv[jdx], f3 = fv[kdx];
            SliceFn wJ = star_wedge(fv, J);
            SliceFn wK = star_wedge(fv, K);
            ScalarElem u = f1 * f1 + f3 * f3;
            if (u.is_zero())
                witness = wJ;
            else
                witness = (f2 * f3 + ScalarElem::J(mode) * f1 * *rho) * wJ + u * wK;
        }
    } else if (symmetrized(fv - gv).is_zero()) {
        out.which_case = 2;
        witness = fv - gv;
    } else {
        out.which_case = 3;
        auto alpha = (-fvs).sqrt();
        if (alpha)
            witness = *alpha * (fv - gv) + SliceFn::scalar(fvs) + star_product(fv, gv);
    }

    if (witness) {
        if (witness->is_zero() || !symmetrized(*witness).is_zero() ||
            !apply_sylvester(f, g, *witness).is_zero())
            throw error("rank2_zero_divisor_in_kernel: witness verification failed");
        out.present = true;
        out.witness = std::move(witness);
    }
    return out;
}

std::optional<SliceFn> rank2_solve(const SliceFn& f, const SliceFn& g, const SliceFn& b) {
    require_rank2(f, g, "rank2_solve");
    DomainMode mode = f.mode();
    if (!(star_product(conjugate(f), b) + star_product(b, g)).is_zero()) return std::nullopt;
    if (b.is_zero()) return SliceFn(mode);
    for (int n = 1; n < 4; ++n) {
        if (f[n].is_zero()) continue;  // <f_v, delta>_* = f_n
        SliceFn delta = SliceFn::basis_unit(n, mode);
        ScalarElem two = ScalarElem::constant(2, mode);
        SliceFn chi = -((two * f[n]).inverse() * star_product(delta, b));
        if (apply_sylvester(f, g, chi) != b) throw error("rank2_solve: verification failed");
        return chi;
    }
    throw error("rank2_solve: no probe direction");
}

Rank3Structure rank3_structure(const SliceFn& f, const SliceFn& g) {
    SliceFn::check_mode(f, g);
    DomainMode mode = f.mode();
    ScalarElem s0 = f[0] + g[0];
    FieldMat4 S = sylvester_matrix(f, g);
    if (f.is_central() || g.is_central() || s0.is_zero() || !det(S).is_zero() || rank(S) != 3)
        throw error("rank3_structure: operator does not have rank 3");

    ScalarElem u = s0.inverse();
    SliceFn fn = u * f;
    SliceFn gn = u * g;
    SliceFn fv = fn.vector_part();
    SliceFn gv = gn.vector_part();
    ScalarElem fvs = vec_sym(fn);
    ScalarElem gvs = vec_sym(gn);

    Rank3Structure out;
    if (gvs.is_zero())
        out.subcase = Rank3Subcase::GvsZero;
    else if (fvs.is_zero())
        out.subcase = Rank3Subcase::FvsZero;
    else
        out.subcase = Rank3Subcase::BothNonzero;

    ScalarElem half = ScalarElem(RatFun(Rat(1, 2)), mode);
    ScalarElem one = ScalarElem::constant(1, mode);
    ScalarElem mu = half * (fvs + gvs + one);
    auto t = (half * half - mu).sqrt();
    if (t) {
        for (const ScalarElem& cand : {*t, -*t}) {
            ScalarElem dm = cand - half;
            ScalarElem dp = cand + half;
            if (fvs == -(dm * dm) && gvs == -(dp * dp)) {
                out.tau = cand;
                break;
            }
        }
    }

    auto kb = kernel_basis(S);
    if (kb.size() != 1) throw error("rank3_structure: kernel dimension is not 1");
    for (const auto& v : kb) out.kernel.push_back(v.to_slice_fn());

    if (out.subcase == Rank3Subcase::GvsZero || out.subcase == Rank3Subcase::FvsZero) {
        SliceFn a = out.subcase == Rank3Subcase::GvsZero ? SliceFn::one(mode) - fv : fv;
        SliceFn b = out.subcase == Rank3Subcase::GvsZero ? gv : SliceFn::one(mode) - gv;
        for (int n = 0; n < 4; ++n) {
            SliceFn cand = star_product(a, star_product(SliceFn::basis_unit(n, mode), b));
            if (!cand.is_zero()) {
                out.closed_generator = cand;
                break;
            }
        }
    } else if (out.tau) {
        // Conjugate f_v and g_v onto the i-axis; the kernel is generated by
        // h * (J j + k) * h~ with h^{-*}*f_v*h and h~*g_v*h~^{-*} the axis forms.
        ScalarElem Jc = ScalarElem::J(mode);
        SliceFn i = SliceFn::basis_unit(1, mode);
        ScalarElem w1 = Jc * (half - *out.tau);
        ScalarElem w2 = -(Jc * (half + *out.tau));
        SliceFn target_f = w1 * i;
        SliceFn target_g = w2 * i;
        SliceFn h = conjugator(fv, target_f).h;
        SliceFn htilde = star_inverse(conjugator(gv, target_g).h);
        SliceFn jk = Jc * SliceFn::basis_unit(2, mode) + SliceFn::basis_unit(3, mode);
        out.closed_generator = star_product(h, star_product(jk, htilde));
    }

    if (out.closed_generator) {
        if (apply_sylvester(f, g, *out.closed_generator).is_zero() == false ||
            !proportional(out.kernel[0], *out.closed_generator))
            throw error("rank3_structure: closed-form kernel generator verification failed");
    }
    return out;
}

std::optional<SliceFn> rank3_idempotent_in_kernel(const SliceFn& f, const SliceFn& g) {
    Rank3Structure st = rank3_structure(f, g);
    const SliceFn& kappa = st.kernel[0];
    if (kappa[0].is_zero()) return std::nullopt;
    ScalarElem two = ScalarElem::constant(2, f.mode());
    SliceFn idem = (two * kappa[0]).inverse() * kappa;
    if (!is_idempotent(idem)) throw error("rank3_idempotent_in_kernel: verification failed");
    return idem;
}

SylvesterReport classify(const SliceFn& f, const SliceFn& g) {
    SliceFn::check_mode(f, g);
    FieldMat4 S = sylvester_matrix(f, g);
    SylvesterReport rep;
    rep.char_poly = char_poly_closed(f, g);
    rep.rank = rank(S);

    if (f.is_central() || g.is_central()) {
        // One-sided multiplication operator; the rank trichotomy does not apply.
        rep.rerouted = true;
        rep.branch = rep.rank == 4 ? SylvesterBranch::Rank4
                                   : (rep.rank == 3 ? SylvesterBranch::Rank3 : SylvesterBranch::Rank2);
        if (rep.rank < 4)
            for (const auto& v : kernel_basis(S)) rep.kernel.push_back(v.to_slice_fn());
        return rep;
    }

    if (!det(S).is_zero()) {
        rep.branch = SylvesterBranch::Rank4;
        if (rep.rank != 4) throw error("classify: rank mismatch in the invertible branch");
        Rat alpha = shift_regularize(f, g).alpha;
        rep.shift = alpha;
        auto [lL, lR] = lambda_LR(add_const(f, alpha), add_const(g, -alpha));
        rep.lambda_L = lL;
        rep.lambda_R = lR;
        return rep;
    }

    if (rank2_conditions(f, g)) {
        rep.branch = SylvesterBranch::Rank2;
        if (rep.rank != 2) throw error("classify: rank mismatch in the rank-2 branch");
        auto kb = rank2_kernel(f, g);
        rep.kernel = {kb.tau1, kb.tau2};
        auto zd = rank2_zero_divisor_in_kernel(f, g);
        rep.zero_divisor_in_kernel = zd.present;
        rep.zero_divisor_case = zd.which_case;
        return rep;
    }

    rep.branch = SylvesterBranch::Rank3;
    if (rep.rank != 3) throw error("classify: rank mismatch in the rank-3 branch");
    for (const auto& v : kernel_basis(S)) rep.kernel.push_back(v.to_slice_fn());
    return rep;
}

}  // namespace semreg
