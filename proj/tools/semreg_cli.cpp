// Command-line front end for the slice semi-regular function algebra.
//
// Exit codes: 0 success / affirmative verdict, 2 no-solution / negative
// verdict, 1 malformed input.

#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"
#include "semreg/equivalence.hpp"
#include "semreg/oracle.hpp"
#include "semreg/parser.hpp"
#include "semreg/sylvester.hpp"

using nlohmann::json;
using namespace semreg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitNoSolution = 2;

struct Output {
    bool as_json = false;
    json doc;

    void field(const std::string& key, const std::string& value) {
        if (as_json)
            doc[key] = value;
        else
            std::cout << key << ": " << value << "\n";
    }
    void field(const std::string& key, bool value) {
        if (as_json)
            doc[key] = value;
        else
            std::cout << key << ": " << (value ? "true" : "false") << "\n";
    }
    void field(const std::string& key, int value) {
        if (as_json)
            doc[key] = value;
        else
            std::cout << key << ": " << value << "\n";
    }
    void list(const std::string& key, const std::vector<std::string>& values) {
        if (as_json) {
            doc[key] = values;
        } else {
            std::cout << key << ":\n";
            for (const auto& v : values) std::cout << "  " << v << "\n";
        }
    }
    void flush() {
        if (as_json) std::cout << doc.dump(2) << "\n";
    }
};

const char* branch_name(SylvesterBranch b) {
    switch (b) {
        case SylvesterBranch::Rank4: return "rank4";
        case SylvesterBranch::Rank3: return "rank3";
        case SylvesterBranch::Rank2: return "rank2";
    }
    return "?";
}

std::vector<std::string> poly_coeffs(const FieldPoly& p) {
    std::vector<std::string> out;
    for (int n = 0; n <= p.degree(); ++n) out.push_back(to_string(p.coeff(n)));
    return out;
}

SliceFn apply_S(const SliceFn& f, const SliceFn& g, const SliceFn& chi) {
    return star_product(f, chi) + star_product(chi, g);
}

int cmd_classify(const SliceFn& f, const SliceFn& g, Output& out) {
    SylvesterReport rep = classify(f, g);
    out.field("rank", rep.rank);
    out.field("branch", branch_name(rep.branch));
    out.field("rerouted", rep.rerouted);
    out.list("char-poly", poly_coeffs(rep.char_poly));
    if (!rep.kernel.empty()) {
        std::vector<std::string> k;
        for (const auto& v : rep.kernel) k.push_back(to_string(v));
        out.list("kernel", k);
    }
    if (rep.lambda_L) {
        out.field("shift", to_string(rep.shift));
        out.field("lambda-L", to_string(*rep.lambda_L));
        out.field("lambda-R", to_string(*rep.lambda_R));
    }
    if (rep.branch == SylvesterBranch::Rank2 && !rep.rerouted) {
        out.field("zero-divisor-in-kernel", rep.zero_divisor_in_kernel);
        if (rep.zero_divisor_case != 0) out.field("zero-divisor-case", rep.zero_divisor_case);
    }
    out.field("provenance", "closed-form");
    return kExitOk;
}

int cmd_solve(const SliceFn& f, const SliceFn& g, const SliceFn& b, Output& out) {
    SylvesterReport rep = classify(f, g);
    std::optional<SliceFn> chi;
    std::string provenance;
    if (!rep.rerouted && rep.branch == SylvesterBranch::Rank4) {
        chi = solve_rank4(f, g, b);
        provenance = "closed-form";
    } else if (!rep.rerouted && rep.branch == SylvesterBranch::Rank2) {
        chi = rank2_solve(f, g, b);
        provenance = "closed-form";
    } else {
        auto sol = solve(sylvester_matrix(f, g), FieldVec4(b));
        if (sol) chi = sol->to_slice_fn();
        provenance = "matrix-elimination";
    }
    if (!chi) {
        out.field("solvable", false);
        out.field("obstruction", "right-hand side outside the image");
        out.field("provenance", provenance);
        out.flush();
        return kExitNoSolution;
    }
    if (apply_S(f, g, *chi) != b) throw error("solve: verification failed");
    out.field("solvable", true);
    out.field("chi", to_string(*chi));
    out.field("provenance", provenance);
    return kExitOk;
}

int cmd_kernel(const SliceFn& f, const SliceFn& g, Output& out) {
    auto kb = kernel_basis(sylvester_matrix(f, g));
    std::vector<std::string> rows;
    for (const auto& v : kb) {
        SliceFn e = v.to_slice_fn();
        if (!apply_S(f, g, e).is_zero()) throw error("kernel: verification failed");
        std::string tag = symmetrized(e).is_zero() ? "zero-divisor" : "invertible";
        rows.push_back(to_string(e) + "  [" + tag + "]");
    }
    out.field("dimension", static_cast<int>(kb.size()));
    out.list("basis", rows);
    out.field("provenance", "matrix-elimination");
    return kExitOk;
}

int cmd_equiv(const SliceFn& f, const SliceFn& g, Output& out, bool want_witness) {
    bool eq = are_equivalent(f, g);
    out.field("equivalent", eq);
    if (!eq) {
        out.flush();
        return kExitNoSolution;
    }
    if (want_witness || !f.is_central()) {
        SliceFn h = conjugator(f, g).h;
        if (star_product(f, h) != star_product(h, g)) throw error("equiv: witness verification failed");
        out.field("witness", to_string(h));
    }
    return kExitOk;
}

int cmd_idem_analyze(const SliceFn& sigma, const SliceFn& rho, const std::string& which,
                     Output& out) {
    SandwichForm form;
    if (which == "left")
        form = SandwichForm::LeftKill;
    else if (which == "csand")
        form = SandwichForm::ConjSandwich;
    else if (which == "ssand")
        form = SandwichForm::SameSandwich;
    else
        throw error("idem-analyze: --which must be left, csand or ssand");

    auto d = image_membership_extensional(sigma, rho, form);
    if (!d) {
        out.field("condition-holds", false);
        out.flush();
        return kExitNoSolution;
    }
    out.field("condition-holds", true);
    out.field("conjugator", to_string(d->conjugator));
    out.field("alpha0", to_string(d->alpha0));
    if (form == SandwichForm::ConjSandwich) out.field("alpha1", to_string(d->alpha1));
    out.field("beta2", to_string(d->beta2));
    if (form == SandwichForm::SameSandwich) out.field("beta3", to_string(d->beta3));
    return kExitOk;
}

std::vector<SliceFn> parse_file(const std::string& path, DomainMode mode) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    std::vector<SliceFn> fns;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        fns.push_back(parse_slice_fn(line, mode));
    }
    if (fns.empty()) throw error(path + " contains no expressions");
    return fns;
}

int cmd_lfg_solve(const std::string& f_file, const std::string& g_file, const SliceFn& b,
                  DomainMode mode, Output& out) {
    OperatorSpec op(parse_file(f_file, mode), parse_file(g_file, mode));
    auto sol = solve(op.matrix(), FieldVec4(b));
    if (!sol) {
        out.field("solvable", false);
        out.flush();
        return kExitNoSolution;
    }
    SliceFn chi = sol->to_slice_fn();
    if (apply(op, chi) != b) throw error("lfg-solve: verification failed");
    out.field("solvable", true);
    out.field("chi", to_string(chi));
    out.field("provenance", "matrix-elimination");
    return kExitOk;
}

// Small self-contained generator so oracle campaigns are reproducible from
// the seed alone.
SliceFn random_fn(std::mt19937_64& rng, DomainMode mode) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(0, 3);
    auto rand_ratfun = [&] {
        int d = deg(rng);
        std::vector<Rat> c(static_cast<size_t>(d) + 1);
        for (auto& v : c) v = coeff(rng);
        return RatFun(QPoly(std::move(c)));
    };
    auto rand_scalar = [&] {
        if (mode == DomainMode::Slice) return ScalarElem(rand_ratfun(), mode);
        return ScalarElem(rand_ratfun(), rand_ratfun(), mode);
    };
    return {rand_scalar(), rand_scalar(), rand_scalar(), rand_scalar()};
}

int cmd_oracle_check(DomainMode mode, uint64_t seed, int pairs, int points, double tol,
                     Output& out) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> comp(-2.0, 2.0);
    int checked = 0, failures = 0;
    for (int n = 0; n < pairs; ++n) {
        SliceFn f = random_fn(rng, mode);
        SliceFn g = random_fn(rng, mode);
        int done = 0;
        while (done < points) {
            QuatF q{comp(rng), comp(rng), comp(rng), comp(rng)};
            if (q.vec_norm() < 0.5) continue;
            try {
                if (!check_star_pointwise(f, g, q, tol)) ++failures;
                ++checked;
                ++done;
            } catch (const error&) {
                // pole; resample
            }
        }
    }
    out.field("pairs", pairs);
    out.field("points-checked", checked);
    out.field("failures", failures);
    return failures == 0 ? kExitOk : kExitNoSolution;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact algebra of slice semi-regular functions"};
    app.require_subcommand(1);

    std::string mode_str;
    bool as_json = false;
    uint64_t seed = 0;
    app.add_option("--mode", mode_str, "Domain mode: slice or product")->required();
    app.add_flag("--json", as_json, "Emit JSON");
    app.add_option("--seed", seed, "Random seed for campaigns");

    std::string e1, e2, e3, which = "left", f_file, g_file;
    int pairs = 100, points = 20;
    double tol = 1e-9;

    auto* classify_cmd = app.add_subcommand("classify", "Rank-classify chi -> f*chi + chi*g");
    classify_cmd->add_option("f", e1)->required();
    classify_cmd->add_option("g", e2)->required();

    auto* solve_cmd = app.add_subcommand("solve", "Solve f*chi + chi*g = b");
    solve_cmd->add_option("f", e1)->required();
    solve_cmd->add_option("g", e2)->required();
    solve_cmd->add_option("b", e3)->required();

    auto* kernel_cmd = app.add_subcommand("kernel", "Kernel basis of chi -> f*chi + chi*g");
    kernel_cmd->add_option("f", e1)->required();
    kernel_cmd->add_option("g", e2)->required();

    auto* equiv_cmd = app.add_subcommand("equiv", "Conjugation equivalence verdict");
    equiv_cmd->add_option("f", e1)->required();
    equiv_cmd->add_option("g", e2)->required();

    auto* conj_cmd = app.add_subcommand("conjugate", "Conjugating witness for f ~ g");
    conj_cmd->add_option("f", e1)->required();
    conj_cmd->add_option("g", e2)->required();

    auto* idem_cmd = app.add_subcommand("idem-analyze", "Normal form of rho relative to an idempotent");
    idem_cmd->add_option("sigma", e1)->required();
    idem_cmd->add_option("rho", e2)->required();
    idem_cmd->add_option("--which", which, "left | csand | ssand");

    auto* lfg_cmd = app.add_subcommand("lfg-solve", "Solve a general two-sided operator equation");
    lfg_cmd->add_option("f-file", f_file, "File with one expression per line")->required();
    lfg_cmd->add_option("g-file", g_file, "File with one expression per line")->required();
    lfg_cmd->add_option("b", e3)->required();

    auto* oracle_cmd = app.add_subcommand("oracle-check", "Pointwise fuzz of the product formula");
    oracle_cmd->add_option("--pairs", pairs);
    oracle_cmd->add_option("--points", points);
    oracle_cmd->add_option("--tol", tol);

    CLI11_PARSE(app, argc, argv);

    DomainMode mode;
    if (mode_str == "slice")
        mode = DomainMode::Slice;
    else if (mode_str == "product")
        mode = DomainMode::Product;
    else {
        std::cerr << "error: --mode must be slice or product\n";
        return kExitBadInput;
    }

    Output out;
    out.as_json = as_json;
    try {
        int code = kExitOk;
        if (*classify_cmd)
            code = cmd_classify(parse_slice_fn(e1, mode), parse_slice_fn(e2, mode), out);
        else if (*solve_cmd)
            code = cmd_solve(parse_slice_fn(e1, mode), parse_slice_fn(e2, mode),
                             parse_slice_fn(e3, mode), out);
        else if (*kernel_cmd)
            code = cmd_kernel(parse_slice_fn(e1, mode), parse_slice_fn(e2, mode), out);
        else if (*equiv_cmd)
            code = cmd_equiv(parse_slice_fn(e1, mode), parse_slice_fn(e2, mode), out, false);
        else if (*conj_cmd)
            code = cmd_equiv(parse_slice_fn(e1, mode), parse_slice_fn(e2, mode), out, true);
        else if (*idem_cmd)
            code = cmd_idem_analyze(parse_slice_fn(e1, mode), parse_slice_fn(e2, mode), which, out);
        else if (*lfg_cmd)
            code = cmd_lfg_solve(f_file, g_file, parse_slice_fn(e3, mode), mode, out);
        else if (*oracle_cmd)
            code = cmd_oracle_check(mode, seed, pairs, points, tol, out);
        if (code == kExitOk) out.flush();
        return code;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}
