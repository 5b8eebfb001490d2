// qslice command line: parse polynomial expressions in quaternionic
// variables, dump their stems, classify them, evaluate them, and run the
// identity / theorem verification suites.
//
// Exit codes: 0 success (or verification pass), 1 verification failure,
// 2 usage error (bad input, hypothesis violations, parse failures).

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qslice/classify.hpp"
#include "qslice/errors.hpp"
#include "qslice/json_io.hpp"
#include "qslice/numdiff.hpp"
#include "qslice/sampling.hpp"
#include "qslice/slice_function.hpp"
#include "qslice/stem.hpp"
#include "qslice/text.hpp"

using namespace qslice;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

std::string fmt_double(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fmt_quat_tuple(const DQuat& q) {
    return "(" + fmt_double(q.w) + "," + fmt_double(q.x) + "," + fmt_double(q.y) + "," +
           fmt_double(q.z) + ")";
}

[[noreturn]] void usage_error(const std::string& type, const std::string& message,
                              bool json) {
    if (json)
        std::cout << error_to_json(type, message) << "\n";
    else
        std::cerr << "error (" << type << "): " << message << "\n";
    std::exit(kExitUsage);
}

std::string error_type_name(const Error& e) {
    if (dynamic_cast<const SyntaxError*>(&e)) return "SyntaxError";
    if (dynamic_cast<const NonOrderedMonomial*>(&e)) return "NonOrderedMonomial";
    if (dynamic_cast<const HypothesisViolated*>(&e)) return "HypothesisViolated";
    if (dynamic_cast<const NotSliceInVariable*>(&e)) return "NotSliceInVariable";
    if (dynamic_cast<const ArityMismatch*>(&e)) return "ArityMismatch";
    if (dynamic_cast<const IndexOutOfRange*>(&e)) return "IndexOutOfRange";
    if (dynamic_cast<const ArityLimitExceeded*>(&e)) return "ArityLimitExceeded";
    if (dynamic_cast<const NotDivisible*>(&e)) return "NotDivisible";
    if (dynamic_cast<const NotAUnit*>(&e)) return "NotAUnit";
    if (dynamic_cast<const RealFiber*>(&e)) return "RealFiber";
    if (dynamic_cast<const DegenerateStep*>(&e)) return "DegenerateStep";
    if (dynamic_cast<const ZeroDivisor*>(&e)) return "ZeroDivisor";
    return "Error";
}

struct StemInput {
    std::string expression;
    std::string stem_json_path;
    std::uint32_t arity = 0;

    bool has_source() const { return !expression.empty() || !stem_json_path.empty(); }

    StemFunction load(bool json) const {
        if (!expression.empty() && !stem_json_path.empty())
            usage_error("Usage", "give either an expression or --stem-json, not both", json);
        if (!stem_json_path.empty()) {
            std::ifstream in(stem_json_path);
            if (!in) usage_error("Usage", "cannot open " + stem_json_path, json);
            std::stringstream buffer;
            buffer << in.rdbuf();
            StemFunction f = stem_from_json(buffer.str());
            if (arity != 0 && f.arity() != arity)
                usage_error("ArityMismatch",
                            "-n disagrees with the arity stored in the stem file", json);
            return f;
        }
        if (arity == 0) usage_error("Usage", "-n <arity> is required", json);
        Expression e = parse_expression(expression, arity);
        return from_ordered_monomials(e.terms, arity);
    }
};

void order_subsets(std::vector<SubsetIndex>& subsets) {
    std::sort(subsets.begin(), subsets.end(), [](SubsetIndex a, SubsetIndex b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.bits < b.bits;
    });
}

int run_stem(const StemInput& input, bool json) {
    StemFunction f = input.load(json);
    if (json) {
        std::cout << stem_to_json(f) << "\n";
        return kExitPass;
    }
    std::vector<SubsetIndex> subsets;
    for (std::uint32_t bits = 0; bits < (1u << f.arity()); ++bits)
        subsets.push_back(SubsetIndex(bits));
    order_subsets(subsets);
    for (SubsetIndex k : subsets)
        std::cout << "F" << to_string(k) << " = " << f.component(k).to_string() << "\n";
    return kExitPass;
}

int run_classify(const StemInput& input, bool json) {
    StemFunction f = input.load(json);
    ClassificationReport report = classify(f);
    if (json) {
        std::cout << classification_to_json(report) << "\n";
        return kExitPass;
    }
    std::cout << "slice_regular: " << (report.slice_regular ? "true" : "false") << "\n";
    for (const VariableFlags& flags : report.per_variable) {
        std::cout << "x" << flags.var << ": slice=" << (flags.slice_wrt ? "true" : "false")
                  << " slice_regular=" << (flags.slice_regular_wrt ? "true" : "false")
                  << " circular=" << (flags.circular_wrt ? "true" : "false") << "\n";
        for (const Witness& w : flags.witnesses)
            std::cout << "    witness " << to_string(w.component) << ": " << w.reason
                      << "\n";
    }
    return kExitPass;
}

int run_eval(const StemInput& input, const std::string& at, bool json) {
    StemFunction f = input.load(json);
    if (at.empty()) usage_error("Usage", "--at <point list> is required", json);
    PointHn x = parse_point_list(at, f.arity());
    DQuat value = evaluate(f, x);
    if (json)
        std::cout << evaluation_to_json(x, value) << "\n";
    else
        std::cout << fmt_quat_tuple(value) << "\n";
    return kExitPass;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
    std::string theorem;
    StemInput input;
    std::uint32_t var = 0;  // 0 = sweep/draw
    int count = 0;          // 0 = theorem default
    std::uint64_t seed = 42;
    double step = 0.0;  // 0 = default
    double tol = -1.0;  // <0 = default
    bool json = false;
};

struct ExactOutcome {
    int samples = 0;
    bool pass = true;
};

ExactOutcome run_exact(const VerifyOptions& opt, std::uint32_t arity,
                       const std::optional<StemFunction>& fixed) {
    int count = opt.count > 0 ? opt.count : 64;
    ExactOutcome out;
    for (int iter = 0; iter < count && out.pass; ++iter) {
        Rng rng(opt.seed * 1000 + iter);
        StemFunction f = fixed ? *fixed : random_stem(rng, arity, 4, 4);
        StemFunction g = random_stem(rng, arity, 4, 4);
        ++out.samples;
        for (std::uint32_t h = 1; h <= arity && out.pass; ++h) {
            if (opt.var != 0 && h != opt.var) continue;
            if (opt.theorem == "leibniz") {
                StemFunction lhs = spherical_derivative_stem(stem_tensor(f, g), h);
                StemFunction rhs =
                    stem_tensor(spherical_derivative_stem(f, h), spherical_value_stem(g, h)) +
                    stem_tensor(spherical_value_stem(f, h), spherical_derivative_stem(g, h));
                out.pass = (lhs == rhs);
            } else if (opt.theorem == "representation") {
                StemFunction rebuilt =
                    spherical_value_stem(f, h) +
                    stem_tensor(imaginary_coordinate_stem(h, arity),
                                spherical_derivative_stem(f, h));
                out.pass = (rebuilt == f);
            } else if (opt.theorem == "commutation") {
                for (std::uint32_t j = h + 1; j <= arity && out.pass; ++j) {
                    auto dij = spherical_derivative_stem(spherical_derivative_stem(f, h), j);
                    auto dji = spherical_derivative_stem(spherical_derivative_stem(f, j), h);
                    out.pass = (dij == dji);
                }
            } else {  // subalgebra
                SubsetIndex h_set(1 + static_cast<std::uint32_t>(
                                          rng.integer((1u << arity) - 1)));
                StemFunction fc = spherical_value_stem(f, h_set);
                StemFunction gc = spherical_value_stem(g, h_set);
                out.pass = is_circular_wrt(stem_tensor(fc, gc), h_set).ok;
            }
        }
    }
    return out;
}

int run_verify(const VerifyOptions& opt) {
    static const std::vector<std::string> kTheorems = {
        "leibniz",     "representation", "harmonicity", "fueter",
        "lemma-dbar",  "commutation",    "subalgebra"};
    if (std::find(kTheorems.begin(), kTheorems.end(), opt.theorem) == kTheorems.end())
        usage_error("Usage",
                    "unknown theorem '" + opt.theorem +
                        "' (expected leibniz, representation, harmonicity, fueter, "
                        "lemma-dbar, commutation or subalgebra)",
                    opt.json);

    std::optional<StemFunction> fixed;
    std::uint32_t arity = opt.input.arity;
    if (opt.input.has_source()) {
        fixed = opt.input.load(opt.json);
        arity = fixed->arity();
    }
    if (arity == 0) usage_error("Usage", "-n <arity> is required", opt.json);

    VerificationReport report;
    report.theorem = opt.theorem;
    report.seed = opt.seed;
    report.var = opt.var;

    bool exact = opt.theorem == "leibniz" || opt.theorem == "representation" ||
                 opt.theorem == "commutation" || opt.theorem == "subalgebra";
    if (exact) {
        static const std::map<std::string, std::string> kStatements = {
            {"leibniz", "(f(*)g)'_s,h = f'_s,h (*) g°_s,h + f°_s,h (*) g'_s,h"},
            {"representation", "f = f°_s,h + Im(x_h) (*) f'_s,h"},
            {"commutation", "(f'_s,i)'_s,j = (f'_s,j)'_s,i"},
            {"subalgebra", "f, g circular w.r.t. H  =>  f (*) g circular w.r.t. H"},
        };
        report.statement = kStatements.at(opt.theorem);
        report.tolerance = 0.0;
        ExactOutcome out = run_exact(opt, arity, fixed);
        report.samples = out.samples;
        report.pass = out.pass;
        report.max_residual = out.pass ? 0.0 : 1.0;
    } else {
        SamplePlan plan{opt.seed, 64, 2.0, 0.25};
        int count = opt.count > 0 ? opt.count : 8;
        double worst = 0.0;
        int runs = 0;
        auto run_one = [&](const StemFunction& f, std::uint32_t h) {
            if (opt.theorem == "lemma-dbar") {
                StencilConfig cfg{opt.step > 0 ? opt.step : 1e-4, 2, 0.0};
                worst = std::max(worst, verify_crf_lemma(f, h, plan, cfg));
            } else if (opt.theorem == "harmonicity") {
                StencilConfig cfg{opt.step > 0 ? opt.step : 1e-3, 2, 0.0};
                worst = std::max(worst, verify_harmonicity(f, h, plan, cfg));
            } else {  // fueter
                StencilConfig outer{opt.step > 0 ? opt.step : 1e-2, 2, 0.0};
                StencilConfig inner{1e-3, 4, 0.0};
                worst = std::max(worst, verify_fueter(f, h, plan, outer, inner));
            }
            ++runs;
        };

        if (opt.theorem == "lemma-dbar") {
            report.statement = "dbar_{x_h} f = -f'_s,h for f slice regular w.r.t. x_h";
            report.tolerance = opt.tol >= 0 ? opt.tol : 1e-5;
        } else if (opt.theorem == "harmonicity") {
            report.statement = "Delta_h f'_s,h = 0 for f holomorphic in x_h";
            report.tolerance = opt.tol >= 0 ? opt.tol : 1e-4;
        } else {
            report.statement = "dbar_{x_h} Delta_h f = 0 for f slice regular w.r.t. x_h";
            report.tolerance = opt.tol >= 0 ? opt.tol : 1e-2;
        }

        if (fixed) {
            std::uint32_t h = opt.var != 0 ? opt.var : 1;
            plan.seed = opt.seed;
            run_one(*fixed, h);
        } else {
            bool needs_sliceness = opt.theorem != "harmonicity";
            for (int t = 0; t < count; ++t) {
                Rng rng(opt.seed * 3000 + t);
                std::uint32_t h =
                    opt.var != 0 ? opt.var
                                 : 1 + static_cast<std::uint32_t>(rng.integer(arity));
                plan.seed = opt.seed + t;
                StemFunction f = needs_sliceness
                                     ? random_stem_slice_wrt(rng, arity, h, 3, 4)
                                     : random_stem(rng, arity, 3, 4);
                run_one(f, h);
            }
        }
        report.samples = runs * plan.count;
        report.max_residual = worst;
        report.pass = worst <= report.tolerance;
    }

    if (opt.json) {
        std::cout << verification_to_json(report) << "\n";
    } else {
        std::cout << "theorem: " << report.theorem << "\n"
                  << "statement: " << report.statement << "\n"
                  << "samples: " << report.samples << "\n"
                  << "max_residual: " << fmt_double(report.max_residual) << "\n"
                  << "tolerance: " << fmt_double(report.tolerance) << "\n"
                  << "seed: " << report.seed << "\n"
                  << "pass: " << (report.pass ? "true" : "false") << "\n";
    }
    return report.pass ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"calculus of slice functions of several quaternionic variables"};
    app.require_subcommand(1);

    bool json = false;

    StemInput stem_input, classify_input, eval_input;
    std::string eval_at;
    VerifyOptions verify_opt;

    CLI::App* cmd_stem = app.add_subcommand("stem", "dump the stem components");
    cmd_stem->add_flag("--json", json, "machine-readable output");
    cmd_stem->add_option("expression", stem_input.expression, "polynomial expression");
    cmd_stem->add_option("-n,--arity", stem_input.arity, "number of variables");
    cmd_stem->add_option("--stem-json", stem_input.stem_json_path, "load a stem dump");

    CLI::App* cmd_classify =
        app.add_subcommand("classify", "structural membership flags per variable");
    cmd_classify->add_flag("--json", json, "machine-readable output");
    cmd_classify->add_option("expression", classify_input.expression, "polynomial expression");
    cmd_classify->add_option("-n,--arity", classify_input.arity, "number of variables");
    cmd_classify->add_option("--stem-json", classify_input.stem_json_path, "load a stem dump");

    CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate at a point of H^n");
    cmd_eval->add_flag("--json", json, "machine-readable output");
    cmd_eval->add_option("expression", eval_input.expression, "polynomial expression");
    cmd_eval->add_option("-n,--arity", eval_input.arity, "number of variables");
    cmd_eval->add_option("--stem-json", eval_input.stem_json_path, "load a stem dump");
    cmd_eval->add_option("--at", eval_at, "semicolon-separated 4-tuples");

    CLI::App* cmd_verify = app.add_subcommand("verify", "run one identity/theorem suite");
    cmd_verify->add_flag("--json", json, "machine-readable output");
    cmd_verify->add_option("theorem", verify_opt.theorem,
                           "leibniz | representation | harmonicity | fueter | lemma-dbar "
                           "| commutation | subalgebra")
        ->required();
    cmd_verify->add_option("expression", verify_opt.input.expression,
                           "optional fixed input expression");
    cmd_verify->add_option("-n,--arity", verify_opt.input.arity, "number of variables");
    cmd_verify->add_option("--stem-json", verify_opt.input.stem_json_path,
                           "load a fixed input stem");
    cmd_verify->add_option("--var", verify_opt.var, "variable index h");
    cmd_verify->add_option("--count", verify_opt.count, "number of random inputs");
    cmd_verify->add_option("--seed", verify_opt.seed, "sample plan seed");
    cmd_verify->add_option("--step", verify_opt.step, "stencil step override");
    cmd_verify->add_option("--tol", verify_opt.tol, "pass tolerance override");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_stem->parsed()) return run_stem(stem_input, json);
        if (cmd_classify->parsed()) return run_classify(classify_input, json);
        if (cmd_eval->parsed()) return run_eval(eval_input, eval_at, json);
        verify_opt.json = json;
        return run_verify(verify_opt);
    } catch (const Error& e) {
        std::string type = error_type_name(e);
        if (json)
            std::cout << error_to_json(type, e.what()) << "\n";
        else
            std::cerr << "error (" << type << "): " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        if (json)
            std::cout << error_to_json("Error", e.what()) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
