#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <set>
#include <string>

#include "fraclab/fpde_solver.hpp"
#include "fraclab/fractional_numerics.hpp"
#include "fraclab/invariant_solutions.hpp"
#include "fraclab/json_io.hpp"
#include "fraclab/powerlaw.hpp"
#include "fraclab/symmetry.hpp"
#include "fraclab/version.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitDivergence = 4;

struct RunContext {
    std::string subcommand;
    std::string outdir = ".";
    json parameters = json::object();
    std::vector<std::string> outputs;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    std::filesystem::path path(const std::string& name) const {
        return std::filesystem::path(outdir) / name;
    }

    void write_file(const std::string& name, const std::string& content) {
        std::filesystem::create_directories(outdir);
        const auto p = path(name);
        std::ofstream out(p);
        if (!out) throw fraclab::ConfigError("cannot write " + p.string());
        out << content;
        outputs.push_back(p.string());
    }

    void write_manifest(const std::string& error = {}) {
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        json m;
        m["subcommand"] = subcommand;
        m["parameters"] = parameters;
        m["outputs"] = outputs;
        m["duration_seconds"] = seconds;
        m["version"] = fraclab::kVersion;
        if (!error.empty()) m["error"] = error;
        std::filesystem::create_directories(outdir);
        std::ofstream out(path(subcommand + "_manifest.json"));
        out << m.dump(2) << "\n";
    }
};

fraclab::Equation parse_equation(const std::string& name, double exponent) {
    if (name == "diffusion") return {fraclab::EquationKind::diffusion, exponent};
    if (name == "third_order") return {fraclab::EquationKind::third_order, exponent};
    throw fraclab::ConfigError("unknown equation '" + name + "'");
}

int run_caputo(RunContext& ctx, const std::string& expr, double alpha, bool extended) {
    ctx.parameters = {{"expr", expr}, {"alpha", alpha}, {"extended", extended}};
    const fraclab::PowerSum s = fraclab::parse_power_sum(expr);
    const fraclab::PowerSum result = fraclab::caputo_dt(
        s, alpha, extended ? fraclab::CaputoMode::extended : fraclab::CaputoMode::strict);
    std::cout << fraclab::to_string(result) << "\n";
    return kExitOk;
}

int run_verify(RunContext& ctx, const std::string& equation, double exponent, double alpha) {
    ctx.parameters = {{"equation", equation},
                      {equation == "diffusion" ? "p" : "q", exponent},
                      {"alpha", alpha}};
    const fraclab::Equation eq = parse_equation(equation, exponent);
    const fraclab::SimilaritySolution sol = eq.kind == fraclab::EquationKind::diffusion
                                                ? fraclab::solve_constant_p(exponent, alpha)
                                                : fraclab::solve_constant_q(exponent, alpha);
    std::cout << fraclab::to_json(sol).dump(2) << "\n";
    std::cerr << "matches_paper: " << (sol.matches_paper ? "true" : "false")
              << "  (derived constant " << sol.constant;
    if (sol.paper_constant) std::cerr << ", paper constant " << *sol.paper_constant;
    std::cerr << ")\n";
    return sol.certified ? kExitOk : kExitDomain;
}

int run_bvp_check(RunContext& ctx, const std::string& equation, double c1, double c2, double c3,
                  double c4, double alpha, double exponent) {
    ctx.parameters = {{"equation", equation}, {"c1", c1},       {"c2", c2}, {"c3", c3},
                      {"c4", c4},             {"alpha", alpha}, {equation == "diffusion" ? "p" : "q", exponent}};
    const bool diffusion = equation == "diffusion";
    if (!diffusion && equation != "third_order") {
        throw fraclab::ConfigError("unknown equation '" + equation + "'");
    }
    if (diffusion && c4 != 0.0) {
        throw fraclab::ConfigError("the diffusion symmetry has no c4 coefficient");
    }
    const fraclab::Generator gen =
        diffusion ? fraclab::diffusion_generator(c1, c2, c3, alpha, exponent)
                  : fraclab::third_order_generator(c1, c2, c3, c4, alpha, exponent);

    // Generator fields map back to published coefficient names.
    const auto paper_name = [&](const std::string& field) -> std::string {
        if (field == "e0") return diffusion ? "c1" : "c2";
        if (field == "f0") return diffusion ? "f0" : "c4";
        return field;
    };
    const auto display = [&](const fraclab::ConstraintReport& r) {
        std::vector<std::string> names;
        for (const std::string& f : r.required_zero) names.push_back(paper_name(f));
        return names;
    };

    const fraclab::ConstraintReport initial = fraclab::initial_line_invariance(gen);
    const fraclab::ConstraintReport boundary = fraclab::boundary_line_invariance(gen);

    json out;
    out["constraints"] = {{"initial_t0", fraclab::to_json(initial, display(initial))},
                          {"boundary_x0", fraclab::to_json(boundary, display(boundary))}};

    // Exponents and the similarity reduction come from the constrained generator.
    fraclab::Generator constrained = fraclab::zero_fields(gen, initial.required_zero);
    constrained = fraclab::zero_fields(constrained, boundary.required_zero);

    json exps;
    try {
        exps["boundary_x0"] =
            fraclab::boundary_condition_exponent(constrained, fraclab::BoundarySide::boundary_x0);
    } catch (const fraclab::DegenerateError&) {
        exps["boundary_x0"] = nullptr;
    }
    try {
        exps["initial_t0"] =
            fraclab::boundary_condition_exponent(constrained, fraclab::BoundarySide::initial_t0);
    } catch (const fraclab::DegenerateError&) {
        exps["initial_t0"] = nullptr;
    }
    out["boundary_exponents"] = exps;

    try {
        out["similarity_form"] = fraclab::to_json(fraclab::similarity_form(constrained));
    } catch (const fraclab::DegenerateError&) {
        out["similarity_form"] = nullptr;
    }

    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

fraclab::SolverConfig config_from_json(const json& j, bool for_converge, int& levels) {
    static const std::set<std::string> known = {
        "alpha", "p",      "x_lo", "x_hi",   "t_final",
        "nx",    "nt",     "mode", "u_star", "levels",
        "max_coefficient_iterations"};
    for (const auto& item : j.items()) {
        if (!known.count(item.key())) {
            throw fraclab::ConfigError("unknown config key '" + item.key() + "'");
        }
    }
    const auto require = [&](const char* key) -> const json& {
        if (!j.contains(key)) throw fraclab::ConfigError(std::string("missing config key '") + key + "'");
        return j.at(key);
    };
    const double alpha = require("alpha").get<double>();
    const double p = require("p").get<double>();
    const double x_lo = require("x_lo").get<double>();
    const double x_hi = require("x_hi").get<double>();
    const double t_final = require("t_final").get<double>();
    const int nx = require("nx").get<int>();
    const int nt = require("nt").get<int>();
    const std::string mode = require("mode").get<std::string>();

    levels = j.value("levels", 3);
    if (for_converge && levels < 3) throw fraclab::ConfigError("converge: need levels >= 3");

    fraclab::SolverConfig cfg;
    if (mode == "mms") {
        const std::string u_star_text = require("u_star").get<std::string>();
        const double pr = std::nearbyint(p);
        if (p != pr || pr < 1.0) throw fraclab::ConfigError("mms mode needs integer p >= 1");
        cfg = fraclab::SolverConfig::mms(fraclab::parse_power_sum(u_star_text),
                                         static_cast<int>(pr), alpha, x_lo, x_hi, t_final, nx, nt);
    } else if (mode == "exact_similarity") {
        const fraclab::SimilaritySolution sol = fraclab::solve_constant_p(p, alpha);
        cfg = fraclab::SolverConfig::exact_similarity(sol, x_lo, x_hi, t_final, nx, nt);
    } else {
        throw fraclab::ConfigError("unknown mode '" + mode + "'");
    }
    if (j.contains("max_coefficient_iterations")) {
        cfg.max_coefficient_iterations = j.at("max_coefficient_iterations").get<int>();
        cfg.validate();
    }
    return cfg;
}

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw fraclab::ConfigError("cannot read config file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw fraclab::ConfigError(std::string("config parse error: ") + e.what());
    }
    return j;
}

int run_solve(RunContext& ctx, const std::string& config_path) {
    const json j = load_config(config_path);
    ctx.parameters = {{"config", config_path}, {"config_contents", j}};
    int levels = 0;
    const fraclab::SolverConfig cfg = config_from_json(j, /*for_converge=*/false, levels);
    const fraclab::Field field = fraclab::solve(cfg);
    ctx.write_file("field.csv", fraclab::to_csv(field));
    char buf[96];
    std::snprintf(buf, sizeof(buf), "max_error=%.16g l2_error=%.16g\n", field.max_error,
                  field.l2_error);
    std::cout << buf;
    return kExitOk;
}

int run_converge(RunContext& ctx, const std::string& config_path) {
    const json j = load_config(config_path);
    ctx.parameters = {{"config", config_path}, {"config_contents", j}};
    int levels = 0;
    const fraclab::SolverConfig cfg = config_from_json(j, /*for_converge=*/true, levels);
    const auto rows = fraclab::convergence_study(cfg, levels);
    ctx.write_file("convergence.csv", fraclab::to_csv(rows));
    char buf[96];
    std::snprintf(buf, sizeof(buf), "final_observed_order=%.16g\n", rows.back().observed_order);
    std::cout << buf;
    return kExitOk;
}

int run_leibniz(RunContext& ctx, double a_exp, double b_exp, double alpha, int n_terms, double t) {
    ctx.parameters = {{"a", a_exp}, {"b", b_exp}, {"alpha", alpha}, {"n_terms", n_terms}, {"t", t}};
    const std::vector<double> partial =
        fraclab::leibniz_partial_sums(a_exp, b_exp, alpha, n_terms, t);
    const fraclab::PowerSum total(fraclab::Monomial{1.0, 0.0, a_exp + b_exp});
    const double closed = fraclab::rl_dt(total, alpha).eval(t, 1.0);
    json out;
    out["partial_sum"] = partial.back();
    out["closed_form"] = closed;
    json errs = json::array();
    for (const double v : partial) errs.push_back(std::abs(v - closed));
    out["abs_error"] = errs;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fraclab: fractional-calculus operators, symmetry checks and a "
                 "time-fractional diffusion solver"};
    app.require_subcommand(1);
    app.fallthrough();  // --outdir may follow the subcommand

    std::string outdir = ".";
    app.add_option("--outdir", outdir, "Directory for output files and run manifests")
        ->capture_default_str();

    std::string expr, equation, config_path;
    double alpha = 0.5, p_or_q = 1.0, c1 = 0.0, c2 = 0.0, c3 = 0.0, c4 = 0.0;
    double a_exp = 1.0, b_exp = 1.0, t_eval = 1.0;
    int n_terms = 1;
    bool extended = false;

    CLI::App* caputo = app.add_subcommand("caputo", "Caputo derivative of a power-law expression");
    caputo->add_option("--expr", expr, "Expression, e.g. \"1*t^1\" or \"2*x^0.5*t^-0.25\"")
        ->required();
    caputo->add_option("--alpha", alpha, "Fractional order in (0, 1]")->required();
    caputo->add_flag("--extended", extended, "Apply the power rule for t-exponents in (-1, 0)");

    CLI::App* verify = app.add_subcommand("verify", "Certify a similarity solution's constant");
    verify->add_option("--equation", equation, "diffusion | third_order")->required();
    verify->add_option("--p", p_or_q, "Nonlinearity exponent (diffusion)");
    verify->add_option("--q", p_or_q, "Nonlinearity exponent (third_order)");
    verify->add_option("--alpha", alpha, "Fractional order in (0, 1]")->required();

    CLI::App* bvp = app.add_subcommand("bvp_check", "Line-invariance constraints, boundary-datum "
                                                    "exponents and the similarity reduction");
    bvp->add_option("--equation", equation, "diffusion | third_order")->required();
    bvp->add_option("--c1", c1, "Symmetry coefficient c1");
    bvp->add_option("--c2", c2, "Symmetry coefficient c2");
    bvp->add_option("--c3", c3, "Symmetry coefficient c3");
    bvp->add_option("--c4", c4, "Symmetry coefficient c4 (third_order only)");
    bvp->add_option("--alpha", alpha, "Fractional order in (0, 1]")->required();
    bvp->add_option("--p", p_or_q, "Nonlinearity exponent (diffusion)");
    bvp->add_option("--q", p_or_q, "Nonlinearity exponent (third_order)");

    CLI::App* solve = app.add_subcommand("solve", "Run the time-fractional diffusion solver");
    solve->add_option("--config", config_path, "JSON config file")->required();

    CLI::App* converge = app.add_subcommand("converge", "Refinement study (mms mode)");
    converge->add_option("--config", config_path, "JSON config file")->required();

    CLI::App* leibniz = app.add_subcommand("leibniz", "Generalized Leibniz series partial sums");
    leibniz->add_option("--a", a_exp, "Exponent of f = t^a ( > -1)")->required();
    leibniz->add_option("--b", b_exp, "Exponent of g = t^b ( >= 0)")->required();
    leibniz->add_option("--alpha", alpha, "Fractional order in (0, 1]")->required();
    leibniz->add_option("--terms", n_terms, "Number of series terms")->required();
    leibniz->add_option("--t", t_eval, "Evaluation point t > 0")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    const auto require_flag = [&](CLI::App* sub, const std::string& flag) {
        if (sub->count(flag) == 0) {
            throw fraclab::ConfigError("missing required option " + flag + " for --equation " +
                                       equation);
        }
    };

    RunContext ctx;
    ctx.outdir = outdir;
    try {
        int rc = kExitOk;
        if (caputo->parsed()) {
            ctx.subcommand = "caputo";
            rc = run_caputo(ctx, expr, alpha, extended);
        } else if (verify->parsed()) {
            ctx.subcommand = "verify";
            require_flag(verify, equation == "third_order" ? "--q" : "--p");
            rc = run_verify(ctx, equation, p_or_q, alpha);
        } else if (bvp->parsed()) {
            ctx.subcommand = "bvp_check";
            require_flag(bvp, equation == "third_order" ? "--q" : "--p");
            rc = run_bvp_check(ctx, equation, c1, c2, c3, c4, alpha, p_or_q);
        } else if (solve->parsed()) {
            ctx.subcommand = "solve";
            rc = run_solve(ctx, config_path);
        } else if (converge->parsed()) {
            ctx.subcommand = "converge";
            rc = run_converge(ctx, config_path);
        } else if (leibniz->parsed()) {
            ctx.subcommand = "leibniz";
            rc = run_leibniz(ctx, a_exp, b_exp, alpha, n_terms, t_eval);
        }
        ctx.write_manifest();
        return rc;
    } catch (const fraclab::Error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        ctx.write_manifest(std::string(e.name()) + ": " + e.what());
        if (dynamic_cast<const fraclab::UsageError*>(&e)) return kExitUsage;
        if (dynamic_cast<const fraclab::DivergenceError*>(&e)) return kExitDivergence;
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        ctx.write_manifest(std::string("invalid argument: ") + e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
