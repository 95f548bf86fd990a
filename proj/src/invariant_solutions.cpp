#include "fraclab/invariant_solutions.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "fraclab/special_functions.hpp"

namespace fraclab {

double residual_tolerance() {
    static const double tol = [] {
        if (const char* env = std::getenv("FRACLAB_TOL")) {
            char* end = nullptr;
            const double v = std::strtod(env, &end);
            if (end != env && v > 0.0) return v;
        }
        return 1e-10;
    }();
    return tol;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16g", v);
    return buf;
}

struct EquationShape {
    double x_exp_numerator;  // 2 for diffusion, 3 for third order
    double paper_base(double expnt, double r_gamma) const {
        if (x_exp_numerator == 2.0) {
            return 2.0 * (2.0 - expnt) * r_gamma / (expnt * expnt);
        }
        return expnt * expnt * expnt * r_gamma /
               (3.0 * (3.0 - expnt) * (3.0 + expnt));
    }
};

SimilaritySolution solve_constant(const Equation& eq, double alpha) {
    const double expnt = eq.exponent;
    if (expnt == 0.0) throw std::invalid_argument("solve_constant: exponent must be nonzero");
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("solve_constant: need 0 < alpha <= 1");
    }
    const EquationShape shape{eq.kind == EquationKind::diffusion ? 2.0 : 3.0};
    const double a = shape.x_exp_numerator / expnt;  // x-exponent
    const double b = -alpha / expnt;                 // t-exponent

    // The extended power rule needs t_exp > -1 except at alpha = 1 where the
    // Caputo operator is the classical derivative.
    if (alpha < 1.0 && b <= -1.0 + kExponentTolerance) {
        throw DivergentError("solve_constant: ansatz t-exponent " + fmt(b) +
                             " is <= -1, the fractional derivative diverges");
    }

    // Temporal side: coefficient R of the ansatz with unit constant.
    const GammaRatio r_gamma = gamma_ratio(b + 1.0, b + 1.0 - alpha);
    if (r_gamma.is_zero) {
        throw NoRealSolutionError("solve_constant: Gamma(" + fmt(b + 1.0 - alpha) +
                                  ") pole makes the Gamma ratio zero; only the trivial "
                                  "solution remains");
    }

    // Spatial side: coefficient S extracted from the algebra at unit constant.
    const Monomial unit_ansatz{1.0, a, b};
    const PowerSum spatial = spatial_operator(unit_ansatz, eq);
    if (spatial.is_zero()) {
        throw NoRealSolutionError("solve_constant: spatial coefficient vanishes at exponent " +
                                  fmt(expnt));
    }
    if (spatial.terms().size() != 1) {
        throw std::logic_error("solve_constant: spatial operator is not a single monomial");
    }
    const Monomial s_term = spatial.terms().front();
    if (std::abs(s_term.x_exp - a) > 1e-9 || std::abs(s_term.t_exp - (b - alpha)) > 1e-9) {
        throw std::logic_error("solve_constant: spatial exponents do not match the ansatz");
    }
    const double s_coeff = s_term.coeff;

    const double ratio = r_gamma.value / s_coeff;
    if (!(ratio > 0.0)) {
        throw NoRealSolutionError("solve_constant: c^" + fmt(expnt) + " = " + fmt(ratio) +
                                  " has no positive real root");
    }

    SimilaritySolution sol;
    sol.equation = eq;
    sol.alpha = alpha;
    sol.x_exp = a;
    sol.t_exp = b;
    sol.constant = std::pow(ratio, 1.0 / expnt);

    const auto residual_of = [&](double c) {
        const PowerSum r = eq.kind == EquationKind::diffusion
                               ? residual_diffusion({c, a, b}, expnt, alpha)
                               : residual_third_order({c, a, b}, expnt, alpha);
        return r.max_abs_coeff();
    };

    sol.residual_scale = std::max(std::abs(sol.constant * r_gamma.value),
                                  std::abs(std::pow(sol.constant, expnt + 1.0) * s_coeff));
    sol.residual_max_coeff = residual_of(sol.constant);
    sol.certified = sol.residual_max_coeff <= residual_tolerance() * sol.residual_scale;

    const double paper_base = shape.paper_base(expnt, r_gamma.value);
    if (paper_base > 0.0) {
        sol.paper_constant = std::pow(paper_base, 1.0 / expnt);
        sol.paper_residual_max_coeff = residual_of(*sol.paper_constant);
    } else if (paper_base == 0.0) {
        sol.paper_constant = 0.0;  // residual undefined for the zero ansatz
    }
    sol.matches_paper = sol.paper_constant.has_value() &&
                        std::abs(*sol.paper_constant - sol.constant) <=
                            1e-12 * std::max(1.0, std::abs(sol.constant));
    return sol;
}

}  // namespace

SimilaritySolution solve_constant_p(double p, double alpha) {
    return solve_constant({EquationKind::diffusion, p}, alpha);
}

SimilaritySolution solve_constant_q(double q, double alpha) {
    return solve_constant({EquationKind::third_order, q}, alpha);
}

IbvpClassification classify_ibvp(const SimilaritySolution& solution) {
    if (!solution.certified) {
        throw std::invalid_argument("classify_ibvp: requires a certified solution");
    }
    IbvpClassification c;
    const bool positive_exponent = solution.equation.exponent > 0.0;
    if (positive_exponent) {
        // x_exp > 0, t_exp < 0: zero datum on x = 0, blow-up approaching t = 0.
        c.zero_boundary = IbvpClassification::ZeroSide::x_side;
        c.blowup = IbvpClassification::BlowupAxis::t_to_0;
    } else {
        c.zero_boundary = IbvpClassification::ZeroSide::t_side;
        c.blowup = IbvpClassification::BlowupAxis::x_to_0;
    }
    const char* letter = solution.equation.kind == EquationKind::diffusion ? "p" : "q";
    c.variant = std::string(letter) + (positive_exponent ? ">0" : "<0");
    return c;
}

bool verify_blowup(const SimilaritySolution& solution, Axis axis,
                   const std::vector<double>& sequence) {
    if (sequence.size() < 2) return false;
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        if (!(sequence[i] > 0.0) || (i > 0 && !(sequence[i] < sequence[i - 1]))) {
            throw std::invalid_argument(
                "verify_blowup: sequence must be strictly decreasing and positive");
        }
    }
    std::vector<double> values;
    values.reserve(sequence.size());
    for (const double v : sequence) {
        values.push_back(axis == Axis::t ? solution.eval(v, 1.0) : solution.eval(1.0, v));
    }
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i] > values[i - 1])) return false;
    }
    return values.back() > 1e6 * values.front();
}

}  // namespace fraclab
