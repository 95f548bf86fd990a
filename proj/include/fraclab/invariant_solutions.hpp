#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fraclab/powerlaw.hpp"
#include "fraclab/symmetry.hpp"

namespace fraclab {

/// Residual tolerance for solution certificates; FRACLAB_TOL overrides the
/// default 1e-10 (read once per process).
double residual_tolerance();

/// A certified power-law similarity solution u = constant * x^{x_exp} t^{t_exp}
/// together with its residual certificate and the comparison against the
/// published closed-form constant.
struct SimilaritySolution {
    Equation equation;
    double alpha = 0.0;
    double x_exp = 0.0;
    double t_exp = 0.0;
    double constant = 0.0;
    double residual_max_coeff = 0.0;  // absolute, certified against tol * residual_scale
    double residual_scale = 1.0;      // magnitude of the matched equation sides
    bool certified = false;
    std::optional<double> paper_constant;
    std::optional<double> paper_residual_max_coeff;
    bool matches_paper = false;

    Monomial monomial() const { return {constant, x_exp, t_exp}; }
    double eval(double t, double x) const { return PowerSum(monomial()).eval(t, x); }
};

/// Solves C D_t^alpha u = (u^p u_x)_x for u = c x^{2/p} t^{-alpha/p}. The constant
/// comes from matching residual coefficients in the algebra: c^p = R / S with
/// R = Gamma(1-alpha/p)/Gamma(1-alpha/p-alpha) and S the spatial coefficient
/// 2(p+2)/p^2 extracted symbolically. The published constant (with S' = 2(2-p)/p^2)
/// is stored alongside for comparison; the residual certificate adjudicates.
SimilaritySolution solve_constant_p(double p, double alpha);

/// Same procedure for C D_t^alpha u = (u^q u_xx)_x with u = c' x^{3/q} t^{-alpha/q}
/// and S = 3(3-q)(3+q)/q^3; here the published constant matches the residual method.
SimilaritySolution solve_constant_q(double q, double alpha);

/// Which coordinate line carries the zero datum and which axis blows up.
struct IbvpClassification {
    enum class ZeroSide { t_side, x_side };
    enum class BlowupAxis { t_to_0, x_to_0 };
    ZeroSide zero_boundary;
    BlowupAxis blowup;
    std::string variant;  // "p>0", "p<0", "q>0", "q<0"
};
IbvpClassification classify_ibvp(const SimilaritySolution& solution);

/// Finite-sequence proxy for lim u = +infinity approaching the axis: values along
/// the strictly decreasing sequence (other coordinate fixed at 1) must strictly
/// increase and the last must exceed 1e6 times the first.
enum class Axis { t, x };
bool verify_blowup(const SimilaritySolution& solution, Axis axis,
                   const std::vector<double>& sequence);

}  // namespace fraclab
