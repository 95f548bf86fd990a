#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "fraclab/errors.hpp"

namespace fraclab {

/// A function sampled on a strictly increasing time grid starting at 0.
struct SampledFunction {
    Eigen::VectorXd t_nodes;
    Eigen::VectorXd values;

    /// Uniform grid with n_steps intervals on [0, t_final], values zeroed.
    static SampledFunction uniform(int n_steps, double t_final);

    /// Grid spacing; throws NonUniformGridError if spacing varies beyond 1e-12 relative.
    double uniform_step() const;

    void validate() const;
};

/// L1 weights b_j = (j+1)^{1-alpha} - j^{1-alpha}, j = 0..n_steps-1.
/// Strictly decreasing, b_0 = 1; requires 0 < alpha < 1.
std::vector<double> l1_weights(double alpha, int n_steps);

/// L1 discretization of the Caputo derivative on a uniform grid, 0 < alpha < 1.
/// Node 0 is 0 by convention.
SampledFunction l1_caputo(const SampledFunction& f, double alpha);

/// Riemann-Liouville fractional integral of order alpha > 0 by product-trapezoid
/// rule: per-interval exact moments of a piecewise-linear interpolant, so the
/// kernel singularity at the upper limit costs no quadrature error.
SampledFunction rl_integral_num(const SampledFunction& f, double alpha);

/// Riemann-Liouville derivative via the Caputo relation:
/// l1_caputo(f, alpha) + f0 t^{-alpha} / Gamma(1-alpha) at nodes >= 1.
SampledFunction rl_derivative_num(const SampledFunction& f, double alpha, double f0);

/// Partial sum of the generalized Leibniz series for D_t^alpha(t^a * t^b) with
/// f = t^a, g = t^b, evaluated at t > 0. Terms n = 0..n_terms-1; the n = 0 term
/// is the Riemann-Liouville derivative D^alpha f, later terms are fractional
/// integrals I^{n-alpha} f times d^n/dt^n g. Exact for nonnegative-integer b
/// once n_terms > b.
double leibniz_partial_sum(double a_exp, double b_exp, double alpha, int n_terms, double t);

/// Running partial sums for n_terms = 1..max_terms (for truncation-error reporting).
std::vector<double> leibniz_partial_sums(double a_exp, double b_exp, double alpha, int max_terms,
                                         double t);

/// Two-column CSV "t,value" with 16 significant digits.
std::string to_csv(const SampledFunction& f);

}  // namespace fraclab
