#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "fraclab/invariant_solutions.hpp"
#include "fraclab/powerlaw.hpp"

namespace fraclab {

enum class SolverMode { exact_similarity, mms };

/// Discretization of C D_t^alpha u = (u^p u_x)_x (+ source) on
/// [x_lo, x_hi] x [0, t_final] with Dirichlet data at both x ends.
struct SolverConfig {
    double alpha = 0.5;
    double p = 1.0;
    double x_lo = 0.0;
    double x_hi = 1.0;
    double t_final = 1.0;
    int nx = 16;  // spatial intervals
    int nt = 16;  // time steps
    SolverMode mode = SolverMode::mms;

    PowerSum source;  // exact forcing (zero for exact_similarity)
    std::function<double(double)> dirichlet_lo;        // u(t, x_lo)
    std::function<double(double)> dirichlet_hi;        // u(t, x_hi)
    std::function<double(double)> initial;             // u(0, x)
    std::function<double(double, double)> reference;   // exact u(t, x)

    // Per-step lagged-coefficient sweeps. 1 reproduces the plain previous-level
    // lag; the default iterates the frozen-coefficient linear solve to the
    // tolerance below, which keeps the temporal order at 2 - alpha.
    int max_coefficient_iterations = 8;
    double coefficient_tolerance = 1e-12;

    /// Manufactured-solution setup: source, boundary and initial data and the
    /// reference all derive from u_star. Requires integer p >= 1.
    static SolverConfig mms(const PowerSum& u_star, int p, double alpha, double x_lo, double x_hi,
                            double t_final, int nx, int nt);

    /// Certified-similarity setup (diffusion, p < 0 so initial data at t = 0 is
    /// zero and the blow-up axis x = 0 stays outside the truncated domain).
    static SolverConfig exact_similarity(const SimilaritySolution& sol, double x_lo, double x_hi,
                                         double t_final, int nx, int nt);

    void validate() const;  // throws ConfigError
};

/// Space-time solution field with error norms against the reference.
struct Field {
    Eigen::VectorXd t_nodes;
    Eigen::VectorXd x_nodes;
    Eigen::MatrixXd u;          // (nt+1) x (nx+1)
    Eigen::MatrixXd reference;  // same shape
    double max_error = 0.0;
    double l2_error = 0.0;      // sqrt(tau h sum e^2) over nodes with n >= 1
};

/// Exact manufactured source C D_t^alpha u* - (u*^p u*_x)_x in the algebra.
/// Requires integer p >= 1 and u* admitting the strict Caputo rule.
PowerSum mms_source(const PowerSum& u_star, int p, double alpha);

/// L1 time stepping with a tridiagonal frozen-coefficient solve per sweep,
/// formulated in increments so zero-increment data is reproduced exactly.
/// Divergence detection aborts the run: non-finite values (any mode), the
/// field leaving the data range by more than 10% of its spread
/// (exact_similarity), or straying 10x the manufactured solution's scale (mms).
Field solve(const SolverConfig& config);

struct ConvergenceRow {
    int nt = 0;
    int nx = 0;
    double max_error = 0.0;
    double l2_error = 0.0;
    double observed_order = 0.0;  // log2(err_{i-1}/err_i); NaN on the first row
};

/// Simultaneous refinement from the base config: nt doubles per level and
/// nx scales as nt^{(2-alpha)/2} to keep the spatial error subdominant.
/// MMS mode only.
std::vector<ConvergenceRow> convergence_study(const SolverConfig& base, int levels);

/// CSV with header "t,x,u,reference,abs_error", row-major in t then x.
std::string to_csv(const Field& field);

/// CSV with header "nt,nx,max_error,l2_error,observed_order".
std::string to_csv(const std::vector<ConvergenceRow>& rows);

}  // namespace fraclab
