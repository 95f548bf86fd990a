#include "fraclab/fpde_solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "fraclab/fractional_numerics.hpp"
#include "fraclab/special_functions.hpp"

namespace fraclab {

PowerSum mms_source(const PowerSum& u_star, int p, double alpha) {
    if (p < 1) throw std::invalid_argument("mms_source: p must be a positive integer");
    const PowerSum flux = mul(pow_int(u_star, p), d_dx(u_star));
    return sub(caputo_dt(u_star, alpha, CaputoMode::strict), d_dx(flux));
}

SolverConfig SolverConfig::mms(const PowerSum& u_star, int p, double alpha, double x_lo,
                               double x_hi, double t_final, int nx, int nt) {
    SolverConfig cfg;
    cfg.alpha = alpha;
    cfg.p = p;
    cfg.x_lo = x_lo;
    cfg.x_hi = x_hi;
    cfg.t_final = t_final;
    cfg.nx = nx;
    cfg.nt = nt;
    cfg.mode = SolverMode::mms;
    cfg.source = mms_source(u_star, p, alpha);
    cfg.dirichlet_lo = [u_star, x_lo](double t) { return u_star.eval(t, x_lo); };
    cfg.dirichlet_hi = [u_star, x_hi](double t) { return u_star.eval(t, x_hi); };
    cfg.initial = [u_star](double x) { return u_star.eval(0.0, x); };
    cfg.reference = [u_star](double t, double x) { return u_star.eval(t, x); };
    cfg.validate();
    return cfg;
}

SolverConfig SolverConfig::exact_similarity(const SimilaritySolution& sol, double x_lo,
                                            double x_hi, double t_final, int nx, int nt) {
    if (!sol.certified) {
        throw ConfigError("exact_similarity: the similarity solution is not certified");
    }
    if (sol.equation.kind != EquationKind::diffusion) {
        throw ConfigError("exact_similarity: only the diffusion equation is solved numerically");
    }
    if (sol.t_exp < 0.0) {
        throw ConfigError(
            "exact_similarity: t-exponent < 0 blows up at t = 0; no admissible initial data "
            "(p > 0 similarity runs are not representable on [0, T])");
    }
    if (sol.x_exp < 0.0 && !(x_lo > 0.0)) {
        throw ConfigError("exact_similarity: solution blows up at x = 0, need x_lo > 0");
    }
    SolverConfig cfg;
    cfg.alpha = sol.alpha;
    cfg.p = sol.equation.exponent;
    cfg.x_lo = x_lo;
    cfg.x_hi = x_hi;
    cfg.t_final = t_final;
    cfg.nx = nx;
    cfg.nt = nt;
    cfg.mode = SolverMode::exact_similarity;
    cfg.dirichlet_lo = [sol, x_lo](double t) { return sol.eval(t, x_lo); };
    cfg.dirichlet_hi = [sol, x_hi](double t) { return sol.eval(t, x_hi); };
    cfg.initial = [sol](double x) { return sol.eval(0.0, x); };
    cfg.reference = [sol](double t, double x) { return sol.eval(t, x); };
    cfg.validate();
    return cfg;
}

void SolverConfig::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ConfigError("solver: need 0 < alpha < 1 (L1 memory weights)");
    }
    if (p == 0.0) throw ConfigError("solver: p = 0 is excluded (the equation requires p != 0)");
    if (!(x_lo < x_hi)) throw ConfigError("solver: need x_lo < x_hi");
    if (!(t_final > 0.0)) throw ConfigError("solver: need t_final > 0");
    if (nx < 3) throw ConfigError("solver: need nx >= 3");
    if (nt < 2) throw ConfigError("solver: need nt >= 2");
    if (mode == SolverMode::mms) {
        const double pr = std::nearbyint(p);
        if (std::abs(p - pr) > 0.0 || pr < 1.0) {
            throw ConfigError("solver: mms mode needs integer p >= 1");
        }
    }
    if (!dirichlet_lo || !dirichlet_hi || !initial) {
        throw ConfigError("solver: boundary and initial data must be provided");
    }
    if (max_coefficient_iterations < 1) {
        throw ConfigError("solver: need at least one coefficient sweep per step");
    }
}

namespace {

// Thomas algorithm; diag/rhs are overwritten. The caller owns conditioning:
// a near-singular pivot propagates non-finite values that the divergence
// detector picks up.
void solve_tridiagonal(Eigen::VectorXd& lower, Eigen::VectorXd& diag, Eigen::VectorXd& upper,
                       Eigen::VectorXd& rhs, Eigen::VectorXd& x) {
    const Eigen::Index n = diag.size();
    for (Eigen::Index i = 1; i < n; ++i) {
        const double w = lower[i] / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    x[n - 1] = rhs[n - 1] / diag[n - 1];
    for (Eigen::Index i = n - 2; i >= 0; --i) {
        x[i] = (rhs[i] - upper[i] * x[i + 1]) / diag[i];
    }
}

double coefficient(double u, double p, double floor_value) {
    if (p < 0.0 || std::abs(p - std::nearbyint(p)) > 0.0) {
        u = std::max(u, floor_value);  // keep u^p finite/real near the degenerate limit
    }
    return std::pow(u, p);
}

}  // namespace

Field solve(const SolverConfig& config) {
    config.validate();
    const int nx = config.nx;
    const int nt = config.nt;
    const double h = (config.x_hi - config.x_lo) / nx;
    const double tau = config.t_final / nt;
    const double alpha = config.alpha;

    Field field;
    field.t_nodes = Eigen::VectorXd::LinSpaced(nt + 1, 0.0, config.t_final);
    field.x_nodes = Eigen::VectorXd::LinSpaced(nx + 1, config.x_lo, config.x_hi);
    field.u = Eigen::MatrixXd::Zero(nt + 1, nx + 1);

    for (int i = 0; i <= nx; ++i) field.u(0, i) = config.initial(field.x_nodes[i]);
    field.u(0, 0) = config.dirichlet_lo(0.0);
    field.u(0, nx) = config.dirichlet_hi(0.0);

    double ref_abs_max = 0.0;
    if (config.reference) {
        field.reference = Eigen::MatrixXd::Zero(nt + 1, nx + 1);
        for (int n = 0; n <= nt; ++n) {
            for (int i = 0; i <= nx; ++i) {
                field.reference(n, i) = config.reference(field.t_nodes[n], field.x_nodes[i]);
            }
        }
        ref_abs_max = field.reference.cwiseAbs().maxCoeff();
    }

    // Data range for the divergence detector and the degenerate-coefficient floor.
    double data_min = field.u.row(0).minCoeff();
    double data_max = field.u.row(0).maxCoeff();
    for (int n = 1; n <= nt; ++n) {
        const double t = field.t_nodes[n];
        data_min = std::min({data_min, config.dirichlet_lo(t), config.dirichlet_hi(t)});
        data_max = std::max({data_max, config.dirichlet_lo(t), config.dirichlet_hi(t)});
    }
    const double data_scale = std::max({std::abs(data_min), std::abs(data_max), 1e-30});
    const double floor_value = 1e-10 * data_scale;
    const double margin = 0.1 * std::max(data_max - data_min, 1e-30 * data_scale);

    const std::vector<double> weights = l1_weights(alpha, nt);
    const double d_alpha = std::pow(tau, -alpha) / gamma(2.0 - alpha);

    Eigen::VectorXd k_node(nx + 1), lower(nx - 1), diag(nx - 1), upper(nx - 1), rhs(nx - 1),
        delta(nx - 1), history(nx + 1), src(nx - 1);

    for (int n = 1; n <= nt; ++n) {
        const double t = field.t_nodes[n];
        const double g_lo = config.dirichlet_lo(t);
        const double g_hi = config.dirichlet_hi(t);
        const double prev_lo = field.u(n - 1, 0);
        const double prev_hi = field.u(n - 1, nx);

        // Memory term over all previous increments (the j = 0 weight is kept
        // on the implicit side).
        history.setZero();
        for (int j = 1; j < n; ++j) {
            history += weights[static_cast<std::size_t>(j)] *
                       (field.u.row(n - j) - field.u.row(n - j - 1)).transpose();
        }
        src.setZero();
        if (!config.source.is_zero()) {
            for (int i = 1; i < nx; ++i) src[i - 1] = config.source.eval(t, field.x_nodes[i]);
        }

        // Solve for the increment delta = u^n - u^{n-1}: zero-increment data
        // then stays exact, no rounding residue from the tridiagonal solve.
        Eigen::VectorXd lag = field.u.row(n - 1).transpose();
        lag[0] = g_lo;  // boundary values are known at the new level
        lag[nx] = g_hi;

        for (int sweep = 0; sweep < config.max_coefficient_iterations; ++sweep) {
            for (int i = 0; i <= nx; ++i) k_node[i] = coefficient(lag[i], config.p, floor_value);
            for (int i = 1; i < nx; ++i) {
                const double k_minus = 0.5 * (k_node[i - 1] + k_node[i]) / (h * h);
                const double k_plus = 0.5 * (k_node[i] + k_node[i + 1]) / (h * h);
                diag[i - 1] = d_alpha + k_minus + k_plus;
                lower[i - 1] = (i > 1) ? -k_minus : 0.0;
                upper[i - 1] = (i < nx - 1) ? -k_plus : 0.0;
                const double flux_prev = k_plus * (field.u(n - 1, i + 1) - field.u(n - 1, i)) -
                                         k_minus * (field.u(n - 1, i) - field.u(n - 1, i - 1));
                rhs[i - 1] = flux_prev - d_alpha * history[i] + src[i - 1];
                if (i == 1) rhs[i - 1] += k_minus * (g_lo - prev_lo);
                if (i == nx - 1) rhs[i - 1] += k_plus * (g_hi - prev_hi);
            }
            Eigen::VectorXd d = diag, lo = lower, up = upper, b = rhs;
            solve_tridiagonal(lo, d, up, b, delta);

            double change = 0.0, scale = 1.0;
            for (int i = 1; i < nx; ++i) {
                const double candidate = field.u(n - 1, i) + delta[i - 1];
                change = std::max(change, std::abs(candidate - lag[i]));
                scale = std::max(scale, std::abs(candidate));
                lag[i] = candidate;
            }
            if (!delta.allFinite() || change <= config.coefficient_tolerance * scale) break;
        }

        field.u(n, 0) = g_lo;
        field.u(n, nx) = g_hi;
        for (int i = 1; i < nx; ++i) field.u(n, i) = lag[i];

        if (!field.u.row(n).allFinite()) {
            throw DivergenceError("solve: non-finite values at t = " + std::to_string(t));
        }
        if (config.mode == SolverMode::exact_similarity) {
            const double row_min = field.u.row(n).minCoeff();
            const double row_max = field.u.row(n).maxCoeff();
            if (row_min < data_min - margin || row_max > data_max + margin) {
                throw DivergenceError("solve: field left the boundary/initial data range at t = " +
                                      std::to_string(t));
            }
        } else if (config.reference) {
            // mms runs exist to track a known solution; straying an order of
            // magnitude beyond its scale means the scheme has lost it.
            const double row_err =
                (field.u.row(n) - field.reference.row(n)).cwiseAbs().maxCoeff();
            if (row_err > 10.0 * std::max(1.0, ref_abs_max)) {
                throw DivergenceError("solve: field left the manufactured solution at t = " +
                                      std::to_string(t));
            }
        }
    }

    if (config.reference) {
        double sq_sum = 0.0;
        for (int n = 1; n <= nt; ++n) {
            for (int i = 0; i <= nx; ++i) {
                const double e = std::abs(field.u(n, i) - field.reference(n, i));
                field.max_error = std::max(field.max_error, e);
                sq_sum += e * e;
            }
        }
        field.l2_error = std::sqrt(tau * h * sq_sum);
    }
    return field;
}

std::vector<ConvergenceRow> convergence_study(const SolverConfig& base, int levels) {
    if (base.mode != SolverMode::mms) {
        throw ConfigError("convergence_study: requires mms mode");
    }
    if (levels < 3) throw ConfigError("convergence_study: need at least 3 levels");

    std::vector<ConvergenceRow> rows;
    rows.reserve(static_cast<std::size_t>(levels));
    for (int level = 0; level < levels; ++level) {
        SolverConfig cfg = base;
        cfg.nt = base.nt << level;
        const double growth = std::pow(2.0, level * (2.0 - base.alpha) / 2.0);
        cfg.nx = std::max(base.nx, static_cast<int>(std::lround(base.nx * growth)));
        const Field f = solve(cfg);
        ConvergenceRow row{cfg.nt, cfg.nx, f.max_error, f.l2_error,
                           std::numeric_limits<double>::quiet_NaN()};
        if (!rows.empty()) {
            row.observed_order = std::log2(rows.back().max_error / f.max_error);
        }
        rows.push_back(row);
    }
    return rows;
}

std::string to_csv(const Field& field) {
    std::string out = "t,x,u,reference,abs_error\n";
    char buf[192];
    const bool have_ref = field.reference.size() > 0;
    for (Eigen::Index n = 0; n < field.t_nodes.size(); ++n) {
        for (Eigen::Index i = 0; i < field.x_nodes.size(); ++i) {
            const double ref = have_ref ? field.reference(n, i) : 0.0;
            std::snprintf(buf, sizeof(buf), "%.16g,%.16g,%.16g,%.16g,%.16g\n", field.t_nodes[n],
                          field.x_nodes[i], field.u(n, i), ref, std::abs(field.u(n, i) - ref));
            out += buf;
        }
    }
    return out;
}

std::string to_csv(const std::vector<ConvergenceRow>& rows) {
    std::string out = "nt,nx,max_error,l2_error,observed_order\n";
    char buf[160];
    for (const ConvergenceRow& r : rows) {
        std::snprintf(buf, sizeof(buf), "%d,%d,%.16g,%.16g,%.16g\n", r.nt, r.nx, r.max_error,
                      r.l2_error, r.observed_order);
        out += buf;
    }
    return out;
}

}  // namespace fraclab
