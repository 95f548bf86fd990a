#include "fraclab/fractional_numerics.hpp"

#include <cmath>
#include <cstdio>

#include "fraclab/powerlaw.hpp"
#include "fraclab/special_functions.hpp"

namespace fraclab {

SampledFunction SampledFunction::uniform(int n_steps, double t_final) {
    if (n_steps < 1 || !(t_final > 0.0)) {
        throw std::invalid_argument("SampledFunction::uniform: need n_steps >= 1, t_final > 0");
    }
    SampledFunction f;
    f.t_nodes = Eigen::VectorXd::LinSpaced(n_steps + 1, 0.0, t_final);
    f.t_nodes[0] = 0.0;
    f.values = Eigen::VectorXd::Zero(n_steps + 1);
    return f;
}

void SampledFunction::validate() const {
    if (t_nodes.size() < 2 || t_nodes.size() != values.size()) {
        throw std::invalid_argument("SampledFunction: need >= 2 nodes and matching value count");
    }
    if (t_nodes[0] != 0.0) {
        throw std::invalid_argument("SampledFunction: grid must start at t = 0");
    }
    for (Eigen::Index i = 1; i < t_nodes.size(); ++i) {
        if (!(t_nodes[i] > t_nodes[i - 1])) {
            throw std::invalid_argument("SampledFunction: grid must be strictly increasing");
        }
    }
}

double SampledFunction::uniform_step() const {
    validate();
    const double h = t_nodes[1] - t_nodes[0];
    for (Eigen::Index i = 1; i < t_nodes.size(); ++i) {
        const double hi = t_nodes[i] - t_nodes[i - 1];
        if (std::abs(hi - h) > 1e-12 * std::abs(h)) {
            throw NonUniformGridError("grid spacing varies beyond 1e-12 relative");
        }
    }
    return h;
}

std::vector<double> l1_weights(double alpha, int n_steps) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("l1_weights: need 0 < alpha < 1 (use d/dt at alpha = 1)");
    }
    if (n_steps < 1) throw std::invalid_argument("l1_weights: need n_steps >= 1");
    std::vector<double> b(static_cast<std::size_t>(n_steps));
    const double e = 1.0 - alpha;
    for (int j = 0; j < n_steps; ++j) {
        b[static_cast<std::size_t>(j)] = std::pow(j + 1.0, e) - std::pow(static_cast<double>(j), e);
    }
    return b;
}

SampledFunction l1_caputo(const SampledFunction& f, double alpha) {
    const double tau = f.uniform_step();
    const Eigen::Index n_nodes = f.t_nodes.size();
    const std::vector<double> b = l1_weights(alpha, static_cast<int>(n_nodes - 1));
    const double scale = std::pow(tau, -alpha) / gamma(2.0 - alpha);

    SampledFunction out;
    out.t_nodes = f.t_nodes;
    out.values = Eigen::VectorXd::Zero(n_nodes);
    for (Eigen::Index n = 1; n < n_nodes; ++n) {
        double acc = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            acc += b[static_cast<std::size_t>(j)] * (f.values[n - j] - f.values[n - j - 1]);
        }
        out.values[n] = scale * acc;
    }
    return out;
}

SampledFunction rl_integral_num(const SampledFunction& f, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("rl_integral_num: order must be positive");
    const double tau = f.uniform_step();
    const Eigen::Index n_nodes = f.t_nodes.size();
    const double inv_gamma = 1.0 / gamma(alpha);

    SampledFunction out;
    out.t_nodes = f.t_nodes;
    out.values = Eigen::VectorXd::Zero(n_nodes);
    for (Eigen::Index n = 1; n < n_nodes; ++n) {
        // int_{t_k}^{t_{k+1}} (t_n - s)^{alpha-1} [f_k + (f_{k+1}-f_k)(s-t_k)/tau] ds
        // with u = t_n - s running from b_lim = (n-k-1) tau to a_lim = (n-k) tau:
        //   A (a^al - b^al)/al + B [a (a^al - b^al)/al - (a^{al+1} - b^{al+1})/(al+1)]
        double acc = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
            const double a_lim = static_cast<double>(n - k) * tau;
            const double b_lim = static_cast<double>(n - k - 1) * tau;
            const double pa = std::pow(a_lim, alpha), pb = std::pow(b_lim, alpha);
            const double pa1 = pa * a_lim, pb1 = pb * b_lim;
            const double m0 = (pa - pb) / alpha;
            const double m1 = a_lim * m0 - (pa1 - pb1) / (alpha + 1.0);
            const double fk = f.values[k];
            const double slope = (f.values[k + 1] - fk) / tau;
            acc += fk * m0 + slope * m1;
        }
        out.values[n] = inv_gamma * acc;
    }
    return out;
}

SampledFunction rl_derivative_num(const SampledFunction& f, double alpha, double f0) {
    SampledFunction out = l1_caputo(f, alpha);
    const double c = f0 / gamma(1.0 - alpha);
    for (Eigen::Index n = 1; n < out.t_nodes.size(); ++n) {
        out.values[n] += c * std::pow(out.t_nodes[n], -alpha);
    }
    return out;
}

std::vector<double> leibniz_partial_sums(double a_exp, double b_exp, double alpha, int max_terms,
                                         double t) {
    if (!(a_exp > -1.0)) throw DivergentError("leibniz: need a_exp > -1");
    if (!(b_exp >= 0.0)) throw std::invalid_argument("leibniz: need b_exp >= 0");
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("leibniz: need 0 < alpha <= 1");
    }
    if (max_terms < 1) throw std::invalid_argument("leibniz: need at least one term");
    if (!(t > 0.0)) throw std::invalid_argument("leibniz: need t > 0");

    const PowerSum f(Monomial{1.0, 0.0, a_exp});
    PowerSum g(Monomial{1.0, 0.0, b_exp});

    std::vector<double> partial;
    partial.reserve(static_cast<std::size_t>(max_terms));
    double acc = 0.0;
    for (int n = 0; n < max_terms; ++n) {
        PowerSum f_part;
        if (n == 0) {
            f_part = rl_dt(f, alpha);  // I^{-alpha} means the RL derivative
        } else if (std::abs(n - alpha) <= kExponentTolerance) {
            f_part = f;  // I^0 is the identity (alpha = 1, n = 1)
        } else {
            f_part = frac_int(f, n - alpha);
        }
        acc += binomial_product(alpha, n) * mul(f_part, g).eval(t, 1.0);
        partial.push_back(acc);
        g = d_dt(g);  // next derivative of the polynomial factor
    }
    return partial;
}

double leibniz_partial_sum(double a_exp, double b_exp, double alpha, int n_terms, double t) {
    return leibniz_partial_sums(a_exp, b_exp, alpha, n_terms, t).back();
}

std::string to_csv(const SampledFunction& f) {
    std::string out = "t,value\n";
    char buf[96];
    for (Eigen::Index i = 0; i < f.t_nodes.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.16g,%.16g\n", f.t_nodes[i], f.values[i]);
        out += buf;
    }
    return out;
}

}  // namespace fraclab
