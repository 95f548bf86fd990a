#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fraclab/powerlaw.hpp"

namespace fraclab {

/// Infinitesimal generator xi d/dx + tau d/dt + eta d/du with
/// xi = e0 + e1 x, tau = f0 + f1 t, eta = g1 u — the family spanned by every
/// generator of the two studied equations.
struct Generator {
    double e0 = 0.0;
    double e1 = 0.0;
    double f0 = 0.0;
    double f1 = 0.0;
    double g1 = 0.0;

    bool is_trivial() const {
        return e0 == 0.0 && e1 == 0.0 && f0 == 0.0 && f1 == 0.0 && g1 == 0.0;
    }
};

inline Generator operator*(double lambda, const Generator& g) {
    return {lambda * g.e0, lambda * g.e1, lambda * g.f0, lambda * g.f1, lambda * g.g1};
}

enum class EquationKind { diffusion, third_order };

/// One of the two studied equations together with its nonlinearity exponent
/// (p for the diffusion equation, q for the third-order equation).
struct Equation {
    EquationKind kind = EquationKind::diffusion;
    double exponent = 1.0;
};

/// The diffusion-equation symmetry X = (c1 + (alpha/2) x c2 + p x c3) d/dx
/// + t c2 d/dt + 2 u c3 d/du in (e0, e1, f0, f1, g1) coordinates.
Generator diffusion_generator(double c1, double c2, double c3, double alpha, double p);

/// The third-order-equation symmetry X = (c1 x + c2) d/dx + (c3 t + c4) d/dt
/// + ((3 c1 - alpha c3)/q) u d/du.
Generator third_order_generator(double c1, double c2, double c3, double c4, double alpha,
                                double q);

/// Scaling pairs admitted by the constrained problems.
Generator diffusion_x1(double alpha);             // (alpha/2) x d/dx + t d/dt
Generator diffusion_x2(double p);                 // p x d/dx + 2 u d/du
Generator third_order_y1(double q);               // x d/dx + (3/q) u d/du
Generator third_order_y2(double alpha, double q); // t d/dt - (alpha/q) u d/du

/// Invariant-surface condition applied to u = theta(t, x):
/// eta(theta) - xi theta_x - tau theta_t. Zero certifies invariance.
PowerSum apply_generator(const Generator& gen, const PowerSum& theta);

/// Coefficients (by field name) that must vanish for a line-invariance condition,
/// plus whether zeroing them leaves a nontrivial generator.
struct ConstraintReport {
    std::vector<std::string> required_zero;
    bool admissible = false;
};

/// Invariance of the initial line t = 0: requires f0 = 0.
ConstraintReport initial_line_invariance(const Generator& gen);

/// Invariance of the boundary line x = 0: requires e0 = 0.
ConstraintReport boundary_line_invariance(const Generator& gen);

/// Zeroes the named fields; used to re-check constraint soundness.
Generator zero_fields(Generator gen, const std::vector<std::string>& fields);

enum class BoundarySide {
    initial_t0,   // condition u = b(x) on t = 0
    boundary_x0,  // condition u = a(t) on x = 0
};

/// Exponent of the admissible power-law boundary datum: the condition
/// u = a(t) on x = 0 forces f1 t a' = g1 a, so a = k t^{g1/f1}; the condition
/// u = b(x) on t = 0 forces e1 x b' = g1 b, so b = k x^{g1/e1}. Requires the
/// corresponding line invariance to hold and the denominator coefficient to be
/// nonzero (DegenerateError otherwise).
double boundary_condition_exponent(const Generator& gen, BoundarySide side);

/// Similarity reduction of a scaling generator (e0 = f0 = 0):
///   e1, f1 != 0:  u = t^{g1/f1} F(x t^{-e1/f1}); z_exponent is the t-exponent of z.
///   f1 = 0:       u = x^{g1/e1} G(t), profile along the t axis.
///   e1 = 0:       u = t^{g1/f1} F(x), profile along the x axis.
struct SimilarityForm {
    std::optional<double> u_t_exponent;
    std::optional<double> u_x_exponent;
    std::optional<double> z_exponent;
    std::optional<std::string> degenerate_axis;  // "t" or "x"
};
SimilarityForm similarity_form(const Generator& gen);

/// Invariant-surface condition with the time derivative eliminated through the
/// equation: eta(nu) - xi nu_x - tau C D_t^{1-alpha} g, where g is the
/// equation's spatial operator applied to nu. Coincides with apply_generator
/// when nu solves the equation (then C D^{1-alpha} g = nu_t).
PowerSum invariant_surface_residual_reduced(const Generator& gen, const Monomial& nu,
                                            const Equation& eq, double alpha);

/// The spatial operator g of the equation applied to a positive monomial:
/// (u^p u_x)_x or (u^q u_xx)_x.
PowerSum spatial_operator(const Monomial& nu, const Equation& eq);

/// Coefficients of u^{k-1} u_tt in the leading memory term of the prolongation:
/// mu = -t^{2-alpha}/(2 Gamma(3-alpha)) u u_tt eta_uu. Linear eta contributes
/// nothing; degree-k coefficients c_k contribute -k(k-1) c_k t^{2-alpha} /
/// (2 Gamma(3-alpha)) at degree k-1.
EtaForm mu_utt_coefficients(const EtaForm& eta, double alpha);

/// The u^1 u_tt coefficient from mu_utt_coefficients (zero PowerSum when absent).
PowerSum mu_leading(const EtaForm& eta, double alpha);

/// Exponent pair (x_exp, t_exp) of the unique monomial invariant under both
/// scaling generators; solves the 2x2 system e1 a + f1 b = g1.
struct ExponentPair {
    double x_exp = 0.0;
    double t_exp = 0.0;
};
ExponentPair invariant_exponents(const Generator& gen1, const Generator& gen2);

}  // namespace fraclab
