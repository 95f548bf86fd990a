#include "fraclab/symmetry.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "fraclab/special_functions.hpp"

namespace fraclab {

Generator diffusion_generator(double c1, double c2, double c3, double alpha, double p) {
    return {c1, (alpha / 2.0) * c2 + p * c3, 0.0, c2, 2.0 * c3};
}

Generator third_order_generator(double c1, double c2, double c3, double c4, double alpha,
                                double q) {
    return {c2, c1, c4, c3, (3.0 * c1 - alpha * c3) / q};
}

Generator diffusion_x1(double alpha) { return {0.0, alpha / 2.0, 0.0, 1.0, 0.0}; }
Generator diffusion_x2(double p) { return {0.0, p, 0.0, 0.0, 2.0}; }
Generator third_order_y1(double q) { return {0.0, 1.0, 0.0, 0.0, 3.0 / q}; }
Generator third_order_y2(double alpha, double q) { return {0.0, 0.0, 0.0, 1.0, -alpha / q}; }

PowerSum apply_generator(const Generator& gen, const PowerSum& theta) {
    const PowerSum xi({Monomial{gen.e0, 0.0, 0.0}, Monomial{gen.e1, 1.0, 0.0}});
    const PowerSum tau({Monomial{gen.f0, 0.0, 0.0}, Monomial{gen.f1, 0.0, 1.0}});
    return sub(sub(scale(theta, gen.g1), mul(xi, d_dx(theta))), mul(tau, d_dt(theta)));
}

namespace {

ConstraintReport line_invariance(const Generator& gen, const char* field, double value) {
    ConstraintReport report;
    if (value != 0.0) report.required_zero.emplace_back(field);
    report.admissible = !zero_fields(gen, report.required_zero).is_trivial();
    return report;
}

}  // namespace

ConstraintReport initial_line_invariance(const Generator& gen) {
    // X t = tau restricted to t = 0 is f0.
    return line_invariance(gen, "f0", gen.f0);
}

ConstraintReport boundary_line_invariance(const Generator& gen) {
    // X x = xi restricted to x = 0 is e0.
    return line_invariance(gen, "e0", gen.e0);
}

Generator zero_fields(Generator gen, const std::vector<std::string>& fields) {
    for (const std::string& f : fields) {
        if (f == "e0") gen.e0 = 0.0;
        else if (f == "e1") gen.e1 = 0.0;
        else if (f == "f0") gen.f0 = 0.0;
        else if (f == "f1") gen.f1 = 0.0;
        else if (f == "g1") gen.g1 = 0.0;
        else throw std::invalid_argument("zero_fields: unknown field '" + f + "'");
    }
    return gen;
}

double boundary_condition_exponent(const Generator& gen, BoundarySide side) {
    if (side == BoundarySide::boundary_x0) {
        if (gen.e0 != 0.0) {
            throw DegenerateError(
                "boundary_condition_exponent: x = 0 is not invariant (e0 != 0)");
        }
        if (gen.f1 == 0.0) {
            throw DegenerateError("boundary_condition_exponent: f1 = 0, no t-scaling");
        }
        return gen.g1 / gen.f1;
    }
    if (gen.f0 != 0.0) {
        throw DegenerateError("boundary_condition_exponent: t = 0 is not invariant (f0 != 0)");
    }
    if (gen.e1 == 0.0) {
        throw DegenerateError("boundary_condition_exponent: e1 = 0, no x-scaling");
    }
    return gen.g1 / gen.e1;
}

SimilarityForm similarity_form(const Generator& gen) {
    if (gen.e0 != 0.0 || gen.f0 != 0.0) {
        throw DegenerateError("similarity_form: requires a scaling generator (e0 = f0 = 0)");
    }
    if (gen.e1 == 0.0 && gen.f1 == 0.0) {
        throw DegenerateError("similarity_form: e1 = f1 = 0 gives no independent-variable scaling");
    }
    SimilarityForm form;
    if (gen.f1 == 0.0) {
        form.u_x_exponent = gen.g1 / gen.e1;
        form.degenerate_axis = "t";
    } else if (gen.e1 == 0.0) {
        form.u_t_exponent = gen.g1 / gen.f1;
        form.degenerate_axis = "x";
    } else {
        form.u_t_exponent = gen.g1 / gen.f1;
        form.z_exponent = -gen.e1 / gen.f1;
    }
    return form;
}

PowerSum spatial_operator(const Monomial& nu, const Equation& eq) {
    const PowerSum nus(nu);
    if (eq.kind == EquationKind::diffusion) {
        return d_dx(mul(PowerSum(pow_real(nu, eq.exponent)), d_dx(nus)));
    }
    return d_dx(mul(PowerSum(pow_real(nu, eq.exponent)), d_dx(d_dx(nus))));
}

PowerSum invariant_surface_residual_reduced(const Generator& gen, const Monomial& nu,
                                          const Equation& eq, double alpha) {
    const PowerSum nus(nu);
    const PowerSum xi({Monomial{gen.e0, 0.0, 0.0}, Monomial{gen.e1, 1.0, 0.0}});
    const PowerSum tau({Monomial{gen.f0, 0.0, 0.0}, Monomial{gen.f1, 0.0, 1.0}});
    const PowerSum g = spatial_operator(nu, eq);
    const PowerSum dt_part = caputo_dt(g, 1.0 - alpha, CaputoMode::extended);
    return sub(sub(scale(nus, gen.g1), mul(xi, d_dx(nus))), mul(tau, dt_part));
}

EtaForm mu_utt_coefficients(const EtaForm& eta, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("mu_utt_coefficients: need 0 < alpha <= 1");
    }
    for (const EtaTerm& term : eta) {
        if (term.u_degree < 0 || term.u_degree > 3) {
            throw std::invalid_argument("mu_utt_coefficients: u_degree must be in [0, 3]");
        }
    }
    const double factor = -1.0 / (2.0 * gamma(3.0 - alpha));
    EtaForm out;
    for (const EtaTerm& term : eta) {
        const int k = term.u_degree;
        if (k < 2) continue;  // eta_uu kills degrees 0 and 1
        const Monomial weight{factor * k * (k - 1), 0.0, 2.0 - alpha};
        PowerSum coeff = mul(term.coefficient, PowerSum(weight));
        if (!coeff.is_zero()) out.push_back({k - 1, std::move(coeff)});
    }
    return out;
}

PowerSum mu_leading(const EtaForm& eta, double alpha) {
    for (const EtaTerm& term : mu_utt_coefficients(eta, alpha)) {
        if (term.u_degree == 1) return term.coefficient;
    }
    return PowerSum{};
}

ExponentPair invariant_exponents(const Generator& gen1, const Generator& gen2) {
    Eigen::Matrix2d a;
    a << gen1.e1, gen1.f1, gen2.e1, gen2.f1;
    if (std::abs(a.determinant()) < 1e-14) {
        throw DegenerateError("invariant_exponents: scaling directions are linearly dependent");
    }
    const Eigen::Vector2d rhs(gen1.g1, gen2.g1);
    const Eigen::Vector2d sol = a.partialPivLu().solve(rhs);
    return {sol[0], sol[1]};
}

}  // namespace fraclab
