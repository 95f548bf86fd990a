#pragma once

#include <nlohmann/json.hpp>

#include "fraclab/fpde_solver.hpp"
#include "fraclab/invariant_solutions.hpp"
#include "fraclab/symmetry.hpp"

namespace fraclab {

template <typename T>
nlohmann::json json_or_null(const std::optional<T>& value) {
    if (value) return nlohmann::json(*value);
    return nullptr;
}

inline nlohmann::json to_json(const ConstraintReport& report,
                              const std::vector<std::string>& display_names = {}) {
    nlohmann::json j;
    j["required_zero"] = display_names.empty() ? report.required_zero : display_names;
    j["admissible"] = report.admissible;
    return j;
}

inline nlohmann::json to_json(const SimilarityForm& form) {
    nlohmann::json j;
    j["u_t_exponent"] = json_or_null(form.u_t_exponent);
    j["z_exponent"] = json_or_null(form.z_exponent);
    j["degenerate_axis"] = json_or_null(form.degenerate_axis);
    if (form.u_x_exponent) j["u_x_exponent"] = *form.u_x_exponent;
    return j;
}

inline nlohmann::json to_json(const SimilaritySolution& sol) {
    nlohmann::json j;
    j["equation"] = sol.equation.kind == EquationKind::diffusion ? "diffusion" : "third_order";
    j[sol.equation.kind == EquationKind::diffusion ? "p" : "q"] = sol.equation.exponent;
    j["alpha"] = sol.alpha;
    j["x_exp"] = sol.x_exp;
    j["t_exp"] = sol.t_exp;
    j["constant"] = sol.constant;
    j["paper_constant"] = json_or_null(sol.paper_constant);
    j["matches_paper"] = sol.matches_paper;
    j["residual_max_coeff"] = sol.residual_max_coeff;
    j["residual_scale"] = sol.residual_scale;
    j["paper_residual_max_coeff"] = json_or_null(sol.paper_residual_max_coeff);
    j["certified"] = sol.certified;
    return j;
}

inline nlohmann::json to_json(const IbvpClassification& c) {
    nlohmann::json j;
    j["zero_boundary"] =
        c.zero_boundary == IbvpClassification::ZeroSide::t_side ? "t_side" : "x_side";
    j["blowup"] = c.blowup == IbvpClassification::BlowupAxis::t_to_0 ? "t_to_0" : "x_to_0";
    j["variant"] = c.variant;
    return j;
}

}  // namespace fraclab
