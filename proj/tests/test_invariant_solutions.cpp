#include <doctest.h>

#include <cmath>
#include <optional>
#include <vector>

#include "fraclab/invariant_solutions.hpp"
#include "fraclab/symmetry.hpp"
#include "oracles.hpp"

using namespace fraclab;

namespace {

// Published closed form for the third-order constant, evaluated through
// std::tgamma as an independent route.
std::optional<double> paper_q_constant(double q, double alpha) {
    const double num = 1.0 - alpha / q;
    const double den = num - alpha;
    const double base =
        q * q * q * std::tgamma(num) / (3.0 * (3.0 - q) * (3.0 + q) * std::tgamma(den));
    if (!(base > 0.0) || !std::isfinite(base)) return std::nullopt;
    return std::pow(base, 1.0 / q);
}

std::vector<double> blowup_sequence() {
    std::vector<double> seq;
    for (int k = 0; k < 8; ++k) seq.push_back(std::pow(10.0, -1.0 - 4.0 * k));
    return seq;
}

}  // namespace

TEST_CASE("diffusion constant, p = 2, alpha = 0.5") {
    const SimilaritySolution sol = solve_constant_p(2.0, 0.5);
    CHECK(sol.constant == doctest::Approx(oracles::kConstP2A05).epsilon(1e-12));
    CHECK(sol.x_exp == 1.0);
    CHECK(sol.t_exp == -0.25);
    CHECK(sol.certified);
    CHECK(sol.residual_max_coeff <= 1e-10 * sol.residual_scale);
    // the published constant vanishes at p = 2 and cannot solve the equation
    REQUIRE(sol.paper_constant.has_value());
    CHECK(*sol.paper_constant == 0.0);
    CHECK_FALSE(sol.matches_paper);
}

TEST_CASE("diffusion constant, p = 1, alpha = 0.3: published value fails the residual") {
    const SimilaritySolution sol = solve_constant_p(1.0, 0.3);
    CHECK(sol.constant == doctest::Approx(oracles::kConstP1A03).epsilon(1e-12));
    CHECK(sol.certified);
    REQUIRE(sol.paper_constant.has_value());
    CHECK(*sol.paper_constant == doctest::Approx(oracles::kPaperKP1A03).epsilon(1e-12));
    CHECK_FALSE(sol.matches_paper);
    REQUIRE(sol.paper_residual_max_coeff.has_value());
    CHECK(*sol.paper_residual_max_coeff > 1e-3);
}

TEST_CASE("diffusion constant, p = -1: positive t-exponent branch") {
    const SimilaritySolution sol = solve_constant_p(-1.0, 0.5);
    CHECK(sol.constant == doctest::Approx(oracles::kConstPm1A05).epsilon(1e-12));
    CHECK(sol.x_exp == -2.0);
    CHECK(sol.t_exp == 0.5);
    CHECK(sol.certified);
}

TEST_CASE("diffusion degeneracies") {
    // alpha = 1, p = 1: both Gamma arguments at poles, the ratio is bookkept as 0
    CHECK_THROWS_AS(solve_constant_p(1.0, 1.0), NoRealSolutionError);
    // alpha = 1, p = 2: negative right-hand side, no positive real root
    CHECK_THROWS_AS(solve_constant_p(2.0, 1.0), NoRealSolutionError);
    // denominator pole alone: ratio zero
    CHECK_THROWS_AS(solve_constant_p(1.0, 0.5), NoRealSolutionError);
    // ansatz t-exponent at/below -1
    CHECK_THROWS_AS(solve_constant_p(0.5, 0.5), DivergentError);
    CHECK_THROWS_AS(solve_constant_p(0.5, 0.7), DivergentError);
    // spatial factor vanishes
    CHECK_THROWS_AS(solve_constant_p(-2.0, 0.5), NoRealSolutionError);
    CHECK_THROWS_AS(solve_constant_p(0.0, 0.5), std::invalid_argument);
}

TEST_CASE("classical limit alpha = 1, p = -1 against the hand-derived balance") {
    // u_t = (u^{-1} u_x)_x with u = c x^{-2} t: balance gives c = 2 (2 x^{-2} on
    // both sides), derived before the build.
    const SimilaritySolution sol = solve_constant_p(-1.0, 1.0);
    CHECK(sol.constant == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(sol.certified);
}

TEST_CASE("third-order constant, q = 2, alpha = 0.5, matches the published formula") {
    const SimilaritySolution sol = solve_constant_q(2.0, 0.5);
    CHECK(sol.constant == doctest::Approx(oracles::kConstQ2A05).epsilon(1e-12));
    CHECK(sol.x_exp == doctest::Approx(1.5));
    CHECK(sol.t_exp == doctest::Approx(-0.25));
    CHECK(sol.certified);
    CHECK(sol.matches_paper);
    REQUIRE(sol.paper_residual_max_coeff.has_value());
    CHECK(*sol.paper_residual_max_coeff <= 1e-10 * sol.residual_scale);
}

TEST_CASE("third-order constant agrees with the published formula on the grid") {
    for (const double q : {0.5, 1.5, 2.0, 4.0}) {
        for (const double alpha : {0.3, 0.5, 0.7}) {
            CAPTURE(q);
            CAPTURE(alpha);
            const std::optional<double> paper = paper_q_constant(q, alpha);
            const bool divergent = -alpha / q <= -1.0 + 1e-12;
            if (divergent) {
                CHECK_THROWS_AS(solve_constant_q(q, alpha), DivergentError);
            } else if (!paper) {
                CHECK_THROWS_AS(solve_constant_q(q, alpha), NoRealSolutionError);
            } else {
                const SimilaritySolution sol = solve_constant_q(q, alpha);
                CHECK(sol.certified);
                CHECK(sol.matches_paper);
                CHECK(std::abs(sol.constant - *paper) <= 1e-12 * std::max(1.0, *paper));
            }
        }
    }
}

TEST_CASE("third-order degeneracies") {
    CHECK_THROWS_AS(solve_constant_q(1.0, 0.5), NoRealSolutionError);  // Gamma(0) in denominator
    CHECK_THROWS_AS(solve_constant_q(3.0, 0.5), NoRealSolutionError);  // spatial factor zero
    CHECK_THROWS_AS(solve_constant_q(-3.0, 0.5), NoRealSolutionError);
    CHECK_THROWS_AS(solve_constant_q(-1.0, 0.5), NoRealSolutionError);  // negative root base
}

TEST_CASE("certified solutions are annihilated by their scaling pair") {
    int certified_count = 0;
    for (const double v : {1.0, 2.0, -1.0}) {
        for (const double alpha : {0.3, 0.5, 0.7}) {
            try {
                const SimilaritySolution sol = solve_constant_p(v, alpha);
                const PowerSum surface(sol.monomial());
                CHECK(apply_generator(diffusion_x1(alpha), surface).max_abs_coeff() <=
                      1e-10 * sol.constant);
                CHECK(apply_generator(diffusion_x2(v), surface).max_abs_coeff() <=
                      1e-10 * sol.constant);
                ++certified_count;
            } catch (const DomainError&) {
            }
            try {
                const SimilaritySolution sol = solve_constant_q(v, alpha);
                const PowerSum surface(sol.monomial());
                CHECK(apply_generator(third_order_y1(v), surface).max_abs_coeff() <=
                      1e-10 * sol.constant);
                CHECK(apply_generator(third_order_y2(alpha, v), surface).max_abs_coeff() <=
                      1e-10 * sol.constant);
                ++certified_count;
            } catch (const DomainError&) {
            }
        }
    }
    CHECK(certified_count == 9);  // 6 diffusion + 3 third-order points survive the grid
}

TEST_CASE("solution exponents are the unique pair fixed by both similarity forms") {
    const SimilaritySolution sol = solve_constant_p(2.0, 0.5);
    const ExponentPair pair = invariant_exponents(diffusion_x1(0.5), diffusion_x2(2.0));
    CHECK(pair.x_exp == doctest::Approx(sol.x_exp).epsilon(1e-12));
    CHECK(pair.t_exp == doctest::Approx(sol.t_exp).epsilon(1e-12));

    const SimilaritySolution sol_q = solve_constant_q(2.0, 0.5);
    const ExponentPair pair_q = invariant_exponents(third_order_y1(2.0), third_order_y2(0.5, 2.0));
    CHECK(pair_q.x_exp == doctest::Approx(sol_q.x_exp).epsilon(1e-12));
    CHECK(pair_q.t_exp == doctest::Approx(sol_q.t_exp).epsilon(1e-12));
}

TEST_CASE("IBVP classification covers the four variants") {
    const IbvpClassification p_pos = classify_ibvp(solve_constant_p(2.0, 0.5));
    CHECK(p_pos.zero_boundary == IbvpClassification::ZeroSide::x_side);
    CHECK(p_pos.blowup == IbvpClassification::BlowupAxis::t_to_0);
    CHECK(p_pos.variant == "p>0");

    const IbvpClassification p_neg = classify_ibvp(solve_constant_p(-1.0, 0.5));
    CHECK(p_neg.zero_boundary == IbvpClassification::ZeroSide::t_side);
    CHECK(p_neg.blowup == IbvpClassification::BlowupAxis::x_to_0);
    CHECK(p_neg.variant == "p<0");

    const IbvpClassification q_pos = classify_ibvp(solve_constant_q(2.0, 0.5));
    CHECK(q_pos.zero_boundary == IbvpClassification::ZeroSide::x_side);
    CHECK(q_pos.blowup == IbvpClassification::BlowupAxis::t_to_0);
    CHECK(q_pos.variant == "q>0");

    const IbvpClassification q_neg = classify_ibvp(solve_constant_q(-4.0, 0.5));
    CHECK(q_neg.zero_boundary == IbvpClassification::ZeroSide::t_side);
    CHECK(q_neg.blowup == IbvpClassification::BlowupAxis::x_to_0);
    CHECK(q_neg.variant == "q<0");
}

TEST_CASE("finite-sequence blow-up proxy") {
    const SimilaritySolution sol = solve_constant_p(2.0, 0.5);
    CHECK(verify_blowup(sol, Axis::t, blowup_sequence()));
    CHECK_FALSE(verify_blowup(sol, Axis::x, blowup_sequence()));  // positive exponent decays

    const SimilaritySolution neg = solve_constant_p(-1.0, 0.5);
    CHECK(verify_blowup(neg, Axis::x, blowup_sequence()));
    CHECK_FALSE(verify_blowup(neg, Axis::t, blowup_sequence()));

    // a shallow sequence grows monotonically but misses the 1e6 growth factor:
    // t^{-1/4} over 10^{-1}..10^{-8} only gains 10^{1.75}
    std::vector<double> shallow;
    for (int k = 1; k <= 8; ++k) shallow.push_back(std::pow(10.0, -k));
    CHECK_FALSE(verify_blowup(sol, Axis::t, shallow));

    // zero exponents give a constant profile: no growth at all
    SimilaritySolution flat;
    flat.constant = 1.0;
    CHECK_FALSE(verify_blowup(flat, Axis::t, blowup_sequence()));
    CHECK_FALSE(verify_blowup(flat, Axis::x, blowup_sequence()));

    CHECK_THROWS_AS(verify_blowup(sol, Axis::t, {0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("residual certificates hold across the full working grid") {
    for (const double v : {0.5, 1.0, 1.5, 2.0, 4.0, -1.0, -4.0}) {
        for (const double alpha : {0.3, 0.5, 0.7, 1.0}) {
            for (const bool diffusion : {true, false}) {
                try {
                    const SimilaritySolution sol = diffusion ? solve_constant_p(v, alpha)
                                                             : solve_constant_q(v, alpha);
                    CAPTURE(v);
                    CAPTURE(alpha);
                    CAPTURE(diffusion);
                    CHECK(sol.certified);
                    CHECK(sol.residual_max_coeff <= 1e-10 * sol.residual_scale);
                } catch (const DomainError&) {
                }
            }
        }
    }
}
