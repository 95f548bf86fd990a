#include <doctest.h>

#include <cmath>

#include "fraclab/fractional_numerics.hpp"
#include "fraclab/powerlaw.hpp"
#include "oracles.hpp"

using namespace fraclab;

namespace {

SampledFunction sample_power(int n_steps, double t_final, double exponent) {
    SampledFunction f = SampledFunction::uniform(n_steps, t_final);
    for (Eigen::Index i = 0; i < f.t_nodes.size(); ++i) {
        f.values[i] = exponent == 0.0 ? 1.0 : std::pow(f.t_nodes[i], exponent);
    }
    return f;
}

}  // namespace

TEST_CASE("l1_weights") {
    for (const double alpha : {0.25, 0.5, 0.75}) {
        const auto b = l1_weights(alpha, 64);
        CHECK(b[0] == 1.0);
        double sum = 0.0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            sum += b[j];
            CHECK(b[j] > 0.0);
            if (j > 0) CHECK(b[j] < b[j - 1]);
        }
        CHECK(sum == doctest::Approx(std::pow(64.0, 1.0 - alpha)).epsilon(1e-12));
    }
    CHECK(l1_weights(0.5, 2)[1] == doctest::Approx(oracles::kSqrt2M1).epsilon(1e-14));
    CHECK_THROWS_AS(l1_weights(1.0, 8), std::invalid_argument);
    CHECK_THROWS_AS(l1_weights(0.0, 8), std::invalid_argument);
}

TEST_CASE("l1_caputo on constants and linear functions") {
    const SampledFunction c = sample_power(128, 1.0, 0.0);
    const SampledFunction dc = l1_caputo(c, 0.5);
    for (Eigen::Index i = 0; i < dc.values.size(); ++i) CHECK(dc.values[i] == 0.0);

    // piecewise-linear f = t is reproduced exactly by the L1 kernel
    const SampledFunction f = sample_power(1024, 1.0, 1.0);
    const SampledFunction df = l1_caputo(f, 0.5);
    CHECK(std::abs(df.values[df.values.size() - 1] - oracles::kG2OverG15) < 2e-3);
}

TEST_CASE("l1_caputo converges at the expected rate for t^2") {
    for (const double alpha : {0.25, 0.5, 0.75}) {
        std::vector<double> errors;
        for (const int n : {256, 512, 1024}) {
            const SampledFunction f = sample_power(n, 1.0, 2.0);
            const SampledFunction df = l1_caputo(f, alpha);
            const double exact =
                caputo_dt(PowerSum(Monomial{1, 0, 2}), alpha).eval(1.0, 1.0);
            errors.push_back(std::abs(df.values[df.values.size() - 1] - exact));
        }
        const double order1 = std::log2(errors[0] / errors[1]);
        const double order2 = std::log2(errors[1] / errors[2]);
        CAPTURE(alpha);
        CHECK(order1 > 2.0 - alpha - 0.3);
        CHECK(order1 < 2.0 - alpha + 0.3);
        CHECK(order2 > 2.0 - alpha - 0.3);
        CHECK(order2 < 2.0 - alpha + 0.3);
    }
    const SampledFunction f = sample_power(1024, 1.0, 2.0);
    const double at_one = l1_caputo(f, 0.5).values[1024];
    CHECK(at_one == doctest::Approx(oracles::kG3OverG25).epsilon(2e-3));
}

TEST_CASE("l1_caputo agrees with the algebra on the monomial grid") {
    for (const double alpha : {0.25, 0.5, 0.75}) {
        for (const double b : {0.0, 0.5, 1.0, 2.0}) {
            const SampledFunction f = sample_power(1024, 1.0, b);
            const SampledFunction df = l1_caputo(f, alpha);
            const double exact =
                caputo_dt(PowerSum(Monomial{1, 0, b}), alpha).eval(1.0, 1.0);
            const double tol = (b == 0.5) ? 5e-2 : 5e-3;  // non-smooth at the origin
            CAPTURE(alpha);
            CAPTURE(b);
            CHECK(std::abs(df.values[1024] - exact) < tol);
        }
    }
}

TEST_CASE("l1_caputo rejects non-uniform grids") {
    SampledFunction f = sample_power(16, 1.0, 1.0);
    f.t_nodes[5] += 1e-3;
    CHECK_THROWS_AS(l1_caputo(f, 0.5), NonUniformGridError);
}

TEST_CASE("rl_integral_num") {
    // alpha = 1 reduces to the cumulative integral, exact for f = 1
    const SampledFunction one = sample_power(64, 1.0, 0.0);
    const SampledFunction i1 = rl_integral_num(one, 1.0);
    for (Eigen::Index i = 0; i < i1.values.size(); ++i) {
        CHECK(i1.values[i] == doctest::Approx(i1.t_nodes[i]).epsilon(1e-13));
    }

    const SampledFunction f = sample_power(1024, 1.0, 1.0);
    CHECK(std::abs(rl_integral_num(f, 0.5).values[1024] - oracles::kG2OverG25) < 1e-4);

    const SampledFunction f2 = sample_power(1024, 1.0, 2.0);
    CHECK(std::abs(rl_integral_num(f2, 0.5).values[1024] - oracles::kG3OverG35) < 1e-4);

    SampledFunction zero = SampledFunction::uniform(32, 1.0);
    const SampledFunction iz = rl_integral_num(zero, 0.5);
    for (Eigen::Index i = 0; i < iz.values.size(); ++i) CHECK(iz.values[i] == 0.0);
}

TEST_CASE("composition: l1_caputo equals I^{1-alpha} of the derivative samples") {
    for (const double alpha : {0.25, 0.5, 0.75}) {
        const int n = 1024;
        const SampledFunction f = sample_power(n, 1.0, 2.0);
        SampledFunction df_exact = SampledFunction::uniform(n, 1.0);
        for (Eigen::Index i = 0; i < df_exact.t_nodes.size(); ++i) {
            df_exact.values[i] = 2.0 * df_exact.t_nodes[i];
        }
        const SampledFunction lhs = l1_caputo(f, alpha);
        const SampledFunction rhs = rl_integral_num(df_exact, 1.0 - alpha);
        double max_diff = 0.0;
        for (Eigen::Index i = 1; i < lhs.values.size(); ++i) {
            max_diff = std::max(max_diff, std::abs(lhs.values[i] - rhs.values[i]));
        }
        CAPTURE(alpha);
        CHECK(max_diff < 5e-3);
    }
}

TEST_CASE("rl_derivative_num applies the single initial correction") {
    // f = 1 + t at t = 1
    SampledFunction f = sample_power(1024, 1.0, 1.0);
    f.values.array() += 1.0;
    const SampledFunction rd = rl_derivative_num(f, 0.5, 1.0);
    CHECK(std::abs(rd.values[1024] - (oracles::kInvGamma05 + oracles::kG2OverG15)) < 2e-3);

    // zero initial value: identical to l1_caputo
    const SampledFunction g = sample_power(64, 1.0, 1.0);
    const SampledFunction a = rl_derivative_num(g, 0.5, 0.0);
    const SampledFunction b = l1_caputo(g, 0.5);
    for (Eigen::Index i = 0; i < a.values.size(); ++i) CHECK(a.values[i] == b.values[i]);

    // constant c maps to c t^{-alpha} / Gamma(1 - alpha)
    SampledFunction c = sample_power(64, 1.0, 0.0);
    c.values.array() *= 3.0;
    const SampledFunction rc = rl_derivative_num(c, 0.5, 3.0);
    const PowerSum exact = rl_dt(PowerSum::constant(3.0), 0.5);
    for (Eigen::Index i = 1; i < rc.values.size(); ++i) {
        CHECK(rc.values[i] ==
              doctest::Approx(exact.eval(rc.t_nodes[i], 1.0)).epsilon(1e-12));
    }
}

TEST_CASE("Leibniz series: finite exactness for polynomial factors") {
    // f = t, g = t: three terms close the series (the n = 2 term vanishes)
    const double s3 = leibniz_partial_sum(1.0, 1.0, 0.5, 3, 1.0);
    CHECK(s3 == doctest::Approx(oracles::kG3OverG25).epsilon(1e-12));

    // g = 1: single-term collapse to the RL derivative
    const double s1 = leibniz_partial_sum(0.7, 0.0, 0.5, 1, 1.0);
    CHECK(s1 == doctest::Approx(rl_dt(PowerSum(Monomial{1, 0, 0.7}), 0.5).eval(1.0, 1.0))
                    .epsilon(1e-12));

    // f = 1, g = t: the cross-term bookkeeping reproduces D^alpha t
    const double s2 = leibniz_partial_sum(0.0, 1.0, 0.5, 2, 1.0);
    CHECK(s2 == doctest::Approx(oracles::kG2OverG15).epsilon(1e-12));

    for (const double a : {0.5, 1.0, 2.0}) {
        for (const double b : {0.0, 1.0, 2.0}) {
            for (const double alpha : {0.25, 0.5, 0.75}) {
                const int n_terms = static_cast<int>(b) + 1;
                const double series = leibniz_partial_sum(a, b, alpha, n_terms, 1.0);
                const double closed =
                    rl_dt(PowerSum(Monomial{1, 0, a + b}), alpha).eval(1.0, 1.0);
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(alpha);
                CHECK(std::abs(series - closed) <= 1e-10 * std::max(1.0, std::abs(closed)));
            }
        }
    }
}

TEST_CASE("Leibniz series at alpha = 1 reproduces the product rule") {
    const double series = leibniz_partial_sum(1.0, 1.0, 1.0, 3, 1.0);
    CHECK(series == doctest::Approx(2.0).epsilon(1e-13));  // d/dt t^2 at t = 1
}

TEST_CASE("Leibniz preconditions") {
    CHECK_THROWS_AS(leibniz_partial_sum(-1.5, 1.0, 0.5, 2, 1.0), DivergentError);
    CHECK_THROWS_AS(leibniz_partial_sum(1.0, -0.5, 0.5, 2, 1.0), std::invalid_argument);
}

TEST_CASE("SampledFunction CSV") {
    const SampledFunction f = sample_power(2, 1.0, 1.0);
    CHECK(to_csv(f) == "t,value\n0,0\n0.5,0.5\n1,1\n");
}
