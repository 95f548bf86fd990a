#pragma once

#include "fraclab/errors.hpp"

namespace fraclab {

/// Tolerance used to decide whether a Gamma argument sits on a nonpositive-integer pole.
inline constexpr double kPoleTolerance = 1e-9;

/// True when x is within tol of a nonpositive integer.
bool is_gamma_pole(double x, double tol = kPoleTolerance);

/// Real Gamma function on [-170, 171] away from poles; reflection formula for x < 0.5.
/// Throws PoleError at nonpositive integers.
double gamma(double x, double pole_tol = kPoleTolerance);

/// log|Gamma(x)| together with the sign of Gamma(x). Throws PoleError at poles.
struct SignedLogGamma {
    double log_abs;
    int sign;  // +1 or -1
};
SignedLogGamma log_gamma(double x, double pole_tol = kPoleTolerance);

/// Ratio Gamma(num)/Gamma(den) evaluated via log-Gamma differences with sign tracking.
///
/// A pole in the denominator argument makes the ratio zero (1/Gamma(nonpositive
/// integer) = 0) and sets is_zero; this wins even when the numerator argument is
/// also a pole. A pole in the numerator alone throws PoleError.
struct GammaRatio {
    double numerator_arg = 0.0;
    double denominator_arg = 0.0;
    double value = 0.0;
    bool is_zero = false;
};
GammaRatio gamma_ratio(double num_arg, double den_arg, double pole_tol = kPoleTolerance);

/// Generalized binomial coefficient (alpha over n) in the Leibniz-series form
/// (-1)^{n-1} alpha Gamma(n-alpha) / (Gamma(1-alpha) Gamma(n+1)), with
/// (alpha over 0) = 1 by convention. Must agree with binomial_product.
double binomial_paper(double alpha, int n);

/// Standard falling-factorial form: prod_{k=0}^{n-1} (alpha - k) / n!.
double binomial_product(double alpha, int n);

}  // namespace fraclab
