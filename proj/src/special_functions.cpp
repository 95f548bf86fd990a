#include "fraclab/special_functions.hpp"

#include <cmath>
#include <string>

namespace fraclab {

namespace {

// sin(pi*x) computed from the reduced argument so large |x| keeps full accuracy.
double sin_pi(double x) {
    const double r = x - std::nearbyint(x);
    const double s = std::sin(M_PI * r);
    // nearbyint shifts by an even or odd integer; odd shifts flip the sign.
    const long long n = static_cast<long long>(std::llround(x - r));
    return (n % 2 == 0) ? s : -s;
}

std::string fmt_arg(double x) {
    return std::to_string(x);
}

}  // namespace

bool is_gamma_pole(double x, double tol) {
    const double k = std::nearbyint(x);
    return k <= 0.0 && std::abs(x - k) <= tol;
}

double gamma(double x, double pole_tol) {
    if (is_gamma_pole(x, pole_tol)) {
        throw PoleError("gamma: argument " + fmt_arg(x) + " is at a nonpositive-integer pole");
    }
    if (x >= 0.5) {
        return std::tgamma(x);
    }
    // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)).
    return M_PI / (sin_pi(x) * std::tgamma(1.0 - x));
}

SignedLogGamma log_gamma(double x, double pole_tol) {
    if (is_gamma_pole(x, pole_tol)) {
        throw PoleError("log_gamma: argument " + fmt_arg(x) + " is at a nonpositive-integer pole");
    }
    if (x >= 0.5) {
        return {std::lgamma(x), +1};
    }
    const double s = sin_pi(x);
    const double log_abs = std::log(M_PI) - std::log(std::abs(s)) - std::lgamma(1.0 - x);
    return {log_abs, s > 0.0 ? +1 : -1};
}

GammaRatio gamma_ratio(double num_arg, double den_arg, double pole_tol) {
    GammaRatio r;
    r.numerator_arg = num_arg;
    r.denominator_arg = den_arg;
    if (is_gamma_pole(den_arg, pole_tol)) {
        r.value = 0.0;
        r.is_zero = true;
        return r;
    }
    if (is_gamma_pole(num_arg, pole_tol)) {
        throw PoleError("gamma_ratio: numerator argument " + fmt_arg(num_arg) +
                        " is at a nonpositive-integer pole");
    }
    if (num_arg == den_arg) {
        r.value = 1.0;
        return r;
    }
    const SignedLogGamma n = log_gamma(num_arg, pole_tol);
    const SignedLogGamma d = log_gamma(den_arg, pole_tol);
    r.value = n.sign * d.sign * std::exp(n.log_abs - d.log_abs);
    return r;
}

double binomial_paper(double alpha, int n) {
    if (n < 0) {
        throw std::invalid_argument("binomial_paper: n must be nonnegative");
    }
    if (n == 0) {
        return 1.0;  // Leibniz-series n = 0 term
    }
    // Gamma(n - alpha) / Gamma(1 - alpha); a pole in the denominator makes the
    // coefficient zero (integer alpha >= 1), a pole in the numerator is an error.
    const GammaRatio ratio = gamma_ratio(n - alpha, 1.0 - alpha);
    const double sign = (n % 2 == 1) ? 1.0 : -1.0;  // (-1)^{n-1}
    return sign * alpha * ratio.value / std::tgamma(static_cast<double>(n) + 1.0);
}

double binomial_product(double alpha, int n) {
    if (n < 0) {
        throw std::invalid_argument("binomial_product: n must be nonnegative");
    }
    double acc = 1.0;
    for (int k = 0; k < n; ++k) {
        acc *= (alpha - k) / (k + 1);
    }
    return acc;
}

}  // namespace fraclab
