#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fraclab/errors.hpp"

namespace fraclab {

/// Absolute tolerance under which two exponents are considered equal.
inline constexpr double kExponentTolerance = 1e-12;

/// A single term c * x^a * t^b with real coefficient and real exponents.
struct Monomial {
    double coeff = 0.0;
    double x_exp = 0.0;
    double t_exp = 0.0;
};

/// A finite sum of monomials, kept normalized: like terms merged (exponents equal
/// within kExponentTolerance), zero coefficients dropped, terms sorted by
/// descending x_exp then descending t_exp. The empty sum is the zero expression.
class PowerSum {
  public:
    PowerSum() = default;
    PowerSum(const Monomial& m) : terms_{m} { normalize(); }                 // NOLINT implicit
    explicit PowerSum(std::vector<Monomial> terms) : terms_(std::move(terms)) { normalize(); }
    static PowerSum constant(double c) { return PowerSum(Monomial{c, 0.0, 0.0}); }
    static PowerSum unit() { return constant(1.0); }

    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Largest |coeff| over terms; 0 for the zero expression.
    double max_abs_coeff() const;

    /// Pointwise value at (t, x).
    double eval(double t, double x) const;

  private:
    void normalize();
    std::vector<Monomial> terms_;
};

PowerSum add(const PowerSum& a, const PowerSum& b);
PowerSum sub(const PowerSum& a, const PowerSum& b);
PowerSum mul(const PowerSum& a, const PowerSum& b);
PowerSum scale(const PowerSum& a, double c);
PowerSum negate(const PowerSum& a);

inline PowerSum operator+(const PowerSum& a, const PowerSum& b) { return add(a, b); }
inline PowerSum operator-(const PowerSum& a, const PowerSum& b) { return sub(a, b); }
inline PowerSum operator*(const PowerSum& a, const PowerSum& b) { return mul(a, b); }
inline PowerSum operator*(double c, const PowerSum& a) { return scale(a, c); }
inline PowerSum operator-(const PowerSum& a) { return negate(a); }

/// Real power of a single monomial: (c x^a t^b)^r = c^r x^{ar} t^{br}.
/// Requires coeff > 0 unless r is a nonnegative integer (NegativeBaseError otherwise).
Monomial pow_real(const Monomial& m, double r);

/// Nonnegative integer power by repeated multiplication; s^0 is the unit.
PowerSum pow_int(const PowerSum& s, int k);

/// Termwise partial derivatives; terms with a vanishing exponent drop out.
PowerSum d_dx(const PowerSum& s);
PowerSum d_dt(const PowerSum& s);

enum class CaputoMode { strict, extended };

/// Caputo time derivative of order alpha in (0, 1].
///
/// Termwise on t^b: constants (b = 0) map to zero; b > 0 maps to
/// Gamma(b+1)/Gamma(b+1-alpha) t^{b-alpha}. Extended mode applies the same
/// Riemann-Liouville power rule for -1 < b < 0, where the classical Caputo
/// integral does not converge; strict mode rejects that range (StrictModeError).
/// b <= -1 is DivergentError in either mode. alpha = 1 degenerates to d_dt exactly.
PowerSum caputo_dt(const PowerSum& s, double alpha, CaputoMode mode = CaputoMode::strict);

/// Riemann-Liouville time derivative of order alpha in (0, 1]: termwise
/// Gamma(b+1)/Gamma(b+1-alpha) t^{b-alpha} for all b > -1, constants included.
PowerSum rl_dt(const PowerSum& s, double alpha);

/// Fractional integral of order alpha > 0: termwise Gamma(b+1)/Gamma(b+1+alpha) t^{b+alpha}.
PowerSum frac_int(const PowerSum& s, double alpha);

/// Residual of C D_t^alpha u - (u^p u_x)_x for a single positive monomial u.
PowerSum residual_diffusion(const Monomial& u, double p, double alpha);

/// Residual of C D_t^alpha u - (u^q u_xx)_x for a single positive monomial u.
PowerSum residual_third_order(const Monomial& u, double q, double alpha);

/// eta(t, x, u) = sum_k coefficient_k(t, x) * u^k with distinct nonnegative degrees.
struct EtaTerm {
    int u_degree = 0;
    PowerSum coefficient;
};
using EtaForm = std::vector<EtaTerm>;

/// Canonical text form, e.g. "3.5*x^0.5*t^-0.25 + 1*t^2"; zero renders as "0".
/// Coefficients and exponents carry 16 significant digits.
std::string to_string(const PowerSum& s);
std::string to_string(const Monomial& m);

/// Parses the canonical text form (and modest variations: signs, bare constants,
/// omitted '^1'). Throws ParseError on malformed input.
PowerSum parse_power_sum(std::string_view text);

}  // namespace fraclab
