#include "fraclab/powerlaw.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "fraclab/special_functions.hpp"

namespace fraclab {

namespace {

bool exps_equal(double a, double b) {
    return std::abs(a - b) <= kExponentTolerance;
}

bool is_integer(double r) {
    return std::abs(r - std::nearbyint(r)) <= kExponentTolerance;
}

std::string fmt16(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16g", v);
    return buf;
}

}  // namespace

void PowerSum::normalize() {
    // exact ordering keeps the comparator a strict weak order; the tolerance
    // only enters in the adjacent-merge pass below
    std::sort(terms_.begin(), terms_.end(), [](const Monomial& a, const Monomial& b) {
        if (a.x_exp != b.x_exp) return a.x_exp > b.x_exp;
        return a.t_exp > b.t_exp;
    });
    std::vector<Monomial> merged;
    for (const Monomial& m : terms_) {
        if (!merged.empty() && exps_equal(merged.back().x_exp, m.x_exp) &&
            exps_equal(merged.back().t_exp, m.t_exp)) {
            merged.back().coeff += m.coeff;
        } else {
            merged.push_back(m);
        }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Monomial& m) { return m.coeff == 0.0; }),
                 merged.end());
    terms_ = std::move(merged);
}

double PowerSum::max_abs_coeff() const {
    double m = 0.0;
    for (const Monomial& t : terms_) m = std::max(m, std::abs(t.coeff));
    return m;
}

double PowerSum::eval(double t, double x) const {
    double v = 0.0;
    for (const Monomial& m : terms_) {
        v += m.coeff * std::pow(x, m.x_exp) * std::pow(t, m.t_exp);
    }
    return v;
}

PowerSum add(const PowerSum& a, const PowerSum& b) {
    std::vector<Monomial> terms = a.terms();
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return PowerSum(std::move(terms));
}

PowerSum sub(const PowerSum& a, const PowerSum& b) {
    return add(a, negate(b));
}

PowerSum mul(const PowerSum& a, const PowerSum& b) {
    std::vector<Monomial> terms;
    terms.reserve(a.terms().size() * b.terms().size());
    for (const Monomial& ma : a.terms()) {
        for (const Monomial& mb : b.terms()) {
            terms.push_back({ma.coeff * mb.coeff, ma.x_exp + mb.x_exp, ma.t_exp + mb.t_exp});
        }
    }
    return PowerSum(std::move(terms));
}

PowerSum scale(const PowerSum& a, double c) {
    std::vector<Monomial> terms = a.terms();
    for (Monomial& m : terms) m.coeff *= c;
    return PowerSum(std::move(terms));
}

PowerSum negate(const PowerSum& a) {
    return scale(a, -1.0);
}

Monomial pow_real(const Monomial& m, double r) {
    if (m.coeff <= 0.0 && !(is_integer(r) && r >= 0.0)) {
        throw NegativeBaseError("pow_real: real power of a monomial with coefficient " +
                                fmt16(m.coeff));
    }
    if (r == 0.0) return {1.0, 0.0, 0.0};
    return {std::pow(m.coeff, r), m.x_exp * r, m.t_exp * r};
}

PowerSum pow_int(const PowerSum& s, int k) {
    if (k < 0) throw std::invalid_argument("pow_int: exponent must be nonnegative");
    PowerSum acc = PowerSum::unit();
    for (int i = 0; i < k; ++i) acc = mul(acc, s);
    return acc;
}

PowerSum d_dx(const PowerSum& s) {
    std::vector<Monomial> terms;
    for (const Monomial& m : s.terms()) {
        if (exps_equal(m.x_exp, 0.0)) continue;
        terms.push_back({m.coeff * m.x_exp, m.x_exp - 1.0, m.t_exp});
    }
    return PowerSum(std::move(terms));
}

PowerSum d_dt(const PowerSum& s) {
    std::vector<Monomial> terms;
    for (const Monomial& m : s.terms()) {
        if (exps_equal(m.t_exp, 0.0)) continue;
        terms.push_back({m.coeff * m.t_exp, m.x_exp, m.t_exp - 1.0});
    }
    return PowerSum(std::move(terms));
}

namespace {

void check_frac_order(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("fractional order must satisfy 0 < alpha <= 1");
    }
}

// Termwise power rule c t^b -> c * Gamma(b+1)/Gamma(b+1-alpha) t^{b-alpha}.
// Terms whose Gamma ratio hits a denominator pole vanish (1/Gamma(nonpositive) = 0).
std::vector<Monomial> power_rule(const std::vector<Monomial>& in, double alpha) {
    std::vector<Monomial> out;
    for (const Monomial& m : in) {
        const GammaRatio r = gamma_ratio(m.t_exp + 1.0, m.t_exp + 1.0 - alpha);
        if (r.is_zero) continue;
        out.push_back({m.coeff * r.value, m.x_exp, m.t_exp - alpha});
    }
    return out;
}

}  // namespace

PowerSum caputo_dt(const PowerSum& s, double alpha, CaputoMode mode) {
    check_frac_order(alpha);
    if (alpha == 1.0) return d_dt(s);
    std::vector<Monomial> kept;
    for (const Monomial& m : s.terms()) {
        const double b = m.t_exp;
        if (exps_equal(b, 0.0)) continue;  // Caputo annihilates constants
        if (b <= -1.0 + kExponentTolerance) {
            throw DivergentError("caputo_dt: t-exponent " + fmt16(b) + " is <= -1");
        }
        if (b < 0.0 && mode == CaputoMode::strict) {
            throw StrictModeError("caputo_dt: t-exponent " + fmt16(b) +
                                  " in (-1, 0) requires extended mode");
        }
        kept.push_back(m);
    }
    return PowerSum(power_rule(kept, alpha));
}

PowerSum rl_dt(const PowerSum& s, double alpha) {
    check_frac_order(alpha);
    if (alpha == 1.0) return d_dt(s);
    for (const Monomial& m : s.terms()) {
        if (m.t_exp <= -1.0 + kExponentTolerance) {
            throw DivergentError("rl_dt: t-exponent " + fmt16(m.t_exp) + " is <= -1");
        }
    }
    return PowerSum(power_rule(s.terms(), alpha));
}

PowerSum frac_int(const PowerSum& s, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("frac_int: order must be positive");
    std::vector<Monomial> out;
    for (const Monomial& m : s.terms()) {
        const double b = m.t_exp;
        if (b <= -1.0 + kExponentTolerance) {
            throw DivergentError("frac_int: t-exponent " + fmt16(b) + " is <= -1");
        }
        const GammaRatio r = gamma_ratio(b + 1.0, b + 1.0 + alpha);
        if (r.is_zero) continue;  // unreachable: both arguments positive
        out.push_back({m.coeff * r.value, m.x_exp, b + alpha});
    }
    return PowerSum(std::move(out));
}

PowerSum residual_diffusion(const Monomial& u, double p, double alpha) {
    const PowerSum us(u);
    const PowerSum flux = mul(PowerSum(pow_real(u, p)), d_dx(us));
    return sub(caputo_dt(us, alpha, CaputoMode::extended), d_dx(flux));
}

PowerSum residual_third_order(const Monomial& u, double q, double alpha) {
    const PowerSum us(u);
    const PowerSum flux = mul(PowerSum(pow_real(u, q)), d_dx(d_dx(us)));
    return sub(caputo_dt(us, alpha, CaputoMode::extended), d_dx(flux));
}

std::string to_string(const Monomial& m) {
    std::string out = fmt16(m.coeff);
    if (!exps_equal(m.x_exp, 0.0)) out += "*x^" + fmt16(m.x_exp);
    if (!exps_equal(m.t_exp, 0.0)) out += "*t^" + fmt16(m.t_exp);
    return out;
}

std::string to_string(const PowerSum& s) {
    if (s.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < s.terms().size(); ++i) {
        Monomial m = s.terms()[i];
        if (i == 0) {
            out += to_string(m);
        } else {
            out += m.coeff < 0.0 ? " - " : " + ";
            m.coeff = std::abs(m.coeff);
            out += to_string(m);
        }
    }
    return out;
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    double parse_number() {
        skip_ws();
        const char* begin = text.data() + pos;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin || !std::isfinite(v)) {
            throw ParseError("expected a finite number at position " + std::to_string(pos) +
                             " in '" + std::string(text) + "'");
        }
        pos += static_cast<std::size_t>(end - begin);
        return v;
    }

    // number | x[^exp] | t[^exp]; exponent defaults to 1 when '^' is absent.
    void parse_factor(Monomial& m, bool& saw_coeff) {
        skip_ws();
        const char c = peek();
        if (c == 'x' || c == 't') {
            ++pos;
            double e = 1.0;
            if (consume('^')) e = parse_number();
            (c == 'x' ? m.x_exp : m.t_exp) += e;
        } else {
            m.coeff *= parse_number();
            saw_coeff = true;
        }
    }

    Monomial parse_term() {
        Monomial m{1.0, 0.0, 0.0};
        bool saw_coeff = false;
        parse_factor(m, saw_coeff);
        while (consume('*')) parse_factor(m, saw_coeff);
        return m;
    }

    PowerSum parse() {
        std::vector<Monomial> terms;
        double sign = 1.0;
        if (consume('-')) sign = -1.0;
        else consume('+');
        while (true) {
            Monomial m = parse_term();
            m.coeff *= sign;
            terms.push_back(m);
            if (eof()) break;
            if (consume('+')) sign = 1.0;
            else if (consume('-')) sign = -1.0;
            else
                throw ParseError("unexpected character '" + std::string(1, peek()) +
                                 "' at position " + std::to_string(pos) + " in '" +
                                 std::string(text) + "'");
        }
        return PowerSum(std::move(terms));
    }
};

}  // namespace

PowerSum parse_power_sum(std::string_view text) {
    Parser p{text};
    if (p.eof()) throw ParseError("empty expression");
    return p.parse();
}

}  // namespace fraclab
