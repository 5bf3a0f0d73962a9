#include "forchfem/law.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "forchfem/errors.hpp"

namespace forchfem {

namespace {

// One monomial a * s^alpha, with fast paths for the common small integer
// exponents so that the two-term law does not pay for std::pow.
double monomial(double a, double alpha, double s) {
    if (alpha == 0.0) return a;
    if (alpha == 1.0) return a * s;
    if (alpha == 2.0) return a * s * s;
    return a * std::pow(s, alpha);
}

}  // namespace

GeneralizedPolynomial::GeneralizedPolynomial(std::vector<double> exponents,
                                             std::vector<double> coefficients)
    : exponents_(std::move(exponents)), coefficients_(std::move(coefficients)) {
    if (exponents_.size() != coefficients_.size())
        throw std::invalid_argument("law: exponent/coefficient count mismatch");
    if (exponents_.size() < 2)
        throw std::invalid_argument("law: at least two terms required");
    if (exponents_.front() != 0.0)
        throw std::invalid_argument("law: first exponent must be 0");
    for (std::size_t i = 1; i < exponents_.size(); ++i)
        if (!(exponents_[i] > exponents_[i - 1]))
            throw std::invalid_argument("law: exponents must be strictly increasing");
    if (!(coefficients_.front() > 0.0))
        throw std::invalid_argument("law: a_0 must be positive");
    if (!(coefficients_.back() > 0.0))
        throw std::invalid_argument("law: leading coefficient must be positive");
    for (double c : coefficients_)
        if (!(c >= 0.0)) throw std::invalid_argument("law: coefficients must be non-negative");
}

GeneralizedPolynomial GeneralizedPolynomial::two_term() {
    return GeneralizedPolynomial({0.0, 1.0}, {1.0, 1.0});
}

double GeneralizedPolynomial::operator()(double s) const {
    if (s < 0.0) throw std::invalid_argument("law: g requires s >= 0");
    double g = 0.0;
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        g += monomial(coefficients_[i], exponents_[i], s);
    return g;
}

double GeneralizedPolynomial::derivative(double s) const {
    if (s < 0.0) throw std::invalid_argument("law: g' requires s >= 0");
    double d = 0.0;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        const double alpha = exponents_[i];
        if (alpha == 0.0) continue;  // constant term
        d += monomial(coefficients_[i] * alpha, alpha - 1.0, s);
    }
    return d;
}

bool GeneralizedPolynomial::is_two_term() const {
    return exponents_.size() == 2 && exponents_[1] == 1.0 && coefficients_[0] == 1.0 &&
           coefficients_[1] == 1.0;
}

DerivedExponents derived_exponents(const GeneralizedPolynomial& law) {
    const double deg = law.leading_exponent();
    DerivedExponents d;
    d.a = deg / (deg + 1.0);
    d.beta = 2.0 - d.a;
    d.lambda = d.beta / (d.beta - 1.0);
    d.gamma = d.a / d.beta;
    return d;
}

double solve_s(const GeneralizedPolynomial& law, double xi) {
    if (xi < 0.0) throw std::invalid_argument("law: solve_s requires xi >= 0");
    if (xi == 0.0) return 0.0;

    const double rtol = 1e-12;
    const double target = rtol * std::max(xi, 1.0);
    auto phi = [&](double s) { return s * law(s) - xi; };

    // s*g(s) >= a_0 s and >= a_N s^{1+alpha_N}, so both expressions below
    // bound the root from above; grow geometrically as a safeguard.
    double hi = std::min(xi / law.a0(),
                         std::pow(xi / law.coefficients().back(),
                                  1.0 / (1.0 + law.leading_exponent())));
    hi = std::max(hi, std::numeric_limits<double>::min());
    int grow = 0;
    while (phi(hi) < 0.0) {
        hi *= 2.0;
        if (++grow > 200) throw SolverError("law: root bracket expansion failed");
    }
    double lo = 0.0;

    double s = hi;
    for (int it = 0; it < 200; ++it) {
        const double f = phi(s);
        if (std::abs(f) <= target) return s;
        if (f > 0.0)
            hi = s;
        else
            lo = s;
        // dphi = g(s) + s g'(s) >= a_0 > 0 everywhere.
        const double dphi = law(s) + s * law.derivative(s);
        double next = s - f / dphi;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // bisection fallback
        if (next == s) return s;  // step below representable resolution
        s = next;
    }
    throw SolverError("law: root iteration for s*g(s)=xi did not converge");
}

double kernel(const GeneralizedPolynomial& law, double xi) {
    return 1.0 / law(solve_s(law, xi));
}

double kernel_derivative(const GeneralizedPolynomial& law, double xi) {
    const double s = solve_s(law, xi);
    const double g = law(s);
    const double gp = law.derivative(s);
    const double s_prime = 1.0 / (g + s * gp);
    return -gp * s_prime / (g * g);
}

namespace {

struct GkEstimate {
    double integral;
    double error;
};

// 15-point Gauss-Kronrod pair on [a, b].
template <typename F>
GkEstimate gk15(const F& f, double a, double b) {
    static const double xgk[8] = {
        0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
        0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
    static const double wgk[8] = {
        0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
        0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
    static const double wg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                                 0.417959183673469};

    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = wgk[7] * fc;
    double resg = wg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double f1 = f(c - h * xgk[i]);
        const double f2 = f(c + h * xgk[i]);
        resk += wgk[i] * (f1 + f2);
        if (i % 2 == 1) resg += wg[(i - 1) / 2] * (f1 + f2);
    }
    return {resk * h, std::abs((resk - resg) * h)};
}

template <typename F>
double gk_adaptive(const F& f, double a, double b, double eps, int depth) {
    const GkEstimate r = gk15(f, a, b);
    if (r.error <= eps) return r.integral;
    if (depth >= 60) throw SolverError("law: potential quadrature did not converge");
    const double c = 0.5 * (a + b);
    return gk_adaptive(f, a, c, 0.5 * eps, depth + 1) +
           gk_adaptive(f, c, b, 0.5 * eps, depth + 1);
}

}  // namespace

double kernel_potential(const GeneralizedPolynomial& law, double xi) {
    if (xi < 0.0) throw std::invalid_argument("law: potential requires xi >= 0");
    if (xi == 0.0) return 0.0;
    // Substituting sigma = u^2 turns the defining integral into
    // int_0^xi 2 u K(u) du with a smooth bounded integrand.
    auto f = [&](double u) { return 2.0 * u * kernel(law, u); };
    const double rtol = 1e-8;
    const GkEstimate coarse = gk15(f, 0.0, xi);
    const double eps = rtol * std::max(std::abs(coarse.integral), 1e-300);
    return gk_adaptive(f, 0.0, xi, eps, 0);
}

Vec2 flux(const GeneralizedPolynomial& law, const Vec2& y) {
    const double m = norm(y);
    if (m == 0.0) return {0.0, 0.0};
    return kernel(law, m) * y;
}

}  // namespace forchfem
