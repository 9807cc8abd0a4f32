#include "perdet/gamma.hpp"

#include <cmath>

namespace perdet {

namespace {

// Lanczos, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

Complex lanczos_gamma(Complex z) {
    // valid for Re z >= 0.5
    z -= 1.0;
    Complex x(kLanczos[0], 0.0);
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + Complex(i, 0.0));
    Complex t = z + 7.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

Complex lanczos_log_gamma(Complex z) {
    z -= 1.0;
    Complex x(kLanczos[0], 0.0);
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + Complex(i, 0.0));
    Complex t = z + 7.5;
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(x);
}

bool near_nonpositive_integer(Complex z, double eps = 1e-8) {
    if (z.real() > 0.5) return false;
    double n = std::round(z.real());
    return n <= 0.0 && std::abs(z - Complex(n, 0.0)) < eps;
}

}  // namespace

Complex log_gamma_right_half(Complex z) { return lanczos_log_gamma(z); }

GammaValue gamma_complex(Complex z) {
    GammaValue out;
    if (near_nonpositive_integer(z)) {
        out.condition = GammaCondition::near_pole;
        out.value = Complex(std::numeric_limits<double>::quiet_NaN(),
                            std::numeric_limits<double>::quiet_NaN());
        return out;
    }
    if (z.real() >= 0.5) {
        Complex lg = lanczos_log_gamma(z);
        if (std::abs(lg.real()) > 700.0) {
            out.condition = GammaCondition::overflow;
            out.value = Complex(std::numeric_limits<double>::infinity(), 0.0);
            return out;
        }
        out.value = lanczos_gamma(z);
        return out;
    }
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    Complex lg = lanczos_log_gamma(1.0 - z);
    if (std::abs(lg.real()) > 700.0) {
        out.condition = GammaCondition::overflow;
        out.value = Complex(0.0, 0.0);
        return out;
    }
    Complex s = std::sin(M_PI * z);
    out.value = M_PI / (s * lanczos_gamma(1.0 - z));
    return out;
}

RatFunc partial_shift(const RatFunc& f) {
    if (f.is_zero()) throw std::domain_error("partial_shift of zero");
    return f / f.shift(Rational(-1));
}

namespace {

// Delta on a nonzero polynomial: factor T^k, then (-1)^deg * p(0)/lc.
Rational delta_poly(const Poly& p) {
    assert(!p.is_zero());
    Poly q = p;
    while (q.constant_term() == 0) q = q / Poly{Rational(0), Rational(1)};
    if (q.degree() == 0) return Rational(1);
    Rational sign = (q.degree() % 2 == 0) ? Rational(1) : Rational(-1);
    return sign * q.constant_term() / q.leading();
}

}  // namespace

Rational delta(const RatFunc& f) {
    if (f.is_zero()) throw std::domain_error("delta of zero");
    return delta_poly(f.num()) / delta_poly(f.den());
}

GammaValue gamma_of_poly(const Poly& p) {
    GammaValue out;
    out.value = Complex(1.0, 0.0);
    if (p.is_zero()) throw std::domain_error("gamma of zero polynomial");
    if (p.degree() == 0) return out;  // constants contribute 1
    for (const auto& root : complex_roots(p)) {
        Complex g;
        if (root.exact_rational && is_integer(root.rational_value) &&
            root.rational_value <= 0) {
            // T + n -> (-1)^n / n!
            long n = static_cast<long>(-numerator(root.rational_value));
            double fact = 1.0;
            for (long i = 2; i <= n; ++i) fact *= static_cast<double>(i);
            g = Complex((n % 2 == 0 ? 1.0 : -1.0) / fact, 0.0);
        } else {
            GammaValue gv = gamma_complex(root.value);
            if (gv.condition != GammaCondition::ok) {
                out.condition = gv.condition;
                return out;
            }
            g = gv.value;
        }
        for (int i = 0; i < root.multiplicity; ++i) out.value *= g;
    }
    return out;
}

GammaValue gamma_of_rf(const RatFunc& f) {
    if (f.is_zero()) throw std::domain_error("gamma of zero");
    GammaValue num = gamma_of_poly(f.num());
    if (num.condition != GammaCondition::ok) return num;
    GammaValue den = gamma_of_poly(f.den());
    if (den.condition != GammaCondition::ok) return den;
    GammaValue out;
    out.value = num.value / den.value;
    return out;
}

GammaValue gamma_of_matrix(const QMatrix& m) { return gamma_of_poly(char_poly(m)); }

}  // namespace perdet
