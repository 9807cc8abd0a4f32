#include "perdet/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace perdet {

std::optional<Rational> recognize_rational(double x, long max_den, double tol) {
    // continued fraction expansion with convergent denominators bounded by max_den
    double v = x;
    long h0 = 0, k0 = 1, h1 = 1, k1 = 0;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(v);
        if (fl > 9e17 || fl < -9e17) break;
        long a = static_cast<long>(fl);
        long h2 = a * h1 + h0;
        long k2 = a * k1 + k0;
        if (k2 > max_den || k2 < 0) break;
        h0 = h1;
        k0 = k1;
        h1 = h2;
        k1 = k2;
        if (k1 > 0 && std::abs(x - static_cast<double>(h1) / static_cast<double>(k1)) <= tol)
            return Rational(h1, k1);
        double frac = v - fl;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    return std::nullopt;
}

namespace {

// Aberth-Ehrlich on a square-free polynomial given as double coefficients
// (lowest first). Deterministic initial guesses on a circle.
std::vector<Complex> aberth(const std::vector<Complex>& coeffs, const RootOptions& opt) {
    int n = static_cast<int>(coeffs.size()) - 1;
    std::vector<Complex> z(static_cast<size_t>(n));
    // Cauchy-style radius
    double lc = std::abs(coeffs.back());
    double radius = 0.0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::pow(std::abs(coeffs[static_cast<size_t>(i)]) / lc, 1.0 / (n - i)));
    radius = 1.0 + 2.0 * radius;
    for (int i = 0; i < n; ++i) {
        double ang = 2.0 * M_PI * i / n + 0.4;  // fixed offset breaks symmetry deterministically
        z[static_cast<size_t>(i)] = std::polar(radius, ang);
    }
    auto eval = [&](Complex x, Complex& d) {
        Complex p(0.0, 0.0);
        d = Complex(0.0, 0.0);
        for (int i = n; i >= 0; --i) {
            d = d * x + p;
            p = p * x + coeffs[static_cast<size_t>(i)];
        }
        return p;
    };
    double norm = 0.0;
    for (const auto& c : coeffs) norm = std::max(norm, std::abs(c));
    for (int it = 0; it < opt.max_iterations; ++it) {
        double moved = 0.0;
        for (int i = 0; i < n; ++i) {
            Complex d;
            Complex p = eval(z[static_cast<size_t>(i)], d);
            Complex newton = (d == Complex(0.0, 0.0)) ? Complex(0.0, 0.0) : p / d;
            Complex sum(0.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != i) sum += 1.0 / (z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
            Complex corr = newton / (1.0 - newton * sum);
            z[static_cast<size_t>(i)] -= corr;
            moved = std::max(moved, std::abs(corr));
        }
        if (moved < 1e-15 * (1.0 + radius)) break;
        if (it == opt.max_iterations - 1) {
            // check residuals before giving up
            bool ok = true;
            for (int i = 0; i < n; ++i) {
                Complex d;
                if (std::abs(eval(z[static_cast<size_t>(i)], d)) / norm > opt.tol) ok = false;
            }
            if (!ok) throw std::runtime_error("complex_roots: Aberth iteration did not converge");
        }
    }
    // conjugate symmetrization for real input: pair roots with conjugates
    for (auto& r : z)
        if (std::abs(r.imag()) < 1e-14 * (1.0 + std::abs(r.real()))) r = Complex(r.real(), 0.0);
    std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return z;
}

std::vector<Complex> poly_to_cdouble(const Poly& p) {
    std::vector<Complex> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) c.emplace_back(to_double(a), 0.0);
    return c;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const Poly& p) {
    std::vector<std::pair<Rational, int>> out;
    if (p.is_zero() || p.degree() == 0) return out;
    Poly q = p.monic();
    // candidates from numeric roots of each square-free factor
    auto factors = squarefree_decomposition(q);
    for (size_t mi = 0; mi < factors.size(); ++mi) {
        const Poly& f = factors[mi];
        if (f.degree() <= 0) continue;
        std::vector<Complex> roots;
        if (f.degree() == 1) {
            roots = {Complex(to_double(-f.coeff(0) / f.coeff(1)), 0.0)};
        } else {
            roots = aberth(poly_to_cdouble(f), RootOptions{});
        }
        for (const auto& z : roots) {
            if (std::abs(z.imag()) > 1e-9) continue;
            // integers first, then small fractions
            std::optional<Rational> cand;
            double rounded = std::round(z.real());
            if (std::abs(z.real() - rounded) < 1e-7 && std::abs(rounded) < 9e15) {
                Rational c(static_cast<long>(rounded));
                if (f.eval(c) == 0) cand = c;
            }
            if (!cand) {
                auto r = recognize_rational(z.real(), 1000000L, 1e-7);
                if (r && f.eval(*r) == 0) cand = r;
            }
            if (cand) {
                // multiplicity in p = index of the square-free factor
                bool seen = false;
                for (auto& [v, m] : out)
                    if (v == *cand) seen = true;
                if (!seen) out.emplace_back(*cand, static_cast<int>(mi + 1));
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<RootWithMultiplicity> complex_roots(const Poly& p, const RootOptions& opt) {
    if (p.is_zero()) throw std::domain_error("complex_roots of zero polynomial");
    std::vector<RootWithMultiplicity> out;
    if (p.degree() == 0) return out;
    auto factors = squarefree_decomposition(p);
    for (size_t mi = 0; mi < factors.size(); ++mi) {
        Poly f = factors[mi];
        if (f.degree() <= 0) continue;
        int mult = static_cast<int>(mi + 1);
        // exact rational roots of this factor, deflated exactly
        for (const auto& [v, m] : rational_roots(f)) {
            (void)m;  // square-free: multiplicity 1 within the factor
            RootWithMultiplicity r;
            r.value = Complex(to_double(v), 0.0);
            r.multiplicity = mult;
            r.exact_rational = true;
            r.rational_value = v;
            out.push_back(r);
            f = f / Poly::linear_root(v);
        }
        if (f.degree() > 0) {
            for (const auto& z : aberth(poly_to_cdouble(f), opt)) {
                RootWithMultiplicity r;
                r.value = z;
                r.multiplicity = mult;
                out.push_back(r);
            }
        }
    }
    return out;
}

}  // namespace perdet
