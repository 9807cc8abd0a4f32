#pragma once

#include "perdet/poly.hpp"

#include <complex>
#include <vector>

namespace perdet {

struct RootWithMultiplicity {
    Complex value;
    int multiplicity = 1;
    // set when the root was certified as an exact rational by deflation
    bool exact_rational = false;
    Rational rational_value;
};

struct RootOptions {
    double tol = 1e-12;        // residual target |p(z)|/||p||
    int max_iterations = 200;  // Aberth cap
};

// All complex roots with multiplicities. Exact rational roots are extracted
// first (recognition + exact verification + exact deflation), multiplicities
// of the rest come from Yun's square-free decomposition, and the remaining
// square-free factors are solved by Aberth-Ehrlich iteration.
// Throws std::runtime_error on non-convergence.
std::vector<RootWithMultiplicity> complex_roots(const Poly& p, const RootOptions& opt = {});

// Exact rational roots of p with multiplicities (sound and complete for
// denominators up to ~1e6 via continued-fraction recognition of numeric
// roots, then exact verification; integer roots are always found).
std::vector<std::pair<Rational, int>> rational_roots(const Poly& p);

// Continued-fraction recognition of x as a rational with denominator
// <= max_den and |x - p/q| <= tol. Returns nullopt if none.
std::optional<Rational> recognize_rational(double x, long max_den, double tol);

}  // namespace perdet
