#pragma once

#include "perdet/qmatrix.hpp"
#include "perdet/ratfunc.hpp"
#include "perdet/roots.hpp"

namespace perdet {

enum class GammaCondition { ok, near_pole, overflow };

struct GammaValue {
    Complex value{0.0, 0.0};
    GammaCondition condition = GammaCondition::ok;
};

// Complex Gamma: Lanczos for Re z >= 0.5, reflection otherwise.
// near_pole when z is within 1e-8 of a non-positive integer,
// overflow when |log Gamma| > 700.
GammaValue gamma_complex(Complex z);

// log Gamma on Re z > 0 (principal Lanczos branch)
Complex log_gamma_right_half(Complex z);

// f(T) -> f(T)/f(T-1)
RatFunc partial_shift(const RatFunc& f);

// Delta f = (-1)^n a_n a_0^{-1} on T-units, Delta(T) = 1, multiplicative.
Rational delta(const RatFunc& f);

// The multiplicative Gamma on Q(T)^x: T - alpha -> Gamma(alpha) unless alpha
// is exactly a non-positive integer, where T + n -> (-1)^n / n!; constants -> 1.
// Roots and poles are found numerically with exact extraction of rational roots.
GammaValue gamma_of_rf(const RatFunc& f);
GammaValue gamma_of_poly(const Poly& p);

// Gamma(M) = Gamma(det(T - M))
GammaValue gamma_of_matrix(const QMatrix& m);

}  // namespace perdet
