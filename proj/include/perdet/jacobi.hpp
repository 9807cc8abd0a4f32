#pragma once

#include "perdet/cyclotomic.hpp"
#include "perdet/gf.hpp"
#include "perdet/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace perdet {

// Formal Z-linear combination of (Q/Z)' values (denominators prime to p).
struct BSupportElement {
    std::map<Rational, long> terms;  // reduced fractions in [0,1) -> multiplicity
    long p = 0;                      // base characteristic

    static BSupportElement make(long p, const std::vector<std::pair<Rational, long>>& ts);
    void add(const Rational& a, long mult);
    bool degree_zero() const;                 // sum n_a * a = 0 in Q/Z
    bool frobenius_closed(long q) const;      // invariant under a -> q a
    // orbits of multiplication by q on the support, each with its multiplicity
    std::vector<std::pair<std::vector<Rational>, long>> orbits(long q) const;
};

// fractional part into [0, 1)
Rational fractional_part(const Rational& a);

// <a> = sum n_a <a>  and  Gamma(c a) = prod Gamma(1 - <a>)^{n_a}
Rational fractional_bracket(const BSupportElement& a);
Complex gamma_c(const BSupportElement& a);

// Multiplicative character data: chi_a(g^k) = e^{2 pi i a k} on F_{q}^x
// realized through exact exponents num * k mod den.
struct MultCharacter {
    const GF* field = nullptr;
    long num = 0, den = 1;  // a = num/den, den | q - 1
    bool trivial() const { return num % den == 0; }
    Complex operator()(GF::Elem x) const;
    long exponent(GF::Elem x) const;  // k with chi(x) = zeta_den^k
};
MultCharacter mult_character(const GF& field, const Rational& a);

// g(a, psi_0) = -sum_{x in E_f^x} a^{-1}(x) psi_0(Tr x) over the orbit field
// E_f = F_{q^f}; psi_c(y) = exp(2 pi i c lift(Tr_{F_q/F_p} y)/p).
Complex gauss_sum_orbit(const GF& orbit_field, const Rational& a, long psi_scale = 1);

// Exact Jacobi sum in Z[zeta_m]:
//   J(a, b) = -sum_{u != 0,1} chi_a^{-1}(u) chi_b^{-1}(1 - u),
// normalized so that g(a) g(b) = J(a, b) g(a + b) for a, b, a+b nontrivial.
CyclotomicInt jacobi_sum_exact(const GF& field, const Rational& a, const Rational& b);

// Classical Weil sum J_cl(a, b) = sum chi_a(u) chi_b(1-u) = -J(-a, -b).
CyclotomicInt jacobi_sum_classical(const GF& field, const Rational& a, const Rational& b);

struct JacobiResult {
    Complex value{0.0, 0.0};
    bool psi0_independent = true;      // recomputed with psi_2 (skipped for p = 2)
    bool psi0_check_skipped = false;
    std::optional<long> integer_value; // nearest integer when within 1e-4
};
// J_k(a) for a in B^0, Frobenius-closed: product of orbit Gauss sums.
JacobiResult jacobi_J_k(const BSupportElement& a, long q);

// Expected Lemma 5.5 value for a = [c/m] + [-c/m] over F_q, q = +-1 mod m:
//   Nq = 1 mod m: (-1)^{(Nq-1)c/m} Nq;  Nq = -1 mod m: (-1)^{(Nq+1)c/m} Nq.
// For odd q this reduces to the coarse case table (Nq for odd m, and the
// mod-2m subcases for even m).
long lemma55_expected(long m, long c, long q);

struct FermatCountResult {
    long long count = 0;          // brute-force projective point count
    long long formula_value = 0;  // q + 1 + sum of twisted exact Jacobi sums
    bool equal = false;
};
// #{(x:y:z) in P^2(F_q) : x^m + y^m + z^m = 0} against the Weil expansion
//   q + 1 + sum_{a,b,a+b nontrivial} chi_{a+b}(-1) J_cl(a, b)
// with exact cyclotomic Jacobi sums (the twist is trivial for odd m).
FermatCountResult fermat_point_count(long m, long q);

}  // namespace perdet
