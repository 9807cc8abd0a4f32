#pragma once

#include "perdet/gamma.hpp"
#include "perdet/qmatrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace perdet {

// Rank-r integrable connection on P^1 with logarithmic poles, stored in
// Fuchsian normal form A(t) dt = sum_i B_i dt/(t - lambda_i).
// The residue at infinity is -sum_i B_i and is never stored.
struct LogConnection {
    size_t rank = 1;
    std::vector<Rational> points;      // distinct finite singular points
    std::vector<QMatrix> residues;     // one r x r matrix per point
    bool include_infinity = true;      // whether infinity belongs to D'
    std::string label;

    // bookkeeping for twists at infinity; finite residues stay untouched so
    // that the residue theorem sum stays zero for the displayed model
    long infinity_twist = 0;

    static LogConnection rank1(std::vector<Rational> pts, std::vector<Rational> exps,
                               std::string label = "");
    void validate() const;
    QMatrix residue_infinity() const;
};

struct ExtensionTwist {
    std::map<size_t, long> multiples;  // point index -> n_i
    long infinity = 0;
};

// residue at a point of P^1; zero matrix at non-singular points
QMatrix residue_at(const LogConnection& conn, const P1Point& x);

// char poly of the residue at x (infinity handled via residue_infinity
// shifted by the infinity twist bookkeeping)
Poly char_poly_at(const LogConnection& conn, const P1Point& x);

// twist replaces B_i by B_i - n_i * Id so char polys shift T -> T + n_i;
// infinity twists go to the bookkeeping field
LogConnection twist(const LogConnection& conn, const ExtensionTwist& tw);

// no integer root <= 0 (small), no integer root >= 1 (big); exact
bool is_small_at(const LogConnection& conn, size_t i);
bool is_big_at(const LogConnection& conn, size_t i);
bool is_small(const LogConnection& conn);
bool is_big(const LogConnection& conn);

// Hom(E, O(-D)) residues: Id - B; the paper's small/big duality partner
LogConnection dual_connection(const LogConnection& conn);

// twist making all residue eigenvalues land in (0, 1] per point; requires
// rational spectrum and a uniform shift per point
struct CanonicalizeResult {
    LogConnection connection;
    ExtensionTwist twist;
};
CanonicalizeResult canonical_normalize(const LogConnection& conn);

// all finite residue eigenvalues have real part > margin and the infinity
// residue eigenvalues real part < -margin; throws on boundary cases
bool theorem_T_admissible(const LogConnection& conn, double margin = 1e-9);

// Phi_{E_X}(T): product of residue char polys over the declared divisor
// (Euler numbers are 1 for points on a curve); includes the infinity factor
// when include_infinity is set
RatFunc phi_aggregate(const LogConnection& conn);
GammaValue gamma_of_connection(const LogConnection& conn);

// Theorem T's Gamma factor:
//   prod_{x in D} Gamma(res_x) * exp(i pi Tr res_inf) * Gamma(1 - res_inf)^{-1}
Complex theorem_T_gamma_factor(const LogConnection& conn);

}  // namespace perdet
